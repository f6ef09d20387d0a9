#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "smiso/fixtures.hpp"
#include "smiso/magma.hpp"
#include "smiso/permutation.hpp"
#include "smiso/random.hpp"

using namespace smiso;
using fixtures::cyclic_group;
using fixtures::example1_dot;
using fixtures::example2_times6;

TEST_CASE("classify on the worked examples") {
  auto c1 = classify(example1_dot());
  CHECK(c1.is_quasigroup);
  CHECK_FALSE(c1.is_loop);
  CHECK_FALSE(c1.is_semigroup);

  auto c2 = classify(example2_times6());
  CHECK(c2.is_semigroup);
  CHECK_FALSE(c2.is_quasigroup);

  auto c3 = classify(cyclic_group(4));
  CHECK(c3.is_group);
  CHECK(c3.is_loop);
  REQUIRE(c3.identity.has_value());
  CHECK(*c3.identity == 0);
}

TEST_CASE("translations") {
  const auto t = example1_dot();
  CHECK(left_translation(t, 2) == Permutation({3, 4, 1, 2, 0}));
  CHECK(right_translation(t, 0) == Permutation({0, 1, 3, 4, 2}));

  // at a loop identity both translations are the identity map
  const auto z4 = cyclic_group(4);
  CHECK(left_translation(z4, 0).is_identity());
  CHECK(right_translation(z4, 0).is_identity());

  const auto z6m = example2_times6();
  CHECK_THROWS_AS(left_translation(z6m, 0), not_bijective);   // row of zeros
  CHECK_THROWS_AS(right_translation(z6m, 3), not_bijective);  // column 0 3 0 3 0 3

  // yL_x == t[x][y] and xR_y == t[x][y] on a quasigroup
  for (int x = 0; x < t.order(); ++x) {
    const auto lx = left_translation(t, x);
    const auto rx = right_translation(t, x);
    for (int y = 0; y < t.order(); ++y) {
      CHECK(lx[y] == t.at(x, y));
      CHECK(rx[y] == t.at(y, x));
    }
  }
}

TEST_CASE("relabel") {
  const auto t = example1_dot();
  CHECK(relabel(t, Permutation::identity(5)) == t);

  const auto z4 = cyclic_group(4);
  const auto r = relabel(z4, Permutation({1, 2, 3, 0}));
  auto c = classify(r);
  CHECK(c.is_group);
  CHECK(*c.identity == 1);

  CHECK_THROWS_AS(relabel(z4, Permutation::identity(5)), degree_mismatch);

  // subgroup {0,1} survives as the set image under p
  const Permutation p({1, 0, 2, 3, 4});
  const auto r2 = relabel(t, p);
  // direct cell check: r2[x*p][y*p] == (t[x][y])*p
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(r2.at(p[x], p[y]) == p[t.at(x, y)]);
  // {1,0} is closed in r2
  CHECK(r2.at(1, 1) == 1);
  CHECK(r2.at(0, 0) == 1);
  CHECK(r2.at(1, 0) == 0);
  CHECK(r2.at(0, 1) == 0);
}

TEST_CASE("permutation group axioms, exhaustive at degree <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Permutation> all;
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    do all.push_back(Permutation(im));
    while (std::next_permutation(im.begin(), im.end()));

    const auto id = Permutation::identity(n);
    for (const auto& p : all) {
      CHECK(p * p.inverse() == id);
      CHECK(p.inverse() * p == id);
      CHECK(p * id == p);
      CHECK(id * p == p);
      for (const auto& q : all)
        for (const auto& r : all) CHECK((p * q) * r == p * (q * r));
    }
  }
}

TEST_CASE("relabel composes: relabel(relabel(t,p),q) == relabel(t, p*q)") {
  SplitRng rng(20240817, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 5;
    const auto t = rng.latin_square(n);
    const auto p = rng.permutation(n);
    const auto q = rng.permutation(n);
    CHECK(relabel(relabel(t, p), q) == relabel(t, p * q));
  }
}

TEST_CASE("Latin property preserved by relabel over seeded random squares") {
  SplitRng rng(0xF00D, 11);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 6;  // orders 3..8
    const auto t = rng.latin_square(n);
    REQUIRE(classify(t).is_quasigroup);
    const auto r = relabel(t, rng.permutation(n));
    CHECK(classify(r).is_quasigroup);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("permutation parse and round trip") {
  const auto p = Permutation::parse("1,2,3,4,0");
  CHECK(p == Permutation({1, 2, 3, 4, 0}));
  CHECK(Permutation::parse(p.to_string()) == p);
  CHECK_THROWS_AS(Permutation::parse("0,0,1"), not_bijective);
}
