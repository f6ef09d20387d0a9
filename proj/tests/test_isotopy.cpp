#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "smiso/census.hpp"
#include "smiso/fixtures.hpp"
#include "smiso/isotopy.hpp"
#include "smiso/random.hpp"

using namespace smiso;
using namespace smiso::fixtures;

namespace {

// Random triple whose components all carry the sorted set m onto the sorted
// set img; applied to a table with S-subgroup m (|m|=2) this always yields an
// S-isotopism, since every 2x2 Latin sub-square is a group.
IsotopismTriple random_subset_triple(SplitRng& rng, int n, const std::vector<int>& m,
                                     const std::vector<int>& img) {
  return {rng.permutation_with_image(n, m, img), rng.permutation_with_image(n, m, img),
          rng.permutation_with_image(n, m, img)};
}

}  // namespace

TEST_CASE("apply_isotopism reproduces the printed tables") {
  CHECK(apply_isotopism(example1_dot(), example1_triple()) == example1_star());
  CHECK(apply_isotopism(example2_times6(), example2_triple()) == example2_star());
  const auto t = example1_dot();
  CHECK(apply_isotopism(t, IsotopismTriple::identity(5)) == t);
  CHECK_THROWS_AS(apply_isotopism(t, IsotopismTriple::identity(4)), degree_mismatch);
}

TEST_CASE("S-isotopism witnesses") {
  const auto w = is_s_isotopism(example1_dot(), example1_star(), example1_triple());
  REQUIRE(w.has_value());
  CHECK(w->source_cert.subset == std::vector<int>{0, 1});
  CHECK(w->target_cert.subset == std::vector<int>{1, 2});

  const auto ws = s_isotopism_witnesses(example2_times6(), example2_star(), example2_triple());
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].source_cert.subset == std::vector<int>{1, 5});
  CHECK(ws[0].target_cert.subset == std::vector<int>{0, 3});
  CHECK(ws[1].source_cert.subset == std::vector<int>{2, 4});
  CHECK(ws[1].target_cert.subset == std::vector<int>{2, 5});

  // a source without S-structure admits no witness
  const auto z5 = cyclic_group(5);
  CHECK_FALSE(is_s_isotopism(z5, z5, IsotopismTriple::identity(5)).has_value());
}

TEST_CASE("principal and f,g-principal isotopes") {
  const auto t = example1_dot();
  const auto id = Permutation::identity(5);
  CHECK(principal_isotope(t, id, id) == t);

  SplitRng rng(77, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = rng.latin_square(4 + trial % 3);
    const auto u = rng.permutation(q.order());
    const auto v = rng.permutation(q.order());
    CHECK(classify(principal_isotope(q, u, v)).is_quasigroup);
  }

  // (Z4,+), f=1, g=2: loop with identity 1+2=3
  const auto z4 = cyclic_group(4);
  const auto iso = fg_principal_isotope(z4, 1, 2);
  auto c = classify(iso);
  CHECK(c.is_loop);
  CHECK(*c.identity == 3);

  // f = g = e in a loop gives the table back
  CHECK(fg_principal_isotope(z4, 0, 0) == z4);

  // Example 1 with S-elements f=0, g=1: loop with identity t[0][1] = 1
  const auto iso1 = fg_principal_isotope(t, 0, 1);
  auto c1 = classify(iso1);
  CHECK(c1.is_loop);
  CHECK(*c1.identity == t.at(0, 1));

  CHECK_THROWS_AS(fg_principal_isotope(example2_times6(), 1, 1), not_a_quasigroup);

  // identity of the f,g-isotope is always f.g on quasigroups
  for (int f = 0; f < 5; ++f)
    for (int g = 0; g < 5; ++g) {
      const auto r = fg_principal_isotope(t, f, g);
      auto cc = classify(r);
      REQUIRE(cc.is_loop);
      CHECK(*cc.identity == t.at(f, g));
    }
}

TEST_CASE("decompose_to_principal on the printed example") {
  const auto t1 = example1_dot();
  const auto t2 = example1_star();
  const auto a = example1_triple();
  const auto d = decompose_to_principal(t1, t2, a);

  // beta = (U W^-1, V W^-1, I), verified cell-by-cell against the printed
  // permutations (right-action composition).
  CHECK(d.beta.u == Permutation({0, 1, 4, 3, 2}));
  CHECK(d.beta.v == Permutation({0, 1, 3, 2, 4}));
  CHECK(d.beta.is_principal());
  CHECK(d.z == a.w);
  CHECK(apply_isotopism(t1, d.beta) == d.mid);
  CHECK(relabel(d.mid, d.z) == t2);
  CHECK(d.beta * IsotopismTriple{d.z, d.z, d.z} == a);

  // beta is a Smarandache principal isotopism: it fixes the S-subset {0,1}
  CHECK(subset_image({0, 1}, d.beta.u) == std::vector<int>{0, 1});
  CHECK(subset_image({0, 1}, d.beta.v) == std::vector<int>{0, 1});

  // an already-principal isotopism decomposes trivially
  const auto b = fg_principal_triple(t1, 0, 1);
  const auto mid = apply_isotopism(t1, b);
  const auto d2 = decompose_to_principal(t1, mid, b);
  CHECK(d2.beta == b);
  CHECK(d2.z.is_identity());
  CHECK(d2.mid == mid);

  CHECK_THROWS_AS(decompose_to_principal(t1, t1, a), not_an_isotopism);
}

TEST_CASE("decomposition round-trips on 1000 seeded random S-isotopisms") {
  const auto t1 = example1_dot();
  const std::vector<int> m = {0, 1};
  SplitRng rng(0x5EED42, 1);
  int ok = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int a0 = rng.uniform(0, 4), b0 = rng.uniform(0, 4);
    while (b0 == a0) b0 = rng.uniform(0, 4);
    const std::vector<int> img = {std::min(a0, b0), std::max(a0, b0)};
    const auto a = random_subset_triple(rng, 5, m, img);
    const auto t2 = apply_isotopism(t1, a);
    REQUIRE_FALSE(s_isotopism_witnesses(t1, t2, a).empty());
    const auto d = decompose_to_principal(t1, t2, a);
    const bool round = d.beta.is_principal() && relabel(d.mid, d.z) == t2 &&
                       d.beta * IsotopismTriple{d.z, d.z, d.z} == a &&
                       subset_image(m, d.beta.u) == m && subset_image(m, d.beta.v) == m;
    if (round) ++ok;
  }
  CHECK(ok == 1000);
}

TEST_CASE("find_fg_decomposition") {
  const auto t1 = example1_dot();
  const auto tl = fg_principal_isotope(t1, 0, 1);
  const auto d = find_fg_decomposition(t1, tl, fg_principal_triple(t1, 0, 1));
  CHECK(d.f == 0);
  CHECK(d.g == 1);
  CHECK(d.principal.u == right_translation(t1, d.g));
  CHECK(d.principal.v == left_translation(t1, d.f));

  // identity isotopism on a group recovers f = g = e
  const auto z4 = cyclic_group(4);
  const auto di = find_fg_decomposition(z4, z4, IsotopismTriple::identity(4));
  CHECK(di.f == 0);
  CHECK(di.g == 0);
  CHECK(z4.at(di.f, di.g) == 0);

  // exhaustive recovery over the S-elements of (Z6,+): subgroups {0,3} and {0,2,4}
  const auto z6 = cyclic_group(6);
  int checked = 0;
  for (const auto& cert : find_s_structures(z6, SubstructureKind::subgroup))
    for (int f : cert.subset)
      for (int g : cert.subset) {
        const auto a = fg_principal_triple(z6, f, g);
        const auto tll = fg_principal_isotope(z6, f, g);
        const auto dd = find_fg_decomposition(z6, tll, a);
        CHECK(dd.f == f);
        CHECK(dd.g == g);
        ++checked;
      }
  CHECK(checked == 13);  // 4 pairs from {0,3}, 9 from {0,2,4}

  CHECK_THROWS_AS(find_fg_decomposition(t1, t1, fg_principal_triple(t1, 0, 1)),
                  not_an_isotopism);
  // target that is not an S-loop
  const auto z5 = cyclic_group(5);
  CHECK_THROWS_AS(find_fg_decomposition(z5, z5, IsotopismTriple::identity(5)),
                  target_not_s_loop);
}

TEST_CASE("find_isomorphism") {
  SplitRng rng(314159, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t1 = rng.latin_square(4 + trial % 4);
    const auto p0 = rng.permutation(t1.order());
    const auto t2 = relabel(t1, p0);
    const auto p = find_isomorphism(t1, t2);
    REQUIRE(p.has_value());
    CHECK(relabel(t1, *p) == t2);
  }

  CHECK_FALSE(find_isomorphism(cyclic_group(4), klein_four()).has_value());

  // S-isomorphism from the decomposition mid-table onto (L,*)
  const auto d = decompose_to_principal(example1_dot(), example1_star(), example1_triple());
  const auto z = find_isomorphism(d.mid, example1_star(), /*smarandache=*/true);
  REQUIRE(z.has_value());
  CHECK(relabel(d.mid, *z) == example1_star());
}

TEST_CASE("find_isotopism") {
  // the Example 1 pair, with an S-witness
  const auto a = find_isotopism(example1_dot(), example1_star(), /*smarandache=*/true);
  REQUIRE(a.has_value());
  CHECK_FALSE(s_isotopism_witnesses(example1_dot(), example1_star(), *a).empty());

  // planted random triples are found
  SplitRng rng(0xABCD, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t1 = rng.latin_square(5);
    const IsotopismTriple planted{rng.permutation(5), rng.permutation(5), rng.permutation(5)};
    const auto t2 = apply_isotopism(t1, planted);
    const auto found = find_isotopism(t1, t2);
    REQUIRE(found.has_value());
    CHECK(apply_isotopism(t1, *found) == t2);
  }

  // two order-5 loops from different isotopy classes are not isotopic
  const auto census = run_census(5, 1);
  REQUIRE(census.isotopy.count == 2);
  const auto& r0 = census.isotopy.representatives[0];
  const auto& r1 = census.isotopy.representatives[1];
  CHECK_FALSE(find_isotopism(r0, r1).has_value());

  CHECK_THROWS_AS(find_isotopism(cyclic_group(9), cyclic_group(9)), order_too_large);
}

TEST_CASE("isotopy action laws") {
  SplitRng rng(2718, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 3;
    const auto t = rng.latin_square(n);
    const IsotopismTriple a{rng.permutation(n), rng.permutation(n), rng.permutation(n)};
    const IsotopismTriple b{rng.permutation(n), rng.permutation(n), rng.permutation(n)};
    CHECK(classify(apply_isotopism(t, a)).is_quasigroup);
    CHECK(apply_isotopism(apply_isotopism(t, a), b) == apply_isotopism(t, a * b));
    CHECK(apply_isotopism(apply_isotopism(t, a), a.inverse()) == t);
  }
}

TEST_CASE("S-isotopy is an equivalence relation on the fixture set") {
  // reflexivity via (I,I,I) on every S-fixture
  for (const auto& t : {example1_dot(), example1_star(), example2_times6(), example2_star(),
                        cyclic_group(4), cyclic_group(6), symmetric_s3()})
    CHECK_FALSE(s_isotopism_witnesses(t, t, IsotopismTriple::identity(t.order())).empty());

  // symmetry and transitivity on explicit witnesses
  const auto t1 = example1_dot();
  const auto t2 = example1_star();
  const auto a = example1_triple();
  CHECK_FALSE(s_isotopism_witnesses(t2, t1, a.inverse()).empty());

  SplitRng rng(424242, 6);
  const std::vector<int> m2 = {1, 2};  // S-subgroup of (L,*)
  const auto b = random_subset_triple(rng, 5, m2, m2);
  const auto t3 = apply_isotopism(t2, b);
  REQUIRE_FALSE(s_isotopism_witnesses(t2, t3, b).empty());
  CHECK_FALSE(s_isotopism_witnesses(t1, t3, a * b).empty());

  const auto e2 = example2_triple();
  CHECK_FALSE(s_isotopism_witnesses(example2_star(), example2_times6(), e2.inverse()).empty());
}

TEST_CASE("gs_group_check") {
  for (const auto& t : {cyclic_group(4), cyclic_group(6), symmetric_s3()}) {
    const auto rep = gs_group_check(t);
    CHECK(rep.all_pass());
  }
  CHECK(gs_group_check(cyclic_group(4)).pairs.size() == 4);   // S-subgroup {0,2}
  CHECK(gs_group_check(cyclic_group(6)).pairs.size() == 13);  // {0,3} and {0,2,4}

  CHECK_THROWS_AS(gs_group_check(example1_dot()), not_a_group);
  CHECK_THROWS_AS(gs_group_check(cyclic_group(5)), not_smarandache);
}

TEST_CASE("gs_group_check passes for every group fixture of order <= 8") {
  for (const auto& t :
       {cyclic_group(4), klein_four(), cyclic_group(6), symmetric_s3(), cyclic_group(8),
        direct_product(cyclic_group(4), cyclic_group(2)),
        direct_product(cyclic_group(2), klein_four()), dihedral_8(), quaternion_8()})
    CHECK(gs_group_check(t).all_pass());
}

TEST_CASE("audit_corollaries") {
  // Z4: the group-is-GS-loop claim is verified exhaustively
  const auto rz4 = audit_corollaries(cyclic_group(4), {"gs-group"});
  REQUIRE(rz4.size() == 1);
  CHECK(rz4[0].applicable);
  CHECK(rz4[0].verified);
  CHECK(rz4[0].instances_checked == 4);

  // Example 1 at f,g scope: outcome is reported with 25 instances checked
  const auto re1 = audit_corollaries(example1_dot(), {"s-groupoid-isotopes"});
  REQUIRE(re1.size() == 2);
  CHECK(re1[0].corollary == "s-groupoid-isotopes-fg");
  CHECK(re1[0].applicable);
  CHECK(re1[0].instances_checked == 25);
  // not all f,g-isotopes of (L,.) are S-groupoids; the audit must say so
  CHECK_FALSE(re1[0].verified);
  CHECK_FALSE(re1[0].counterexamples.empty());

  // trivial loop: vacuous pass, nothing applicable and no counterexamples
  const auto rt = audit_corollaries(MagmaTable(std::vector<std::vector<int>>{{0}}), {});
  for (const auto& r : rt) {
    CHECK_FALSE(r.applicable);
    CHECK(r.counterexamples.empty());
  }

  CHECK_THROWS_AS(audit_corollaries(cyclic_group(8), {}), order_too_large);
}
