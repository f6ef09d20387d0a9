#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "smiso/isotopism_group.hpp"

using namespace smiso;

TEST_CASE("isot_order closed form") {
  CHECK(isot_order(1) == 1);
  CHECK(isot_order(3) == 216);
  CHECK(isot_order(10) == bigint("47784725839872000000"));  // (10!)^3

  // matches the materialized enumeration where that is possible
  CHECK(enumerate_isot(1).size() == 1);
  CHECK(enumerate_isot(3).size() == 216);
  CHECK(enumerate_isot(4).size() == 13824);
  CHECK_THROWS_AS(enumerate_isot(5), order_too_large);
}

TEST_CASE("triple group axioms hold on the materialized group") {
  for (int n = 2; n <= 4; ++n) CHECK(verify_isot_group_axioms(n));
}

TEST_CASE("closure spot-check at n = 3 on raw triples") {
  const SymmetricGroupIndex sym(3);
  const auto elems = enumerate_isot(3);
  // compose every pair of a deterministic sample; products stay in range
  for (size_t i = 0; i < elems.size(); i += 7)
    for (size_t j = 0; j < elems.size(); j += 11) {
      const auto& a = elems[i];
      const auto& b = elems[j];
      const TripleGroupElement c{sym.comp[a.u][b.u], sym.comp[a.v][b.v], sym.comp[a.w][b.w]};
      CHECK(c.u >= 0);
      CHECK(c.u < 6);
      // inverse of the product is the product of inverses, reversed
      const TripleGroupElement cinv{sym.inv[c.u], sym.inv[c.v], sym.inv[c.w]};
      const TripleGroupElement check{sym.comp[sym.inv[b.u]][sym.inv[a.u]],
                                     sym.comp[sym.inv[b.v]][sym.inv[a.v]],
                                     sym.comp[sym.inv[b.w]][sym.inv[a.w]]};
      CHECK(cinv == check);
    }
}

TEST_CASE("restricted S-isotopism counts") {
  CHECK(sisot_restricted_count(4, 2) == 8);  // (2!)^3
  CHECK(sisot_restricted_count(6, 3) == 216);
  CHECK_THROWS_AS(sisot_restricted_count(4, 1), invalid_subgroup_size);
  CHECK_THROWS_AS(sisot_restricted_count(4, 4), invalid_subgroup_size);

  // independent exhaustive count at n = 4 over every (H, K) size-2 pair
  for (const auto& h : {std::vector<int>{0, 1}, {0, 2}, {1, 3}})
    for (const auto& k : {std::vector<int>{0, 1}, {2, 3}, {0, 3}})
      CHECK(count_restricted_triples(4, h, k) == 8);
  CHECK(count_restricted_triples(4, {0, 1, 2}, {1, 2, 3}) == 216);
  CHECK_THROWS_AS(count_restricted_triples(4, {0, 1}, {0, 1, 2}), invalid_subgroup_size);
}

TEST_CASE("setwise stabilizer at n = 4, H = {0,1}") {
  const auto rep = sisot_stabilizer(4, {0, 1});
  CHECK(rep.is_subgroup);
  CHECK(rep.order == 64);                     // (2! * 2!)^3
  CHECK(rep.elements.size() == 64);
  CHECK(rep.restriction_image_order == 8);    // (2!)^3
}

TEST_CASE("setwise stabilizer at n = 3") {
  const auto rep = sisot_stabilizer(3, {0, 2});
  CHECK(rep.is_subgroup);
  CHECK(rep.order == 8);  // (2! * 1!)^3
  CHECK(rep.restriction_image_order == 8);
}

TEST_CASE("stabilizer rejects degenerate subset sizes") {
  CHECK_THROWS_AS(sisot_stabilizer(4, {0}), invalid_subgroup_size);
  CHECK_THROWS_AS(sisot_stabilizer(4, {0, 1, 2, 3}), invalid_subgroup_size);
  CHECK_THROWS_AS(sisot_stabilizer(5, {0, 1}), order_too_large);
}

TEST_CASE("every setwise stabilizer is a subgroup of the expected order") {
  for (int n = 3; n <= 4; ++n) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> h;
      for (int x = 0; x < n; ++x)
        if (mask & (1u << x)) h.push_back(x);
      const int m = static_cast<int>(h.size());
      if (m < 2 || m > n - 1) continue;
      const auto rep = sisot_stabilizer(n, h);
      CHECK(rep.is_subgroup);
      const bigint block = factorial(m) * factorial(n - m);
      CHECK(rep.order == block * block * block);
      CHECK(rep.restriction_image_order == sisot_restricted_count(n, m));
    }
  }
}

TEST_CASE("non-S-isotopism complement count") {
  CHECK(nsisot_count(3, 2) == 208);          // 216 - 8
  CHECK(nsisot_count(6, 2) == isot_order(6) - 8);
  CHECK(nsisot_count(4, 3) == 13824 - 216);
  CHECK_THROWS_AS(nsisot_count(2, 2), invalid_subgroup_size);
}

TEST_CASE("principal isotopism subgroup") {
  const auto r2 = pisot_check(2);
  CHECK(r2.is_subgroup);
  CHECK(r2.order == 4);
  CHECK(r2.correspondence_ok);

  const auto r3 = pisot_check(3);
  CHECK(r3.is_subgroup);
  CHECK(r3.order == 36);
  CHECK(r3.correspondence_ok);

  const auto r4 = pisot_check(4);
  CHECK(r4.is_subgroup);
  CHECK(r4.order == 576);
  CHECK(r4.correspondence_ok);

  const auto r1 = pisot_check(1);
  CHECK(r1.order == 1);  // trivial
  CHECK(r1.is_subgroup);
}
