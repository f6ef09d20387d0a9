#ifndef SMISO_SMARANDACHE_HPP
#define SMISO_SMARANDACHE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "smiso/errors.hpp"
#include "smiso/magma.hpp"

namespace smiso {

enum class SubstructureKind { subsemigroup, subgroup };

inline const char* to_string(SubstructureKind k) {
  return k == SubstructureKind::subsemigroup ? "subsemigroup" : "subgroup";
}

/// A verified witness that a subset M is a nontrivial proper subsemigroup or
/// subgroup of the parent table. Nontrivial means 2 <= |M| <= n-1.
struct SCertificate {
  std::vector<int> subset;  // sorted ascending
  SubstructureKind kind = SubstructureKind::subsemigroup;
  std::optional<int> identity;  // set for subgroups
  bool closure_checked = false;
};

namespace detail {

inline bool subset_closed(const MagmaTable& t, const std::vector<int>& m,
                          const std::vector<char>& member) {
  for (int a : m)
    for (int b : m)
      if (!member[t.at(a, b)]) return false;
  return true;
}

// Associativity restricted to M; required even when the parent is not
// associative, since an S-quasigroup's substructure must be a group outright.
inline bool subset_associative(const MagmaTable& t, const std::vector<int>& m) {
  for (int a : m)
    for (int b : m)
      for (int c : m)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
  return true;
}

inline std::optional<int> subset_identity(const MagmaTable& t, const std::vector<int>& m) {
  for (int e : m) {
    bool ok = true;
    for (int x : m)
      if (t.at(e, x) != x || t.at(x, e) != x) { ok = false; break; }
    if (ok) return e;
  }
  return std::nullopt;
}

inline bool subset_has_inverses(const MagmaTable& t, const std::vector<int>& m, int e) {
  for (int x : m) {
    bool found = false;
    for (int y : m)
      if (t.at(x, y) == e && t.at(y, x) == e) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

}  // namespace detail

/// Checks every certificate invariant against t. On failure returns false and,
/// when reason is non-null, stores a short failure code.
inline bool verify_certificate(const MagmaTable& t, const SCertificate& c,
                               std::string* reason = nullptr) {
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  const int n = t.order();
  const int m = static_cast<int>(c.subset.size());
  if (m < 2 || m > n - 1) return fail("subset size outside 2..n-1");
  std::vector<char> member(n, 0);
  for (int x : c.subset) {
    if (x < 0 || x >= n) return fail("element out of range");
    if (member[x]) return fail("duplicate element");
    member[x] = 1;
  }
  if (!detail::subset_closed(t, c.subset, member)) return fail("not closed");
  if (!detail::subset_associative(t, c.subset)) return fail("not associative on subset");
  if (c.kind == SubstructureKind::subgroup) {
    auto e = detail::subset_identity(t, c.subset);
    if (!e) return fail("no identity in subset");
    if (c.identity && *c.identity != *e) return fail("claimed identity is wrong");
    if (!detail::subset_has_inverses(t, c.subset, *e)) return fail("missing inverses");
  }
  if (reason) reason->clear();
  return true;
}

/// All certified nontrivial proper substructures of the requested kind, in
/// lexicographic subset order. Empty means t is not Smarandache for that kind.
inline std::vector<SCertificate> find_s_structures(const MagmaTable& t, SubstructureKind kind,
                                                   int order_bound = 16) {
  const int n = t.order();
  if (n > order_bound)
    throw order_too_large("find_s_structures: order " + std::to_string(n) +
                          " exceeds bound " + std::to_string(order_bound));
  std::vector<SCertificate> out;
  if (n < 3) return out;  // no subset with 2 <= |M| <= n-1
  // Exhaustive subset scan; closure rejects most masks immediately.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int m = __builtin_popcount(mask);
    if (m < 2 || m > n - 1) continue;
    std::vector<int> subset;
    std::vector<char> member(n, 0);
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) { subset.push_back(x); member[x] = 1; }
    if (!detail::subset_closed(t, subset, member)) continue;
    if (!detail::subset_associative(t, subset)) continue;
    SCertificate c{subset, kind, std::nullopt, true};
    if (kind == SubstructureKind::subgroup) {
      auto e = detail::subset_identity(t, subset);
      if (!e) continue;
      if (!detail::subset_has_inverses(t, subset, *e)) continue;
      c.identity = e;
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const SCertificate& a, const SCertificate& b) { return a.subset < b.subset; });
  return out;
}

/// The substructure kind a table must carry to be Smarandache: bare groupoids
/// need a subsemigroup, everything else a subgroup.
inline SubstructureKind required_kind(const AlgebraClass& c) {
  if (!c.is_semigroup && !c.is_quasigroup) return SubstructureKind::subsemigroup;
  return SubstructureKind::subgroup;
}

/// Lexicographically first certificate of the kind demanded by classify(t),
/// or absent when t is not Smarandache.
inline std::optional<SCertificate> is_smarandache(const MagmaTable& t, int order_bound = 16) {
  auto certs = find_s_structures(t, required_kind(classify(t)), order_bound);
  if (certs.empty()) return std::nullopt;
  return certs.front();
}

/// Image of a certificate's subset under p, as a sorted set.
inline std::vector<int> subset_image(const std::vector<int>& subset, const Permutation& p) {
  std::vector<int> img;
  img.reserve(subset.size());
  for (int x : subset) img.push_back(p[x]);
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace smiso

#endif  // SMISO_SMARANDACHE_HPP
