#ifndef SMISO_MAGMA_HPP
#define SMISO_MAGMA_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "smiso/errors.hpp"
#include "smiso/permutation.hpp"

namespace smiso {

/// An n x n multiplication table over elements 0..n-1. Immutable; every
/// derived operation is pure, so tables are freely shareable across threads.
class MagmaTable {
 public:
  MagmaTable() = default;

  explicit MagmaTable(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
    const int n = static_cast<int>(cells_.size());
    for (const auto& row : cells_) {
      if (static_cast<int>(row.size()) != n)
        throw parse_error("table is not square", 0, 0);
      for (int v : row)
        if (v < 0 || v >= n)
          throw parse_error("cell value out of range", 0, 0);
    }
  }

  int order() const { return static_cast<int>(cells_.size()); }
  int at(int x, int y) const { return cells_[x][y]; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }

  auto operator<=>(const MagmaTable&) const = default;

 private:
  std::vector<std::vector<int>> cells_;
};

struct AlgebraClass {
  bool is_semigroup = false;
  bool is_quasigroup = false;
  bool is_loop = false;
  bool is_group = false;
  std::optional<int> identity;  // two-sided identity, when one exists
};

inline bool row_is_bijective(const MagmaTable& t, int x) {
  std::vector<char> seen(t.order(), 0);
  for (int y = 0; y < t.order(); ++y) {
    if (seen[t.at(x, y)]) return false;
    seen[t.at(x, y)] = 1;
  }
  return true;
}

inline bool col_is_bijective(const MagmaTable& t, int x) {
  std::vector<char> seen(t.order(), 0);
  for (int y = 0; y < t.order(); ++y) {
    if (seen[t.at(y, x)]) return false;
    seen[t.at(y, x)] = 1;
  }
  return true;
}

inline bool is_latin(const MagmaTable& t) {
  for (int x = 0; x < t.order(); ++x)
    if (!row_is_bijective(t, x) || !col_is_bijective(t, x)) return false;
  return true;
}

inline std::optional<int> two_sided_identity(const MagmaTable& t) {
  const int n = t.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t.at(e, x) == x && t.at(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

/// Plain n^3 triple scan; n is small enough that nothing smarter pays off.
inline bool is_associative(const MagmaTable& t) {
  const int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) return false;
  return true;
}

inline AlgebraClass classify(const MagmaTable& t) {
  AlgebraClass c;
  c.is_quasigroup = is_latin(t);
  c.is_semigroup = is_associative(t);
  c.identity = two_sided_identity(t);
  c.is_loop = c.is_quasigroup && c.identity.has_value();
  c.is_group = c.is_loop && c.is_semigroup;
  return c;
}

/// L_x: y -> x*y (row x read as a permutation).
inline Permutation left_translation(const MagmaTable& t, int x) {
  if (!row_is_bijective(t, x))
    throw not_bijective("row " + std::to_string(x) + " is not a bijection");
  std::vector<int> im(t.order());
  for (int y = 0; y < t.order(); ++y) im[y] = t.at(x, y);
  return Permutation(std::move(im));
}

/// R_x: y -> y*x (column x read as a permutation).
inline Permutation right_translation(const MagmaTable& t, int x) {
  if (!col_is_bijective(t, x))
    throw not_bijective("column " + std::to_string(x) + " is not a bijection");
  std::vector<int> im(t.order());
  for (int y = 0; y < t.order(); ++y) im[y] = t.at(y, x);
  return Permutation(std::move(im));
}

/// Isomorphic image under p: r[x*p][y*p] = (t[x][y])*p.
inline MagmaTable relabel(const MagmaTable& t, const Permutation& p) {
  if (p.degree() != t.order())
    throw degree_mismatch("relabel: permutation degree " + std::to_string(p.degree()) +
                          " vs table order " + std::to_string(t.order()));
  const int n = t.order();
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      cells[p[x]][p[y]] = p[t.at(x, y)];
  return MagmaTable(std::move(cells));
}

}  // namespace smiso

#endif  // SMISO_MAGMA_HPP
