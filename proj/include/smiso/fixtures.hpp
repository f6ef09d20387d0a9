#ifndef SMISO_FIXTURES_HPP
#define SMISO_FIXTURES_HPP

#include <vector>

#include "smiso/isotopy.hpp"
#include "smiso/magma.hpp"
#include "smiso/permutation.hpp"

// Golden fixtures: the two worked S-isotopism instances plus the standard
// small groups used throughout the audits.

namespace smiso::fixtures {

// Order-5 S-quasigroup with S-subgroup {0,1}.
inline MagmaTable example1_dot() {
  return MagmaTable({{0, 1, 3, 4, 2},
                     {1, 0, 2, 3, 4},
                     {3, 4, 1, 2, 0},
                     {4, 2, 0, 1, 3},
                     {2, 3, 4, 0, 1}});
}

// Its S-isotope with S-subgroup {1,2}.
inline MagmaTable example1_star() {
  return MagmaTable({{1, 0, 4, 2, 3},
                     {3, 1, 2, 0, 4},
                     {4, 2, 1, 3, 0},
                     {0, 4, 3, 1, 2},
                     {2, 3, 0, 4, 1}});
}

inline IsotopismTriple example1_triple() {
  return {Permutation({1, 2, 3, 4, 0}),
          Permutation({1, 2, 4, 0, 3}),
          Permutation({1, 2, 0, 4, 3})};
}

// Multiplication mod 6: an S-semigroup with S-subgroups {2,4} and {1,5}.
inline MagmaTable example2_times6() {
  std::vector<std::vector<int>> cells(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) cells[x][y] = (x * y) % 6;
  return MagmaTable(std::move(cells));
}

// Its S-isotope with S-subgroups {2,5} and {0,3}.
inline MagmaTable example2_star() {
  return MagmaTable({{0, 1, 2, 3, 4, 5},
                     {4, 1, 1, 4, 4, 1},
                     {5, 1, 5, 2, 1, 2},
                     {3, 1, 5, 0, 4, 2},
                     {1, 1, 1, 1, 1, 1},
                     {2, 1, 2, 5, 1, 5}});
}

inline IsotopismTriple example2_triple() {
  return {Permutation({4, 3, 5, 1, 2, 0}),
          Permutation({1, 3, 2, 4, 5, 0}),
          Permutation({1, 0, 5, 4, 2, 3})};
}

inline MagmaTable cyclic_group(int n) {
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x][y] = (x + y) % n;
  return MagmaTable(std::move(cells));
}

inline MagmaTable direct_product(const MagmaTable& a, const MagmaTable& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      cells[x][y] = a.at(x / nb, y / nb) * nb + b.at(x % nb, y % nb);
  return MagmaTable(std::move(cells));
}

inline MagmaTable klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

// S3 as permutations of {0,1,2}: elements indexed lexicographically
// (012, 021, 102, 120, 201, 210); composition left to right.
inline MagmaTable symmetric_s3() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int* p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> cells(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[j][perms[i][x]];
      cells[i][j] = index_of(comp);
    }
  return MagmaTable(std::move(cells));
}

// Dihedral group of order 8: r^a s^b with 0<=a<4, 0<=b<2, encoded as 2a+b.
inline MagmaTable dihedral_8() {
  auto enc = [](int a, int b) { return a * 2 + b; };
  std::vector<std::vector<int>> cells(8, std::vector<int>(8));
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + a2*(-1)^b1) s^(b1+b2)
          const int a = ((a1 + (b1 ? 4 - a2 : a2)) % 4);
          const int b = (b1 + b2) % 2;
          cells[enc(a1, b1)][enc(a2, b2)] = enc(a, b);
        }
  return MagmaTable(std::move(cells));
}

// Quaternion group: 1,-1,i,-i,j,-j,k,-k encoded 0..7 (sign = low bit).
inline MagmaTable quaternion_8() {
  // Multiplication on {1,i,j,k} with sign tracking.
  auto mul = [](int x, int y) {  // x,y in 0..7; unit = x>>1 (0:1,1:i,2:j,3:k), sign = x&1
    static const int unit_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_tab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    const int ux = x >> 1, uy = y >> 1;
    const int unit = unit_tab[ux][uy];
    const int sign = (x & 1) ^ (y & 1) ^ sign_tab[ux][uy];
    return unit * 2 + sign;
  };
  std::vector<std::vector<int>> cells(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) cells[x][y] = mul(x, y);
  return MagmaTable(std::move(cells));
}

}  // namespace smiso::fixtures

#endif  // SMISO_FIXTURES_HPP
