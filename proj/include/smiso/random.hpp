#ifndef SMISO_RANDOM_HPP
#define SMISO_RANDOM_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "smiso/isotopy.hpp"
#include "smiso/magma.hpp"
#include "smiso/permutation.hpp"

namespace smiso {

/// All randomness flows from one 64-bit seed. Streams are split by name so
/// adding a consumer never perturbs the others.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed, uint64_t stream = 0)
      : base_(seed), engine_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

  SplitRng split(uint64_t stream) const { return SplitRng(base_, stream); }

  uint64_t next_u64() { return engine_(); }
  int uniform(int lo, int hi) {  // inclusive bounds
    return static_cast<int>(lo + next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  Permutation permutation(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(im[i], im[uniform(0, i)]);
    return Permutation(std::move(im));
  }

  /// A random permutation carrying the sorted set m onto the sorted set k
  /// (and the complements onto each other).
  Permutation permutation_with_image(int n, const std::vector<int>& m,
                                     const std::vector<int>& k) {
    std::vector<int> inside = k;
    std::vector<int> outside;
    std::vector<char> in_m(n, 0), in_k(n, 0);
    for (int x : m) in_m[x] = 1;
    for (int x : k) in_k[x] = 1;
    for (int x = 0; x < n; ++x)
      if (!in_k[x]) outside.push_back(x);
    for (int i = static_cast<int>(inside.size()) - 1; i > 0; --i)
      std::swap(inside[i], inside[uniform(0, i)]);
    for (int i = static_cast<int>(outside.size()) - 1; i > 0; --i)
      std::swap(outside[i], outside[uniform(0, i)]);
    std::vector<int> im(n);
    size_t a = 0, b = 0;
    for (int x = 0; x < n; ++x) im[x] = in_m[x] ? inside[a++] : outside[b++];
    return Permutation(std::move(im));
  }

  /// A random Latin square of order n (an isotope of the cyclic table).
  MagmaTable latin_square(int n) {
    std::vector<std::vector<int>> cells(n, std::vector<int>(n));
    const Permutation r = permutation(n), c = permutation(n), s = permutation(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) cells[x][y] = s[(r[x] + c[y]) % n];
    return MagmaTable(std::move(cells));
  }

 private:
  uint64_t base_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace smiso

#endif  // SMISO_RANDOM_HPP
