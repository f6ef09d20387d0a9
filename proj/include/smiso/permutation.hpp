#ifndef SMISO_PERMUTATION_HPP
#define SMISO_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "smiso/errors.hpp"

namespace smiso {

/// A bijection on {0..n-1}, written as a right action: the image of x is x*P,
/// accessed as p[x]. Composition reads left to right: x*(P*Q) == (x*P)*Q.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw not_bijective("image list is not a bijection of 0.." +
                            std::to_string(images_.size() - 1));
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 0; x < degree(); ++x) im[images_[x]] = x;
    Permutation p;
    p.images_ = std::move(im);
    return p;
  }

  // x*(P*Q) = (x*P)*Q
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw degree_mismatch("composing permutations of degrees " +
                            std::to_string(p.degree()) + " and " +
                            std::to_string(q.degree()));
    std::vector<int> im(p.images_.size());
    for (int x = 0; x < p.degree(); ++x) im[x] = q.images_[p.images_[x]];
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  auto operator<=>(const Permutation&) const = default;

  /// Sorted cycle lengths; equal for conjugate permutations.
  std::vector<int> cycle_type() const {
    std::vector<int> lens;
    std::vector<char> seen(images_.size(), 0);
    for (int x = 0; x < degree(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (int y = x; !seen[y]; y = images_[y]) {
        seen[y] = 1;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int x = 0; x < degree(); ++x) {
      if (x) os << ',';
      os << images_[x];
    }
    return os.str();
  }

  /// Parses a comma-separated image list like "1,2,3,4,0".
  static Permutation parse(const std::string& text) {
    std::vector<int> im;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw not_bijective("bad permutation token '" + tok + "'");
      im.push_back(v);
    }
    return Permutation(std::move(im));
  }

 private:
  std::vector<int> images_;
};

}  // namespace smiso

#endif  // SMISO_PERMUTATION_HPP
