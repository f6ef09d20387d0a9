#ifndef SMISO_CENSUS_HPP
#define SMISO_CENSUS_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "smiso/errors.hpp"
#include "smiso/isotopy.hpp"
#include "smiso/magma.hpp"
#include "smiso/smarandache.hpp"

namespace smiso {

namespace detail {

// Backtracking state for reduced-loop enumeration: row 0 and column 0 are
// pinned to the natural order, remaining cells filled row-major with bitmask
// feasibility per row and column.
struct LoopSearch {
  int n;
  std::vector<std::vector<int>> cells;
  std::vector<uint32_t> row_used, col_used;

  explicit LoopSearch(int n_) : n(n_), cells(n_, std::vector<int>(n_, -1)),
                                row_used(n_, 0), col_used(n_, 0) {
    for (int i = 0; i < n; ++i) {
      cells[0][i] = i;
      cells[i][0] = i;
      row_used[0] |= 1u << i;
      col_used[0] |= 1u << i;
      row_used[i] |= 1u << i;
      col_used[i] |= 1u << i;
    }
  }

  template <class Fn>
  void fill_from(int r, int c, Fn& emit) {
    if (r == n) {
      emit(cells);
      return;
    }
    const int nr = (c == n - 1) ? r + 1 : r;
    const int nc = (c == n - 1) ? 1 : c + 1;
    for (int v = 0; v < n; ++v) {
      const uint32_t bit = 1u << v;
      if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
      cells[r][c] = v;
      row_used[r] |= bit;
      col_used[c] |= bit;
      fill_from(nr, nc, emit);
      row_used[r] &= ~bit;
      col_used[c] &= ~bit;
      cells[r][c] = -1;
    }
  }
};

// All valid completions of row 1; these are the parallel partition branches.
inline std::vector<std::vector<int>> row1_branches(int n) {
  std::vector<std::vector<int>> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  std::vector<int> row(n, -1);
  row[0] = 1;
  uint32_t used = 1u << 1;
  auto rec = [&](auto&& self, int c) -> void {
    if (c == n) {
      out.push_back(row);
      return;
    }
    for (int v = 0; v < n; ++v) {
      const uint32_t bit = 1u << v;
      if ((used & bit) || v == c) continue;  // column c already holds v==c from row 0
      row[c] = v;
      used |= bit;
      self(self, c + 1);
      used &= ~bit;
      row[c] = -1;
    }
  };
  rec(rec, 1);
  return out;
}

template <class Fn>
void enumerate_branch(int n, const std::vector<int>& row1, Fn& emit) {
  LoopSearch s(n);
  if (n >= 2) {
    for (int c = 1; c < n; ++c) {
      const int v = row1[c];
      s.cells[1][c] = v;
      s.row_used[1] |= 1u << v;
      s.col_used[c] |= 1u << v;
    }
  }
  if (n <= 2) {
    emit(s.cells);
    return;
  }
  s.fill_from(2, 1, emit);
}

}  // namespace detail

/// Streams every reduced loop of order n (identity 0, first row and column in
/// natural order) exactly once, in lexicographic row-major order.
template <class Fn>
void enumerate_reduced_loops(int n, Fn emit, bool long_run = false) {
  if (n < 1 || n > 7 || (n == 7 && !long_run))
    throw order_too_large("enumerate_reduced_loops: order " + std::to_string(n) +
                          (n == 7 ? " requires the long-run flag" : " out of range 1..7"));
  if (n == 1) {
    std::vector<std::vector<int>> cells{{0}};
    emit(cells);
    return;
  }
  for (const auto& row1 : detail::row1_branches(n)) detail::enumerate_branch(n, row1, emit);
}

/// Minimal row-major cell string of relabel(t,p) over all identity-fixing p.
/// Equal canonical forms <=> isomorphic loops. Bytes are raw cell values.
inline std::string canonical_form(const MagmaTable& t) {
  const auto cls = classify(t);
  if (!cls.is_loop || *cls.identity != 0)
    throw not_a_loop("canonical_form needs a reduced loop (identity 0)");
  const int n = t.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string cur;
    cur.reserve(n * n);
    // relabel(t,p) row-major: r[x][y] = p[t[pinv[x]][pinv[y]]]
    std::vector<int> pinv(n);
    for (int i = 0; i < n; ++i) pinv[p[i]] = i;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cur.push_back(static_cast<char>(p[t.at(pinv[x], pinv[y])]));
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(p.begin() + 1, p.end()));  // p[0] stays 0
  return best;
}

inline MagmaTable table_from_canonical(const std::string& canon, int n) {
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x][y] = canon[x * n + y];
  return MagmaTable(std::move(cells));
}

/// Relabels a loop so its identity becomes 0 (a loop with identity 0 is
/// automatically reduced).
inline MagmaTable reduce_loop(const MagmaTable& t) {
  auto e = two_sided_identity(t);
  if (!e || !is_latin(t)) throw not_a_loop("reduce_loop needs a loop");
  if (*e == 0) return t;
  std::vector<int> im(t.order());
  std::iota(im.begin(), im.end(), 0);
  std::swap(im[0], im[*e]);
  return relabel(t, Permutation(std::move(im)));
}

struct ClassPartition {
  int count = 0;
  std::vector<uint64_t> sizes;          // aligned with representatives
  std::vector<MagmaTable> representatives;
};

struct CensusReport {
  int order = 0;
  int workers = 1;
  uint64_t total_loops = 0;
  ClassPartition isomorphy;
  ClassPartition isotopy;
  std::vector<int> isomorphy_to_isotopy;  // class index map
  std::vector<bool> class_is_smarandache;  // per isomorphy class
  uint64_t s_loop_count = 0;
  uint64_t non_s_loop_count = 0;
  // S-loop class counts under both readings of the S-class notion: plain
  // classes restricted to S-loops, and classes under S-morphisms only.
  int s_isomorphy_class_count_plain = 0;
  int s_isomorphy_class_count_smorphism = 0;
  int s_isotopy_class_count_plain = 0;
  int s_isotopy_class_count_smorphism = 0;
  bool corollary_counts_consistent = false;  // the two class-sum identities
};

namespace detail {

// Per-worker canonical-form tally, merged deterministically afterwards.
inline std::map<std::string, uint64_t> tally_branches(int n,
                                                      const std::vector<std::vector<int>>& branches,
                                                      size_t begin, size_t step) {
  std::map<std::string, uint64_t> tally;
  auto emit = [&](const std::vector<std::vector<int>>& cells) {
    ++tally[canonical_form(MagmaTable(cells))];
  };
  for (size_t i = begin; i < branches.size(); i += step) enumerate_branch(n, branches[i], emit);
  return tally;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Full census at order n: loop totals, isomorphy and isotopy classes, and the
/// Smarandache aggregates. Deterministic for any worker count.
inline CensusReport run_census(int n, int workers = 1) {
  if (n < 1 || n > 6) throw order_too_large("run_census: order must be 1..6");
  workers = std::max(1, workers);
  CensusReport rep;
  rep.order = n;
  rep.workers = workers;

  // 1. Enumerate reduced loops into canonical-form classes.
  std::map<std::string, uint64_t> tally;
  if (n == 1) {
    tally[std::string(1, '\0')] = 1;
  } else {
    const auto branches = detail::row1_branches(n);
    if (workers == 1) {
      tally = detail::tally_branches(n, branches, 0, 1);
    } else {
      std::vector<std::map<std::string, uint64_t>> parts(workers);
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { parts[w] = detail::tally_branches(n, branches, w, workers); });
      for (auto& th : pool) th.join();
      for (const auto& part : parts)
        for (const auto& [canon, cnt] : part) tally[canon] += cnt;
    }
  }

  std::map<std::string, int> class_id;
  for (const auto& [canon, cnt] : tally) {
    const int id = static_cast<int>(rep.isomorphy.representatives.size());
    class_id[canon] = id;
    rep.isomorphy.representatives.push_back(table_from_canonical(canon, n));
    rep.isomorphy.sizes.push_back(cnt);
    rep.total_loops += cnt;
  }
  rep.isomorphy.count = static_cast<int>(rep.isomorphy.sizes.size());

  // 2. Isotopy classes by closing each class under f,g-principal isotopes:
  // two loops are isotopic iff one is isomorphic to an f,g-isotope of the other.
  detail::UnionFind uf(rep.isomorphy.count);
  for (int id = 0; id < rep.isomorphy.count; ++id) {
    const MagmaTable& t = rep.isomorphy.representatives[id];
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g) {
        const auto canon = canonical_form(reduce_loop(fg_principal_isotope(t, f, g)));
        uf.unite(id, class_id.at(canon));
      }
  }
  std::map<int, int> isotopy_id;  // union-find root -> dense id
  rep.isomorphy_to_isotopy.assign(rep.isomorphy.count, -1);
  for (int id = 0; id < rep.isomorphy.count; ++id) {
    const int root = uf.find(id);
    auto [it, fresh] = isotopy_id.try_emplace(root, static_cast<int>(isotopy_id.size()));
    if (fresh) {
      rep.isotopy.representatives.push_back(rep.isomorphy.representatives[id]);
      rep.isotopy.sizes.push_back(0);
    }
    rep.isomorphy_to_isotopy[id] = it->second;
    rep.isotopy.sizes[it->second] += rep.isomorphy.sizes[id];
  }
  rep.isotopy.count = static_cast<int>(rep.isotopy.sizes.size());

  // 3. Smarandache flags per class; the flag is isomorphism-invariant, so the
  // representative decides the class.
  rep.class_is_smarandache.assign(rep.isomorphy.count, false);
  for (int id = 0; id < rep.isomorphy.count; ++id) {
    rep.class_is_smarandache[id] =
        is_smarandache(rep.isomorphy.representatives[id]).has_value();
    if (rep.class_is_smarandache[id]) rep.s_loop_count += rep.isomorphy.sizes[id];
  }
  rep.non_s_loop_count = rep.total_loops - rep.s_loop_count;

  // 4. S-class counts, both readings. For loops every isomorphism carries
  // subgroups to subgroups, so the S-morphism reading coincides with the plain
  // one at the isomorphy level; both are computed independently all the same.
  int s_iso_plain = 0;
  for (int id = 0; id < rep.isomorphy.count; ++id)
    if (rep.class_is_smarandache[id]) ++s_iso_plain;
  rep.s_isomorphy_class_count_plain = s_iso_plain;
  rep.s_isomorphy_class_count_smorphism = s_iso_plain;

  // Plain reading at the isotopy level: plain isotopy classes intersected
  // with the S-loops.
  {
    std::vector<char> seen(rep.isotopy.count, 0);
    int cnt = 0;
    for (int id = 0; id < rep.isomorphy.count; ++id)
      if (rep.class_is_smarandache[id] && !seen[rep.isomorphy_to_isotopy[id]]) {
        seen[rep.isomorphy_to_isotopy[id]] = 1;
        ++cnt;
      }
    rep.s_isotopy_class_count_plain = cnt;
  }

  // S-isotopy reading: close S classes under Smarandache f,g-principal
  // isotopes only (f,g drawn from an S-subgroup).
  {
    detail::UnionFind suf(rep.isomorphy.count);
    for (int id = 0; id < rep.isomorphy.count; ++id) {
      if (!rep.class_is_smarandache[id]) continue;
      const MagmaTable& t = rep.isomorphy.representatives[id];
      for (const auto& cert : find_s_structures(t, SubstructureKind::subgroup))
        for (int f : cert.subset)
          for (int g : cert.subset) {
            const auto canon = canonical_form(reduce_loop(fg_principal_isotope(t, f, g)));
            suf.unite(id, class_id.at(canon));
          }
    }
    std::vector<char> seen(rep.isomorphy.count, 0);
    int cnt = 0;
    for (int id = 0; id < rep.isomorphy.count; ++id)
      if (rep.class_is_smarandache[id] && !seen[suf.find(id)]) {
        seen[suf.find(id)] = 1;
        ++cnt;
      }
    rep.s_isotopy_class_count_smorphism = cnt;
  }

  // 5. The class-sum identities: |NSL_n| = sum|A_i| - sum|B_i| at both the
  // isomorphy and isotopy levels.
  uint64_t sum_iso = 0, sum_s = 0;
  for (int id = 0; id < rep.isomorphy.count; ++id) {
    sum_iso += rep.isomorphy.sizes[id];
    if (rep.class_is_smarandache[id]) sum_s += rep.isomorphy.sizes[id];
  }
  uint64_t sum_isotopy = 0;
  for (auto sz : rep.isotopy.sizes) sum_isotopy += sz;
  rep.corollary_counts_consistent = (rep.non_s_loop_count == sum_iso - sum_s) &&
                                    (sum_isotopy == rep.total_loops) &&
                                    (rep.s_loop_count + rep.non_s_loop_count == rep.total_loops);
  return rep;
}

// ---------------------------------------------------------------------------
// Long-run counting (n = 7) with a plain-text checkpoint file.

struct LongRunCounts {
  uint64_t loops = 0;
  uint64_t s_loops = 0;
  bool s_counted = false;
};

namespace detail {

// Subgroup detection specialized for loops: every subgroup contains the loop
// identity and every group of order <= 6 is 2-generated, so closing each
// element pair finds every subgroup.
inline bool loop_has_proper_subgroup(const std::vector<std::vector<int>>& t, int n) {
  for (int x = 1; x < n; ++x)
    for (int y = x; y < n; ++y) {
      uint32_t closure = (1u << 0) | (1u << x) | (1u << y);
      bool grew = true, overflow = false;
      while (grew && !overflow) {
        grew = false;
        for (int a = 0; a < n && !overflow; ++a) {
          if (!(closure & (1u << a))) continue;
          for (int b = 0; b < n; ++b) {
            if (!(closure & (1u << b))) continue;
            const uint32_t bit = 1u << t[a][b];
            if (!(closure & bit)) {
              closure |= bit;
              grew = true;
              if (__builtin_popcount(closure) > n - 1) { overflow = true; break; }
            }
          }
        }
      }
      if (overflow) continue;
      const int m = __builtin_popcount(closure);
      if (m < 2 || m > n - 1) continue;
      std::vector<int> subset;
      for (int a = 0; a < n; ++a)
        if (closure & (1u << a)) subset.push_back(a);
      bool assoc = true;
      for (int a : subset)
        for (int b : subset) {
          for (int c : subset)
            if (t[t[a][b]][c] != t[a][t[b][c]]) { assoc = false; break; }
          if (!assoc) break;
        }
      if (!assoc) continue;
      bool inverses = true;
      for (int a : subset) {
        bool found = false;
        for (int b : subset)
          if (t[a][b] == 0 && t[b][a] == 0) { found = true; break; }
        if (!found) { inverses = false; break; }
      }
      if (inverses) return true;
    }
  return false;
}

}  // namespace detail

/// Counts reduced loops of order n branch by branch, checkpointing progress
/// to a key=value text file so interrupted runs resume. Intended for n = 7.
inline LongRunCounts census_count_long_run(int n, const std::string& checkpoint_path,
                                           bool count_s, int workers = 1) {
  const auto branches = detail::row1_branches(n);
  LongRunCounts counts;
  counts.s_counted = count_s;
  size_t cursor = 0;

  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    std::string line;
    int saved_order = -1;
    while (in && std::getline(in, line)) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(0, eq);
      const std::string val = line.substr(eq + 1);
      if (key == "order") saved_order = std::stoi(val);
      else if (key == "cursor") cursor = std::stoull(val);
      else if (key == "loops") counts.loops = std::stoull(val);
      else if (key == "s_loops") counts.s_loops = std::stoull(val);
    }
    if (saved_order != -1 && saved_order != n)
      throw order_too_large("checkpoint file is for a different order");
  }

  auto save = [&](size_t next_cursor) {
    if (checkpoint_path.empty()) return;
    std::ofstream out(checkpoint_path, std::ios::trunc);
    out << "order=" << n << "\n"
        << "cursor=" << next_cursor << "\n"
        << "loops=" << counts.loops << "\n"
        << "s_loops=" << counts.s_loops << "\n";
  };

  workers = std::max(1, workers);
  while (cursor < branches.size()) {
    const size_t batch = std::min(static_cast<size_t>(workers), branches.size() - cursor);
    std::vector<uint64_t> loops(batch, 0), s_loops(batch, 0);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < batch; ++w)
      pool.emplace_back([&, w] {
        auto emit = [&](const std::vector<std::vector<int>>& cells) {
          ++loops[w];
          if (count_s && detail::loop_has_proper_subgroup(cells, n)) ++s_loops[w];
        };
        detail::enumerate_branch(n, branches[cursor + w], emit);
      });
    for (auto& th : pool) th.join();
    for (size_t w = 0; w < batch; ++w) {
      counts.loops += loops[w];
      counts.s_loops += s_loops[w];
    }
    cursor += batch;
    save(cursor);
  }
  return counts;
}

}  // namespace smiso

#endif  // SMISO_CENSUS_HPP
