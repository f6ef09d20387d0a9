#ifndef SMISO_TABLE_IO_HPP
#define SMISO_TABLE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "smiso/errors.hpp"
#include "smiso/magma.hpp"

namespace smiso {

/// TableFile format: one line with the order n, then n lines of n
/// space-separated integers in 0..n-1.
inline MagmaTable parse_table(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw parse_error("empty table file", lineno, 1);
  int n = 0;
  {
    std::istringstream is(line);
    if (!(is >> n) || n < 1) throw parse_error("bad order line", lineno, 1);
    std::string rest;
    if (is >> rest) throw parse_error("trailing tokens after order", lineno, 1);
  }
  std::vector<std::vector<int>> cells;
  for (int r = 0; r < n; ++r) {
    if (!next_line()) throw parse_error("unexpected end of file: expected row", lineno + 1, 1);
    std::istringstream is(line);
    std::vector<int> row;
    int v;
    while (is >> v) {
      if (v < 0 || v >= n)
        throw parse_error("cell value out of range 0..n-1", lineno,
                          static_cast<int>(row.size()) + 1);
      row.push_back(v);
    }
    if (static_cast<int>(row.size()) != n)
      throw parse_error("row has wrong length", lineno, static_cast<int>(row.size()) + 1);
    cells.push_back(std::move(row));
  }
  return MagmaTable(std::move(cells));
}

inline MagmaTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open table file: " + path, 0, 0);
  return parse_table(in);
}

/// Canonical whitespace: single spaces, one row per line, trailing newline.
inline std::string serialize_table(const MagmaTable& t) {
  std::ostringstream os;
  os << t.order() << "\n";
  for (int x = 0; x < t.order(); ++x) {
    for (int y = 0; y < t.order(); ++y) {
      if (y) os << ' ';
      os << t.at(x, y);
    }
    os << "\n";
  }
  return os.str();
}

inline void save_table(const MagmaTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw parse_error("cannot write table file: " + path, 0, 0);
  out << serialize_table(t);
}

}  // namespace smiso

#endif  // SMISO_TABLE_IO_HPP
