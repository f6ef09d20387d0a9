#ifndef SMISO_ERRORS_HPP
#define SMISO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smiso {

struct not_bijective : std::runtime_error {
  explicit not_bijective(const std::string& what) : std::runtime_error(what) {}
};

struct degree_mismatch : std::runtime_error {
  explicit degree_mismatch(const std::string& what) : std::runtime_error(what) {}
};

struct order_too_large : std::runtime_error {
  explicit order_too_large(const std::string& what) : std::runtime_error(what) {}
};

struct not_a_quasigroup : std::runtime_error {
  explicit not_a_quasigroup(const std::string& what) : std::runtime_error(what) {}
};

struct not_a_loop : std::runtime_error {
  explicit not_a_loop(const std::string& what) : std::runtime_error(what) {}
};

struct not_a_group : std::runtime_error {
  explicit not_a_group(const std::string& what) : std::runtime_error(what) {}
};

struct not_smarandache : std::runtime_error {
  explicit not_smarandache(const std::string& what) : std::runtime_error(what) {}
};

struct not_an_isotopism : std::runtime_error {
  explicit not_an_isotopism(const std::string& what) : std::runtime_error(what) {}
};

struct target_not_s_loop : std::runtime_error {
  explicit target_not_s_loop(const std::string& what) : std::runtime_error(what) {}
};

struct invalid_subgroup_size : std::runtime_error {
  explicit invalid_subgroup_size(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  int line;
  int column;
  parse_error(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
};

}  // namespace smiso

#endif  // SMISO_ERRORS_HPP
