#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

enum class errc {
  invalid_letter,
  alphabet_mismatch,
  empty_pattern,
  empty_image,
  everywhere_growing_required,
  degenerate_spectrum,
  singular_system,
  level_too_small,
  horizon_exceeded,
  compatibility_violation,
  budget_exceeded,
  non_convergence,
  word_too_long,
  parse_error,
};

const char* errc_name(errc k);

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

}  // namespace subshift
