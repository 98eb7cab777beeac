#pragma once

#include <stdexcept>
#include <string>

namespace feld {

enum class errc {
  invalid_config,
  config_mismatch,
  cap_exceeded,
  too_large,
  dimension_cap,
  verification_failure,
  not_divisible,
  division_by_zero,
  zero_polynomial,
  insufficient_alphas,
  degenerate_sample,
  parse_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace feld
