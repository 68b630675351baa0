#pragma once

#include <stdexcept>
#include <string>

namespace ks {

// Error codes cover user-input violations and internal consistency checks.
// Internal codes signal falsified mathematics (a bug), never bad input.
enum class errc {
  invalid_argument,
  degree_too_high,
  zero_polynomial,
  singular_system,
  no_sign_change,
  max_iterations,
  scale_overflow,
  not_log_fano,
  sign_mismatch,
  not_admissible,
  zero_twist,
  non_integer_class,
  not_primitive,
  not_kahler,
  wrong_sign_regime,
  gcd_hypothesis_failed,
  b_out_of_range,
  internal_inconsistency,
  no_root_found,
};

const char* errc_name(errc c);

class ks_error : public std::runtime_error {
 public:
  ks_error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

  // Internal errors map to CLI exit code 3, user errors to 2.
  bool internal() const noexcept {
    return code_ == errc::internal_inconsistency || code_ == errc::no_root_found;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw ks_error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace ks
