#pragma once

#include <stdexcept>
#include <string>

namespace dpfrac {

enum class Err {
  invalid_parameter,
  not_connected,
  violates_condition_3,   // matching placed on a non-edge
  violates_condition_4,   // non-injective cross map
  invalid_color,
  normalization_precondition,  // tree normalization needs fold >= 2
  invalid_tree,
  invalid_assignment,
  too_large,              // enumeration/brute-force budget exceeded
  infeasible,             // e.g. b > fold
  integrity_failure,      // two proven facts contradict; always a bug
  construction_integrity, // odd-cycle construction produced a bad selection
  parse_error,
  no_bound,
  too_close_to_one,       // |f(d) - 1| below the certification guard band
  not_found,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dpfrac
