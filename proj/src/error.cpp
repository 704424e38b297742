#include "dpfrac/error.hpp"

namespace dpfrac {

const char* err_name(Err e) {
  switch (e) {
    case Err::invalid_parameter: return "invalid-parameter";
    case Err::not_connected: return "not-connected";
    case Err::violates_condition_3: return "violates-condition-3";
    case Err::violates_condition_4: return "violates-condition-4";
    case Err::invalid_color: return "invalid-color";
    case Err::normalization_precondition: return "normalization-precondition";
    case Err::invalid_tree: return "invalid-tree";
    case Err::invalid_assignment: return "invalid-assignment";
    case Err::too_large: return "too-large";
    case Err::infeasible: return "infeasible-trivially";
    case Err::integrity_failure: return "integrity-failure";
    case Err::construction_integrity: return "construction-integrity-error";
    case Err::parse_error: return "parse-error";
    case Err::no_bound: return "no-bound";
    case Err::too_close_to_one: return "too-close-to-1";
    case Err::not_found: return "not-found";
  }
  return "unknown-error";
}

}  // namespace dpfrac
