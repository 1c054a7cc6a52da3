#pragma once

#include <stdexcept>
#include <string>

namespace lexit {

enum class Errc {
  dimension_mismatch,
  not_downward,
  vertex_not_in_domain,
  terminal_source,
  cube_not_contained,
  cube_not_in_domain,
  too_large,
  budget_exceeded,
  rho_below_min,
  precondition_failed,
  not_regular,
  policy_violates_rho,
  size_mismatch,
  missing_vertex,
  bad_config,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::not_downward: return "not_downward";
    case Errc::vertex_not_in_domain: return "vertex_not_in_domain";
    case Errc::terminal_source: return "terminal_source";
    case Errc::cube_not_contained: return "cube_not_contained";
    case Errc::cube_not_in_domain: return "cube_not_in_domain";
    case Errc::too_large: return "too_large";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::rho_below_min: return "rho_below_min";
    case Errc::precondition_failed: return "precondition_failed";
    case Errc::not_regular: return "not_regular";
    case Errc::policy_violates_rho: return "policy_violates_rho";
    case Errc::size_mismatch: return "size_mismatch";
    case Errc::missing_vertex: return "missing_vertex";
    case Errc::bad_config: return "bad_config";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lexit
