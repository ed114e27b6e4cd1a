#pragma once

#include <stdexcept>
#include <string>

namespace tdks {

enum class errc {
  invalid_exponent,
  solver_failure,
  negative_density,
  invalid_lda_params,
  ion_on_grid_node,
  missing_history,
  kernel_underresolved,
  picard_divergence,
  linear_solve_failure,
  insufficient_ladder,
  parse_error,
  validation_error,
  io_error,
  format_error,
  truncation_error,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::solver_failure: return "SolverFailure";
    case errc::negative_density: return "NegativeDensity";
    case errc::invalid_lda_params: return "InvalidLdaParams";
    case errc::ion_on_grid_node: return "IonOnGridNode";
    case errc::missing_history: return "MissingHistory";
    case errc::kernel_underresolved: return "KernelUnderresolved";
    case errc::picard_divergence: return "PicardDivergence";
    case errc::linear_solve_failure: return "LinearSolveFailure";
    case errc::insufficient_ladder: return "InsufficientLadder";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::io_error: return "IoError";
    case errc::format_error: return "FormatError";
    case errc::truncation_error: return "TruncationError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

// Single exception type carrying a machine-checkable code; call sites that
// branch on the failure kind catch Error and switch on code().
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tdks
