#pragma once

#include <stdexcept>
#include <string>

namespace qsl {

/// Distinguished failure modes. Most are legitimate domain outcomes
/// (a stationary state, a non-monotone survival probability) rather
/// than programming errors; callers dispatch on the code.
enum class ErrorCode {
    DimensionMismatch,
    InvalidArgument,
    StepResolution,        // trajectory grid too coarse, raise steps
    NonMonotonicSurvival,  // p_t turned around inside the window
    NotEffectivelyTwoLevel,
    Stationary,            // exact UR degenerate: [B, rho] = 0 in this basis
    Degenerate,            // no evolution, no time estimate possible
    NotSelfInverse,
    TimeDependent,         // operation defined for constant generators only
    NotReached,
    NoImprovement,         // every optimizer restart failed to reach the target
    Numerical,             // non-convergence or an internal consistency check failed
    ScenarioParse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace qsl
