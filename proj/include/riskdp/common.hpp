#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace riskdp {

using Real = double;

/// Absolute tolerance for feasibility and value comparisons.
/// All fixtures use short decimal data, so an absolute tolerance suffices.
inline constexpr Real kFeasTol = 1e-9;

/// Extended-real sentinel for "no feasible plan". Never subtracted from.
inline constexpr Real kInf = std::numeric_limits<Real>::infinity();

enum class ErrorCode {
    missing_field,
    unknown_key,
    row_not_normalized,
    empty_admissible_set,
    undefined_cost,
    state_unknown,
    invalid_distribution,
    policy_undefined,
    infeasible,
    too_large,
    bad_argument,
};

/// Library-wide error type. `code` identifies the failure class; `detail`
/// carries an optional payload (e.g. the minimal feasible threshold for
/// `infeasible`).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message, Real detail = 0.0)
        : std::runtime_error(message), code_(code), detail_(detail) {}

    ErrorCode code() const { return code_; }
    Real detail() const { return detail_; }

  private:
    ErrorCode code_;
    Real detail_;
};

/// Formats a real with at most 9 significant digits, using the shortest
/// precision that round-trips back to the same double. Infinities render
/// as "inf"/"-inf". Used by the text reports so identical runs produce
/// byte-identical output.
std::string format_real(Real x);

} // namespace riskdp
