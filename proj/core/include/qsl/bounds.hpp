#pragma once

#include <optional>
#include <vector>

#include "qsl/evolution.hpp"
#include "qsl/types.hpp"

namespace qsl {

/// Below this time-averaged non-classical uncertainty an evolution is
/// treated as stationary: no finite time estimate exists.
inline constexpr double kDegenerateAverage = 1e-12;

/// Time average of Delta H^nc_t along the trajectory grid, with the
/// schedule evaluated at each grid time and the split taken in `basis`
/// (first vector must be the initial state).
double avg_nonclassical_uncertainty(const Trajectory& trajectory, const OrthonormalBasis& basis,
                                    const PhysicalConstants& constants = {});

/// Time average of the full uncertainty Delta H_t.
double avg_uncertainty(const Trajectory& trajectory, const PhysicalConstants& constants = {});

/// |c_i(t)| = |<a_i|psi_t>| for every grid time; row t, column i.
Eigen::MatrixXd amplitude_magnitudes(const Trajectory& trajectory, const OrthonormalBasis& basis);

/// Length of the curve traced by the real vector of amplitude
/// magnitudes: integral of sqrt(sum_i (d|c_i|/dt)^2), central
/// differences on the grid plus Simpson quadrature.
double real_path_length(const Trajectory& trajectory, const OrthonormalBasis& basis);

/// Instantaneous speed sqrt(sum_i (d|c_i|/dt)^2) of the real vector,
/// per grid point (central differences, one-sided at the ends).
std::vector<double> real_path_speed(const Trajectory& trajectory, const OrthonormalBasis& basis);

/// Exact transport time for two-level dynamics (or higher-d dynamics
/// confined to a two-dimensional subspace containing psi_0):
/// hbar * Theta_0T / <<Delta H^nc>>_T, with the split taken in the
/// eigenbasis of the initial-state projector. Requires a monotonically
/// decreasing survival probability.
double exact_time_2d(const Trajectory& trajectory, const PhysicalConstants& constants = {});
double exact_time_2d(const Trajectory& trajectory, const OrthonormalBasis& basis,
                     const PhysicalConstants& constants = {});

/// Basis {psi_0, chi, ...} with chi the normalized component of the
/// final state orthogonal to psi_0; the frame in which the two-level
/// result applies to subspace-confined dynamics.
OrthonormalBasis effective_two_level_basis(const Trajectory& trajectory);

/// Exact transport time in any dimension:
/// hbar * real_path_length / <<Delta H^nc>>_T. Throws Degenerate for
/// stationary evolution.
double exact_time_ddim(const Trajectory& trajectory, const OrthonormalBasis& basis,
                       const PhysicalConstants& constants = {});

/// Classical Fisher information series F(t) = sum_i (dp_i/dt)^2 / p_i
/// over supported i, from exact amplitude derivatives.
std::vector<double> classical_fisher(const Trajectory& trajectory,
                                     const OrthonormalBasis& basis,
                                     const PhysicalConstants& constants = {});

struct ImprovedMtBound {
    double t_improved_mt;  // hbar Theta / <<Delta H^nc>>
    double t_mt;           // hbar Theta / <<Delta H>>
};

/// Improved Mandelstam-Tamm bound plus the time-dependent MT bound.
/// Guarantees T >= t_improved_mt >= t_mt (up to 1e-6 relative); a
/// violation indicates an internal error and throws Numerical.
ImprovedMtBound improved_mt_bound(const Trajectory& trajectory, const OrthonormalBasis& basis,
                                  const PhysicalConstants& constants = {});

/// Margolus-Levitin bound hbar Theta / <H - E_min> for constant
/// schedules. Empty when the initial state sits at the ground energy.
std::optional<double> ml_bound(const Trajectory& trajectory,
                               const PhysicalConstants& constants = {});

/// Closed-form Delta H^nc(t) for self-inverse H (H^2 = I, dimensionless
/// convention): sqrt(1 - <H>^2) cos(t) / sqrt(1 - (1 - <H>^2) sin^2(t)),
/// valid inside the monotone window of p_t.
double self_inverse_closed_form(const HermitianOperator& h, const PureState& psi0, double t,
                                const PhysicalConstants& constants = {});

inline constexpr double kSelfInverseTolerance = 1e-10;

bool is_self_inverse(const HermitianOperator& h, double tol = kSelfInverseTolerance);

struct SaturationReport {
    bool saturated;
    double gap;                    // |T_IMT - T| / T
    double avg_nonclassical;       // quadrature value
    double avg_nonclassical_closed_form;  // arccos form
};

/// Verifies that the improved MT bound saturates for a time-independent
/// self-inverse generator over [0, T] (T inside the monotone window).
SaturationReport saturation_check(const HermitianOperator& h, const PureState& psi0,
                                  double total_time, const PhysicalConstants& constants = {});

struct ParameterBound {
    double theta_min_nonclassical;  // hbar Theta / <<Delta H^nc>>
    double theta_min_variance;      // hbar Theta / Delta H
};

/// Lower bounds on a unitary-encoded parameter theta. Throws Degenerate
/// when psi0 is stationary under H.
ParameterBound parameter_lower_bound(const HermitianOperator& h, const PureState& psi0,
                                     double theta, const PhysicalConstants& constants = {});

struct ComplexityBound {
    double complexity;        // arccos|<psi|U_theta|psi>|
    double bound_nonclassical;
    double bound_variance;
};

/// Geodesic circuit complexity of U_theta = exp(-i H theta / hbar) with
/// its two upper bounds; complexity <= bound_nc <= bound_var.
ComplexityBound complexity_bound(const HermitianOperator& h, const PureState& psi, double theta,
                                 const PhysicalConstants& constants = {});

/// hbar * omega * (|psi><perp| + |perp><psi|): transports psi along a
/// geodesic toward perp and saturates the MT bound.
HermitianOperator optimal_form_hamiltonian(const PureState& psi, const PureState& perp,
                                           double omega, const PhysicalConstants& constants = {});

struct BoundReport {
    double t_actual = 0.0;
    std::optional<double> t_exact_2d;
    std::optional<double> t_exact_ddim;
    std::optional<double> t_improved_mt;
    std::optional<double> t_mt;
    std::optional<double> t_ml;
    double theta = 0.0;
    double wootters_length = 0.0;
    double avg_nonclassical = 0.0;
    double avg_variance = 0.0;
    // Why a bound value is absent, keyed by the error codes.
    std::string exact_2d_note;
    std::string ddim_note;
    std::string ml_note;
    // Saturation within 1e-6 relative of t_actual, where defined.
    bool saturated_exact_2d = false;
    bool saturated_ddim = false;
    bool saturated_improved_mt = false;
    bool saturated_mt = false;
};

/// Evaluates every bound on one trajectory; per-bound degeneracies are
/// recorded as notes instead of escaping.
BoundReport evaluate_bounds(const Trajectory& trajectory, const OrthonormalBasis& basis,
                            const PhysicalConstants& constants = {});

inline constexpr double kSaturationRelTol = 1e-6;

}  // namespace qsl
