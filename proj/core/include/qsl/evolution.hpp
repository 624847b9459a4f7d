#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qsl/types.hpp"

namespace qsl {

/// Mapping from time to the generator of the dynamics, with a
/// constant-in-time fast path (constant schedules evolve by exact
/// spectral propagation, no step error).
class HamiltonianSchedule {
  public:
    using Evaluator = std::function<HermitianOperator(double)>;

    static HamiltonianSchedule constant(HermitianOperator h);
    static HamiltonianSchedule time_dependent(Evaluator evaluate, Eigen::Index d);

    /// Piecewise-constant: piece i applies while t < boundaries[i]; the
    /// last operator covers everything beyond the final boundary.
    static HamiltonianSchedule piecewise(std::vector<double> boundaries,
                                         std::vector<HermitianOperator> pieces);

    HermitianOperator evaluate(double t) const;
    bool is_constant() const noexcept { return constant_.has_value(); }
    const HermitianOperator& constant_operator() const;
    Eigen::Index dim() const noexcept { return dim_; }

    /// Schedule generating the reversed dynamics: -H(T - t).
    HamiltonianSchedule reversed(double total_time) const;

  private:
    HamiltonianSchedule() = default;
    std::optional<HermitianOperator> constant_;
    Evaluator evaluate_;
    Eigen::Index dim_ = 0;
};

/// Uniform time grid with the evolved states. Immutable once built.
class Trajectory {
  public:
    Trajectory(std::vector<double> times, std::vector<PureState> states,
               HamiltonianSchedule schedule, double max_norm_drift);

    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<PureState>& states() const noexcept { return states_; }
    const HamiltonianSchedule& schedule() const noexcept { return schedule_; }

    const PureState& initial_state() const { return states_.front(); }
    const PureState& final_state() const { return states_.back(); }
    double span() const { return times_.back(); }
    std::size_t step_count() const { return times_.size() - 1; }
    Eigen::Index dim() const { return states_.front().dim(); }

    /// Norm drift observed before per-step renormalization.
    double max_norm_drift() const noexcept { return max_norm_drift_; }

  private:
    std::vector<double> times_;
    std::vector<PureState> states_;
    HamiltonianSchedule schedule_;
    double max_norm_drift_ = 0.0;
};

/// Constant schedules: exact spectral propagation from t = 0 at every
/// grid point. Time-dependent: exponential midpoint rule (2nd order),
/// renormalizing each step. Throws StepResolution if consecutive states
/// overlap below 0.9 (grid too coarse for the dynamics).
Trajectory evolve(const HamiltonianSchedule& schedule, const PureState& psi0, double total_time,
                  std::size_t steps, const PhysicalConstants& constants = {});

/// p_k = |<psi_0|psi_k>|^2 along the grid; p_0 = 1.
std::vector<double> survival_probability(const Trajectory& trajectory);

enum class Monotonicity { Decreasing, Increasing, NonMonotonic };

const char* to_string(Monotonicity m) noexcept;

/// DECREASING wins ties (a constant series is both); callers generally
/// only need "not NON_MONOTONIC".
Monotonicity monotonicity(const std::vector<double>& series, double tol = 1e-10);

struct PassageOptions {
    std::size_t scan_steps = 4096;
    double time_resolution = 1e-10;
};

/// Earliest time at which hilbert_angle(psi_t, target) < angle_tol,
/// located on a scan grid (interior dips of the angle are refined by
/// ternary search) and sharpened by bisection to `time_resolution`.
/// Empty when the target is never approached within T_max.
std::optional<double> first_passage_time(const HamiltonianSchedule& schedule,
                                         const PureState& psi0, const PureState& target,
                                         double angle_tol, double t_max,
                                         const PassageOptions& options = {},
                                         const PhysicalConstants& constants = {});

/// Mean of a uniformly sampled series over [0, T]: composite Simpson,
/// with a trapezoid patch on the last interval for even point counts.
double time_average(const std::vector<double>& series, double total_time);

/// Same quadrature without the 1/T factor.
double integrate_series(const std::vector<double>& series, double total_time);

}  // namespace qsl
