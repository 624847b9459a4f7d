#pragma once

#include <vector>

#include "qsl/types.hpp"

namespace qsl {

/// Basis states with |<a_k|psi>|^2 below this are excluded from the
/// split and Fisher sums; the formulas have 0/0 there and excluding
/// zero-measure terms never affects expectations in psi.
inline constexpr double kSupportEpsilon = 1e-12;

/// Below this, the Fisher-type sum is treated as zero and the dispersion
/// is reported as infinite (state stationary relative to the basis).
inline constexpr double kFisherEpsilon = 1e-14;

/// B = classical + nonclassical relative to a reference basis. The
/// classical part is diagonal in that basis and carries the full
/// expectation of B; only the non-classical remainder drives evolution.
struct ClassicalSplit {
    HermitianOperator classical;
    HermitianOperator nonclassical;
    OrthonormalBasis basis;
    std::vector<bool> support_mask;
};

/// Classical part sum_k m_k |a_k><a_k| with
/// m_k = <a_k| {B,rho}/2 |a_k> / <a_k|rho|a_k> on supported k, else 0.
ClassicalSplit classical_part(const HermitianOperator& b, const PureState& psi,
                              const OrthonormalBasis& basis);

/// Variance of the non-classical part of B in psi. O(d^2); does not
/// materialize the split.
double nonclassical_variance(const HermitianOperator& b, const PureState& psi,
                             const OrthonormalBasis& basis);

/// Same quantity through the independent <B^2> - sum_k (...)^2 / 4p_k
/// route; kept as a cross-check of the direct form.
double nonclassical_variance_quadratic_form(const HermitianOperator& b, const PureState& psi,
                                            const OrthonormalBasis& basis);

/// Dispersion delta_B A of the observable with eigenbasis `a_basis`,
/// under infinitesimal changes generated by B. Returns +infinity when
/// the state is stationary in this basis.
double dispersion(const OrthonormalBasis& a_basis, const HermitianOperator& b,
                  const PureState& psi, const PhysicalConstants& constants = {});

inline bool is_infinite_dispersion(double value) { return std::isinf(value); }

/// |delta_B A * Delta B^nc - hbar/2|. Throws ErrorCode::Stationary when
/// the dispersion is infinite.
double exact_ur_residual(const OrthonormalBasis& a_basis, const HermitianOperator& b,
                         const PureState& psi, const PhysicalConstants& constants = {});

}  // namespace qsl
