#pragma once

#include "qsl/types.hpp"

namespace qsl {

/// <psi|O|psi>. The imaginary residue of the raw inner product must be
/// below 1e-10 (it is discarded).
double expectation(const HermitianOperator& op, const PureState& psi);

/// <O^2> - <O>^2, clamped to 0 when a tiny negative value appears.
double variance(const HermitianOperator& op, const PureState& psi);

/// arccos|<a|b>| in [0, pi/2]. Uses a phase-aligned chord form for nearly
/// parallel states, where the arccos route loses all precision.
double hilbert_angle(const PureState& a, const PureState& b);

/// exp(-i t H / hbar) by eigendecomposition.
Matrix spectral_exponential(const HermitianOperator& h, double t,
                            const PhysicalConstants& constants = {});

/// Deterministic orthonormal basis with psi0 as the first vector; the
/// rest comes from Gram-Schmidt over canonical unit vectors, skipping
/// any that turn numerically dependent.
OrthonormalBasis complete_basis_from(const PureState& psi0);

}  // namespace qsl
