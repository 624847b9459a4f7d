#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qsl/errors.hpp"

namespace qsl {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Planck constant (reduced). Defaults to 1 so the dimensionless
/// convention of most worked examples applies out of the box; all
/// formulas carry it explicitly so unit-ful runs stay possible.
struct PhysicalConstants {
    double hbar = 1.0;
};

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kOrthonormalityTolerance = 1e-10;

/// Unit-norm complex amplitude vector over a fixed dimension d >= 2.
class PureState {
  public:
    /// Validates the norm invariant; throws on violation.
    explicit PureState(Vector amplitudes);

    /// Rescales to unit norm, then constructs. Rejects (near-)zero vectors.
    static PureState normalized(Vector amplitudes);

    const Vector& amplitudes() const noexcept { return amplitudes_; }
    Eigen::Index dim() const noexcept { return amplitudes_.size(); }

    /// <this|other>.
    Complex inner(const PureState& other) const;

  private:
    Vector amplitudes_;
};

/// d x d complex Hermitian matrix (units of energy, hbar-relative).
class HermitianOperator {
  public:
    /// Validates Hermiticity; throws on violation.
    explicit HermitianOperator(Matrix entries);

    /// Symmetrizes (M + M^dagger)/2 before constructing; for inputs that
    /// are Hermitian only up to roundoff.
    static HermitianOperator symmetrized(const Matrix& entries);

    static HermitianOperator zero(Eigen::Index d);
    static HermitianOperator identity(Eigen::Index d);

    const Matrix& entries() const noexcept { return entries_; }
    Eigen::Index dim() const noexcept { return entries_.rows(); }

    Vector apply(const PureState& state) const;

  private:
    Matrix entries_;
};

/// Ordered set of d orthonormal vectors; the reference frame for the
/// classical/non-classical split. Stored as the columns of a unitary.
class OrthonormalBasis {
  public:
    /// Columns of `vectors` are the basis kets; orthonormality is validated.
    explicit OrthonormalBasis(Matrix vectors);

    static OrthonormalBasis canonical(Eigen::Index d);

    const Matrix& vectors() const noexcept { return vectors_; }
    Eigen::Index dim() const noexcept { return vectors_.rows(); }

    PureState vector(Eigen::Index k) const;

    /// Coefficients c with c_k = <a_k|psi>.
    Vector coefficients(const PureState& state) const;

  private:
    Matrix vectors_;
};

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* context);

}  // namespace qsl
