#include "qsl/types.hpp"

#include <cmath>
#include <sstream>

namespace qsl {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::StepResolution: return "STEP_RESOLUTION";
        case ErrorCode::NonMonotonicSurvival: return "NON_MONOTONIC_P";
        case ErrorCode::NotEffectivelyTwoLevel: return "NOT_EFFECTIVELY_2D";
        case ErrorCode::Stationary: return "STATIONARY";
        case ErrorCode::Degenerate: return "DEGENERATE";
        case ErrorCode::NotSelfInverse: return "NOT_SELF_INVERSE";
        case ErrorCode::TimeDependent: return "TIME_DEPENDENT";
        case ErrorCode::NotReached: return "NOT_REACHED";
        case ErrorCode::NoImprovement: return "NO_IMPROVEMENT";
        case ErrorCode::Numerical: return "NUMERICAL";
        case ErrorCode::ScenarioParse: return "SCENARIO_PARSE";
    }
    return "UNKNOWN";
}

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* context) {
    if (a != b) {
        std::ostringstream msg;
        msg << context << ": dimensions " << a << " and " << b << " differ";
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
}

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "state dimension must be >= 2");
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << "state norm " << norm << " deviates from 1 beyond " << kNormTolerance;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

PureState PureState::normalized(Vector amplitudes) {
    const double norm = amplitudes.norm();
    if (norm < 1e-14) {
        throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero amplitude vector");
    }
    return PureState(amplitudes / norm);
}

Complex PureState::inner(const PureState& other) const {
    require_same_dim(dim(), other.dim(), "inner product");
    return amplitudes_.dot(other.amplitudes_);
}

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw Error(ErrorCode::InvalidArgument, "operator matrix must be square");
    }
    const double deviation = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (deviation > kHermiticityTolerance) {
        std::ostringstream msg;
        msg << "matrix deviates from Hermiticity by " << deviation;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

HermitianOperator HermitianOperator::symmetrized(const Matrix& entries) {
    return HermitianOperator((entries + entries.adjoint()) / 2.0);
}

HermitianOperator HermitianOperator::zero(Eigen::Index d) {
    return HermitianOperator(Matrix::Zero(d, d));
}

HermitianOperator HermitianOperator::identity(Eigen::Index d) {
    return HermitianOperator(Matrix::Identity(d, d));
}

Vector HermitianOperator::apply(const PureState& state) const {
    require_same_dim(dim(), state.dim(), "operator application");
    return entries_ * state.amplitudes();
}

OrthonormalBasis::OrthonormalBasis(Matrix vectors) : vectors_(std::move(vectors)) {
    if (vectors_.rows() != vectors_.cols()) {
        throw Error(ErrorCode::InvalidArgument, "basis must hold exactly d vectors of dimension d");
    }
    const Matrix gram = vectors_.adjoint() * vectors_;
    const double deviation =
        (gram - Matrix::Identity(vectors_.rows(), vectors_.cols())).cwiseAbs().maxCoeff();
    if (deviation > kOrthonormalityTolerance) {
        std::ostringstream msg;
        msg << "basis deviates from orthonormality by " << deviation;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

OrthonormalBasis OrthonormalBasis::canonical(Eigen::Index d) {
    return OrthonormalBasis(Matrix::Identity(d, d));
}

PureState OrthonormalBasis::vector(Eigen::Index k) const {
    if (k < 0 || k >= dim()) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    return PureState::normalized(vectors_.col(k));
}

Vector OrthonormalBasis::coefficients(const PureState& state) const {
    require_same_dim(dim(), state.dim(), "basis coefficients");
    return vectors_.adjoint() * state.amplitudes();
}

}  // namespace qsl
