#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>

#include "orthopoly/errors.hpp"

namespace orthopoly {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerance policy: relative tolerances against scale = 1 + max operand norm.
// Frobenius is the default norm for residual scales; the operator 2-norm is
// used where submultiplicativity against projections matters.
inline constexpr double kVerdictTol = 1e-8;
inline constexpr double kPropertyTol = 1e-9;
inline constexpr double kStabilizationTol = 1e-10;
inline constexpr double kRankTolFactor = 1e-10;

// Default numeric-path caps: 2^n * n! polarization cost stays trivial.
inline constexpr int kMaxDegree = 6;
inline constexpr int kMaxOrder = 8;

inline double normF(const ComplexMatrix& a) { return a.norm(); }

/// Operator 2-norm (largest singular value).
inline double normOp(const ComplexMatrix& a) {
    if (a.size() == 0) return 0.0;
    return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues()(0);
}

/// Residual relative to 1 + scale_basis.
inline double relResidual(double diff, double scale_basis) {
    return diff / (1.0 + scale_basis);
}

inline void requireSquare(const ComplexMatrix& a, const char* what) {
    if (a.rows() != a.cols())
        throw DimensionError(std::string(what) + ": matrix is not square");
}

inline void requireFinite(const ComplexMatrix& a, const char* what) {
    if (!a.allFinite())
        throw NumericError(std::string(what) + ": non-finite entries");
}

/// a^n by repeated multiplication; a^0 = I.
inline ComplexMatrix matrixPower(const ComplexMatrix& a, int n) {
    requireSquare(a, "matrixPower");
    ComplexMatrix r = ComplexMatrix::Identity(a.rows(), a.cols());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

/// Column-major flattening of a matrix into a vector.
inline ComplexVector vec(const ComplexMatrix& a) {
    return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

inline ComplexMatrix unvec(const ComplexVector& v, int rows, int cols) {
    if (v.size() != static_cast<Eigen::Index>(rows) * cols)
        throw DimensionError("unvec: size mismatch");
    return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

}  // namespace orthopoly
