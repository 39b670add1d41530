#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthopoly/rng.hpp"
#include "orthopoly/types.hpp"

namespace orthopoly {

/// Linear map from the k x k matrices into a matrix space Y, materialized as
/// a coefficient matrix acting on column-major vectorizations.
class LinearMap {
public:
    LinearMap(int in_dim, int out_rows, int out_cols, ComplexMatrix coeff)
        : in_dim_(in_dim), out_rows_(out_rows), out_cols_(out_cols), coeff_(std::move(coeff)) {
        if (coeff_.rows() != static_cast<Eigen::Index>(out_rows_) * out_cols_ ||
            coeff_.cols() != static_cast<Eigen::Index>(in_dim_) * in_dim_)
            throw DimensionError("LinearMap: coefficient matrix shape mismatch");
        requireFinite(coeff_, "LinearMap");
    }

    static LinearMap identity(int k) {
        return LinearMap(k, k, k, ComplexMatrix::Identity(k * k, k * k));
    }

    static LinearMap zero(int k, int out_rows, int out_cols) {
        return LinearMap(k, out_rows, out_cols, ComplexMatrix::Zero(out_rows * out_cols, k * k));
    }

    static LinearMap random(int k, int out_rows, int out_cols, Rng& rng) {
        return LinearMap(k, out_rows, out_cols, rng.matrix(out_rows * out_cols, k * k));
    }

    ComplexMatrix apply(const ComplexMatrix& a) const {
        if (a.rows() != in_dim_ || a.cols() != in_dim_)
            throw DimensionError("LinearMap::apply: operand order mismatch");
        return unvec(coeff_ * vec(a), out_rows_, out_cols_);
    }

    int inDim() const { return in_dim_; }
    int outRows() const { return out_rows_; }
    int outCols() const { return out_cols_; }
    const ComplexMatrix& coeff() const { return coeff_; }

    /// Max entrywise distance between coefficient matrices.
    double entrywiseDistance(const LinearMap& other) const {
        if (in_dim_ != other.in_dim_ || out_rows_ != other.out_rows_ || out_cols_ != other.out_cols_)
            throw DimensionError("LinearMap::entrywiseDistance: shape mismatch");
        return (coeff_ - other.coeff_).cwiseAbs().maxCoeff();
    }

    friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
        return LinearMap(a.in_dim_, a.out_rows_, a.out_cols_, a.coeff_ + b.coeff_);
    }

    friend LinearMap operator*(Complex s, const LinearMap& a) {
        return LinearMap(a.in_dim_, a.out_rows_, a.out_cols_, s * a.coeff_);
    }

private:
    int in_dim_;
    int out_rows_, out_cols_;
    ComplexMatrix coeff_;
};

/// Degree-n homogeneous polynomial on the k x k matrices, supplied either as
/// a black-box evaluator or as a canonical instance a -> Phi(a^n) built from
/// a stored linear map.
struct HomogeneousPolynomial {
    int degree = 1;
    int domain_dim = 1;
    std::string kind = "custom";  // "canonical" | "power" | "trace_power" | "custom"
    std::function<ComplexMatrix(const ComplexMatrix&)> eval;
    std::optional<LinearMap> known_phi;

    ComplexMatrix operator()(const ComplexMatrix& a) const {
        if (a.rows() != domain_dim || a.cols() != domain_dim)
            throw DimensionError("HomogeneousPolynomial: operand order mismatch");
        ComplexMatrix v = eval(a);
        requireFinite(v, "HomogeneousPolynomial");
        return v;
    }

    static HomogeneousPolynomial canonical(const LinearMap& phi, int n);

    /// a -> a^n, the canonical instance with the identity representing map.
    static HomogeneousPolynomial power(int n, int k);

    /// a -> (tr a)^n as a 1x1 value; not orthogonally additive for n >= 2.
    static HomogeneousPolynomial tracePower(int n, int k);

    static HomogeneousPolynomial zero(int n, int k, int out_rows, int out_cols);
};

/// Symmetric n-linear evaluator on n-tuples of k x k matrices.
struct SymmetricMultilinearForm {
    int arity = 1;
    int domain_dim = 1;
    std::function<ComplexMatrix(std::span<const ComplexMatrix>)> eval;

    ComplexMatrix operator()(std::span<const ComplexMatrix> args) const {
        if (static_cast<int>(args.size()) != arity)
            throw DimensionError("SymmetricMultilinearForm: arity mismatch");
        return eval(args);
    }

    ComplexMatrix operator()(std::initializer_list<ComplexMatrix> args) const {
        std::vector<ComplexMatrix> v(args);
        return (*this)(std::span<const ComplexMatrix>(v));
    }
};

/// Signed average over the 2^n sign patterns recovering the symmetric
/// n-linear map from the polynomial's diagonal. Summation order is fixed, so
/// results are bit-for-bit reproducible.
ComplexMatrix polarize(const HomogeneousPolynomial& P, std::span<const ComplexMatrix> args);

/// The symmetric form whose evaluator is polarize(P, .).
SymmetricMultilinearForm asSymmetricForm(const HomogeneousPolynomial& P);

/// The n-linear map (a_1..a_n) -> (1/n!) Phi(sum over orderings of the
/// products a_{s(1)}...a_{s(n)}). For canonical polynomials this is an
/// independent route to the same symmetric form as polarize.
SymmetricMultilinearForm canonicalFormFromMap(const LinearMap& phi, int n);

/// Evaluates (1/m!) Phi(sum over orderings of products of args) directly.
ComplexMatrix symmetrizedProductValue(const LinearMap& phi, std::span<const ComplexMatrix> args);

struct HomogeneityReport {
    double max_deviation = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Samples random (lambda, a) and reports the worst relative deviation of
/// P(lambda a) from lambda^n P(a).
HomogeneityReport checkHomogeneity(const HomogeneousPolynomial& P, int samples, std::uint64_t seed);

}  // namespace orthopoly
