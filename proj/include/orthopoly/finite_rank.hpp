#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orthopoly/multilinear.hpp"

namespace orthopoly {

/// Rank-one operator x (x) f acting by v -> f(v) x, where f is the linear
/// functional v -> sum_i f_i v_i (no conjugation).
struct RankOneOperator {
    ComplexVector x;
    ComplexVector f;

    int dim() const { return static_cast<int>(x.size()); }

    ComplexMatrix matrix() const { return x * f.transpose(); }

    ComplexVector apply(const ComplexVector& v) const {
        if (v.size() != f.size()) throw DimensionError("RankOneOperator::apply: dimension mismatch");
        return (f.transpose() * v).value() * x;
    }
};

/// Finite sum of rank-one operators over a shared coordinate space, with a
/// cached dense matrix form.
class FiniteRankOperator {
public:
    static FiniteRankOperator fromTerms(int dim, std::vector<RankOneOperator> terms);

    /// Splits a dense matrix into rank-one terms by singular value
    /// decomposition, discarding components below tol * largest singular value.
    static FiniteRankOperator fromMatrix(const ComplexMatrix& m, double tol = kRankTolFactor);

    static FiniteRankOperator zero(int dim) { return fromTerms(dim, {}); }

    int dim() const { return dim_; }
    const std::vector<RankOneOperator>& terms() const { return terms_; }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    FiniteRankOperator(int dim, std::vector<RankOneOperator> terms, ComplexMatrix m)
        : dim_(dim), terms_(std::move(terms)), matrix_(std::move(m)) {}

    int dim_;
    std::vector<RankOneOperator> terms_;
    ComplexMatrix matrix_;
};

/// Vectors y_1..y_k and functionals g_1..g_k with g_i(y_j) = delta_ij.
struct BiorthogonalSystem {
    std::vector<ComplexVector> y;
    std::vector<ComplexVector> g;

    int k() const { return static_cast<int>(y.size()); }
    int dim() const { return y.empty() ? 0 : static_cast<int>(y.front().size()); }

    /// Max |g_i(y_j) - delta_ij| over all index pairs.
    double biorthogonalityResidual() const;
};

/// Constructs a biorthogonal system whose span contains every input
/// operator: a basis of the input functionals is selected first, matching
/// vectors are solved for, and the vector family is then extended inside a
/// complement of their span to absorb the remaining input columns.
/// Input order is semantically significant: it drives basis selection.
BiorthogonalSystem buildBiorthogonalSystem(std::span<const RankOneOperator> ops);

/// The induced isomorphism between the subalgebra spanned by {y_i (x) g_j}
/// and the full k x k matrix algebra.
class SubalgebraEmbedding {
public:
    explicit SubalgebraEmbedding(BiorthogonalSystem system);

    const BiorthogonalSystem& system() const { return system_; }
    int k() const { return system_.k(); }
    int dim() const { return static_cast<int>(ymat_.rows()); }

    /// T -> [g_i(T y_j)]_ij.
    ComplexMatrix forward(const ComplexMatrix& op) const;
    ComplexMatrix forward(const FiniteRankOperator& op) const { return forward(op.matrix()); }

    /// M -> sum_ij M_ij y_i (x) g_j.
    FiniteRankOperator backward(const ComplexMatrix& m) const;

    /// Dense matrix of backward(m), computed without materializing terms.
    ComplexMatrix backwardMatrix(const ComplexMatrix& m) const;

    /// The operator mapped from the k x k identity; a local unit for every
    /// operator in the subalgebra.
    FiniteRankOperator unitOperator() const;

private:
    BiorthogonalSystem system_;
    ComplexMatrix ymat_;  // d x k, columns y_i
    ComplexMatrix gmat_;  // d x k, columns g_i
};

SubalgebraEmbedding embed(const BiorthogonalSystem& system);

struct EmbeddingDiagnostics {
    double biorthogonality = 0.0;
    double containment = 0.0;
    double multiplicativity = 0.0;
};

/// Residuals for the embedding invariants: biorthogonality of the system,
/// round-trip containment of the inputs, and multiplicativity of forward on
/// seeded products inside the subalgebra.
EmbeddingDiagnostics checkEmbedding(const SubalgebraEmbedding& embedding,
                                    std::span<const RankOneOperator> ops, int products,
                                    std::uint64_t seed);

/// Pushes P through the subalgebra containing T, extracts the representing
/// map there, and returns its value at T. Requires P to pass an orthogonal
/// additivity spot-check; the result is independent of the enclosing system.
ComplexMatrix representOnFiniteRank(const HomogeneousPolynomial& P, const FiniteRankOperator& T);

/// Same computation against a caller-chosen enclosing system (which must
/// contain T); used to exercise well-definedness across systems.
ComplexMatrix representViaSystem(const HomogeneousPolynomial& P, const FiniteRankOperator& T,
                                 const BiorthogonalSystem& system);

/// An operator S with TS = ST = T, taken from the subalgebra enclosing T.
FiniteRankOperator findLocalUnit(const FiniteRankOperator& T);

}  // namespace orthopoly
