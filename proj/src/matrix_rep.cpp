#include "orthopoly/matrix_rep.hpp"

#include <algorithm>
#include <numeric>

namespace orthopoly {

namespace {
constexpr double kMaxConditionNumber = 1e3;
constexpr int kConditionRetries = 64;
}  // namespace

bool isOrthogonal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    requireSquare(a, "isOrthogonal");
    requireSquare(b, "isOrthogonal");
    if (a.rows() != b.rows()) throw DimensionError("isOrthogonal: order mismatch");
    const double scale = 1.0 + normF(a) * normF(b);
    return std::max(normF(a * b), normF(b * a)) <= tol * scale;
}

std::vector<OrthogonalPair> generateOrthogonalPairs(int k, int count, std::uint64_t seed) {
    if (k < 2) throw PreconditionError("generateOrthogonalPairs: k must be >= 2");
    Rng rng(seed);
    std::vector<OrthogonalPair> pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    for (int p = 0; p < count; ++p) {
        // Disjoint diagonal supports: a random split of a shuffled index set.
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle(idx);
        const int s1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1)));
        const int s2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - s1)));

        ComplexMatrix d1 = ComplexMatrix::Zero(k, k);
        ComplexMatrix d2 = ComplexMatrix::Zero(k, k);
        for (int i = 0; i < s1; ++i) d1(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i)]) = rng.complexInAnnulus(0.5, 1.5);
        for (int i = s1; i < s1 + s2; ++i) d2(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i)]) = rng.complexInAnnulus(0.5, 1.5);

        ComplexMatrix s;
        bool found = false;
        for (int attempt = 0; attempt < kConditionRetries; ++attempt) {
            s = rng.squareMatrix(k);
            Eigen::JacobiSVD<ComplexMatrix> svd(s);
            const double smin = svd.singularValues()(k - 1);
            if (smin > 0.0 && svd.singularValues()(0) / smin <= kMaxConditionNumber) {
                found = true;
                break;
            }
        }
        if (!found) throw GenerationError("generateOrthogonalPairs: no well-conditioned basis found");

        const ComplexMatrix sinv = s.partialPivLu().inverse();
        pairs.push_back({s * d1 * sinv, s * d2 * sinv});
    }
    return pairs;
}

AdditivityReport testOrthogonalAdditivity(const HomogeneousPolynomial& P,
                                          std::span<const OrthogonalPair> pairs, double tol) {
    AdditivityReport report;
    for (const OrthogonalPair& pair : pairs) {
        if (!isOrthogonal(pair.a, pair.b, kVerdictTol))
            throw PreconditionError("testOrthogonalAdditivity: input pair is not orthogonal");
        const ComplexMatrix sum_value = P(pair.a + pair.b);
        const ComplexMatrix split = P(pair.a) + P(pair.b);
        const double abs_residual = normF(sum_value - split);
        const double rel = relResidual(abs_residual, std::max(normF(sum_value), normF(split)));
        if (rel > report.max_residual) {
            report.max_residual = rel;
            report.max_abs_residual = abs_residual;
            report.witness = pair;
        }
    }
    report.verdict = report.max_residual <= tol;
    if (report.verdict) report.witness.reset();
    return report;
}

LinearMap extractPhi(const SymmetricMultilinearForm& phi, const UnitalMatrixAlgebra& algebra) {
    const int k = algebra.order;
    if (phi.domain_dim != k) throw DimensionError("extractPhi: algebra order mismatch");

    std::vector<ComplexMatrix> args(static_cast<std::size_t>(phi.arity),
                                    algebra.identityElement());
    // Column p of the coefficient matrix is the value on the basis element
    // with 1 at (p mod k, p div k), matching column-major vectorization.
    ComplexMatrix coeff;
    int out_rows = 0, out_cols = 0;
    for (int p = 0; p < k * k; ++p) {
        args[0] = algebra.unit(p % k, p / k);
        const ComplexMatrix value = phi(args);
        if (p == 0) {
            out_rows = static_cast<int>(value.rows());
            out_cols = static_cast<int>(value.cols());
            coeff = ComplexMatrix::Zero(value.size(), k * k);
        }
        coeff.col(p) = vec(value);
    }
    return LinearMap(k, out_rows, out_cols, coeff);
}

RepresentationReport verifyRepresentation(const HomogeneousPolynomial& P, const LinearMap& phi,
                                          int samples, std::uint64_t seed) {
    if (P.domain_dim != phi.inDim())
        throw DimensionError("verifyRepresentation: dimension mismatch");
    Rng rng(seed);
    RepresentationReport report;
    report.samples = samples;
    report.seed = seed;
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix a = rng.squareMatrix(P.domain_dim);
        const ComplexMatrix lhs = P(a);
        const ComplexMatrix rhs = phi.apply(matrixPower(a, P.degree));
        const double rel = relResidual(normF(lhs - rhs), std::max(normF(lhs), normF(rhs)));
        report.max_residual = std::max(report.max_residual, rel);
    }
    report.verdict = report.max_residual <= kVerdictTol;
    return report;
}

}  // namespace orthopoly
