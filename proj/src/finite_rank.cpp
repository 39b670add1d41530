#include "orthopoly/finite_rank.hpp"

#include <algorithm>

#include "orthopoly/matrix_rep.hpp"

namespace orthopoly {

namespace {

constexpr std::uint64_t kAdditivityCheckSeed = 0x6F727468u;  // fixed; keeps the check deterministic
constexpr int kAdditivityCheckPairs = 16;

ComplexMatrix columnsToMatrix(std::span<const ComplexVector> cols, int dim) {
    ComplexMatrix m(dim, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
    return m;
}

double largestSingularValue(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

/// Greedy selection, in input order, of columns staying independent under a
/// singular-value threshold. Returns selected indices; `basis` accumulates an
/// orthonormal basis of the selected span.
std::vector<int> selectIndependent(const std::vector<ComplexVector>& cols, double threshold,
                                   std::vector<ComplexVector>& basis) {
    std::vector<int> picked;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        ComplexVector r = cols[j];
        for (const ComplexVector& q : basis) r -= (q.adjoint() * cols[j]).value() * q;
        if (r.norm() > threshold) {
            basis.push_back(r / r.norm());
            picked.push_back(static_cast<int>(j));
        }
    }
    return picked;
}

}  // namespace

FiniteRankOperator FiniteRankOperator::fromTerms(int dim, std::vector<RankOneOperator> terms) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (const RankOneOperator& t : terms) {
        if (t.x.size() != dim || t.f.size() != dim)
            throw DimensionError("FiniteRankOperator: term dimension mismatch");
        m += t.matrix();
    }
    return FiniteRankOperator(dim, std::move(terms), std::move(m));
}

FiniteRankOperator FiniteRankOperator::fromMatrix(const ComplexMatrix& m, double tol) {
    requireSquare(m, "FiniteRankOperator::fromMatrix");
    requireFinite(m, "FiniteRankOperator::fromMatrix");
    const int d = static_cast<int>(m.rows());
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    std::vector<RankOneOperator> terms;
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) <= cutoff) break;
        // m = sum_i s_i u_i v_i^H; as x (x) f with f = conj(v_i).
        terms.push_back({sv(i) * svd.matrixU().col(i), svd.matrixV().col(i).conjugate()});
    }
    return fromTerms(d, std::move(terms));
}

double BiorthogonalSystem::biorthogonalityResidual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            const Complex v = (g[i].transpose() * y[j]).value();
            const Complex expected = i == j ? Complex(1.0) : Complex(0.0);
            worst = std::max(worst, std::abs(v - expected));
        }
    return worst;
}

BiorthogonalSystem buildBiorthogonalSystem(std::span<const RankOneOperator> ops) {
    if (ops.empty()) throw PreconditionError("buildBiorthogonalSystem: empty operator list");
    const int d = ops.front().dim();
    double max_term_norm = 0.0;
    for (const RankOneOperator& op : ops) {
        if (op.dim() != d || op.f.size() != d)
            throw DimensionError("buildBiorthogonalSystem: mixed dimensions");
        max_term_norm = std::max(max_term_norm, op.x.norm() * op.f.norm());
    }
    const double degenerate_tol = 1e-12 * (1.0 + max_term_norm);
    for (const RankOneOperator& op : ops)
        if (op.x.norm() * op.f.norm() <= degenerate_tol)
            throw DegenerateInputError("buildBiorthogonalSystem: zero rank-one term");

    // Stage 1: basis of the span of the input functionals, greedily in input
    // order under the singular-value threshold.
    std::vector<ComplexVector> fcols;
    fcols.reserve(ops.size());
    for (const RankOneOperator& op : ops) fcols.push_back(op.f);
    const double fthreshold =
        kRankTolFactor * largestSingularValue(columnsToMatrix(fcols, d));
    std::vector<ComplexVector> fbasis;
    const std::vector<int> fsel = selectIndependent(fcols, fthreshold, fbasis);
    if (fsel.empty()) throw DegenerateInputError("buildBiorthogonalSystem: functional span collapsed");

    BiorthogonalSystem sys;
    for (int j : fsel) sys.g.push_back(ops[static_cast<std::size_t>(j)].f);
    const int l = static_cast<int>(sys.g.size());

    // Stage 2: minimum-norm vectors with g_i(y_j) = delta_ij.
    ComplexMatrix gmat_t(l, d);  // rows g_i^T
    for (int i = 0; i < l; ++i) gmat_t.row(i) = sys.g[static_cast<std::size_t>(i)].transpose();
    const ComplexMatrix y1 = gmat_t.completeOrthogonalDecomposition().pseudoInverse();
    for (int j = 0; j < l; ++j) sys.y.push_back(y1.col(j));

    // Stage 3: extend with vectors spanning the input columns modulo the span
    // of y_1..y_l, realized in its orthogonal complement. Each selected
    // vector is then shifted inside its coset so every earlier functional
    // annihilates it.
    const ComplexMatrix yspan = columnsToMatrix(sys.y, d);
    const Eigen::HouseholderQR<ComplexMatrix> qr(yspan);
    const ComplexMatrix qy = qr.householderQ() * ComplexMatrix::Identity(d, l);
    std::vector<ComplexVector> projected;
    projected.reserve(ops.size());
    for (const RankOneOperator& op : ops) projected.push_back(op.x - qy * (qy.adjoint() * op.x));
    const double xthreshold =
        kRankTolFactor * largestSingularValue(columnsToMatrix(projected, d));
    std::vector<ComplexVector> xbasis;
    for (int j : selectIndependent(projected, std::max(xthreshold, degenerate_tol), xbasis)) {
        ComplexVector ynew = projected[static_cast<std::size_t>(j)];
        for (int i = 0; i < l; ++i)
            ynew -= (sys.g[static_cast<std::size_t>(i)].transpose() * ynew).value() *
                    sys.y[static_cast<std::size_t>(i)];
        sys.y.push_back(std::move(ynew));
    }

    const int k = static_cast<int>(sys.y.size());
    if (k > d)
        throw CapacityError("buildBiorthogonalSystem: construction needs order " +
                            std::to_string(k) + " > ambient dimension " + std::to_string(d));

    // Stage 4: minimum-norm functionals biorthogonal to the full vector
    // family; vanishing on y_1..y_l places them in the annihilator.
    if (k > l) {
        const ComplexMatrix ybig_t = columnsToMatrix(sys.y, d).transpose();  // k x d
        const auto solver = ybig_t.completeOrthogonalDecomposition();
        for (int i = l; i < k; ++i) {
            ComplexVector e = ComplexVector::Zero(k);
            e(i) = 1.0;
            sys.g.push_back(solver.solve(e));
        }
    }
    return sys;
}

SubalgebraEmbedding::SubalgebraEmbedding(BiorthogonalSystem system) : system_(std::move(system)) {
    if (system_.k() == 0) throw PreconditionError("SubalgebraEmbedding: empty system");
    const int d = system_.dim();
    const int k = system_.k();
    ymat_ = ComplexMatrix(d, k);
    gmat_ = ComplexMatrix(d, k);
    for (int i = 0; i < k; ++i) {
        ymat_.col(i) = system_.y[static_cast<std::size_t>(i)];
        gmat_.col(i) = system_.g[static_cast<std::size_t>(i)];
    }
}

SubalgebraEmbedding embed(const BiorthogonalSystem& system) { return SubalgebraEmbedding(system); }

ComplexMatrix SubalgebraEmbedding::forward(const ComplexMatrix& op) const {
    if (op.rows() != ymat_.rows() || op.cols() != ymat_.rows())
        throw DimensionError("SubalgebraEmbedding::forward: operator dimension mismatch");
    return gmat_.transpose() * op * ymat_;
}

ComplexMatrix SubalgebraEmbedding::backwardMatrix(const ComplexMatrix& m) const {
    if (m.rows() != k() || m.cols() != k())
        throw DimensionError("SubalgebraEmbedding::backward: matrix order mismatch");
    return ymat_ * m * gmat_.transpose();
}

FiniteRankOperator SubalgebraEmbedding::backward(const ComplexMatrix& m) const {
    if (m.rows() != k() || m.cols() != k())
        throw DimensionError("SubalgebraEmbedding::backward: matrix order mismatch");
    std::vector<RankOneOperator> terms;
    terms.reserve(static_cast<std::size_t>(k()) * static_cast<std::size_t>(k()));
    for (int i = 0; i < k(); ++i)
        for (int j = 0; j < k(); ++j) {
            const Complex c = m(i, j);
            if (c != Complex(0.0))
                terms.push_back({c * system_.y[static_cast<std::size_t>(i)],
                                 system_.g[static_cast<std::size_t>(j)]});
        }
    return FiniteRankOperator::fromTerms(dim(), std::move(terms));
}

FiniteRankOperator SubalgebraEmbedding::unitOperator() const {
    return backward(ComplexMatrix::Identity(k(), k()));
}

EmbeddingDiagnostics checkEmbedding(const SubalgebraEmbedding& embedding,
                                    std::span<const RankOneOperator> ops, int products,
                                    std::uint64_t seed) {
    EmbeddingDiagnostics diag;
    diag.biorthogonality = embedding.system().biorthogonalityResidual();

    for (const RankOneOperator& op : ops) {
        const ComplexMatrix m = op.matrix();
        const ComplexMatrix roundtrip = embedding.backwardMatrix(embedding.forward(m));
        diag.containment =
            std::max(diag.containment, relResidual(normF(roundtrip - m), normF(m)));
    }

    Rng rng(seed);
    const int k = embedding.k();
    for (int p = 0; p < products; ++p) {
        const ComplexMatrix ma = rng.squareMatrix(k);
        const ComplexMatrix mb = rng.squareMatrix(k);
        const ComplexMatrix sa = embedding.backwardMatrix(ma);
        const ComplexMatrix sb = embedding.backwardMatrix(mb);
        const ComplexMatrix lhs = embedding.forward(sa * sb);
        const ComplexMatrix rhs = embedding.forward(sa) * embedding.forward(sb);
        diag.multiplicativity =
            std::max(diag.multiplicativity,
                     relResidual(normF(lhs - rhs), std::max(normF(lhs), normF(rhs))));
    }
    return diag;
}

namespace {

ComplexMatrix zeroCodomainValue(const HomogeneousPolynomial& P) {
    const ComplexMatrix probe =
        P(ComplexMatrix::Zero(P.domain_dim, P.domain_dim));
    return ComplexMatrix::Zero(probe.rows(), probe.cols());
}

void checkOrthogonalAdditivity(const HomogeneousPolynomial& P) {
    if (P.domain_dim < 2) return;  // on a one-dimensional space every pair is trivial
    const auto pairs =
        generateOrthogonalPairs(P.domain_dim, kAdditivityCheckPairs, kAdditivityCheckSeed);
    const AdditivityReport report = testOrthogonalAdditivity(P, pairs);
    if (!report.verdict)
        throw NotRepresentableError(
            "representOnFiniteRank: polynomial is not orthogonally additive (residual " +
            std::to_string(report.max_residual) + ")");
}

}  // namespace

ComplexMatrix representViaSystem(const HomogeneousPolynomial& P, const FiniteRankOperator& T,
                                 const BiorthogonalSystem& system) {
    const SubalgebraEmbedding iso = embed(system);
    const ComplexMatrix roundtrip = iso.backwardMatrix(iso.forward(T.matrix()));
    if (normF(roundtrip - T.matrix()) > kVerdictTol * (1.0 + normF(T.matrix())))
        throw PreconditionError("representViaSystem: system does not contain the operator");

    // The polynomial pulled back to the k x k algebra through the embedding
    // is homogeneous of the same degree, so the unital-algebra extraction
    // applies verbatim.
    HomogeneousPolynomial pulled;
    pulled.degree = P.degree;
    pulled.domain_dim = iso.k();
    pulled.kind = "custom";
    pulled.eval = [&P, &iso](const ComplexMatrix& m) { return P(iso.backwardMatrix(m)); };
    const LinearMap phi_local =
        extractPhi(asSymmetricForm(pulled), UnitalMatrixAlgebra{iso.k()});
    return phi_local.apply(iso.forward(T.matrix()));
}

ComplexMatrix representOnFiniteRank(const HomogeneousPolynomial& P, const FiniteRankOperator& T) {
    if (P.domain_dim != T.dim())
        throw DimensionError("representOnFiniteRank: dimension mismatch");
    checkOrthogonalAdditivity(P);
    const FiniteRankOperator reduced = FiniteRankOperator::fromMatrix(T.matrix());
    if (reduced.terms().empty()) return zeroCodomainValue(P);
    return representViaSystem(P, T, buildBiorthogonalSystem(reduced.terms()));
}

FiniteRankOperator findLocalUnit(const FiniteRankOperator& T) {
    const FiniteRankOperator reduced = FiniteRankOperator::fromMatrix(T.matrix());
    if (reduced.terms().empty()) return FiniteRankOperator::zero(T.dim());
    return embed(buildBiorthogonalSystem(reduced.terms())).unitOperator();
}

}  // namespace orthopoly
