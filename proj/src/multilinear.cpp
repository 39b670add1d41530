#include "orthopoly/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orthopoly {

HomogeneousPolynomial HomogeneousPolynomial::canonical(const LinearMap& phi, int n) {
    HomogeneousPolynomial p;
    p.degree = n;
    p.domain_dim = phi.inDim();
    p.kind = "canonical";
    p.eval = [phi, n](const ComplexMatrix& a) { return phi.apply(matrixPower(a, n)); };
    p.known_phi = phi;
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::power(int n, int k) {
    HomogeneousPolynomial p;
    p.degree = n;
    p.domain_dim = k;
    p.kind = "power";
    p.eval = [n](const ComplexMatrix& a) { return matrixPower(a, n); };
    p.known_phi = LinearMap::identity(k);
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::tracePower(int n, int k) {
    HomogeneousPolynomial p;
    p.degree = n;
    p.domain_dim = k;
    p.kind = "trace_power";
    p.eval = [n](const ComplexMatrix& a) {
        ComplexMatrix v(1, 1);
        v(0, 0) = std::pow(a.trace(), n);
        return v;
    };
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::zero(int n, int k, int out_rows, int out_cols) {
    HomogeneousPolynomial p;
    p.degree = n;
    p.domain_dim = k;
    p.kind = "custom";
    p.eval = [out_rows, out_cols](const ComplexMatrix&) {
        return ComplexMatrix::Zero(out_rows, out_cols).eval();
    };
    return p;
}

ComplexMatrix polarize(const HomogeneousPolynomial& P, std::span<const ComplexMatrix> args) {
    const int n = P.degree;
    if (n < 1 || n > kMaxDegree)
        throw CapacityError("polarize: degree " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxDegree));
    if (static_cast<int>(args.size()) != n)
        throw DimensionError("polarize: expected " + std::to_string(n) + " arguments, got " +
                             std::to_string(args.size()));
    for (const ComplexMatrix& a : args) {
        requireSquare(a, "polarize");
        if (a.rows() != P.domain_dim)
            throw DimensionError("polarize: argument order mismatch");
    }

    ComplexMatrix acc;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        ComplexMatrix x = ComplexMatrix::Zero(P.domain_dim, P.domain_dim);
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            const double eps = (mask >> i) & 1u ? -1.0 : 1.0;
            sign *= eps < 0.0 ? -1 : 1;
            x += eps * args[static_cast<std::size_t>(i)];
        }
        ComplexMatrix term = static_cast<double>(sign) * P(x);
        if (acc.size() == 0)
            acc = term;
        else
            acc += term;
    }
    double divisor = std::pow(2.0, n);
    for (int i = 2; i <= n; ++i) divisor *= i;
    acc /= divisor;
    requireFinite(acc, "polarize");
    return acc;
}

SymmetricMultilinearForm asSymmetricForm(const HomogeneousPolynomial& P) {
    SymmetricMultilinearForm form;
    form.arity = P.degree;
    form.domain_dim = P.domain_dim;
    form.eval = [P](std::span<const ComplexMatrix> args) { return polarize(P, args); };
    return form;
}

ComplexMatrix symmetrizedProductValue(const LinearMap& phi, std::span<const ComplexMatrix> args) {
    const int m = static_cast<int>(args.size());
    const int k = phi.inDim();
    for (const ComplexMatrix& a : args)
        if (a.rows() != k || a.cols() != k)
            throw DimensionError("symmetrizedProductValue: operand order mismatch");

    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    ComplexMatrix sum = ComplexMatrix::Zero(k, k);
    double count = 0.0;
    do {
        ComplexMatrix prod = ComplexMatrix::Identity(k, k);
        for (int i : idx) prod = prod * args[static_cast<std::size_t>(i)];
        sum += prod;
        count += 1.0;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return phi.apply(sum / count);
}

SymmetricMultilinearForm canonicalFormFromMap(const LinearMap& phi, int n) {
    SymmetricMultilinearForm form;
    form.arity = n;
    form.domain_dim = phi.inDim();
    form.eval = [phi](std::span<const ComplexMatrix> args) {
        return symmetrizedProductValue(phi, args);
    };
    return form;
}

HomogeneityReport checkHomogeneity(const HomogeneousPolynomial& P, int samples, std::uint64_t seed) {
    if (samples < 1) throw PreconditionError("checkHomogeneity: samples must be >= 1");
    Rng rng(seed);
    HomogeneityReport report;
    report.samples = samples;
    report.seed = seed;
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix a = rng.squareMatrix(P.domain_dim);
        const Complex lambda = rng.complexInAnnulus(0.25, 2.0);
        const ComplexMatrix lhs = P(lambda * a);
        const ComplexMatrix pa = P(a);
        const Complex lambda_n = std::pow(lambda, P.degree);
        const double dev = normF(lhs - lambda_n * pa) / (1.0 + std::abs(lambda_n) * normF(pa));
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    return report;
}

}  // namespace orthopoly
