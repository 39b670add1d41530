#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orthopoly/multilinear.hpp"

namespace orthopoly {

/// The full k x k matrix algebra with its identity and matrix-unit basis.
struct UnitalMatrixAlgebra {
    int order = 1;

    ComplexMatrix identityElement() const { return ComplexMatrix::Identity(order, order); }

    /// Matrix unit E_ij: 1 at (i, j), zero elsewhere. Zero-based indices.
    ComplexMatrix unit(int i, int j) const {
        ComplexMatrix e = ComplexMatrix::Zero(order, order);
        e(i, j) = 1.0;
        return e;
    }
};

struct OrthogonalPair {
    ComplexMatrix a, b;
};

/// True iff max(|ab|, |ba|) <= tol * (1 + |a||b|).
bool isOrthogonal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kVerdictTol);

/// Pairs (S D1 S^-1, S D2 S^-1) with D1, D2 random diagonals of disjoint
/// support and S random with condition number below 1e3; every pair is
/// orthogonal by construction.
std::vector<OrthogonalPair> generateOrthogonalPairs(int k, int count, std::uint64_t seed);

struct AdditivityReport {
    double max_residual = 0.0;      // relative to 1 + value norms
    double max_abs_residual = 0.0;  // unnormalized
    bool verdict = false;
    std::optional<OrthogonalPair> witness;  // pair realizing the max residual, when failing
};

/// Max over pairs of |P(a+b) - P(a) - P(b)| relative to scale; verdict holds
/// when the relative residual stays at or below tol.
AdditivityReport testOrthogonalAdditivity(const HomogeneousPolynomial& P,
                                          std::span<const OrthogonalPair> pairs,
                                          double tol = kVerdictTol);

/// Materializes a -> phi(a, e, ..., e) as a linear map by evaluating on the
/// matrix-unit basis.
LinearMap extractPhi(const SymmetricMultilinearForm& phi, const UnitalMatrixAlgebra& algebra);

struct RepresentationReport {
    double max_residual = 0.0;
    bool verdict = false;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Max residual |P(a) - Phi(a^n)| / scale over seeded random a.
RepresentationReport verifyRepresentation(const HomogeneousPolynomial& P, const LinearMap& phi,
                                          int samples, std::uint64_t seed);

}  // namespace orthopoly
