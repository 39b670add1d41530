#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthopoly/finite_rank.hpp"
#include "orthopoly/matrix_rep.hpp"
#include "orthopoly/multilinear.hpp"

namespace orthopoly {

/// Increasing sequence of norm-one projections ending at the identity, the
/// desk-scale stand-in for a bounded approximate identity of bound 1.
class ApproximateIdentitySequence {
public:
    /// Diagonal truncations onto the first r coordinates, r = 1..d.
    static ApproximateIdentitySequence truncation(int d);

    /// Projections of increasing rank under a fixed random unitary; an
    /// alternative sequence for robustness testing.
    static ApproximateIdentitySequence randomProjections(int d, std::uint64_t seed);

    int dim() const { return d_; }
    int size() const { return static_cast<int>(projections_.size()); }
    double bound() const { return 1.0; }

    /// r is 1-based; the last element is the identity.
    const ComplexMatrix& at(int r) const { return projections_[static_cast<std::size_t>(r - 1)]; }

private:
    ApproximateIdentitySequence(int d, std::vector<ComplexMatrix> projections)
        : d_(d), projections_(std::move(projections)) {}

    int d_;
    std::vector<ComplexMatrix> projections_;
};

struct StabilizedValue {
    ComplexMatrix value;
    int stabilized_at = 0;  // 1-based index where the scan stopped
};

/// Scans evaluate(E_r) for r = 1..d and returns the value once successive
/// differences stay below tol * scale for two consecutive steps. The last
/// element of the sequence is an exact identity for the algebra, so a scan
/// that reaches it returns its value; a sequence not ending at the identity
/// that never settles raises a convergence error.
StabilizedValue stabilizedLimit(const std::function<ComplexMatrix(const ComplexMatrix&)>& evaluate,
                                const ApproximateIdentitySequence& ai,
                                double tol = kStabilizationTol);

/// The (n-1)-linear map obtained by sending the last slot of phi through the
/// approximate identity; symmetric whenever phi is.
class DerivedForm {
public:
    DerivedForm(SymmetricMultilinearForm base, ApproximateIdentitySequence ai);

    int arity() const { return arity_; }

    ComplexMatrix operator()(std::span<const ComplexMatrix> args) const;

    SymmetricMultilinearForm asForm() const;

private:
    int arity_;
    SymmetricMultilinearForm base_;
    ApproximateIdentitySequence ai_;
};

DerivedForm derivePhiPrime(const SymmetricMultilinearForm& phi,
                           const ApproximateIdentitySequence& ai);

/// The stabilized limit of phi(T, E_r, ..., E_r); for a form arising from an
/// orthogonally additive polynomial this recovers the representing map at T,
/// with no weak-topology limit involved.
ComplexMatrix recoverPhi(const SymmetricMultilinearForm& phi, const ApproximateIdentitySequence& ai,
                         const FiniteRankOperator& T);

/// recoverPhi materialized as a linear map by evaluating on matrix units.
LinearMap recoverPhiMap(const SymmetricMultilinearForm& phi, const ApproximateIdentitySequence& ai);

struct RecursionReport {
    double hypothesis_residual = 0.0;  // n-linear identity through the derived form
    double recursion_residual = 0.0;   // same identity one derivation deeper (arity >= 3)
    bool pass = false;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Builds the canonical symmetric form of the given map, then checks that
/// contracting two slots through the derived form reproduces it, and that the
/// derived form satisfies the same contraction one level down.
RecursionReport verifyDerivedFormRecursion(const LinearMap& phi, int n, int samples,
                                           std::uint64_t seed);

struct PhiPrimeContractReport {
    double max_ratio = 0.0;        // sup |phi'(a..)| / prod |a_i|
    double empirical_norm = 0.0;   // sup over evaluated tuples of |phi(..)| / prod norms
    double symmetry_residual = 0.0;
    double derived_identity_residual = 0.0;  // phi' vs (1/(n-1)!) Phi of the symmetrized product
    bool norm_bound_holds = false;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Empirical contract of the derived form: the norm bound against the
/// empirical norm of phi (operator norms on arguments, bound constant 1),
/// symmetry inheritance, and the closed-form identity for canonical forms.
PhiPrimeContractReport checkPhiPrimeContract(const LinearMap& phi, int n, int d, int samples,
                                             std::uint64_t seed);

struct PipelineStage {
    std::string name;
    double residual = 0.0;
    bool pass = false;
    std::vector<ComplexMatrix> witness;  // offending pair or operand, empty when passing
};

struct PipelineReport {
    std::vector<PipelineStage> stages;
    bool verdict = false;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// End-to-end verification on operators over a d-dimensional coordinate
/// space: orthogonal additivity, the derived-form contraction identity on
/// rank-one tuples, recovery of the representing map through the approximate
/// identity, the representation P(T) = Phi(T^n), and agreement with the
/// subalgebra route. Stops at the first failing stage.
PipelineReport verifyTheoremPipeline(const HomogeneousPolynomial& P, int d, int samples,
                                     std::uint64_t seed);

}  // namespace orthopoly
