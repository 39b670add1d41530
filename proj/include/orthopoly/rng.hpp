#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "orthopoly/types.hpp"

namespace orthopoly {

/// Seeded splitmix64 generator. Hand-rolled so that streams are bit-identical
/// across platforms and standard-library versions; every random quantity in
/// the library derives from one of these.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t nextU64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double nextDouble() { return static_cast<double>(nextU64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * nextDouble(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return nextU64() % n; }

    Complex complexInSquare(double half_width = 1.0) {
        double re = uniform(-half_width, half_width);
        double im = uniform(-half_width, half_width);
        return {re, im};
    }

    /// Complex value with modulus in [lo, hi) and uniform phase.
    Complex complexInAnnulus(double lo, double hi) {
        double r = uniform(lo, hi);
        double t = uniform(0.0, 2.0 * std::numbers::pi);
        return {r * std::cos(t), r * std::sin(t)};
    }

    ComplexMatrix matrix(int rows, int cols, double half_width = 1.0) {
        ComplexMatrix m(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) m(i, j) = complexInSquare(half_width);
        return m;
    }

    ComplexMatrix squareMatrix(int k, double half_width = 1.0) { return matrix(k, k, half_width); }

    ComplexVector vector(int d, double half_width = 1.0) {
        ComplexVector v(d);
        for (int i = 0; i < d; ++i) v(i) = complexInSquare(half_width);
        return v;
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[static_cast<std::size_t>(below(i))]);
    }

    /// Independent child stream; deterministic in (seed, salt).
    Rng child(std::uint64_t salt) const {
        Rng mixer(state_ ^ (salt * 0xD6E8FEB86659FD93ULL + 0x2545F4914F6CDD1DULL));
        return Rng(mixer.nextU64());
    }

private:
    std::uint64_t state_;
};

}  // namespace orthopoly
