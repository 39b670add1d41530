#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orthopoly/errors.hpp"

namespace orthopoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Letters of the free alphabet: 0 encodes the distinguished indeterminate z,
// i >= 1 encodes x_i. Words are concatenation sequences of letters.
using Letter = std::uint8_t;
inline constexpr Letter kZeta = 0;

using Word = std::vector<Letter>;

/// Renders a word as "x1 x3 z x2"; the empty word renders as "1".
std::string wordToString(const Word& w);

/// Declared alphabet: indeterminates x_1..x_n plus optionally z.
struct Alphabet {
    int n = 0;
    bool zeta = false;

    bool contains(Letter l) const { return l == kZeta ? zeta : static_cast<int>(l) <= n; }

    Alphabet merged(const Alphabet& other) const {
        return {std::max(n, other.n), zeta || other.zeta};
    }
};

/// Element of the free associative algebra over the alphabet, with exact
/// coefficients. Canonical form: no zero coefficient is ever stored, and terms
/// are kept in lexicographic word order.
template <typename Coeff>
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(Alphabet a) : alphabet_(a) {}

    static NCPoly monomial(Alphabet a, Word w, Coeff c) {
        NCPoly p(a);
        p.add(std::move(w), std::move(c));
        return p;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Word, Coeff>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    /// Sum of all coefficients; for nonnegative expansions this is the word
    /// count with multiplicity.
    Coeff coefficientSum() const {
        Coeff s = 0;
        for (const auto& [w, c] : terms_) s += c;
        return s;
    }

    void add(Word w, Coeff c) {
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& other) {
        alphabet_ = alphabet_.merged(other.alphabet_);
        for (const auto& [w, c] : other.terms_) add(w, c);
        return *this;
    }

    NCPoly& operator-=(const NCPoly& other) {
        alphabet_ = alphabet_.merged(other.alphabet_);
        for (const auto& [w, c] : other.terms_) add(w, -c);
        return *this;
    }

    NCPoly& operator*=(const Coeff& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Coeff& s) { return a *= s; }
    friend NCPoly operator*(const Coeff& s, NCPoly a) { return a *= s; }

    /// Free-algebra product: words concatenate, coefficients multiply.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r(a.alphabet_.merged(b.alphabet_));
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                Word w;
                w.reserve(wa.size() + wb.size());
                w.insert(w.end(), wa.begin(), wa.end());
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(std::move(w), ca * cb);
            }
        }
        return r;
    }

    bool operator==(const NCPoly& other) const { return terms_ == other.terms_; }

private:
    Alphabet alphabet_;
    std::map<Word, Coeff> terms_;
};

using NCPolynomial = NCPoly<BigInt>;
using NCPolynomialQ = NCPoly<BigRational>;

inline constexpr int kDefaultSymbolicCap = 7;

BigInt factorial(int n);

/// Fully symmetrized product sum over all n! orderings of x_1..x_n; every
/// coefficient is 1.
NCPolynomial symmetrizedProduct(int n, int cap = kDefaultSymbolicCap);

/// Replaces every occurrence of x_slot in p by the given word.
NCPolynomial substitute(const NCPolynomial& p, int slot, const Word& replacement);

// The six fixed expansion shapes appearing on either side of the
// symmetrization identities, parameterized by n. Lhs shapes feed permuted
// (and z-multiplied) arguments through the symmetrized product; Rhs shapes
// enumerate z insertion positions directly with their stated coefficients.
enum class PermSumShape { LhsL2, LhsL23, LhsL4, RhsL2, RhsL23, RhsL4 };

NCPolynomial sumOverPermutations(int n, PermSumShape shape, int cap = kDefaultSymbolicCap);

enum class IdentityTag { L2, L23, L4 };

std::string identityName(IdentityTag tag);

struct IdentityCheck {
    bool equal = false;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    // Offending (word, lhs-minus-rhs coefficient) pairs, empty when equal.
    std::vector<std::pair<Word, BigInt>> witness;
};

/// Exact check of one symmetrization identity at degree n (2 <= n <= cap).
IdentityCheck verifyIdentity(IdentityTag which, int n, int cap = kDefaultSymbolicCap);

/// Exact check of the last-letter stratification of the symmetrized product:
/// x_n walks through every position against all orderings of x_1..x_{n-1}.
bool verifyLastLetterStratification(int n, int cap = kDefaultSymbolicCap);

/// Expands the signed polarization sum with exact rational coefficients and
/// compares it with (1/n!) times the symmetrized product.
bool verifyPolarizationSymbolic(int n, int cap = kDefaultSymbolicCap);

}  // namespace orthopoly
