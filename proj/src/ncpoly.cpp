#include "orthopoly/ncpoly.hpp"

#include <algorithm>
#include <numeric>

namespace orthopoly {

namespace {

void checkCap(int n, int lo, int cap, const char* what) {
    if (n < lo || n > cap)
        throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(cap) + "]");
}

/// Calls fn with each permutation of {1..n}, in lexicographic order.
template <typename Fn>
void forEachPermutation(int n, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    do {
        fn(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

Word concatAll(const std::vector<Word>& args, const std::vector<int>& order) {
    Word w;
    std::size_t len = 0;
    for (int i : order) len += args[static_cast<std::size_t>(i - 1)].size();
    w.reserve(len);
    for (int i : order) {
        const Word& a = args[static_cast<std::size_t>(i - 1)];
        w.insert(w.end(), a.begin(), a.end());
    }
    return w;
}

/// The symmetrized product evaluated at argument words: the sum over all
/// orderings of the concatenation of the arguments.
void addSymmetrizedProductOfWords(NCPolynomial& acc, const std::vector<Word>& args) {
    const int n = static_cast<int>(args.size());
    forEachPermutation(n, [&](const std::vector<int>& tau) { acc.add(concatAll(args, tau), 1); });
}

Word insertAt(const Word& base, std::size_t pos, Letter l) {
    Word w;
    w.reserve(base.size() + 1);
    w.insert(w.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(pos));
    w.push_back(l);
    w.insert(w.end(), base.begin() + static_cast<std::ptrdiff_t>(pos), base.end());
    return w;
}

Word permutationWord(const std::vector<int>& sigma) {
    Word w;
    w.reserve(sigma.size());
    for (int i : sigma) w.push_back(static_cast<Letter>(i));
    return w;
}

}  // namespace

std::string wordToString(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        if (w[i] == kZeta)
            s += 'z';
        else
            s += "x" + std::to_string(static_cast<int>(w[i]));
    }
    return s;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

NCPolynomial symmetrizedProduct(int n, int cap) {
    checkCap(n, 1, cap, "symmetrizedProduct");
    NCPolynomial p(Alphabet{n, false});
    forEachPermutation(n, [&](const std::vector<int>& sigma) { p.add(permutationWord(sigma), 1); });
    return p;
}

NCPolynomial substitute(const NCPolynomial& p, int slot, const Word& replacement) {
    if (slot < 1 || slot > p.alphabet().n)
        throw AlphabetError("substitute: x" + std::to_string(slot) + " is not in the alphabet");
    Alphabet result_alpha = p.alphabet();
    for (Letter l : replacement) {
        if (l == kZeta)
            result_alpha.zeta = true;
        else if (static_cast<int>(l) > p.alphabet().n)
            throw AlphabetError("substitute: replacement letter x" +
                                std::to_string(static_cast<int>(l)) + " is not in the alphabet");
    }
    NCPolynomial r(result_alpha);
    for (const auto& [w, c] : p.terms()) {
        Word out;
        for (Letter l : w) {
            if (static_cast<int>(l) == slot)
                out.insert(out.end(), replacement.begin(), replacement.end());
            else
                out.push_back(l);
        }
        r.add(std::move(out), c);
    }
    return r;
}

NCPolynomial sumOverPermutations(int n, PermSumShape shape, int cap) {
    checkCap(n, 2, cap, "sumOverPermutations");
    const Alphabet alpha{n, true};
    NCPolynomial acc(alpha);

    switch (shape) {
        case PermSumShape::LhsL2:
            // Arguments (x_{s(1)}, ..., x_{s(n-1)}, x_{s(n)} z) through the
            // symmetrized product, summed over s.
            forEachPermutation(n, [&](const std::vector<int>& sigma) {
                std::vector<Word> args(static_cast<std::size_t>(n));
                for (int i = 0; i < n - 1; ++i)
                    args[static_cast<std::size_t>(i)] = {static_cast<Letter>(sigma[static_cast<std::size_t>(i)])};
                args[static_cast<std::size_t>(n - 1)] = {static_cast<Letter>(sigma[static_cast<std::size_t>(n - 1)]), kZeta};
                addSymmetrizedProductOfWords(acc, args);
            });
            break;

        case PermSumShape::LhsL23:
            // Last argument z-multiplied on the left: (..., z x_{s(n)}).
            forEachPermutation(n, [&](const std::vector<int>& sigma) {
                std::vector<Word> args(static_cast<std::size_t>(n));
                for (int i = 0; i < n - 1; ++i)
                    args[static_cast<std::size_t>(i)] = {static_cast<Letter>(sigma[static_cast<std::size_t>(i)])};
                args[static_cast<std::size_t>(n - 1)] = {kZeta, static_cast<Letter>(sigma[static_cast<std::size_t>(n - 1)])};
                addSymmetrizedProductOfWords(acc, args);
            });
            break;

        case PermSumShape::LhsL4:
            // Arguments (x_{s(1)}, ..., x_{s(n-2)}, x_{s(n-1)} x_{s(n)}, z).
            forEachPermutation(n, [&](const std::vector<int>& sigma) {
                std::vector<Word> args(static_cast<std::size_t>(n));
                for (int i = 0; i < n - 2; ++i)
                    args[static_cast<std::size_t>(i)] = {static_cast<Letter>(sigma[static_cast<std::size_t>(i)])};
                args[static_cast<std::size_t>(n - 2)] = {static_cast<Letter>(sigma[static_cast<std::size_t>(n - 2)]),
                                                         static_cast<Letter>(sigma[static_cast<std::size_t>(n - 1)])};
                args[static_cast<std::size_t>(n - 1)] = {kZeta};
                addSymmetrizedProductOfWords(acc, args);
            });
            break;

        case PermSumShape::RhsL2: {
            // (n-1)! times: z inserted after the last letter, then walking
            // left down to the slot after the first letter.
            const BigInt coeff = factorial(n - 1);
            forEachPermutation(n, [&](const std::vector<int>& sigma) {
                const Word base = permutationWord(sigma);
                for (std::size_t pos = static_cast<std::size_t>(n); pos >= 1; --pos)
                    acc.add(insertAt(base, pos, kZeta), coeff);
            });
            break;
        }

        case PermSumShape::RhsL23: {
            // (n-1)! times: z inserted before the last letter, walking left
            // down to the very front.
            const BigInt coeff = factorial(n - 1);
            forEachPermutation(n, [&](const std::vector<int>& sigma) {
                const Word base = permutationWord(sigma);
                for (std::size_t pos = static_cast<std::size_t>(n - 1); ; --pos) {
                    acc.add(insertAt(base, pos, kZeta), coeff);
                    if (pos == 0) break;
                }
            });
            break;
        }

        case PermSumShape::RhsL4: {
            // (n-1)! on the two boundary positions of z, plus (n-2)(n-2)! on
            // each of the n-1 interior positions, enumerated right to left.
            const BigInt boundary = factorial(n - 1);
            const BigInt interior = BigInt(n - 2) * factorial(n - 2);
            forEachPermutation(n, [&](const std::vector<int>& sigma) {
                const Word base = permutationWord(sigma);
                acc.add(insertAt(base, static_cast<std::size_t>(n), kZeta), boundary);
                acc.add(insertAt(base, 0, kZeta), boundary);
                if (interior != 0)
                    for (std::size_t pos = static_cast<std::size_t>(n - 1); pos >= 1; --pos)
                        acc.add(insertAt(base, pos, kZeta), interior);
            });
            break;
        }
    }
    return acc;
}

std::string identityName(IdentityTag tag) {
    switch (tag) {
        case IdentityTag::L2: return "l2";
        case IdentityTag::L23: return "l23";
        case IdentityTag::L4: return "l4";
    }
    return "?";
}

IdentityCheck verifyIdentity(IdentityTag which, int n, int cap) {
    checkCap(n, 2, cap, "verifyIdentity");
    PermSumShape lhs_shape{}, rhs_shape{};
    switch (which) {
        case IdentityTag::L2:
            lhs_shape = PermSumShape::LhsL2;
            rhs_shape = PermSumShape::RhsL2;
            break;
        case IdentityTag::L23:
            lhs_shape = PermSumShape::LhsL23;
            rhs_shape = PermSumShape::RhsL23;
            break;
        case IdentityTag::L4:
            lhs_shape = PermSumShape::LhsL4;
            rhs_shape = PermSumShape::RhsL4;
            break;
    }
    const NCPolynomial lhs = sumOverPermutations(n, lhs_shape, cap);
    const NCPolynomial rhs = sumOverPermutations(n, rhs_shape, cap);
    IdentityCheck result;
    result.lhs_terms = lhs.termCount();
    result.rhs_terms = rhs.termCount();
    const NCPolynomial diff = lhs - rhs;
    result.equal = diff.isZero();
    constexpr std::size_t kMaxWitness = 8;
    for (const auto& [w, c] : diff.terms()) {
        if (result.witness.size() >= kMaxWitness) break;
        result.witness.emplace_back(w, c);
    }
    return result;
}

bool verifyLastLetterStratification(int n, int cap) {
    checkCap(n, 2, cap, "verifyLastLetterStratification");
    const NCPolynomial lhs = symmetrizedProduct(n, cap);
    NCPolynomial rhs(Alphabet{n, false});
    forEachPermutation(n - 1, [&](const std::vector<int>& tau) {
        const Word base = permutationWord(tau);
        for (std::size_t pos = static_cast<std::size_t>(n - 1); ; --pos) {
            rhs.add(insertAt(base, pos, static_cast<Letter>(n)), 1);
            if (pos == 0) break;
        }
    });
    return lhs == rhs;
}

bool verifyPolarizationSymbolic(int n, int cap) {
    checkCap(n, 1, cap, "verifyPolarizationSymbolic");
    const Alphabet alpha{n, false};
    NCPolynomialQ signed_sum(alpha);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        NCPolynomialQ form(alpha);
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            const int eps = (mask >> i) & 1u ? -1 : 1;
            sign *= eps;
            form.add(Word{static_cast<Letter>(i + 1)}, eps);
        }
        NCPolynomialQ power = form;
        for (int i = 1; i < n; ++i) power = power * form;
        signed_sum += BigRational(sign) * power;
    }
    signed_sum *= BigRational(1, factorial(n) * (BigInt(1) << n));

    NCPolynomialQ expected(alpha);
    const BigRational inv_nfact(1, factorial(n));
    for (const auto& [w, c] : symmetrizedProduct(n, cap).terms()) expected.add(w, inv_nfact * c);

    return signed_sum == expected;
}

}  // namespace orthopoly
