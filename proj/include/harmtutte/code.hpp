#pragma once

// Linear codes over prime fields and their weight enumerators.
//
// For a harmonic f of degree d the harmonic weight enumerator is
//   W_{C,f}(x,y) = sum over codewords u of f~(supp u) x^(n-wt u) y^(wt u)
// and is always divisible by (xy)^d; the quotient Z_{C,f} is homogeneous of
// degree n - 2d.

#include "harmtutte/harmonic.hpp"
#include "harmtutte/linalg.hpp"
#include "harmtutte/matroid.hpp"
#include "harmtutte/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace harmtutte {

struct Codeword {
    std::vector<std::uint32_t> entries;
    SubsetMask support = 0;

    [[nodiscard]] std::size_t weight() const { return static_cast<std::size_t>(popcount(support)); }
};

class LinearCode {
public:
    /// The code spanned by the rows of `generator`; dependent rows are dropped
    /// and the stored generator is the reduced echelon basis.
    explicit LinearCode(const FieldMatrix& generator)
        : generator_(reduce(generator))
    {
        if (generator_.cols() > kMaxGroundSize) throw std::invalid_argument("code length larger than 63");
    }

    [[nodiscard]] const FieldMatrix& generator() const { return generator_; }
    [[nodiscard]] std::uint32_t q() const { return generator_.field().modulus(); }
    [[nodiscard]] std::size_t length() const { return generator_.cols(); }
    [[nodiscard]] std::size_t dimension() const { return generator_.rows(); }

    /// |C| = q^k as an exact integer.
    [[nodiscard]] mpz_class size() const
    {
        mpz_class out;
        mpz_ui_pow_ui(out.get_mpz_t(), q(), dimension());
        return out;
    }

    [[nodiscard]] VectorMatroid matroid() const { return VectorMatroid(generator_); }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    static FieldMatrix reduce(const FieldMatrix& g)
    {
        const auto r = rref(g);
        FieldMatrix out(g.field(), r.rank, g.cols());
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t c = 0; c < g.cols(); ++c) out.set(i, c, r.reduced.at(i, c));
        return out;
    }

    FieldMatrix generator_;
};

inline void check_word_cap(const LinearCode& c, const EnumerationLimits& limits)
{
    const mpz_class size = c.size();
    if (size > mpz_class(std::to_string(limits.max_words)))
        throw CapExceeded("code has " + size.get_str() + " codewords, exceeding cap " + std::to_string(limits.max_words));
}

/// Calls visit(const Codeword&) once per codeword. Messages are walked as a
/// base-q counter, updating the word by one row addition per digit change.
template <typename Visitor>
void for_each_codeword(const LinearCode& c, Visitor&& visit, const EnumerationLimits& limits = {})
{
    check_word_cap(c, limits);
    const auto& g = c.generator();
    const auto& F = g.field();
    const std::size_t k = c.dimension(), n = c.length();
    const std::uint32_t q = c.q();

    Codeword word{std::vector<std::uint32_t>(n, 0), 0};
    std::vector<std::uint32_t> digits(k, 0);
    auto add_row = [&](std::size_t row) {
        for (std::size_t j = 0; j < n; ++j) {
            word.entries[j] = F.add(word.entries[j], g.at(row, j));
            if (word.entries[j] != 0)
                word.support |= SubsetMask{1} << j;
            else
                word.support &= ~(SubsetMask{1} << j);
        }
    };
    while (true) {
        visit(static_cast<const Codeword&>(word));
        std::size_t i = 0;
        // Digits that wrap from q-1 to 0 also add their row once more (q g = 0).
        while (i < k && digits[i] == q - 1) {
            digits[i] = 0;
            add_row(i);
            ++i;
        }
        if (i == k) break;
        ++digits[i];
        add_row(i);
    }
}

inline std::vector<Codeword> codewords(const LinearCode& c, const EnumerationLimits& limits = {})
{
    std::vector<Codeword> out;
    for_each_codeword(c, [&](const Codeword& w) { out.push_back(w); }, limits);
    return out;
}

inline LinearCode dual_code(const LinearCode& c)
{
    return LinearCode(null_space(c.generator()));
}

/// A_i for i = 0..n.
inline std::vector<mpz_class> weight_distribution(const LinearCode& c, const EnumerationLimits& limits = {})
{
    std::vector<mpz_class> a(c.length() + 1, 0);
    for_each_codeword(c, [&](const Codeword& w) { a[w.weight()] += 1; }, limits);
    return a;
}

inline BivariatePoly enumerator_from_coefficients(std::span<const Rational> a, std::size_t n)
{
    BivariatePoly out;
    for (std::size_t i = 0; i < a.size(); ++i) out.add_term(static_cast<unsigned>(n - i), static_cast<unsigned>(i), a[i]);
    return out;
}

inline BivariatePoly weight_enumerator(const LinearCode& c, const EnumerationLimits& limits = {})
{
    const auto a = weight_distribution(c, limits);
    std::vector<Rational> coeffs(a.begin(), a.end());
    return enumerator_from_coefficients(coeffs, c.length());
}

inline void check_ground_match(const LinearCode& c, const HarmonicFunction& f)
{
    if (f.ground_size() != c.length())
        throw std::invalid_argument("harmonic function on " + std::to_string(f.ground_size()) +
                                    " points, code of length " + std::to_string(c.length()));
}

/// A_{i,f} = sum of f~(supp u) over codewords of weight i.
inline std::vector<Rational> harmonic_weight_distribution(const LinearCode& c, const HarmonicFunction& f,
                                                          const EnumerationLimits& limits = {})
{
    check_ground_match(c, f);
    const std::size_t n = c.length();
    std::vector<Rational> a(n + 1);
    if (n <= 20) {
        const auto table = tilde_table(f.function());
        for_each_codeword(c, [&](const Codeword& w) { a[w.weight()] += table[w.support]; }, limits);
    } else {
        for_each_codeword(c, [&](const Codeword& w) { a[w.weight()] += tilde(f.function(), w.support); }, limits);
    }
    return a;
}

inline BivariatePoly harmonic_weight_enumerator(const LinearCode& c, const HarmonicFunction& f,
                                                const EnumerationLimits& limits = {})
{
    return enumerator_from_coefficients(harmonic_weight_distribution(c, f, limits), c.length());
}

/// Z_{C,f} = W_{C,f} / (xy)^d. Non-divisibility or inhomogeneity means the
/// input was not harmonic or an internal inconsistency; both throw.
inline BivariatePoly zeta(const LinearCode& c, const HarmonicFunction& f, const EnumerationLimits& limits = {})
{
    const std::size_t d = f.degree();
    auto z = divide_by_xy_power(harmonic_weight_enumerator(c, f, limits), static_cast<unsigned>(d));
    if (!z.is_zero()) {
        const auto deg = homogeneous_degree(z);
        if (!deg || *deg + 2 * d != c.length())
            throw std::logic_error("Z_{C,f} is not homogeneous of degree n - 2d");
    }
    return z;
}

struct ShorteningData {
    std::size_t ell = 0; // dim of the subcode vanishing on J
    mpz_class b;         // q^ell - 1, the number of its nonzero words
};

/// ell(J) = k - rank(G_J); B_J = q^ell(J) - 1.
inline ShorteningData shortening_data(const LinearCode& c, SubsetMask j)
{
    ShorteningData out;
    out.ell = c.dimension() - column_rank(c.generator(), j);
    mpz_ui_pow_ui(out.b.get_mpz_t(), c.q(), out.ell);
    out.b -= 1;
    return out;
}

/// B_{t,f} = sum over t-subsets J of f~(J) B_J, for t = 0..n.
inline std::vector<Rational> b_table(const LinearCode& c, const HarmonicFunction& f, const EnumerationLimits& limits = {})
{
    check_ground_match(c, f);
    const std::size_t n = c.length(), k = c.dimension();
    limits.check_ground(n);
    const auto ranks = subset_rank_table(c.generator());
    const auto tilde_values = tilde_table(f.function());
    std::vector<mpz_class> q_pows(k + 1);
    for (std::size_t e = 0; e <= k; ++e) mpz_ui_pow_ui(q_pows[e].get_mpz_t(), c.q(), e);

    std::vector<Rational> b(n + 1);
    for (SubsetMask j = 0; j < ranks.size(); ++j) {
        const auto& w = tilde_values[j];
        if (w == 0) continue;
        const std::size_t ell = k - ranks[j];
        b[static_cast<std::size_t>(popcount(j))] += w * Rational(q_pows[ell] - 1);
    }
    return b;
}

/// The same table obtained from A_{i,f}:
///   B_{t,f} = (-1)^d sum_{i=d}^{n-t} C(n-d-i, t-d) A_{i,f}   for d <= t <= n-d, else 0.
/// For d = 0 the sum counts the zero codeword too, so it equals B_t + S_t
/// (see level_sums); for d >= 1 it is B_{t,f} itself.
inline std::vector<Rational> b_table_from_a(std::span<const Rational> a_f, std::size_t n, std::size_t d)
{
    std::vector<Rational> b(n + 1);
    if (2 * d > n) return b;
    for (std::size_t t = d; t + d <= n; ++t) {
        Rational sum = 0;
        for (std::size_t i = d; i + t <= n; ++i) sum += binomial(static_cast<long>(n - d - i), static_cast<long>(t - d)) * a_f[i];
        b[t] = sign_power(static_cast<unsigned>(d)) * sum;
    }
    return b;
}

/// S_t = sum of f~ over the t-subsets of E. Zero for every t when d >= 1;
/// for d = 0 it is C(n,t) f(empty), the share of the zero codeword, which
/// B_J (nonzero words only) leaves out.
inline std::vector<Rational> level_sums(const SetFunction& f)
{
    const std::size_t n = f.ground_size();
    std::vector<Rational> s(n + 1);
    if (f.degree() == 0) {
        for (std::size_t t = 0; t <= n; ++t) s[t] = binomial(static_cast<long>(n), static_cast<long>(t)) * f.value(SubsetMask{0});
        return s;
    }
    const auto table = tilde_table(f);
    for (SubsetMask j = 0; j < table.size(); ++j) s[static_cast<std::size_t>(popcount(j))] += table[j];
    return s;
}

/// Z_{C,f} rebuilt from the B table:
///   (-1)^d sum_{t=d}^{n-d} (B_{t,f} + S_t) (x-y)^(t-d) y^(n-t-d)
/// where S_t = level_sums(f)[t] vanishes for d >= 1.
inline BivariatePoly zeta_from_b(std::span<const Rational> b, std::span<const Rational> levels, std::size_t n,
                                 std::size_t d)
{
    BivariatePoly out;
    if (2 * d > n) return out;
    for (std::size_t t = d; t + d <= n; ++t)
        out += expand_shifted_term(b[t] + levels[t], static_cast<unsigned>(t - d), static_cast<unsigned>(n - t - d));
    out *= sign_power(static_cast<unsigned>(d));
    return out;
}

inline BivariatePoly zeta_from_b(const LinearCode& c, const HarmonicFunction& f, const EnumerationLimits& limits = {})
{
    return zeta_from_b(b_table(c, f, limits), level_sums(f.function()), c.length(), f.degree());
}

struct EnumeratorTable {
    std::vector<mpz_class> a;  // A_i
    std::vector<Rational> a_f; // A_{i,f}
    std::vector<Rational> b_f; // B_{t,f}
};

inline EnumeratorTable enumerator_table(const LinearCode& c, const HarmonicFunction& f,
                                        const EnumerationLimits& limits = {})
{
    return {weight_distribution(c, limits), harmonic_weight_distribution(c, f, limits), b_table(c, f, limits)};
}

} // namespace harmtutte
