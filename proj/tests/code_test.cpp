#include "harmtutte/code.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace harmtutte;
using fixtures::set_of;

namespace {

const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();

BivariatePoly monomial(long c, unsigned a, unsigned b) { return BivariatePoly::monomial(c, a, b); }

std::set<std::vector<std::uint32_t>> word_set(const LinearCode& c)
{
    std::set<std::vector<std::uint32_t>> out;
    for (const auto& w : codewords(c)) out.insert(w.entries);
    return out;
}

} // namespace

TEST(LinearCodeType, DropsDependentRows)
{
    const auto g = FieldMatrix::from_rows(PrimeField(2), 3, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
    const LinearCode c(g);
    EXPECT_EQ(c.dimension(), 1u);
    EXPECT_EQ(c.size(), 2);
}

TEST(Codewords, Examples)
{
    using W = std::vector<std::uint32_t>;
    EXPECT_EQ(word_set(LinearCode(fixtures::g11())), (std::set<W>{{0, 0}, {1, 1}}));
    EXPECT_EQ(word_set(LinearCode(fixtures::g110())), (std::set<W>{{0, 0, 0}, {1, 1, 0}}));

    const LinearCode h(fixtures::hamming74());
    const auto words = codewords(h);
    EXPECT_EQ(words.size(), 16u);
    EXPECT_EQ(word_set(h).size(), 16u);
    const auto a = weight_distribution(h);
    EXPECT_EQ(a, (std::vector<mpz_class>{1, 0, 0, 7, 7, 0, 0, 1}));
}

TEST(Codewords, MatchRowSpaceEnumeration)
{
    std::mt19937_64 rng(51);
    for (const std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 1 + rng() % 6;
            const auto g = oracle::random_matrix(rng, q, rng() % 4, n);
            const LinearCode c(g);
            const auto words = codewords(c);
            const auto expected = oracle::row_space(g);
            EXPECT_EQ(words.size(), expected.size());
            EXPECT_EQ(word_set(c), (std::set<std::vector<std::uint32_t>>(expected.begin(), expected.end())));
            for (const auto& w : words) EXPECT_EQ(w.support, oracle::support(w.entries));
        }
    }
}

TEST(Codewords, CapIsEnforced)
{
    EnumerationLimits limits;
    limits.max_words = 8;
    EXPECT_THROW(codewords(LinearCode(fixtures::hamming74()), limits), CapExceeded);
}

TEST(DualCode, Examples)
{
    const LinearCode rep(fixtures::g11());
    EXPECT_EQ(dual_code(rep), rep);

    const auto zero = dual_code(LinearCode(fixtures::identity2()));
    EXPECT_EQ(zero.dimension(), 0u);
    EXPECT_EQ(zero.length(), 2u);

    const auto simplex = dual_code(LinearCode(fixtures::hamming74()));
    EXPECT_EQ(simplex.dimension(), 3u);
    EXPECT_EQ(weight_distribution(simplex), (std::vector<mpz_class>{1, 0, 0, 0, 7, 0, 0, 0}));
}

TEST(DualCode, MatchesOrthogonalComplementEnumeration)
{
    std::mt19937_64 rng(52);
    for (const std::uint32_t q : {2u, 3u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 1 + rng() % 6;
            const auto g = oracle::random_matrix(rng, q, rng() % (n + 1), n);
            const auto expected = oracle::orthogonal_complement(g);
            EXPECT_EQ(word_set(dual_code(LinearCode(g))),
                      (std::set<std::vector<std::uint32_t>>(expected.begin(), expected.end())));
        }
    }
}

TEST(WeightEnumerator, Examples)
{
    const LinearCode zero(FieldMatrix(PrimeField(2), 0, 4));
    EXPECT_EQ(weight_enumerator(zero), monomial(1, 4, 0));
    EXPECT_EQ(weight_enumerator(LinearCode(fixtures::g110())), monomial(1, 3, 0) + monomial(1, 1, 2));
    EXPECT_EQ(to_string(weight_enumerator(LinearCode(fixtures::hamming74()))), "x^7 + 7x^4y^3 + 7x^3y^4 + y^7");
}

TEST(WeightEnumerator, ClassicalMacWilliams)
{
    std::mt19937_64 rng(53);
    for (const std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 1 + rng() % 7;
            const LinearCode c(oracle::random_matrix(rng, q, rng() % (n + 1), n));
            const auto w = weight_enumerator(c);
            EXPECT_EQ(evaluate(w, 1, 1), c.size());
            const auto rhs = substitute_linear(w, {1, Rational(q - 1)}, {1, -1}, Rational(1) / Rational(c.size()));
            EXPECT_EQ(weight_enumerator(dual_code(c)), rhs);
        }
    }
}

TEST(HarmonicWeightEnumerator, Examples)
{
    const LinearCode h(fixtures::hamming74());
    EXPECT_EQ(harmonic_weight_enumerator(h, HarmonicFunction::constant(7)), weight_enumerator(h));
    EXPECT_TRUE(harmonic_weight_enumerator(LinearCode(fixtures::g11()), fixtures::dipole(2, 1, 2)).is_zero());
    EXPECT_EQ(harmonic_weight_enumerator(LinearCode(fixtures::g110()), fixtures::dipole(3, 1, 3)), monomial(1, 1, 2));
    EXPECT_THROW(harmonic_weight_enumerator(h, fixtures::dipole(3, 1, 3)), std::invalid_argument);
}

TEST(Zeta, Examples)
{
    const LinearCode c(fixtures::g110());
    EXPECT_EQ(zeta(c, fixtures::dipole(3, 1, 3)), Y);
    const LinearCode h(fixtures::hamming74());
    EXPECT_EQ(zeta(h, HarmonicFunction::constant(7)), weight_enumerator(h));
    EXPECT_TRUE(zeta(LinearCode(fixtures::g11()), fixtures::dipole(2, 1, 2)).is_zero());
}

TEST(HarmonicWeightEnumerator, VanishesOutsideMiddleWeightsAndIsDivisible)
{
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t q = trial % 2 == 0 ? 2 : 3;
        const std::size_t n = 2 + rng() % 7;
        const LinearCode c(oracle::random_matrix(rng, q, rng() % (n + 1), n));
        const std::size_t d = 1 + rng() % (n / 2);
        for (const auto& f : harm_basis(n, d)) {
            const auto a = harmonic_weight_distribution(c, f);
            for (std::size_t i = 0; i <= n; ++i)
                if (i < d || i > n - d) {
                    EXPECT_EQ(a[i], 0);
                }
            EXPECT_NO_THROW(zeta(c, f));
        }
    }
}

TEST(Shortening, Examples)
{
    const LinearCode c(fixtures::g110());
    const auto empty = shortening_data(c, SubsetMask{0});
    EXPECT_EQ(empty.ell, 1u);
    EXPECT_EQ(empty.b, 1);
    const auto at3 = shortening_data(c, set_of({3}));
    EXPECT_EQ(at3.ell, 1u);
    EXPECT_EQ(at3.b, 1);
    const auto at1 = shortening_data(c, set_of({1}));
    EXPECT_EQ(at1.ell, 0u);
    EXPECT_EQ(at1.b, 0);

    const auto h = shortening_data(LinearCode(fixtures::hamming74()), SubsetMask{0});
    EXPECT_EQ(h.ell, 4u);
    EXPECT_EQ(h.b, 15);
}

TEST(Shortening, DimensionMatchesVanishingWordCount)
{
    std::mt19937_64 rng(55);
    for (const std::uint32_t q : {2u, 3u}) {
        for (int trial = 0; trial < 8; ++trial) {
            const std::size_t n = 1 + rng() % 7;
            const auto g = oracle::random_matrix(rng, q, rng() % (n + 1), n);
            const LinearCode c(g);
            const auto words = oracle::row_space(g);
            for (SubsetMask j = 0; j < (SubsetMask{1} << n); ++j) {
                mpz_class vanishing = 0;
                for (const auto& w : words)
                    if ((oracle::support(w) & j) == 0) vanishing += 1;
                const auto data = shortening_data(c, j);
                mpz_class expected_size;
                mpz_ui_pow_ui(expected_size.get_mpz_t(), q, data.ell);
                EXPECT_EQ(vanishing, expected_size);
                EXPECT_EQ(data.b, vanishing - 1);
            }
        }
    }
}

TEST(BTable, WorkedExample)
{
    const LinearCode c(fixtures::g110());
    const auto f = fixtures::dipole(3, 1, 3);
    const auto b = b_table(c, f);
    ASSERT_EQ(b.size(), 4u);
    EXPECT_EQ(b[0], 0);
    EXPECT_EQ(b[1], -1);
    EXPECT_EQ(b[2], 0);
    EXPECT_EQ(b[3], 0);
    const auto a = harmonic_weight_distribution(c, f);
    EXPECT_EQ(b_table_from_a(a, 3, 1), b);
}

TEST(BTable, ZeroOutsideMiddleRangeAndMatchesFormula)
{
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t q = trial % 3 == 0 ? 5 : 2;
        const std::size_t n = 2 + rng() % 7;
        const LinearCode c(oracle::random_matrix(rng, q, rng() % (n + 1), n));
        const std::size_t d = rng() % (n / 2 + 1);
        for (const auto& f : harm_basis(n, d)) {
            const auto b = b_table(c, f);
            for (std::size_t t = 0; t <= n; ++t)
                if (d > 0 && (t < d || t > n - d)) {
                    EXPECT_EQ(b[t], 0);
                }
            const auto levels = level_sums(f.function());
            auto shifted = b;
            for (std::size_t t = 0; t <= n; ++t) {
                if (d > 0) {
                    EXPECT_EQ(levels[t], 0);
                }
                shifted[t] += levels[t];
            }
            EXPECT_EQ(shifted, b_table_from_a(harmonic_weight_distribution(c, f), n, d));
        }
    }
}

TEST(BTable, DegreeZeroNeedsTheZeroCodeword)
{
    // Zero code: every B_J = q^0 - 1 = 0, yet W_C = x^n. The A-side sum counts
    // the zero word, so the bare B table falls short by C(n, t).
    const LinearCode zero(FieldMatrix(PrimeField(2), 0, 3));
    const auto f = HarmonicFunction::constant(3);
    const auto b = b_table(zero, f);
    EXPECT_EQ(b, (std::vector<Rational>{0, 0, 0, 0}));
    EXPECT_EQ(b_table_from_a(harmonic_weight_distribution(zero, f), 3, 0), (std::vector<Rational>{1, 3, 3, 1}));
    EXPECT_EQ(level_sums(f.function()), (std::vector<Rational>{1, 3, 3, 1}));
    EXPECT_EQ(zeta_from_b(zero, f), monomial(1, 3, 0));
}

TEST(ZetaFromB, Examples)
{
    const LinearCode c(fixtures::g110());
    EXPECT_EQ(zeta_from_b(c, fixtures::dipole(3, 1, 3)), Y);

    const LinearCode h(fixtures::hamming74());
    EXPECT_EQ(zeta_from_b(h, HarmonicFunction::constant(7)), weight_enumerator(h));

    const LinearCode zero(FieldMatrix(PrimeField(2), 0, 4));
    for (const auto& f : harm_basis(4, 1)) EXPECT_TRUE(zeta_from_b(zero, f).is_zero());
}

TEST(EnumeratorTableType, Consistency)
{
    const LinearCode h(fixtures::hamming74());
    const auto f = harm_basis(7, 2).front();
    const auto table = enumerator_table(h, f);
    mpz_class total = 0;
    for (const auto& a : table.a) total += a;
    EXPECT_EQ(total, 16);
    EXPECT_EQ(table.a_f[0], 0);
    EXPECT_EQ(table.a_f[7], 0);
    EXPECT_EQ(table.b_f, b_table_from_a(table.a_f, 7, 2));
}
