#include "harmtutte/matroid.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace harmtutte;
using fixtures::set_of;

namespace {

const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();

} // namespace

TEST(Rank, Examples)
{
    const VectorMatroid m(fixtures::g110());
    EXPECT_EQ(m.rank(SubsetMask{0}), 0u);
    EXPECT_EQ(m.rank(set_of({1, 2})), 1u);
    EXPECT_EQ(VectorMatroid(fixtures::identity2()).rank(set_of({1, 2})), 2u);
    EXPECT_EQ(m.full_rank(), 1u);
}

TEST(Dual, Examples)
{
    const auto d1 = dual(VectorMatroid(fixtures::identity2()));
    EXPECT_EQ(d1.full_rank(), 0u);
    EXPECT_EQ(d1.ground_size(), 2u);

    const auto d2 = dual(VectorMatroid(fixtures::g11()));
    EXPECT_EQ(d2.full_rank(), 1u);
    EXPECT_EQ(d2.representation(), fixtures::g11());

    EXPECT_EQ(dual(VectorMatroid(fixtures::hamming74())).full_rank(), 3u);
}

TEST(DualRank, Examples)
{
    const VectorMatroid m(fixtures::g110());
    EXPECT_EQ(dual_rank(m, SubsetMask{0}), 0u);
    EXPECT_EQ(dual_rank(m, set_of({3})), 1u);
    EXPECT_EQ(dual_rank(m, m.ground_mask()), 2u);
}

TEST(DualRank, FormulaMatchesDualRepresentation)
{
    std::mt19937_64 rng(41);
    for (const std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 8; ++trial) {
            const std::size_t n = 1 + rng() % 8;
            const VectorMatroid m(oracle::random_matrix(rng, q, rng() % (n + 1), n));
            const auto d = dual(m);
            const auto dd = dual(d);
            EXPECT_EQ(d.full_rank() + m.full_rank(), n);
            for (SubsetMask j = 0; j <= m.ground_mask(); ++j) {
                EXPECT_EQ(dual_rank(m, j), d.rank(j));
                EXPECT_EQ(dd.rank(j), m.rank(j));
            }
        }
    }
}

TEST(Tutte, Examples)
{
    EXPECT_EQ(tutte(VectorMatroid(fixtures::identity2())), X * X);
    EXPECT_EQ(tutte(VectorMatroid(fixtures::g11())), X + Y);
    // {000, 110}: a parallel pair plus a loop
    EXPECT_EQ(tutte(VectorMatroid(fixtures::g110())), (X + Y) * Y);
}

TEST(Tutte, HammingMatroidAgreesWithNaiveSum)
{
    const auto h = fixtures::hamming74();
    const auto t = tutte(VectorMatroid(h));
    EXPECT_EQ(t, oracle::naive_tutte(h));
    EXPECT_EQ(to_string(t), "x^4 + 3x^3 + 6x^2 + 3x + 7xy + 3y + 4y^2 + y^3");
}

TEST(Tutte, EvaluatesToBasisCountAtOneOne)
{
    std::mt19937_64 rng(42);
    for (const std::uint32_t q : {2u, 3u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 1 + rng() % 8;
            const auto g = oracle::random_matrix(rng, q, rng() % (n + 1), n);
            const VectorMatroid m(g);
            std::size_t bases = 0;
            for (const auto j : enumerate_subset_masks(n, m.full_rank()))
                if (oracle::span_rank(g, j) == m.full_rank()) ++bases;
            EXPECT_EQ(evaluate(tutte(m), 1, 1), bases);
        }
    }
}

TEST(HarmonicTutte, ConstantFunctionGivesTutte)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const VectorMatroid m(oracle::random_matrix(rng, 3, rng() % (n + 1), n));
        EXPECT_EQ(harmonic_tutte(m, HarmonicFunction::constant(n)), tutte(m));
    }
}

TEST(HarmonicTutte, WorkedExample)
{
    const VectorMatroid m(fixtures::g110());
    const auto f = fixtures::dipole(3, 1, 3);
    EXPECT_EQ(harmonic_tutte(m, f), X + Y - X * Y);
}

TEST(HarmonicTutte, FreeMatroidVanishes)
{
    for (std::size_t n = 2; n <= 7; ++n) {
        const VectorMatroid m(FieldMatrix::identity(PrimeField(2), n));
        for (std::size_t d = 1; 2 * d <= n; ++d)
            for (const auto& f : harm_basis(n, d)) EXPECT_TRUE(harmonic_tutte(m, f).is_zero());
    }
}

TEST(HarmonicTutte, GroundSizeMismatch)
{
    EXPECT_THROW(harmonic_tutte(VectorMatroid(fixtures::g110()), fixtures::dipole(4, 1, 2)), std::invalid_argument);
}

TEST(HarmonicTutte, CapIsEnforced)
{
    const VectorMatroid m(FieldMatrix(PrimeField(2), 1, 12));
    EnumerationLimits limits;
    limits.max_ground = 10;
    EXPECT_THROW(tutte(m, limits), CapExceeded);
}

TEST(HarmonicTutte, RankCachedSumMatchesNaive)
{
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t q = trial % 2 == 0 ? 2 : 3;
        const std::size_t n = 2 + rng() % 6;
        const auto g = oracle::random_matrix(rng, q, rng() % (n + 1), n);
        const TutteEvaluator eval{VectorMatroid(g)};
        EXPECT_EQ(eval.tutte(), oracle::naive_tutte(g));
        const std::size_t d = rng() % (n / 2 + 1);
        for (const auto& f : harm_basis(n, d)) EXPECT_EQ(eval.harmonic(f), oracle::naive_tutte(g, &f.function()));
    }
}

TEST(HarmonicTutte, DualityOnRandomMatroids)
{
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t q = trial % 3 == 0 ? 3 : 2;
        const std::size_t n = 2 + rng() % 7;
        const VectorMatroid m(oracle::random_matrix(rng, q, rng() % (n + 1), n));
        const auto md = dual(m);
        const std::size_t d = rng() % (n / 2 + 1);
        for (const auto& f : harm_basis(n, d))
            EXPECT_EQ(harmonic_tutte(md, f), swap_xy(harmonic_tutte(m, f)) * sign_power(static_cast<unsigned>(d)));
    }
}
