#pragma once

// Vector matroids and their (harmonic) Tutte polynomials.
//
//   T(M, f; x, y) = sum over J subset of E of
//                   f~(J) (x-1)^(rho(E)-rho(J)) (y-1)^(|J|-rho(J))
//
// computed as a 2^n subset sum. The constant degree-0 function gives the
// classical Tutte polynomial.

#include "harmtutte/harmonic.hpp"
#include "harmtutte/linalg.hpp"
#include "harmtutte/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace harmtutte {

/// Size guards for exponential enumerations.
struct EnumerationLimits {
    std::size_t max_ground = 20;               // subset sums over 2^n
    std::uint64_t max_words = std::uint64_t{1} << 24; // codeword enumeration q^k

    /// Defaults, overridden by HARMTUTTE_MAX_N / HARMTUTTE_MAX_WORDS when set.
    static EnumerationLimits from_env()
    {
        EnumerationLimits limits;
        if (const char* v = std::getenv("HARMTUTTE_MAX_N")) limits.max_ground = std::strtoull(v, nullptr, 10);
        if (const char* v = std::getenv("HARMTUTTE_MAX_WORDS")) limits.max_words = std::strtoull(v, nullptr, 10);
        return limits;
    }

    void check_ground(std::size_t n) const
    {
        if (n > max_ground)
            throw CapExceeded("subset enumeration over 2^" + std::to_string(n) + " subsets exceeds cap n <= " +
                              std::to_string(max_ground));
    }
};

class VectorMatroid {
public:
    explicit VectorMatroid(FieldMatrix representation)
        : rep_(std::move(representation)), full_rank_(rref(rep_).rank)
    {
        if (rep_.cols() > kMaxGroundSize) throw std::invalid_argument("ground set larger than 63 elements");
    }

    [[nodiscard]] const FieldMatrix& representation() const { return rep_; }
    [[nodiscard]] std::size_t ground_size() const { return rep_.cols(); }
    [[nodiscard]] std::size_t full_rank() const { return full_rank_; }
    [[nodiscard]] SubsetMask ground_mask() const
    {
        return rep_.cols() == 64 ? ~SubsetMask{0} : (SubsetMask{1} << rep_.cols()) - 1;
    }

    [[nodiscard]] std::size_t rank(SubsetMask j) const { return column_rank(rep_, j); }
    [[nodiscard]] std::size_t rank(std::span<const std::size_t> j) const { return column_rank(rep_, j); }

private:
    FieldMatrix rep_;
    std::size_t full_rank_;
};

/// The dual matroid, represented by a basis of the null space of M's matrix.
inline VectorMatroid dual(const VectorMatroid& m)
{
    return VectorMatroid(null_space(m.representation()));
}

/// rho*(J) = |J| + rho(E \ J) - rho(E).
inline std::size_t dual_rank(const VectorMatroid& m, SubsetMask j)
{
    return static_cast<std::size_t>(popcount(j)) + m.rank(m.ground_mask() & ~j) - m.full_rank();
}

/// Rank table over all subsets plus cached (x-1)^a, (y-1)^b powers, shared
/// across many Tutte sums on the same matroid.
class TutteEvaluator {
public:
    explicit TutteEvaluator(const VectorMatroid& m, const EnumerationLimits& limits = {})
        : n_(m.ground_size()), full_rank_(m.full_rank())
    {
        limits.check_ground(n_);
        ranks_ = subset_rank_table(m.representation());
        const auto xm1 = BivariatePoly::x() - BivariatePoly::constant(1);
        const auto ym1 = BivariatePoly::y() - BivariatePoly::constant(1);
        x_pows_.push_back(BivariatePoly::constant(1));
        for (std::size_t a = 1; a <= full_rank_; ++a) x_pows_.push_back(x_pows_.back() * xm1);
        y_pows_.push_back(BivariatePoly::constant(1));
        for (std::size_t b = 1; b <= n_ - full_rank_; ++b) y_pows_.push_back(y_pows_.back() * ym1);
    }

    [[nodiscard]] std::size_t ground_size() const { return n_; }
    [[nodiscard]] std::size_t full_rank() const { return full_rank_; }
    [[nodiscard]] const std::vector<std::uint8_t>& ranks() const { return ranks_; }

    [[nodiscard]] BivariatePoly tutte() const
    {
        // buckets[a][b] = number of J with corank a and nullity b
        std::vector<std::vector<Rational>> buckets(full_rank_ + 1, std::vector<Rational>(n_ - full_rank_ + 1));
        for (SubsetMask j = 0; j < ranks_.size(); ++j) {
            const std::size_t r = ranks_[j];
            buckets[full_rank_ - r][static_cast<std::size_t>(popcount(j)) - r] += 1;
        }
        return expand(buckets);
    }

    [[nodiscard]] BivariatePoly harmonic(const HarmonicFunction& f) const
    {
        if (f.ground_size() != n_)
            throw std::invalid_argument("harmonic function on " + std::to_string(f.ground_size()) +
                                        " points, matroid on " + std::to_string(n_));
        const std::size_t d = f.degree();
        if (2 * d > n_ && d > 0) return {};
        const auto tilde_values = tilde_table(f.function());
        std::vector<std::vector<Rational>> buckets(full_rank_ + 1, std::vector<Rational>(n_ - full_rank_ + 1));
        for (SubsetMask j = 0; j < ranks_.size(); ++j) {
            const auto size = static_cast<std::size_t>(popcount(j));
            // f~ vanishes outside d <= |J| <= n-d
            if (size < d || size > n_ - d) continue;
            const auto& w = tilde_values[j];
            if (w == 0) continue;
            const std::size_t r = ranks_[j];
            buckets[full_rank_ - r][size - r] += w;
        }
        return expand(buckets);
    }

private:
    [[nodiscard]] BivariatePoly expand(const std::vector<std::vector<Rational>>& buckets) const
    {
        BivariatePoly out;
        for (std::size_t a = 0; a < buckets.size(); ++a)
            for (std::size_t b = 0; b < buckets[a].size(); ++b)
                if (buckets[a][b] != 0) out += (x_pows_[a] * y_pows_[b]) * buckets[a][b];
        return out;
    }

    std::size_t n_;
    std::size_t full_rank_;
    std::vector<std::uint8_t> ranks_;
    std::vector<BivariatePoly> x_pows_;
    std::vector<BivariatePoly> y_pows_;
};

inline BivariatePoly tutte(const VectorMatroid& m, const EnumerationLimits& limits = {})
{
    return TutteEvaluator(m, limits).tutte();
}

inline BivariatePoly harmonic_tutte(const VectorMatroid& m, const HarmonicFunction& f,
                                    const EnumerationLimits& limits = {})
{
    if (f.ground_size() != m.ground_size())
        throw std::invalid_argument("harmonic function on " + std::to_string(f.ground_size()) +
                                    " points, matroid on " + std::to_string(m.ground_size()));
    return TutteEvaluator(m, limits).harmonic(f);
}

} // namespace harmtutte
