#pragma once

// Brute-force reference computations used only by the tests. None of these
// go through the rank tables, subset-sum transforms or incremental
// elimination used by the library.

#include "harmtutte/harmonic.hpp"
#include "harmtutte/linalg.hpp"
#include "harmtutte/poly.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace harmtutte::oracle {

/// All q^len vectors over F_q, in base-q counter order.
inline std::vector<std::vector<std::uint32_t>> all_vectors(std::uint32_t q, std::size_t len)
{
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> v(len, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < len && v[i] == q - 1) v[i++] = 0;
        if (i == len) break;
        ++v[i];
    }
    return out;
}

/// Rank of the columns in `cols` as log_q of the size of their span,
/// found by enumerating every linear combination.
inline std::size_t span_rank(const FieldMatrix& m, SubsetMask cols)
{
    const auto idx = indices_from_mask(cols);
    const auto q = m.field().modulus();
    std::set<std::vector<std::uint32_t>> span;
    for (const auto& coeffs : all_vectors(q, idx.size())) {
        std::vector<std::uint32_t> v(m.rows(), 0);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t r = 0; r < m.rows(); ++r)
                v[r] = (v[r] + coeffs[i] * m.at(r, idx[i] - 1)) % q;
        span.insert(v);
    }
    std::size_t rank = 0;
    for (std::size_t size = 1; size < span.size(); size *= q) ++rank;
    return rank;
}

/// Row space of m, enumerated from all q^k messages.
inline std::vector<std::vector<std::uint32_t>> row_space(const FieldMatrix& m)
{
    const auto q = m.field().modulus();
    std::set<std::vector<std::uint32_t>> words;
    for (const auto& msg : all_vectors(q, m.rows())) {
        std::vector<std::uint32_t> w(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) w[c] = (w[c] + msg[r] * m.at(r, c)) % q;
        words.insert(w);
    }
    return {words.begin(), words.end()};
}

/// All vectors of F_q^n orthogonal to every row of m.
inline std::vector<std::vector<std::uint32_t>> orthogonal_complement(const FieldMatrix& m)
{
    const auto q = m.field().modulus();
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& v : all_vectors(q, m.cols())) {
        bool ok = true;
        for (std::size_t r = 0; r < m.rows() && ok; ++r) {
            std::uint64_t dot = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) dot += std::uint64_t{v[c]} * m.at(r, c);
            ok = dot % q == 0;
        }
        if (ok) out.push_back(v);
    }
    return out;
}

inline SubsetMask support(const std::vector<std::uint32_t>& v)
{
    SubsetMask s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s |= SubsetMask{1} << i;
    return s;
}

/// f~(X) by listing the d-subsets of X explicitly.
inline Rational tilde_by_listing(const SetFunction& f, SubsetMask x)
{
    Rational sum = 0;
    const auto elems = indices_from_mask(x);
    if (elems.size() < f.degree()) return sum;
    for (const auto sub : enumerate_subset_masks(elems.size(), f.degree())) {
        SubsetMask z = 0;
        for (const auto pos : indices_from_mask(sub)) z |= SubsetMask{1} << (elems[pos - 1] - 1);
        sum += f.value(z);
    }
    return sum;
}

/// Plain 2^n corank-nullity sum, re-ranking every subset from scratch.
inline BivariatePoly naive_tutte(const FieldMatrix& m, const SetFunction* f = nullptr)
{
    const std::size_t n = m.cols();
    const std::size_t full = column_rank(m, (SubsetMask{1} << n) - 1);
    const auto xm1 = BivariatePoly::x() - BivariatePoly::constant(1);
    const auto ym1 = BivariatePoly::y() - BivariatePoly::constant(1);
    BivariatePoly out;
    for (SubsetMask j = 0; j < (SubsetMask{1} << n); ++j) {
        const Rational w = f ? tilde_by_listing(*f, j) : Rational(1);
        if (w == 0) continue;
        const std::size_t r = column_rank(m, j);
        out += pow(xm1, static_cast<unsigned>(full - r)) * pow(ym1, static_cast<unsigned>(popcount(j) - r)) * w;
    }
    return out;
}

inline FieldMatrix random_matrix(std::mt19937_64& rng, std::uint32_t q, std::size_t k, std::size_t n)
{
    FieldMatrix m(PrimeField(q), k, n);
    std::uniform_int_distribution<std::uint32_t> e(0, q - 1);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, e(rng));
    return m;
}

/// Random rational with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace harmtutte::oracle
