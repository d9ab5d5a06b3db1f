#pragma once

// Exact linear algebra over prime fields F_q and over the rationals.
//
// Column indices in the public API are 1-based, matching the ground set
// E = {1..n}. Internally columns are stored 0-based and subsets of columns
// are passed around as bit masks (bit j-1 <=> column j).

#include "harmtutte/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmtutte {

using SubsetMask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 63;

inline int popcount(SubsetMask m) { return __builtin_popcountll(m); }

class PrimeField {
public:
    explicit PrimeField(std::uint32_t q) : q_(q)
    {
        if (q < 2) throw std::invalid_argument("field modulus must be a prime >= 2, got " + std::to_string(q));
        for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= q; ++p) {
            if (q % p == 0) throw std::invalid_argument("field modulus " + std::to_string(q) + " is not prime");
        }
        if (q > 65521) throw std::invalid_argument("field modulus too large (max 65521)");
    }

    [[nodiscard]] std::uint32_t modulus() const { return q_; }

    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
    [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q_ - b) % q_; }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % q_; }
    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }

    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const
    {
        if (a % q_ == 0) throw std::domain_error("inverse of zero in F_q");
        // Fermat: a^(q-2)
        std::uint32_t result = 1, base = a % q_, e = q_ - 2;
        while (e > 0) {
            if (e & 1u) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t q_;
};

/// Dense k x n matrix over a prime field. Entries are kept reduced into [0, q).
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
    {
    }

    /// Builds from rows of integers; negative or large values are reduced mod q.
    static FieldMatrix from_rows(PrimeField field, std::size_t cols, const std::vector<std::vector<long>>& rows)
    {
        FieldMatrix m(field, rows.size(), cols);
        const auto q = static_cast<long>(field.modulus());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("ragged row " + std::to_string(r + 1));
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<std::uint32_t>(((rows[r][c] % q) + q) % q));
        }
        return m;
    }

    static FieldMatrix identity(PrimeField field, std::size_t n)
    {
        FieldMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    /// 0-based access.
    [[nodiscard]] std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, std::uint32_t value)
    {
        if (value >= field_.modulus()) throw std::invalid_argument("matrix entry outside [0, q)");
        data_[r * cols_ + c] = value;
    }

    [[nodiscard]] std::span<const std::uint32_t> row(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }

    [[nodiscard]] std::vector<std::uint32_t> column(std::size_t c) const
    {
        std::vector<std::uint32_t> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    [[nodiscard]] FieldMatrix select_columns(SubsetMask cols) const
    {
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < cols_; ++c)
            if (cols >> c & 1u) keep.push_back(c);
        FieldMatrix out(field_, rows_, keep.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t i = 0; i < keep.size(); ++i) out.set(r, i, at(r, keep[i]));
        return out;
    }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

struct RrefResult {
    FieldMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // 1-based, strictly increasing
};

inline RrefResult rref(const FieldMatrix& m)
{
    const auto& F = m.field();
    FieldMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const auto tmp = a.at(sel, j);
                a.set(sel, j, a.at(pivot_row, j));
                a.set(pivot_row, j, tmp);
            }
        }
        const auto inv = F.inv(a.at(pivot_row, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a.set(pivot_row, j, F.mul(a.at(pivot_row, j), inv));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) continue;
            const auto factor = a.at(r, c);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.set(r, j, F.sub(a.at(r, j), F.mul(factor, a.at(pivot_row, j))));
        }
        pivots.push_back(c + 1);
        ++pivot_row;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

inline SubsetMask mask_from_indices(std::span<const std::size_t> indices, std::size_t n)
{
    SubsetMask mask = 0;
    for (const auto j : indices) {
        if (j < 1 || j > n) throw std::out_of_range("column index " + std::to_string(j) + " outside 1.." + std::to_string(n));
        mask |= SubsetMask{1} << (j - 1);
    }
    return mask;
}

inline std::vector<std::size_t> indices_from_mask(SubsetMask mask)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; mask != 0; ++j, mask >>= 1)
        if (mask & 1u) out.push_back(j + 1);
    return out;
}

/// Rank of the columns whose bits are set in `cols`; recomputed from scratch.
inline std::size_t column_rank(const FieldMatrix& m, SubsetMask cols)
{
    if (m.cols() < 64 && (cols >> m.cols()) != 0) throw std::out_of_range("column subset exceeds matrix width");
    if (cols == 0) return 0;
    return rref(m.select_columns(cols)).rank;
}

inline std::size_t column_rank(const FieldMatrix& m, std::span<const std::size_t> cols)
{
    return column_rank(m, mask_from_indices(cols, m.cols()));
}

/// Rows span {x : m x^T = 0}; exactly n - rank(m) of them.
inline FieldMatrix null_space(const FieldMatrix& m)
{
    const auto& F = m.field();
    const auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (const auto p : r.pivots) is_pivot[p - 1] = true;

    FieldMatrix out(F, n - r.rank, n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        out.set(row, free, 1);
        for (std::size_t i = 0; i < r.rank; ++i) out.set(row, r.pivots[i] - 1, F.neg(r.reduced.at(i, free)));
        ++row;
    }
    return out;
}

/// Incremental row-echelon basis of column vectors; supports push/pop in
/// stack order so a depth-first subset walk can share elimination work
/// between subsets with a common prefix.
class IncrementalEchelon {
public:
    IncrementalEchelon(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

    /// Returns true if `v` was independent of the current basis (and was added).
    bool push(std::vector<std::uint32_t> v)
    {
        for (const auto& b : basis_) {
            const auto coeff = v[b.pivot];
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i) v[i] = field_.sub(v[i], field_.mul(coeff, b.vec[i]));
        }
        std::size_t pivot = 0;
        while (pivot < dim_ && v[pivot] == 0) ++pivot;
        if (pivot == dim_) return false;
        const auto inv = field_.inv(v[pivot]);
        for (auto& e : v) e = field_.mul(e, inv);
        basis_.push_back({pivot, std::move(v)});
        return true;
    }

    void pop() { basis_.pop_back(); }
    [[nodiscard]] std::size_t rank() const { return basis_.size(); }

private:
    struct Entry {
        std::size_t pivot;
        std::vector<std::uint32_t> vec;
    };
    PrimeField field_;
    std::size_t dim_;
    std::vector<Entry> basis_;
};

/// rank[mask] for every column subset, by a depth-first walk over subset
/// prefixes. Agrees with column_rank(m, mask) for every mask.
inline std::vector<std::uint8_t> subset_rank_table(const FieldMatrix& m)
{
    const std::size_t n = m.cols();
    if (n > 30) throw CapExceeded("rank table over 2^" + std::to_string(n) + " subsets refused");
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    std::vector<std::vector<std::uint32_t>> columns(n);
    for (std::size_t c = 0; c < n; ++c) columns[c] = m.column(c);

    IncrementalEchelon echelon(m.field(), m.rows());
    // Walk: at depth j decide membership of column j; record rank at leaves.
    auto walk = [&](auto&& self, std::size_t depth, SubsetMask mask) -> void {
        if (depth == n) {
            table[mask] = static_cast<std::uint8_t>(echelon.rank());
            return;
        }
        self(self, depth + 1, mask);
        const bool added = echelon.push(columns[depth]);
        self(self, depth + 1, mask | (SubsetMask{1} << depth));
        if (added) echelon.pop();
    };
    walk(walk, 0, 0);
    return table;
}

// ---------------------------------------------------------------------------
// Rational matrices

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Scales to integer entries with gcd 1 and first nonzero entry positive.
inline void canonicalize_integer_vector(std::vector<Rational>& v)
{
    mpz_class lcm_den = 1;
    for (const auto& e : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.get_den_mpz_t());
    mpz_class g = 0;
    for (auto& e : v) {
        e *= lcm_den;
        e.canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_num_mpz_t());
    }
    if (g == 0) return;
    const auto first = std::find_if(v.begin(), v.end(), [](const Rational& e) { return e != 0; });
    if (*first < 0) g = -g;
    for (auto& e : v) {
        e /= g;
        e.canonicalize();
    }
}

/// Exact basis of {v : m v = 0} over Q, one vector per free column of the
/// reduced form, each canonicalized (integer, gcd 1, leading entry positive).
inline std::vector<std::vector<Rational>> rational_kernel(const RationalMatrix& m)
{
    RationalMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && a.at(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        const Rational inv = 1 / a.at(pivot_row, c);
        for (std::size_t j = c; j < cols; ++j) a.at(pivot_row, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a.at(r, c) == 0) continue;
            const Rational factor = a.at(r, c);
            for (std::size_t j = c; j < cols; ++j) a.at(r, j) -= factor * a.at(pivot_row, j);
        }
        pivots.push_back(c);
        ++pivot_row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (const auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(i, free);
        canonicalize_integer_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Generator matrix text format:
//   q n k
//   k lines of n integers in [0, q)
// Lines whose first non-blank character is '#' are ignored.

inline FieldMatrix read_field_matrix(std::istream& in)
{
    std::vector<long> tokens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                tokens.push_back(std::stol(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
            }
        }
    }
    if (tokens.size() < 3) throw std::invalid_argument("matrix file: missing 'q n k' header");
    const long q = tokens[0], n = tokens[1], k = tokens[2];
    if (q < 2 || n < 0 || k < 0) throw std::invalid_argument("matrix file: bad header values");
    if (static_cast<std::size_t>(n) > kMaxGroundSize) throw std::invalid_argument("matrix file: n exceeds 63");
    const PrimeField field(static_cast<std::uint32_t>(q));
    if (tokens.size() != 3 + static_cast<std::size_t>(n * k))
        throw std::invalid_argument("matrix file: expected " + std::to_string(n * k) + " entries, found " +
                                    std::to_string(tokens.size() - 3));
    FieldMatrix m(field, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (long r = 0; r < k; ++r) {
        for (long c = 0; c < n; ++c) {
            const long v = tokens[3 + r * n + c];
            if (v < 0 || v >= q)
                throw std::invalid_argument("matrix file: entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                            ") = " + std::to_string(v) + " outside [0," + std::to_string(q) + ")");
            m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), static_cast<std::uint32_t>(v));
        }
    }
    return m;
}

inline FieldMatrix load_field_matrix(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
    return read_field_matrix(in);
}

inline void write_field_matrix(std::ostream& out, const FieldMatrix& m)
{
    out << m.field().modulus() << ' ' << m.cols() << ' ' << m.rows() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c);
        out << '\n';
    }
}

} // namespace harmtutte
