#pragma once

// Discrete harmonic functions on the d-subsets of E = {1..n}.
//
// A SetFunction of degree d assigns a rational value to every d-subset Z of E
// (absent keys are zero). The differentiation operator gamma sends it to the
// degree d-1 function Y -> sum of f(Z) over d-subsets Z containing Y. Harmonic
// functions of degree d are the kernel of gamma. Every set function extends to
// all subsets by f~(X) = sum of f(Z) over d-subsets Z of X (Z = X included).

#include "harmtutte/linalg.hpp"
#include "harmtutte/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmtutte {

/// A sorted list of distinct 1-based indices in {1..n}.
class KSubset {
public:
    KSubset() = default;

    KSubset(std::vector<std::size_t> elements, std::size_t n) : elements_(std::move(elements))
    {
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i] < 1 || elements_[i] > n)
                throw std::out_of_range("subset element " + std::to_string(elements_[i]) + " outside 1.." + std::to_string(n));
            if (i > 0 && elements_[i] <= elements_[i - 1])
                throw std::invalid_argument("subset elements must be strictly increasing");
        }
    }

    static KSubset from_mask(SubsetMask mask) { return KSubset(indices_from_mask(mask)); }

    [[nodiscard]] const std::vector<std::size_t>& elements() const { return elements_; }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }

    [[nodiscard]] SubsetMask mask() const
    {
        SubsetMask m = 0;
        for (const auto e : elements_) m |= SubsetMask{1} << (e - 1);
        return m;
    }

    friend bool operator==(const KSubset&, const KSubset&) = default;
    friend auto operator<=>(const KSubset&, const KSubset&) = default;

private:
    explicit KSubset(std::vector<std::size_t> sorted) : elements_(std::move(sorted)) {}

    std::vector<std::size_t> elements_;
};

inline std::string to_string(const KSubset& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s.elements()[i]);
    return out + "}";
}

/// All d-subsets of {1..n} as masks, in lexicographic order of element lists.
inline std::vector<SubsetMask> enumerate_subset_masks(std::size_t n, std::size_t d)
{
    if (d > n) throw std::invalid_argument("subset size " + std::to_string(d) + " exceeds ground size " + std::to_string(n));
    if (n > kMaxGroundSize) throw std::invalid_argument("ground size exceeds 63");
    std::vector<SubsetMask> out;
    auto rec = [&](auto&& self, std::size_t next, std::size_t remaining, SubsetMask acc) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t e = next; e + remaining <= n; ++e) self(self, e + 1, remaining - 1, acc | (SubsetMask{1} << e));
    };
    rec(rec, 0, d, 0);
    return out;
}

inline std::vector<KSubset> enumerate_subsets(std::size_t n, std::size_t d)
{
    std::vector<KSubset> out;
    for (const auto m : enumerate_subset_masks(n, d)) out.push_back(KSubset::from_mask(m));
    return out;
}

/// Lexicographic comparison of two equal-size subsets given as masks.
inline bool lex_less(SubsetMask a, SubsetMask b)
{
    if (a == b) return false;
    const SubsetMask diff = a ^ b;
    const SubsetMask low = diff & (~diff + 1);
    return (a & low) != 0;
}

class SetFunction {
public:
    SetFunction(std::size_t n, std::size_t d) : n_(n), d_(d)
    {
        if (d > n) throw std::invalid_argument("degree exceeds ground size");
        if (n > kMaxGroundSize) throw std::invalid_argument("ground size exceeds 63");
    }

    [[nodiscard]] std::size_t ground_size() const { return n_; }
    [[nodiscard]] std::size_t degree() const { return d_; }

    /// Nonzero values keyed by subset mask.
    [[nodiscard]] const std::map<SubsetMask, Rational>& values() const { return values_; }

    [[nodiscard]] Rational value(SubsetMask z) const
    {
        const auto it = values_.find(z);
        return it == values_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] Rational value(const KSubset& z) const { return value(z.mask()); }

    void set(SubsetMask z, const Rational& v)
    {
        check_key(z);
        if (v == 0)
            values_.erase(z);
        else
            values_[z] = v;
    }

    void set(const KSubset& z, const Rational& v) { set(z.mask(), v); }

    void add(SubsetMask z, const Rational& v)
    {
        check_key(z);
        auto& slot = values_[z];
        slot += v;
        if (slot == 0) values_.erase(z);
    }

    [[nodiscard]] bool is_zero() const { return values_.empty(); }

    friend bool operator==(const SetFunction&, const SetFunction&) = default;

private:
    void check_key(SubsetMask z) const
    {
        if (static_cast<std::size_t>(popcount(z)) != d_)
            throw std::invalid_argument("key " + to_string(KSubset::from_mask(z)) + " does not have size " + std::to_string(d_));
        if (n_ < 64 && (z >> n_) != 0) throw std::out_of_range("key outside ground set");
    }

    std::size_t n_;
    std::size_t d_;
    std::map<SubsetMask, Rational> values_;
};

/// (gamma f)(Y) = sum of f(Z) over d-subsets Z containing Y, for |Y| = d-1.
inline SetFunction gamma(const SetFunction& f)
{
    if (f.degree() == 0) throw std::invalid_argument("gamma is undefined on degree 0");
    SetFunction out(f.ground_size(), f.degree() - 1);
    for (const auto& [z, v] : f.values()) {
        for (SubsetMask rest = z; rest != 0; rest &= rest - 1) {
            const SubsetMask bit = rest & (~rest + 1);
            out.add(z & ~bit, v);
        }
    }
    return out;
}

/// f~(X): sum of f over the d-subsets of X.
inline Rational tilde(const SetFunction& f, SubsetMask x)
{
    Rational sum = 0;
    for (const auto& [z, v] : f.values())
        if ((z & ~x) == 0) sum += v;
    return sum;
}

/// f~ on every subset of E at once (subset-sum transform), indexed by mask.
inline std::vector<Rational> tilde_table(const SetFunction& f)
{
    const std::size_t n = f.ground_size();
    if (n > 26) throw CapExceeded("tilde table over 2^" + std::to_string(n) + " subsets refused");
    std::vector<Rational> table(std::size_t{1} << n);
    for (const auto& [z, v] : f.values()) table[z] = v;
    for (std::size_t bit = 0; bit < n; ++bit) {
        const SubsetMask b = SubsetMask{1} << bit;
        for (SubsetMask m = 0; m < table.size(); ++m)
            if (m & b) table[m] += table[m ^ b];
    }
    return table;
}

/// Sliced sum: f^(i)(J) = sum of f(Z) over d-subsets Z with |J cap Z| = i.
inline Rational f_slice(const SetFunction& f, SubsetMask j, std::size_t i)
{
    Rational sum = 0;
    for (const auto& [z, v] : f.values())
        if (static_cast<std::size_t>(popcount(z & j)) == i) sum += v;
    return sum;
}

/// Sum of f(Z) over d-subsets Z containing X (any |X| <= d).
inline Rational superset_sum(const SetFunction& f, SubsetMask x)
{
    Rational sum = 0;
    for (const auto& [z, v] : f.values())
        if ((x & ~z) == 0) sum += v;
    return sum;
}

class NotHarmonic : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A set function in the kernel of gamma; the invariant is checked on construction.
class HarmonicFunction {
public:
    explicit HarmonicFunction(SetFunction f) : f_(std::move(f))
    {
        if (f_.degree() == 0) return;
        const auto g = gamma(f_);
        if (!g.is_zero()) {
            const auto& [y, v] = *g.values().begin();
            throw NotHarmonic("function is not harmonic: gamma row " + to_string(KSubset::from_mask(y)) + " sums to " +
                              to_string(v) + " (expected 0)");
        }
    }

    /// The degree-0 function with value c on the empty set.
    static HarmonicFunction constant(std::size_t n, const Rational& c = Rational(1))
    {
        SetFunction f(n, 0);
        f.set(SubsetMask{0}, c);
        return HarmonicFunction(std::move(f));
    }

    [[nodiscard]] const SetFunction& function() const { return f_; }
    [[nodiscard]] std::size_t ground_size() const { return f_.ground_size(); }
    [[nodiscard]] std::size_t degree() const { return f_.degree(); }

    friend bool operator==(const HarmonicFunction&, const HarmonicFunction&) = default;

private:
    SetFunction f_;
};

/// The C(n,d-1) x C(n,d) 0/1 inclusion matrix of gamma, rows and columns in lex order.
inline RationalMatrix gamma_matrix(std::size_t n, std::size_t d)
{
    if (d == 0 || d > n) throw std::invalid_argument("gamma matrix needs 1 <= d <= n");
    const auto rows = enumerate_subset_masks(n, d - 1);
    const auto cols = enumerate_subset_masks(n, d);
    std::map<SubsetMask, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (SubsetMask rest = cols[c]; rest != 0; rest &= rest - 1)
            m.at(row_index.at(cols[c] & ~(rest & (~rest + 1))), c) = 1;
    return m;
}

/// Canonical basis of Harm_d (integer values, gcd 1, first nonzero value positive).
inline std::vector<HarmonicFunction> harm_basis(std::size_t n, std::size_t d)
{
    if (d > n) throw std::invalid_argument("harmonic degree " + std::to_string(d) + " exceeds n = " + std::to_string(n));
    if (d == 0) return {HarmonicFunction::constant(n)};
    const auto cols = enumerate_subset_masks(n, d);
    std::vector<HarmonicFunction> basis;
    for (const auto& v : rational_kernel(gamma_matrix(n, d))) {
        SetFunction f(n, d);
        for (std::size_t c = 0; c < cols.size(); ++c) f.set(cols[c], v[c]);
        basis.emplace_back(std::move(f));
    }
    return basis;
}

} // namespace harmtutte
