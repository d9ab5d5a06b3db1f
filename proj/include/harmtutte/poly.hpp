#pragma once

// Exact bivariate polynomials in x, y with rational coefficients.

#include "harmtutte/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harmtutte {

struct Monomial {
    unsigned x = 0;
    unsigned y = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending x-exponent, then ascending y-exponent.
struct CanonicalTermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.x != b.x) return a.x > b.x;
        return a.y < b.y;
    }
};

class BivariatePoly {
public:
    using Terms = std::map<Monomial, Rational, CanonicalTermOrder>;

    BivariatePoly() = default;

    static BivariatePoly constant(const Rational& c) { return monomial(c, 0, 0); }
    static BivariatePoly x() { return monomial(1, 1, 0); }
    static BivariatePoly y() { return monomial(1, 0, 1); }

    static BivariatePoly monomial(const Rational& c, unsigned xe, unsigned ye)
    {
        BivariatePoly p;
        p.add_term(xe, ye, c);
        return p;
    }

    /// Adds c x^a y^b in place, dropping the term if it cancels.
    void add_term(unsigned a, unsigned b, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Rational coeff(unsigned a, unsigned b) const
    {
        const auto it = terms_.find(Monomial{a, b});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    BivariatePoly& operator+=(const BivariatePoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
        return *this;
    }

    BivariatePoly& operator-=(const BivariatePoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, -c);
        return *this;
    }

    BivariatePoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const Rational& s) { return a *= s; }
    friend BivariatePoly operator*(const Rational& s, BivariatePoly a) { return a *= s; }
    friend BivariatePoly operator-(BivariatePoly a) { return a *= Rational(-1); }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b)
    {
        BivariatePoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
        return out;
    }

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    Terms terms_;
};

inline BivariatePoly pow(const BivariatePoly& base, unsigned e)
{
    BivariatePoly out = BivariatePoly::constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * base;
    return out;
}

/// c (x - y)^a y^b, expanded by the binomial theorem.
inline BivariatePoly expand_shifted_term(const Rational& c, unsigned a, unsigned b)
{
    BivariatePoly out;
    if (c == 0) return out;
    for (unsigned j = 0; j <= a; ++j) {
        // C(a, j) x^(a-j) (-y)^j
        Rational coeff = c * binomial(a, j);
        if (j % 2 == 1) coeff = -coeff;
        out.add_term(a - j, j + b, coeff);
    }
    return out;
}

inline Rational evaluate(const BivariatePoly& p, const Rational& x0, const Rational& y0)
{
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) sum += c * power(x0, m.x) * power(y0, m.y);
    return sum;
}

inline BivariatePoly swap_xy(const BivariatePoly& p)
{
    BivariatePoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(m.y, m.x, c);
    return out;
}

/// A linear form a*x + b*y.
struct LinearForm {
    Rational x_coeff;
    Rational y_coeff;
};

/// scale * p(x_image, y_image).
inline BivariatePoly substitute_linear(const BivariatePoly& p, const LinearForm& x_image, const LinearForm& y_image,
                                       const Rational& scale = Rational(1))
{
    unsigned max_x = 0, max_y = 0;
    for (const auto& [m, c] : p.terms()) {
        max_x = std::max(max_x, m.x);
        max_y = std::max(max_y, m.y);
    }
    const auto lx = BivariatePoly::monomial(x_image.x_coeff, 1, 0) + BivariatePoly::monomial(x_image.y_coeff, 0, 1);
    const auto ly = BivariatePoly::monomial(y_image.x_coeff, 1, 0) + BivariatePoly::monomial(y_image.y_coeff, 0, 1);
    std::vector<BivariatePoly> px{BivariatePoly::constant(1)}, py{BivariatePoly::constant(1)};
    for (unsigned i = 1; i <= max_x; ++i) px.push_back(px.back() * lx);
    for (unsigned i = 1; i <= max_y; ++i) py.push_back(py.back() * ly);

    BivariatePoly out;
    for (const auto& [m, c] : p.terms()) out += (px[m.x] * py[m.y]) * c;
    out *= scale;
    return out;
}

/// Common total degree of all terms, or nullopt if the terms disagree.
/// The zero polynomial is reported as homogeneous of degree 0.
inline std::optional<unsigned> homogeneous_degree(const BivariatePoly& p)
{
    if (p.is_zero()) return 0u;
    const unsigned deg = p.terms().begin()->first.x + p.terms().begin()->first.y;
    for (const auto& [m, c] : p.terms())
        if (m.x + m.y != deg) return std::nullopt;
    return deg;
}

class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact quotient p / (xy)^d.
inline BivariatePoly divide_by_xy_power(const BivariatePoly& p, unsigned d)
{
    BivariatePoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.x < d || m.y < d) {
            throw NotDivisible("term with x^" + std::to_string(m.x) + " y^" + std::to_string(m.y) +
                               " is not divisible by (xy)^" + std::to_string(d));
        }
        out.add_term(m.x - d, m.y - d, c);
    }
    return out;
}

/// Human-readable form, e.g. "x^7 + 7x^4y^3 + 7x^3y^4 + y^7".
inline std::string to_string(const BivariatePoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        const bool is_const = m.x == 0 && m.y == 0;
        if (is_const || mag != 1) {
            if (mag.get_den() == 1 || is_const)
                os << to_string(mag);
            else
                os << '(' << to_string(mag) << ')';
        }
        if (m.x > 0) os << 'x' << (m.x > 1 ? "^" + std::to_string(m.x) : "");
        if (m.y > 0) os << 'y' << (m.y > 1 ? "^" + std::to_string(m.y) : "");
    }
    return os.str();
}

} // namespace harmtutte
