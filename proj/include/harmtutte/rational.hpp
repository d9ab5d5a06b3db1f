#pragma once

// Exact rational scalars and small integer helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace harmtutte {

using Rational = mpq_class;

/// Thrown when an enumeration would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical string form: "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

/// Parses "p", "p/q" or "-p/q". The result is canonicalized.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

inline Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

inline Rational power(const Rational& base, unsigned exponent)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

inline Rational sign_power(unsigned exponent)
{
    return Rational(exponent % 2 == 0 ? 1 : -1);
}

/// Exact 64-bit q^e; throws if the value does not fit.
inline std::uint64_t checked_pow(std::uint64_t q, unsigned e)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q != 0 && out > UINT64_MAX / q) throw CapExceeded("integer power overflows 64 bits");
        out *= q;
    }
    return out;
}

} // namespace harmtutte
