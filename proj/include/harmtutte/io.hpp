#pragma once

// JSON serialization for polynomials, harmonic functions, matrices and
// enumerator tables. Rationals are always written as canonical "p/q" strings.

#include "harmtutte/code.hpp"
#include "harmtutte/harmonic.hpp"
#include "harmtutte/linalg.hpp"
#include "harmtutte/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

namespace harmtutte {

using json = nlohmann::ordered_json;

/// Records {x, y, coeff} in canonical term order.
inline json poly_to_json(const BivariatePoly& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"x", m.x}, {"y", m.y}, {"coeff", to_string(c)}});
    return terms;
}

inline BivariatePoly poly_from_json(const json& j)
{
    BivariatePoly p;
    for (const auto& t : j) p.add_term(t.at("x").get<unsigned>(), t.at("y").get<unsigned>(), parse_rational(t.at("coeff").get<std::string>()));
    return p;
}

inline json rational_table_to_json(std::span<const Rational> table)
{
    json out = json::object();
    for (std::size_t i = 0; i < table.size(); ++i) out[std::to_string(i)] = to_string(table[i]);
    return out;
}

inline json integer_table_to_json(std::span<const mpz_class> table)
{
    json out = json::object();
    for (std::size_t i = 0; i < table.size(); ++i) out[std::to_string(i)] = table[i].get_str();
    return out;
}

/// {n, d, entries: [{subset: [...], value: "p/q"}]} with entries in lex order.
inline json set_function_to_json(const SetFunction& f)
{
    std::vector<SubsetMask> keys;
    for (const auto& [z, v] : f.values()) keys.push_back(z);
    std::sort(keys.begin(), keys.end(), lex_less);
    json entries = json::array();
    for (const auto z : keys)
        entries.push_back({{"subset", KSubset::from_mask(z).elements()}, {"value", to_string(f.value(z))}});
    return {{"n", f.ground_size()}, {"d", f.degree()}, {"entries", entries}};
}

/// Human form in lex order, e.g. "{1} - {3}" or "2{1,2} - (1/2){1,3}"; "0" when empty.
inline std::string to_string(const SetFunction& f)
{
    std::vector<SubsetMask> keys;
    for (const auto& [z, v] : f.values()) keys.push_back(z);
    std::sort(keys.begin(), keys.end(), lex_less);
    if (keys.empty()) return "0";
    std::string out;
    for (const auto z : keys) {
        const Rational& v = f.values().at(z);
        const Rational mag = abs(v);
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        if (mag != 1) out += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
        out += to_string(KSubset::from_mask(z));
    }
    return out;
}

inline SetFunction set_function_from_json(const json& j)
{
    const auto n = j.at("n").get<std::size_t>();
    const auto d = j.at("d").get<std::size_t>();
    SetFunction f(n, d);
    for (const auto& e : j.at("entries")) {
        const KSubset z(e.at("subset").get<std::vector<std::size_t>>(), n);
        if (z.size() != d)
            throw std::invalid_argument("entry " + to_string(z) + " has size " + std::to_string(z.size()) +
                                        ", expected " + std::to_string(d));
        const auto& raw = e.at("value");
        const Rational v = raw.is_string() ? parse_rational(raw.get<std::string>()) : Rational(raw.get<long>());
        if (f.value(z) != 0) throw std::invalid_argument("duplicate entry " + to_string(z));
        f.set(z, v);
    }
    return f;
}

/// Parses and validates harmonicity; throws NotHarmonic naming the violated gamma row.
inline HarmonicFunction harmonic_from_json(const json& j)
{
    return HarmonicFunction(set_function_from_json(j));
}

inline HarmonicFunction load_harmonic_function(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open harmonic function file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("harmonic function file '" + path + "': " + e.what());
    }
    return harmonic_from_json(j);
}

inline json matrix_to_json(const FieldMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<std::uint32_t>(m.row(r).begin(), m.row(r).end()));
    return {{"q", m.field().modulus()}, {"n", m.cols()}, {"k", m.rows()}, {"rows", rows}};
}

inline FieldMatrix matrix_from_json(const json& j)
{
    const PrimeField field(j.at("q").get<std::uint32_t>());
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::vector<long>> rows;
    for (const auto& r : j.at("rows")) rows.push_back(r.get<std::vector<long>>());
    return FieldMatrix::from_rows(field, n, rows);
}

} // namespace harmtutte
