#pragma once

// Executable checks of the identities linking harmonic Tutte polynomials and
// harmonic weight enumerators. Each verifier computes both sides by separate
// routes and reports exact equality, or the differing terms.

#include "harmtutte/code.hpp"
#include "harmtutte/harmonic.hpp"
#include "harmtutte/io.hpp"
#include "harmtutte/matroid.hpp"
#include "harmtutte/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace harmtutte {

struct VerificationReport {
    std::string identity;
    json instance;
    BivariatePoly lhs;
    BivariatePoly rhs;
    bool equal = false;
    BivariatePoly diff; // lhs - rhs; zero iff equal
};

inline VerificationReport make_report(std::string identity, json instance, BivariatePoly lhs, BivariatePoly rhs)
{
    VerificationReport r{std::move(identity), std::move(instance), std::move(lhs), std::move(rhs), false, {}};
    r.diff = r.lhs - r.rhs;
    r.equal = r.diff.is_zero();
    return r;
}

inline json report_to_json(const VerificationReport& r)
{
    return {{"identity", r.identity},
            {"verdict", r.equal ? "equal" : "mismatch"},
            {"instance", r.instance},
            {"lhs", to_string(r.lhs)},
            {"rhs", to_string(r.rhs)},
            {"diff", poly_to_json(r.diff)}};
}

inline json instance_json(const FieldMatrix& m, const HarmonicFunction* f)
{
    json j = {{"matrix", matrix_to_json(m)}};
    if (f) j["f"] = set_function_to_json(f->function());
    return j;
}

/// Univariate table sum_t v_t x^t, used to report tables as polynomials.
inline BivariatePoly table_as_poly(std::span<const Rational> v)
{
    BivariatePoly p;
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(static_cast<unsigned>(i), 0, v[i]);
    return p;
}

/// Integer power allowing negative exponents.
inline Rational signed_power(const Rational& base, long e)
{
    if (e >= 0) return power(base, static_cast<unsigned>(e));
    if (base == 0) throw std::domain_error("negative power of zero");
    return 1 / power(base, static_cast<unsigned>(-e));
}

// ---------------------------------------------------------------------------
// Duality: T(M*, f; x, y) = (-1)^d T(M, f; y, x)

inline VerificationReport verify_duality(const VectorMatroid& m, const HarmonicFunction& f,
                                         const EnumerationLimits& limits = {})
{
    auto lhs = harmonic_tutte(dual(m), f, limits);
    auto rhs = swap_xy(harmonic_tutte(m, f, limits)) * sign_power(static_cast<unsigned>(f.degree()));
    return make_report("duality", instance_json(m.representation(), &f), std::move(lhs), std::move(rhs));
}

// ---------------------------------------------------------------------------
// Generalized Greene identity
//
//   Z_{C,f}(x,y) = (-1)^d (x-y)^(k-d) y^(n-k-d) T(M_C, f; (x+(q-1)y)/(x-y), x/y)
//
// Termwise, with ell = k - rho(J) and t = |J|, the Tutte term of J becomes
//   (q y/(x-y))^ell ((x-y)/y)^(ell-(k-t)) = q^ell (x-y)^(t-k) y^(k-t),
// and the prefactor turns it into q^ell (x-y)^(t-d) y^(n-t-d). Since f~(J)
// vanishes unless d <= t <= n-d, every exponent is nonnegative:
//   greene_rhs = (-1)^d sum_J f~(J) q^(k-rho(J)) (x-y)^(|J|-d) y^(n-d-|J|).

inline BivariatePoly greene_rhs(const LinearCode& c, const HarmonicFunction& f, const EnumerationLimits& limits = {})
{
    check_ground_match(c, f);
    const std::size_t n = c.length(), k = c.dimension(), d = f.degree();
    limits.check_ground(n);
    if (2 * d > n) return {};
    const auto ranks = subset_rank_table(c.generator());
    const auto tilde_values = tilde_table(f.function());
    std::vector<mpz_class> q_pows(k + 1);
    for (std::size_t e = 0; e <= k; ++e) mpz_ui_pow_ui(q_pows[e].get_mpz_t(), c.q(), e);

    std::vector<Rational> by_size(n + 1);
    for (SubsetMask j = 0; j < ranks.size(); ++j) {
        const auto t = static_cast<std::size_t>(popcount(j));
        if (t < d || t + d > n) continue;
        const auto& w = tilde_values[j];
        if (w == 0) continue;
        by_size[t] += w * Rational(q_pows[k - ranks[j]]);
    }
    BivariatePoly out;
    for (std::size_t t = d; t + d <= n; ++t)
        out += expand_shifted_term(by_size[t], static_cast<unsigned>(t - d), static_cast<unsigned>(n - t - d));
    out *= sign_power(static_cast<unsigned>(d));
    return out;
}

/// The Greene right side evaluated literally at (x0, y0) with rational
/// arguments to T; requires x0 != y0 and y0 != 0.
inline Rational greene_substitution_value(const LinearCode& c, const HarmonicFunction& f, const Rational& x0,
                                          const Rational& y0, const EnumerationLimits& limits = {})
{
    const auto n = static_cast<long>(c.length()), k = static_cast<long>(c.dimension()),
               d = static_cast<long>(f.degree());
    const Rational q(c.q());
    const auto t = harmonic_tutte(c.matroid(), f, limits);
    const Rational tx = (x0 + (q - 1) * y0) / (x0 - y0);
    const Rational ty = x0 / y0;
    return sign_power(static_cast<unsigned>(d)) * signed_power(x0 - y0, k - d) * signed_power(y0, n - k - d) *
           evaluate(t, tx, ty);
}

inline VerificationReport verify_greene(const LinearCode& c, const HarmonicFunction& f,
                                        const EnumerationLimits& limits = {})
{
    return make_report("greene", instance_json(c.generator(), &f), zeta(c, f, limits), greene_rhs(c, f, limits));
}

/// Compares greene_rhs against the rational-substitution form at `points`
/// random rational points with x != y, y != 0. The report holds the values at
/// the first disagreeing point (or at the last point when all agree).
inline VerificationReport verify_greene_points(const LinearCode& c, const HarmonicFunction& f, std::mt19937_64& rng,
                                               std::size_t points, const EnumerationLimits& limits = {})
{
    const auto rhs_poly = greene_rhs(c, f, limits);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    Rational lhs_v, rhs_v;
    json inst = instance_json(c.generator(), &f);
    for (std::size_t i = 0; i < points; ++i) {
        Rational x0, y0;
        do {
            x0 = Rational(num(rng), den(rng));
            y0 = Rational(num(rng), den(rng));
            x0.canonicalize();
            y0.canonicalize();
        } while (y0 == 0 || x0 == y0);
        lhs_v = evaluate(rhs_poly, x0, y0);
        rhs_v = greene_substitution_value(c, f, x0, y0, limits);
        inst["point"] = {to_string(x0), to_string(y0)};
        if (lhs_v != rhs_v) break;
    }
    return make_report("greene-points", inst, BivariatePoly::constant(lhs_v), BivariatePoly::constant(rhs_v));
}

// ---------------------------------------------------------------------------
// Harmonic MacWilliams identity, free of square roots:
//   Z_{C*,f}(x,y) = (-1)^d (q^d/|C|) Z_{C,f}(x+(q-1)y, x-y).
// For q = 2 this is the form with (x+y)/sqrt2, (x-y)/sqrt2 and factor 2^(n/2):
// Z_{C,f} is homogeneous of degree n-2d, so the substitution releases
// 2^(-(n-2d)/2), and 2^(n/2) 2^(-(n-2d)/2) = 2^d.

inline BivariatePoly macwilliams_rhs(const LinearCode& c, const HarmonicFunction& f,
                                     const EnumerationLimits& limits = {})
{
    const std::size_t d = f.degree();
    const Rational q(c.q());
    Rational scale = sign_power(static_cast<unsigned>(d)) * power(q, static_cast<unsigned>(d)) / Rational(c.size());
    return substitute_linear(zeta(c, f, limits), LinearForm{1, q - 1}, LinearForm{1, -1}, scale);
}

inline VerificationReport verify_macwilliams_harmonic(const LinearCode& c, const HarmonicFunction& f,
                                                      const EnumerationLimits& limits = {})
{
    return make_report("macwilliams", instance_json(c.generator(), &f), zeta(dual_code(c), f, limits),
                       macwilliams_rhs(c, f, limits));
}

/// a + b sqrt(2) with rational a, b.
struct QuadraticSqrt2 {
    Rational a;
    Rational b;

    friend QuadraticSqrt2 operator+(const QuadraticSqrt2& u, const QuadraticSqrt2& v) { return {u.a + v.a, u.b + v.b}; }
    friend QuadraticSqrt2 operator*(const QuadraticSqrt2& u, const QuadraticSqrt2& v)
    {
        return {u.a * v.a + 2 * u.b * v.b, u.a * v.b + u.b * v.a};
    }
    friend bool operator==(const QuadraticSqrt2&, const QuadraticSqrt2&) = default;
};

inline QuadraticSqrt2 power(const QuadraticSqrt2& base, unsigned e)
{
    QuadraticSqrt2 out{1, 0};
    for (unsigned i = 0; i < e; ++i) out = out * base;
    return out;
}

/// Binary codes only: evaluates (-1)^d (2^(n/2)/|C|) Z_{C,f}((x+y)/sqrt2, (x-y)/sqrt2)
/// in Q(sqrt2) at (x0, y0) and compares with Z_{C*,f}(x0, y0). Confirms the
/// square-root-free restatement used by verify_macwilliams_harmonic.
inline VerificationReport verify_sqrt2_form(const LinearCode& c, const HarmonicFunction& f, const Rational& x0,
                                            const Rational& y0, const EnumerationLimits& limits = {})
{
    if (c.q() != 2) throw std::invalid_argument("square-root form applies to binary codes");
    const std::size_t n = c.length(), d = f.degree();
    const auto z = zeta(c, f, limits);
    const QuadraticSqrt2 X{0, (x0 + y0) / 2}; // (x0+y0)/sqrt2
    const QuadraticSqrt2 Y{0, (x0 - y0) / 2};
    QuadraticSqrt2 value{0, 0};
    for (const auto& [m, coeff] : z.terms()) value = value + QuadraticSqrt2{coeff, 0} * power(X, m.x) * power(Y, m.y);
    const Rational half_power = power(Rational(2), static_cast<unsigned>(n / 2));
    const QuadraticSqrt2 two_pow_half_n = n % 2 == 0 ? QuadraticSqrt2{half_power, 0} : QuadraticSqrt2{0, half_power};
    const Rational scalar = sign_power(static_cast<unsigned>(d)) / Rational(c.size());
    const QuadraticSqrt2 sqrt2_side = QuadraticSqrt2{scalar, 0} * two_pow_half_n * value;
    const Rational dual_side = evaluate(zeta(dual_code(c), f, limits), x0, y0);

    json inst = instance_json(c.generator(), &f);
    inst["point"] = {to_string(x0), to_string(y0)};
    // An irrational part shows up as a y-term so that it cannot cancel.
    BivariatePoly lhs = BivariatePoly::constant(sqrt2_side.a) + BivariatePoly::monomial(sqrt2_side.b, 0, 1);
    return make_report("macwilliams-sqrt2", inst, std::move(lhs), BivariatePoly::constant(dual_side));
}

// ---------------------------------------------------------------------------
// B/A relation and its reinterpretation

inline VerificationReport verify_btf(const LinearCode& c, const HarmonicFunction& f,
                                     const EnumerationLimits& limits = {})
{
    auto b = b_table(c, f, limits);
    const auto levels = level_sums(f.function());
    for (std::size_t t = 0; t < b.size(); ++t) b[t] += levels[t];
    const auto a_f = harmonic_weight_distribution(c, f, limits);
    const auto b_from_a = b_table_from_a(a_f, c.length(), f.degree());
    return make_report("btf", instance_json(c.generator(), &f), table_as_poly(b), table_as_poly(b_from_a));
}

inline VerificationReport verify_reinterpretation(const LinearCode& c, const HarmonicFunction& f,
                                                  const EnumerationLimits& limits = {})
{
    return make_report("reinterpretation", instance_json(c.generator(), &f), zeta_from_b(c, f, limits),
                       zeta(c, f, limits));
}

// ---------------------------------------------------------------------------
// f^(i)(J) = (-1)^(d-i) C(d,i) f~(J), all 0 <= i <= d

inline VerificationReport verify_lemma_slices(const HarmonicFunction& f, SubsetMask j)
{
    const std::size_t d = f.degree();
    const Rational t = tilde(f.function(), j);
    std::vector<Rational> lhs(d + 1), rhs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        lhs[i] = f_slice(f.function(), j, i);
        rhs[i] = sign_power(static_cast<unsigned>(d - i)) * binomial(static_cast<long>(d), static_cast<long>(i)) * t;
    }
    json inst = {{"f", set_function_to_json(f.function())}, {"J", indices_from_mask(j)}};
    return make_report("lemma-slices", inst, table_as_poly(lhs), table_as_poly(rhs));
}

// ---------------------------------------------------------------------------
// Design detection: the words of each weight in C form a t-design iff
// W_{C,f} = 0 for every f in Harm_d, 1 <= d <= t.

struct DegreeOutcome {
    std::size_t degree = 0;
    std::size_t basis_size = 0;
    bool all_vanish = true;
    std::optional<SetFunction> witness;     // a basis element with W_{C,f} != 0
    BivariatePoly witness_enumerator;
    bool tutte_all_vanish = true;           // T(M_C, f) = 0 for every basis f
};

struct WeightClassOutcome {
    std::size_t weight = 0;
    mpz_class count;            // A_w
    bool is_design = true;      // for each s <= t, every s-subset lies in the same number of supports
    mpz_class lambda;           // that number at strength min(t, w), when is_design
};

struct DesignReport {
    std::size_t t = 0;
    std::vector<DegreeOutcome> degrees;
    std::vector<WeightClassOutcome> weights;
    bool harmonic_criterion = true;   // all harmonic enumerators vanish
    bool counting_criterion = true;   // every weight class is a t-design
    bool tutte_criterion = true;      // all harmonic Tutte polynomials vanish

    /// Harmonic and counting sides agree; vanishing Tutte polynomials imply a design.
    [[nodiscard]] bool consistent() const
    {
        return harmonic_criterion == counting_criterion && (!tutte_criterion || counting_criterion);
    }
};

/// Block-counting oracle: for each weight w with A_w > 0, counts how many
/// codewords of weight w have a support containing each s-subset, for every
/// strength 1 <= s <= t. A class is a design when every count is constant in
/// the subset; lambda is reported at strength min(t, w).
inline std::vector<WeightClassOutcome> design_counting_oracle(const LinearCode& c, std::size_t t,
                                                              const EnumerationLimits& limits = {})
{
    const std::size_t n = c.length();
    std::vector<std::vector<SubsetMask>> subsets(t + 1);
    for (std::size_t s = 1; s <= t; ++s) subsets[s] = enumerate_subset_masks(n, s);
    // counts[w][s][i]: words of weight w whose support contains subsets[s][i]
    std::vector<std::vector<std::vector<mpz_class>>> counts(n + 1);
    std::vector<mpz_class> a(n + 1, 0);
    for_each_codeword(c, [&](const Codeword& w) {
        const auto wt = w.weight();
        a[wt] += 1;
        if (wt == 0) return;
        auto& slot = counts[wt];
        if (slot.empty()) {
            slot.resize(t + 1);
            for (std::size_t s = 1; s <= t; ++s) slot[s].assign(subsets[s].size(), 0);
        }
        for (std::size_t s = 1; s <= t; ++s)
            for (std::size_t i = 0; i < subsets[s].size(); ++i)
                if ((subsets[s][i] & ~w.support) == 0) slot[s][i] += 1;
    }, limits);

    std::vector<WeightClassOutcome> out;
    for (std::size_t w = 1; w <= n; ++w) {
        if (a[w] == 0) continue;
        WeightClassOutcome o{w, a[w], true, 0};
        for (std::size_t s = 1; s <= t; ++s)
            for (const auto& cnt : counts[w][s])
                if (cnt != counts[w][s].front()) o.is_design = false;
        if (o.is_design) o.lambda = counts[w][std::min(t, w)].front();
        out.push_back(std::move(o));
    }
    return out;
}

inline DesignReport design_check(const LinearCode& c, std::size_t t, const EnumerationLimits& limits = {})
{
    const std::size_t n = c.length();
    if (t < 1 || t > n) throw std::invalid_argument("design strength t must satisfy 1 <= t <= n");
    DesignReport report;
    report.t = t;
    const TutteEvaluator evaluator(c.matroid(), limits);
    for (std::size_t d = 1; d <= t; ++d) {
        DegreeOutcome o;
        o.degree = d;
        const auto basis = harm_basis(n, d);
        o.basis_size = basis.size();
        for (const auto& f : basis) {
            const auto w = harmonic_weight_enumerator(c, f, limits);
            if (!w.is_zero() && o.all_vanish) {
                o.all_vanish = false;
                o.witness = f.function();
                o.witness_enumerator = w;
            }
            if (!evaluator.harmonic(f).is_zero()) o.tutte_all_vanish = false;
        }
        report.harmonic_criterion = report.harmonic_criterion && o.all_vanish;
        report.tutte_criterion = report.tutte_criterion && o.tutte_all_vanish;
        report.degrees.push_back(std::move(o));
    }
    report.weights = design_counting_oracle(c, t, limits);
    for (const auto& w : report.weights) report.counting_criterion = report.counting_criterion && w.is_design;
    return report;
}

inline json design_report_to_json(const DesignReport& r)
{
    json degrees = json::array();
    for (const auto& o : r.degrees) {
        json j = {{"d", o.degree}, {"basis_size", o.basis_size}, {"all_vanish", o.all_vanish},
                  {"tutte_all_vanish", o.tutte_all_vanish}};
        if (o.witness) {
            j["witness"] = set_function_to_json(*o.witness);
            j["witness_enumerator"] = to_string(o.witness_enumerator);
        }
        degrees.push_back(j);
    }
    json weights = json::array();
    for (const auto& w : r.weights)
        weights.push_back({{"weight", w.weight}, {"count", w.count.get_str()}, {"is_design", w.is_design},
                           {"lambda", w.lambda.get_str()}});
    return {{"t", r.t},
            {"harmonic_criterion", r.harmonic_criterion},
            {"counting_criterion", r.counting_criterion},
            {"tutte_criterion", r.tutte_criterion},
            {"consistent", r.consistent()},
            {"degrees", degrees},
            {"weights", weights}};
}

// ---------------------------------------------------------------------------
// Seeded random corpora

/// Uniform random k x n matrix over F_q (may be rank deficient).
inline FieldMatrix random_matrix(std::mt19937_64& rng, std::uint32_t q, std::size_t k, std::size_t n)
{
    FieldMatrix m(PrimeField(q), k, n);
    std::uniform_int_distribution<std::uint32_t> entry(0, q - 1);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, entry(rng));
    return m;
}

/// Random full-row-rank generator: a random matrix with dependent rows dropped.
inline LinearCode random_code(std::mt19937_64& rng, std::uint32_t q, std::size_t k, std::size_t n)
{
    return LinearCode(random_matrix(rng, q, k, n));
}

struct CorpusOptions {
    std::uint64_t seed = 20240611;
    std::size_t instances = 200;
    std::vector<std::uint32_t> fields{2, 3, 5};
    std::size_t min_n = 1;
    std::size_t max_n = 10;
    std::size_t max_degree = 3;
};

/// One random code and a harmonic degree d <= min(max_degree, n/2).
struct CorpusInstance {
    LinearCode code;
    std::size_t degree;
};

inline std::vector<CorpusInstance> random_corpus(const CorpusOptions& opts)
{
    std::mt19937_64 rng(opts.seed);
    std::vector<CorpusInstance> out;
    std::uniform_int_distribution<std::size_t> pick_field(0, opts.fields.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_n(opts.min_n, opts.max_n);
    for (std::size_t i = 0; i < opts.instances; ++i) {
        const auto q = opts.fields[pick_field(rng)];
        const auto n = pick_n(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(0, n)(rng);
        const auto d = std::uniform_int_distribution<std::size_t>(0, std::min(opts.max_degree, n / 2))(rng);
        out.push_back({random_code(rng, q, k, n), d});
    }
    return out;
}

/// harm_basis memoized by (n, d).
class HarmonicBasisCache {
public:
    const std::vector<HarmonicFunction>& get(std::size_t n, std::size_t d)
    {
        auto it = cache_.find({n, d});
        if (it == cache_.end()) it = cache_.emplace(std::make_pair(n, d), harm_basis(n, d)).first;
        return it->second;
    }

private:
    std::map<std::pair<std::size_t, std::size_t>, std::vector<HarmonicFunction>> cache_;
};

} // namespace harmtutte
