// harmtutte: command-line front end for the harmtutte library.
//
// Exit status: 0 on success, 1 on a verification mismatch (or an inconsistent
// design report), 2 on input errors and cap violations.

#include "harmtutte/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace harmtutte;

namespace {

enum class Format { human, json_lines };

struct RunConfig {
    Format format = Format::human;
    std::uint64_t seed = 20240611;
    EnumerationLimits limits = EnumerationLimits::from_env();
    std::optional<std::size_t> degree;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

/// The functions a command runs over: the file when given, else the Harm_d
/// basis for each listed degree.
std::vector<HarmonicFunction> functions_for(std::size_t n, const std::string& path, const std::vector<std::size_t>& degrees)
{
    if (!path.empty()) return {load_harmonic_function(path)};
    std::vector<HarmonicFunction> out;
    for (const auto d : degrees) {
        if (2 * d > n && d != 0) continue;
        for (auto& f : harm_basis(n, d)) out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::size_t> degrees_or(const RunConfig& cfg, std::vector<std::size_t> fallback)
{
    if (cfg.degree) return {*cfg.degree};
    return fallback;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi)
{
    std::vector<std::size_t> out;
    for (std::size_t d = lo; d <= hi; ++d) out.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------

int cmd_tutte(const RunConfig& cfg, const std::string& matrix)
{
    const VectorMatroid m(load_field_matrix(matrix));
    const auto t = tutte(m, cfg.limits);
    if (cfg.format == Format::human)
        std::cout << to_string(t) << '\n';
    else
        emit({{"command", "tutte"}, {"n", m.ground_size()}, {"rank", m.full_rank()}, {"poly", poly_to_json(t)},
              {"string", to_string(t)}});
    return 0;
}

/// Shared driver for the per-function polynomial commands.
template <typename Compute>
int per_function(const RunConfig& cfg, const std::string& command, std::size_t n, const std::string& fpath,
                 Compute compute)
{
    const bool single = !fpath.empty();
    for (const auto& f : functions_for(n, fpath, degrees_or(cfg, {1}))) {
        const BivariatePoly p = compute(f);
        if (cfg.format == Format::human) {
            if (single)
                std::cout << to_string(p) << '\n';
            else
                std::cout << to_string(f.function()) << ": " << to_string(p) << '\n';
        } else {
            emit({{"command", command}, {"f", set_function_to_json(f.function())}, {"poly", poly_to_json(p)},
                  {"string", to_string(p)}});
        }
    }
    return 0;
}

int cmd_harmonic_tutte(const RunConfig& cfg, const std::string& matrix, const std::string& fpath)
{
    const VectorMatroid m(load_field_matrix(matrix));
    cfg.limits.check_ground(m.ground_size());
    const TutteEvaluator eval(m, cfg.limits);
    return per_function(cfg, "harmonic-tutte", m.ground_size(), fpath, [&](const HarmonicFunction& f) {
        if (f.ground_size() != m.ground_size()) return harmonic_tutte(m, f, cfg.limits); // throws
        return eval.harmonic(f);
    });
}

int cmd_weight_enum(const RunConfig& cfg, const std::string& matrix)
{
    const LinearCode c(load_field_matrix(matrix));
    const auto a = weight_distribution(c, cfg.limits);
    std::vector<Rational> coeffs(a.begin(), a.end());
    const auto w = enumerator_from_coefficients(coeffs, c.length());
    if (cfg.format == Format::human)
        std::cout << to_string(w) << '\n';
    else
        emit({{"command", "weight-enum"}, {"A", integer_table_to_json(a)}, {"poly", poly_to_json(w)},
              {"string", to_string(w)}});
    return 0;
}

int cmd_harmonic_weight_enum(const RunConfig& cfg, const std::string& matrix, const std::string& fpath)
{
    const LinearCode c(load_field_matrix(matrix));
    return per_function(cfg, "harmonic-weight-enum", c.length(), fpath,
                        [&](const HarmonicFunction& f) { return harmonic_weight_enumerator(c, f, cfg.limits); });
}

int cmd_zeta(const RunConfig& cfg, const std::string& matrix, const std::string& fpath)
{
    const LinearCode c(load_field_matrix(matrix));
    return per_function(cfg, "zeta", c.length(), fpath,
                        [&](const HarmonicFunction& f) { return zeta(c, f, cfg.limits); });
}

int cmd_harm_basis(const RunConfig& cfg, std::size_t n, std::optional<std::size_t> d)
{
    if (n > kMaxGroundSize) throw std::invalid_argument("n must be at most 63");
    const auto degrees = d ? std::vector<std::size_t>{*d} : degrees_or(cfg, range(0, n / 2));
    for (const auto deg : degrees) {
        const auto basis = harm_basis(n, deg);
        if (cfg.format == Format::human) {
            std::cout << "Harm_" << deg << " on " << n << " points: dimension " << basis.size() << '\n';
            for (const auto& f : basis) std::cout << "  " << to_string(f.function()) << '\n';
        } else {
            for (const auto& f : basis) emit(set_function_to_json(f.function()));
        }
    }
    return 0;
}

int cmd_dual(const RunConfig& cfg, const std::string& matrix)
{
    const LinearCode c(load_field_matrix(matrix));
    const auto d = dual_code(c).generator();
    if (cfg.format == Format::human)
        write_field_matrix(std::cout, d);
    else
        emit(matrix_to_json(d));
    return 0;
}

int cmd_b_table(const RunConfig& cfg, const std::string& matrix, const std::string& fpath)
{
    const LinearCode c(load_field_matrix(matrix));
    for (const auto& f : functions_for(c.length(), fpath, degrees_or(cfg, {1}))) {
        const auto b = b_table(c, f, cfg.limits);
        if (cfg.format == Format::human) {
            if (fpath.empty()) std::cout << to_string(f.function()) << '\n';
            for (std::size_t t = 0; t < b.size(); ++t) std::cout << "B_" << t << " = " << to_string(b[t]) << '\n';
        } else {
            emit({{"command", "b-table"}, {"f", set_function_to_json(f.function())}, {"B", rational_table_to_json(b)}});
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

const std::vector<std::string> kIdentities{"duality", "greene", "macwilliams", "btf", "reinterpretation", "lemma-slices"};

/// One row of the summary: a report plus how many checks it stands for.
struct Row {
    VerificationReport report;
    std::string f;
    std::size_t checks = 1;
};

Row lemma_slices_row(const HarmonicFunction& f)
{
    const std::size_t n = f.ground_size();
    const SubsetMask full = n == 0 ? 0 : (SubsetMask{1} << n) - 1;
    // Reports the first failing J, or J = E when every subset passes.
    std::optional<VerificationReport> last;
    std::size_t checked = 0;
    for (SubsetMask j = 0;; ++j) {
        last = verify_lemma_slices(f, j);
        ++checked;
        if (!last->equal || j == full) break;
    }
    last->instance["subsets_checked"] = checked;
    return {*last, to_string(f.function()), checked};
}

Row run_identity(const std::string& name, const LinearCode& c, const HarmonicFunction& f, const EnumerationLimits& limits)
{
    const auto fs = to_string(f.function());
    if (name == "duality") return {verify_duality(c.matroid(), f, limits), fs};
    if (name == "greene") return {verify_greene(c, f, limits), fs};
    if (name == "macwilliams") return {verify_macwilliams_harmonic(c, f, limits), fs};
    if (name == "btf") return {verify_btf(c, f, limits), fs};
    if (name == "reinterpretation") return {verify_reinterpretation(c, f, limits), fs};
    if (name == "lemma-slices") return lemma_slices_row(f);
    throw std::invalid_argument("unknown identity '" + name + "'");
}

void print_rows(const RunConfig& cfg, const std::vector<Row>& rows)
{
    std::size_t checks = 0, mismatches = 0;
    for (const auto& row : rows) {
        checks += row.checks;
        if (!row.report.equal) ++mismatches;
        if (cfg.format == Format::json_lines) {
            auto j = report_to_json(row.report);
            j["checks"] = row.checks;
            emit(j);
        } else {
            std::cout << std::left << std::setw(18) << row.report.identity << std::setw(10)
                      << (row.report.equal ? "equal" : "MISMATCH") << "f = " << row.f << '\n';
            std::cout << "    lhs: " << to_string(row.report.lhs) << '\n'
                      << "    rhs: " << to_string(row.report.rhs) << '\n';
            if (!row.report.equal) std::cout << "    diff: " << to_string(row.report.diff) << '\n';
        }
    }
    if (cfg.format == Format::human)
        std::cout << rows.size() << " reports, " << checks << " checks, " << mismatches << " mismatches\n";
}

int cmd_verify(const RunConfig& cfg, const std::string& name, const std::string& matrix, const std::string& fpath)
{
    const LinearCode c(load_field_matrix(matrix));
    const std::size_t n = c.length();
    std::vector<std::string> names;
    if (name == "all")
        names = kIdentities;
    else if (std::find(kIdentities.begin(), kIdentities.end(), name) != kIdentities.end())
        names = {name};
    else
        throw std::invalid_argument("unknown identity '" + name + "'");

    const auto functions = functions_for(n, fpath, degrees_or(cfg, range(0, std::min<std::size_t>(3, n / 2))));
    std::vector<Row> rows;
    for (const auto& id : names)
        for (const auto& f : functions) rows.push_back(run_identity(id, c, f, cfg.limits));
    print_rows(cfg, rows);
    for (const auto& r : rows)
        if (!r.report.equal) return 1;
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_design_check(const RunConfig& cfg, const std::string& matrix, std::size_t t)
{
    const LinearCode c(load_field_matrix(matrix));
    const auto r = design_check(c, t, cfg.limits);
    if (cfg.format == Format::json_lines) {
        emit(design_report_to_json(r));
    } else {
        std::cout << "t = " << r.t << '\n';
        for (const auto& d : r.degrees) {
            std::cout << "d = " << d.degree << ": " << d.basis_size << " basis functions, ";
            if (d.all_vanish)
                std::cout << "every W_{C,f} = 0";
            else
                std::cout << "witness " << to_string(*d.witness) << " with W_{C,f} = " << to_string(d.witness_enumerator);
            std::cout << (d.tutte_all_vanish ? "; every T(M,f) = 0" : "; some T(M,f) != 0") << '\n';
        }
        for (const auto& w : r.weights) {
            std::cout << "weight " << w.weight << ": " << w.count.get_str() << (w.count == 1 ? " word, " : " words, ");
            if (w.is_design)
                std::cout << "design with lambda = " << w.lambda.get_str() << '\n';
            else
                std::cout << "not a design\n";
        }
        std::cout << "harmonic criterion: " << (r.harmonic_criterion ? "design" : "not a design") << '\n'
                  << "counting oracle: " << (r.counting_criterion ? "design" : "not a design") << '\n'
                  << "consistent: " << (r.consistent() ? "yes" : "no") << '\n';
    }
    return r.consistent() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// selftest: every identity on seeded random corpora

int cmd_selftest(const RunConfig& cfg, std::size_t instances)
{
    CorpusOptions binary;
    binary.seed = cfg.seed;
    binary.instances = instances;
    binary.fields = {2};
    binary.max_n = 10;
    CorpusOptions odd = binary;
    odd.seed = cfg.seed + 1;
    odd.fields = {3, 5};
    odd.max_n = 8;

    std::vector<CorpusInstance> all = random_corpus(binary);
    for (auto& inst : random_corpus(odd)) all.push_back(std::move(inst));

    std::vector<std::string> names = kIdentities;
    names.emplace_back("macwilliams-sqrt2");
    names.emplace_back("design");
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally; // checks, mismatches
    std::optional<json> first_mismatch;
    auto record = [&](const std::string& id, bool equal, const json& detail) {
        auto& [checks, bad] = tally[id];
        ++checks;
        if (!equal) {
            ++bad;
            if (!first_mismatch) first_mismatch = detail;
        }
    };

    HarmonicBasisCache cache;
    std::mt19937_64 rng(cfg.seed + 2);
    for (const auto& inst : all) {
        const auto& c = inst.code;
        for (const auto& f : cache.get(c.length(), inst.degree)) {
            for (const auto& id : kIdentities) {
                if (id == "lemma-slices") continue;
                const auto r = run_identity(id, c, f, cfg.limits).report;
                record(id, r.equal, report_to_json(r));
            }
            const SubsetMask j = rng() & ((SubsetMask{1} << c.length()) - 1);
            const auto s = verify_lemma_slices(f, j);
            record("lemma-slices", s.equal, report_to_json(s));
            if (c.q() == 2) {
                const Rational x0(static_cast<long>(rng() % 19) - 9), y0(static_cast<long>(rng() % 7) + 1);
                const auto r = verify_sqrt2_form(c, f, x0, y0, cfg.limits);
                record("macwilliams-sqrt2", r.equal, report_to_json(r));
            }
        }
        if (c.q() == 2 && c.length() >= 1) {
            const std::size_t t = 1 + rng() % std::min<std::size_t>(3, c.length());
            const auto d = design_check(c, t, cfg.limits);
            record("design", d.consistent(), {{"identity", "design"}, {"instance", matrix_to_json(c.generator())},
                                              {"report", design_report_to_json(d)}});
        }
    }

    bool ok = true;
    for (const auto& id : names) {
        const auto [checks, bad] = tally[id];
        ok = ok && bad == 0;
        if (cfg.format == Format::human)
            std::cout << std::left << std::setw(18) << id << std::right << std::setw(7) << checks << " checks"
                      << std::setw(5) << bad << " mismatches\n";
        else
            emit({{"identity", id}, {"checks", checks}, {"mismatches", bad}, {"verdict", bad == 0 ? "equal" : "mismatch"}});
    }
    if (cfg.format == Format::human) {
        std::cout << "seed " << cfg.seed << ", " << all.size() << " instances: " << (ok ? "all identities hold" : "FAILED")
                  << '\n';
        if (first_mismatch) std::cout << "first mismatch: " << first_mismatch->dump() << '\n';
    } else if (first_mismatch) {
        emit({{"first_mismatch", *first_mismatch}});
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Harmonic Tutte polynomials and harmonic weight enumerators of linear codes over prime fields"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "human";
    std::size_t max_n = 0, max_words = 0, degree = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json-lines"}));
    app.add_option("--seed", cfg.seed, "Seed for random corpora");
    auto* max_n_opt = app.add_option("--max-n", max_n, "Cap on n for 2^n subset sums")->check(CLI::PositiveNumber);
    auto* max_words_opt =
        app.add_option("--max-words", max_words, "Cap on q^k for codeword enumeration")->check(CLI::PositiveNumber);
    auto* degree_opt = app.add_option("--degree", degree, "Harmonic degree when no function file is given");

    std::string matrix, fpath, identity;
    std::size_t n = 0, t = 0, instances = 200;
    std::size_t basis_d = 0;

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of the vector matroid");
    tutte_cmd->add_option("matrix", matrix, "Generator matrix file")->required()->check(CLI::ExistingFile);

    auto add_matrix_f = [&](CLI::App* sub) {
        sub->add_option("matrix", matrix, "Generator matrix file")->required()->check(CLI::ExistingFile);
        sub->add_option("f", fpath, "Harmonic function file (default: the Harm_d basis)")->check(CLI::ExistingFile);
    };
    auto* htutte_cmd = app.add_subcommand("harmonic-tutte", "Harmonic Tutte polynomial T(M,f)");
    add_matrix_f(htutte_cmd);
    auto* wenum_cmd = app.add_subcommand("weight-enum", "Weight enumerator W_C");
    wenum_cmd->add_option("matrix", matrix, "Generator matrix file")->required()->check(CLI::ExistingFile);
    auto* hwenum_cmd = app.add_subcommand("harmonic-weight-enum", "Harmonic weight enumerator W_{C,f}");
    add_matrix_f(hwenum_cmd);
    auto* zeta_cmd = app.add_subcommand("zeta", "Z_{C,f} = W_{C,f} / (xy)^d");
    add_matrix_f(zeta_cmd);
    auto* basis_cmd = app.add_subcommand("harm-basis", "Canonical basis of Harm_d on n points");
    basis_cmd->add_option("n", n, "Ground set size")->required();
    auto* basis_d_opt = basis_cmd->add_option("d", basis_d, "Degree (default: every degree up to n/2)");
    auto* dual_cmd = app.add_subcommand("dual", "Generator matrix of the dual code");
    dual_cmd->add_option("matrix", matrix, "Generator matrix file")->required()->check(CLI::ExistingFile);
    auto* btable_cmd = app.add_subcommand("b-table", "Table of B_{t,f}");
    add_matrix_f(btable_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "Check an identity on one code");
    verify_cmd->add_option("identity", identity, "duality|greene|macwilliams|btf|reinterpretation|lemma-slices|all")
        ->required()
        ->check(CLI::IsMember({"duality", "greene", "macwilliams", "btf", "reinterpretation", "lemma-slices", "all"}));
    add_matrix_f(verify_cmd);
    auto* design_cmd = app.add_subcommand("design-check", "Test whether each weight class is a t-design");
    design_cmd->add_option("matrix", matrix, "Generator matrix file")->required()->check(CLI::ExistingFile);
    design_cmd->add_option("t", t, "Design strength")->required();
    auto* selftest_cmd = app.add_subcommand("selftest", "Run every identity on seeded random corpora");
    selftest_cmd->add_option("--instances", instances, "Instances per corpus")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfg.format = format == "json-lines" ? Format::json_lines : Format::human;
    if (*max_n_opt) cfg.limits.max_ground = max_n;
    if (*max_words_opt) cfg.limits.max_words = max_words;
    if (*degree_opt) cfg.degree = degree;

    try {
        if (tutte_cmd->parsed()) return cmd_tutte(cfg, matrix);
        if (htutte_cmd->parsed()) return cmd_harmonic_tutte(cfg, matrix, fpath);
        if (wenum_cmd->parsed()) return cmd_weight_enum(cfg, matrix);
        if (hwenum_cmd->parsed()) return cmd_harmonic_weight_enum(cfg, matrix, fpath);
        if (zeta_cmd->parsed()) return cmd_zeta(cfg, matrix, fpath);
        if (basis_cmd->parsed())
            return cmd_harm_basis(cfg, n, *basis_d_opt ? std::optional<std::size_t>(basis_d) : std::nullopt);
        if (dual_cmd->parsed()) return cmd_dual(cfg, matrix);
        if (btable_cmd->parsed()) return cmd_b_table(cfg, matrix, fpath);
        if (verify_cmd->parsed()) return cmd_verify(cfg, identity, matrix, fpath);
        if (design_cmd->parsed()) return cmd_design_check(cfg, matrix, t);
        if (selftest_cmd->parsed()) return cmd_selftest(cfg, instances);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
