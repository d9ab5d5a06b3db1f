// Walks through the Greene identity on a small code: the harmonic Tutte
// polynomial, the term-by-term expansion of its substitution, and the
// harmonic weight enumerator it reproduces.
//
// Usage: greene_walkthrough [matrix-file [harmonic-function.json]]
// Without arguments it uses G = [1 1 0] over F_2 and f = {1} - {3}.

#include "harmtutte/verify.hpp"

#include <iostream>

using namespace harmtutte;

int main(int argc, char** argv)
{
    try {
        const FieldMatrix g = argc > 1 ? load_field_matrix(argv[1])
                                       : FieldMatrix::from_rows(PrimeField(2), 3, {{1, 1, 0}});
        const LinearCode c(g);
        const std::size_t n = c.length();
        HarmonicFunction f = [&] {
            if (argc > 2) return load_harmonic_function(argv[2]);
            SetFunction s(n, 1);
            s.set(SubsetMask{1}, 1);
            s.set(SubsetMask{1} << (n - 1), -1);
            return HarmonicFunction(s);
        }();
        const std::size_t k = c.dimension(), d = f.degree();

        std::cout << "code: q = " << c.q() << ", n = " << n << ", k = " << k << '\n';
        std::cout << "f = " << to_string(f.function()) << " (degree " << d << ")\n\n";

        std::cout << "subsets J with f~(J) != 0:\n";
        const auto ranks = subset_rank_table(c.generator());
        const auto tilde_values = tilde_table(f.function());
        for (SubsetMask j = 0; j < ranks.size(); ++j) {
            if (tilde_values[j] == 0) continue;
            const auto t = static_cast<std::size_t>(popcount(j));
            std::cout << "  J = " << to_string(KSubset::from_mask(j)) << "  f~ = " << to_string(tilde_values[j])
                      << "  rank = " << int(ranks[j]);
            if (t >= d && t + d <= n) {
                const Rational weight = tilde_values[j] * power(Rational(c.q()), static_cast<unsigned>(k - ranks[j]));
                std::cout << "  term = " << to_string(expand_shifted_term(weight, static_cast<unsigned>(t - d),
                                                                          static_cast<unsigned>(n - t - d)));
            }
            std::cout << '\n';
        }

        const auto t = harmonic_tutte(c.matroid(), f);
        std::cout << "\nT(M,f)          = " << to_string(t) << '\n';
        std::cout << "Tutte side      = " << to_string(greene_rhs(c, f)) << "   (sum of terms, times (-1)^d)\n";
        std::cout << "W_{C,f}         = " << to_string(harmonic_weight_enumerator(c, f)) << '\n';
        std::cout << "Z_{C,f}         = " << to_string(zeta(c, f)) << '\n';
        const auto b = b_table(c, f);
        std::cout << "B_{t,f}         =";
        for (const auto& v : b) std::cout << ' ' << to_string(v);
        std::cout << '\n';
        std::cout << "Z from B table  = " << to_string(zeta_from_b(c, f)) << '\n';
        const auto report = verify_greene(c, f);
        std::cout << "\nGreene identity: " << (report.equal ? "holds" : "FAILS") << '\n';
        return report.equal ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
