#pragma once

// Small named codes and functions shared across test suites.

#include "harmtutte/harmonic.hpp"
#include "harmtutte/linalg.hpp"

namespace harmtutte::fixtures {

inline const PrimeField F2{2};

/// [7,4] Hamming code, standard form [I4 | P].
inline FieldMatrix hamming74()
{
    return FieldMatrix::from_rows(F2, 7, {{1, 0, 0, 0, 0, 1, 1},
                                          {0, 1, 0, 0, 1, 0, 1},
                                          {0, 0, 1, 0, 1, 1, 0},
                                          {0, 0, 0, 1, 1, 1, 1}});
}

/// [8,4,4] extended Hamming code, [I4 | P].
inline FieldMatrix extended_hamming84()
{
    return FieldMatrix::from_rows(F2, 8, {{1, 0, 0, 0, 0, 1, 1, 1},
                                          {0, 1, 0, 0, 1, 0, 1, 1},
                                          {0, 0, 1, 0, 1, 1, 0, 1},
                                          {0, 0, 0, 1, 1, 1, 1, 0}});
}

/// G = [1 1 0], the code {000, 110}.
inline FieldMatrix g110() { return FieldMatrix::from_rows(F2, 3, {{1, 1, 0}}); }

/// G = [1 1], the repetition code {00, 11}.
inline FieldMatrix g11() { return FieldMatrix::from_rows(F2, 2, {{1, 1}}); }

inline FieldMatrix identity2() { return FieldMatrix::identity(F2, 2); }

/// Degree-1 function on n points with value +1 at a and -1 at b.
inline HarmonicFunction dipole(std::size_t n, std::size_t a, std::size_t b)
{
    SetFunction f(n, 1);
    f.set(SubsetMask{1} << (a - 1), 1);
    f.set(SubsetMask{1} << (b - 1), -1);
    return HarmonicFunction(std::move(f));
}

inline SubsetMask set_of(std::initializer_list<std::size_t> elems)
{
    SubsetMask m = 0;
    for (const auto e : elems) m |= SubsetMask{1} << (e - 1);
    return m;
}

} // namespace harmtutte::fixtures
