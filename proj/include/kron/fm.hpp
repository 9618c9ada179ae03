#pragma once

#include <cstddef>
#include <vector>

#include "kron/bigint.hpp"

namespace kron {

/// sum_i a[i] x_i + c >= 0
struct LinIneq {
    std::vector<BigInt> a;
    BigInt c;
};

/// sum_i a[i] x_i + c == 0
struct LinEq {
    std::vector<BigInt> a;
    BigInt c;
};

struct FmLimits {
    std::size_t max_rows = 200000;
};

/// Decides nonemptiness over Q by exact Fourier-Motzkin elimination
/// (equalities are used for substitution first). Throws
/// ResourceGuardError when the row count exceeds limits.max_rows.
bool rational_polyhedron_feasible(std::vector<LinIneq> ineqs, std::vector<LinEq> eqs,
                                  std::size_t nvars, const FmLimits& limits = {});

/// Same decision by exact rational phase-1 simplex (Bland's rule, mpq
/// arithmetic). No row blowup; used as the fallback when elimination
/// trips its guard, and as an independent cross-check in tests.
bool rational_polyhedron_feasible_lp(const std::vector<LinIneq>& ineqs,
                                     const std::vector<LinEq>& eqs, std::size_t nvars);

}  // namespace kron
