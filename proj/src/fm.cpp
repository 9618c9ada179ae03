#include "kron/fm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "kron/errors.hpp"

namespace kron {

namespace {

// divide a row by the gcd of all coefficients and the constant
void normalize(std::vector<BigInt>& a, BigInt& c) {
    BigInt g = abs(c);
    for (const BigInt& v : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (BigInt& v : a) v /= g;
    c /= g;
}

bool all_zero(const std::vector<BigInt>& a) {
    return std::all_of(a.begin(), a.end(), [](const BigInt& v) { return v == 0; });
}

struct Row {
    std::vector<BigInt> a;
    BigInt c;
    std::uint64_t ancestors = 0;  // original-row mask for Chernikov's rule
};

}  // namespace

bool rational_polyhedron_feasible(std::vector<LinIneq> ineqs, std::vector<LinEq> eqs,
                                  std::size_t nvars, const FmLimits& limits) {
    // substitution pass: each equality removes one variable
    std::vector<bool> eliminated(nvars, false);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        LinEq& eq = eqs[e];
        normalize(eq.a, eq.c);
        std::size_t pivot = nvars;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (eliminated[v] || eq.a[v] == 0) continue;
            if (pivot == nvars || abs(eq.a[v]) < abs(eq.a[pivot])) pivot = v;
        }
        if (pivot == nvars) {
            if (eq.c != 0) return false;  // 0 == nonzero
            continue;
        }
        const BigInt p = eq.a[pivot];
        auto substitute = [&](std::vector<BigInt>& a, BigInt& c) {
            if (a[pivot] == 0) return;
            const BigInt r = a[pivot];
            const BigInt mul_row = abs(p);
            const BigInt mul_eq = (p > 0) ? r : -r;
            for (std::size_t v = 0; v < nvars; ++v) a[v] = mul_row * a[v] - mul_eq * eq.a[v];
            c = mul_row * c - mul_eq * eq.c;
            normalize(a, c);
        };
        for (auto& row : ineqs) substitute(row.a, row.c);
        for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) substitute(eqs[e2].a, eqs[e2].c);
        eliminated[pivot] = true;
    }

    std::vector<Row> rows;
    rows.reserve(ineqs.size());
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        const std::uint64_t mask = i < 64 ? (1ull << i) : 0;
        rows.push_back({std::move(ineqs[i].a), std::move(ineqs[i].c), mask});
    }

    // cleanup: normalize, drop weaker duplicates (same coefficients, larger
    // constant), detect constant-row contradictions
    auto cleanup = [&](std::vector<Row>& rs) -> bool {
        std::map<std::vector<BigInt>, std::size_t> strongest;
        std::vector<Row> kept;
        kept.reserve(rs.size());
        for (auto& r : rs) {
            normalize(r.a, r.c);
            if (all_zero(r.a)) {
                if (r.c < 0) return false;  // contradiction
                continue;                    // trivially true
            }
            auto [it, fresh] = strongest.try_emplace(r.a, kept.size());
            if (fresh) {
                kept.push_back(std::move(r));
            } else if (r.c < kept[it->second].c) {
                kept[it->second] = std::move(r);  // smaller constant is the tighter row
            }
        }
        rs = std::move(kept);
        return true;
    };
    if (!cleanup(rows)) return false;

    for (;;) {
        std::size_t best = nvars;
        std::size_t best_cost = 0;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (eliminated[v]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.a[v] > 0) ++pos;
                else if (r.a[v] < 0) ++neg;
            }
            const std::size_t cost = pos * neg;
            if (best == nvars || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        if (best == nvars) break;
        const std::size_t v = best;

        std::vector<Row> next;
        std::vector<const Row*> pos, neg;
        for (const auto& r : rows) {
            if (r.a[v] > 0) pos.push_back(&r);
            else if (r.a[v] < 0) neg.push_back(&r);
            else next.push_back(r);
        }
        for (const Row* p : pos)
            for (const Row* nrow : neg) {
                Row combo;
                combo.ancestors = p->ancestors | nrow->ancestors;
                combo.a.resize(nvars);
                const BigInt alpha = p->a[v];     // > 0
                const BigInt beta = -nrow->a[v];  // > 0
                for (std::size_t k = 0; k < nvars; ++k)
                    combo.a[k] = alpha * nrow->a[k] + beta * p->a[k];
                combo.c = alpha * nrow->c + beta * p->c;
                next.push_back(std::move(combo));
                if (next.size() > limits.max_rows)
                    throw ResourceGuardError("Fourier-Motzkin row limit exceeded");
            }
        eliminated[v] = true;
        rows = std::move(next);
        if (!cleanup(rows)) return false;
    }
    return true;  // no contradiction anywhere
}


bool rational_polyhedron_feasible_lp(const std::vector<LinIneq>& ineqs,
                                     const std::vector<LinEq>& eqs, std::size_t nvars) {
    // rows: equalities as-is, inequalities a.x + c >= 0 as a.x - s = -c.
    // free x split as u - w; basis starts on artificials; min sum(z).
    const std::size_t n_ineq = ineqs.size();
    const std::size_t m = n_ineq + eqs.size();
    const std::size_t n_struct = 2 * nvars + n_ineq;  // u, w, surplus
    const std::size_t cols = n_struct + m;            // + artificials

    std::vector<std::vector<BigRat>> T(m, std::vector<BigRat>(cols + 1, 0));
    auto load_row = [&](std::size_t i, const std::vector<BigInt>& a, const BigInt& c,
                        bool with_surplus) {
        for (std::size_t j = 0; j < nvars; ++j) {
            T[i][j] = a[j];
            T[i][nvars + j] = -a[j];
        }
        if (with_surplus) T[i][2 * nvars + i] = -1;
        T[i][cols] = -c;  // rhs
    };
    for (std::size_t i = 0; i < n_ineq; ++i) load_row(i, ineqs[i].a, ineqs[i].c, true);
    for (std::size_t e = 0; e < eqs.size(); ++e)
        load_row(n_ineq + e, eqs[e].a, eqs[e].c, false);

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (T[i][cols] < 0)
            for (auto& v : T[i]) v = -v;
        T[i][n_struct + i] = 1;
        basis[i] = n_struct + i;
    }

    // reduced-cost row for min sum of artificials: r = c - sum over basis rows
    std::vector<BigRat> red(cols + 1, 0);
    for (std::size_t j = n_struct; j < cols; ++j) red[j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= cols; ++j) red[j] -= T[i][j];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)  // Bland: smallest improving index
            if (red[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        BigRat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            BigRat ratio = T[i][cols] / T[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) return false;  // unbounded phase-1 cannot happen; defensive
        const BigRat piv = T[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const BigRat f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        const BigRat fr = red[enter];
        if (fr != 0)
            for (std::size_t j = 0; j <= cols; ++j) red[j] -= fr * T[leave][j];
        basis[leave] = enter;
    }
    BigRat value = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n_struct) value += T[i][cols];
    return value == 0;
}

}  // namespace kron
