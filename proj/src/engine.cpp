#include "kron/engine.hpp"

#include <algorithm>
#include <thread>

#include "kron/errors.hpp"

namespace kron {

KronEngine::KronEngine(EngineOptions opts) : opts_(opts) {
    if (opts_.threads <= 0) {
        const unsigned hc = std::thread::hardware_concurrency();
        opts_.threads = hc ? static_cast<int>(hc) : 1;
    }
}

KronEngine::ShapeCache& KronEngine::shape(int m, int n) {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto& slot = cache_[{m, n}];
    if (!slot) {
        auto sc = std::make_unique<ShapeCache>();
        sc->matrix = build_matrix(m, n);
        sc->table = build_degree_table(m, n);
        sc->evaluator = std::make_unique<VpfEvaluator>(sc->matrix);
        sc->memo = std::make_unique<MemoTable>(matrix_hash(sc->matrix));
        sc->alpha_beta = alpha_beta(m, n);
        slot = std::move(sc);
    }
    return *slot;
}

const VpfMatrix& KronEngine::matrix(int m, int n) { return shape(m, n).matrix; }
const DegreeTable& KronEngine::degree_table(int m, int n) { return shape(m, n).table; }
MemoTable& KronEngine::memo(int m, int n) { return *shape(m, n).memo; }

namespace {

// b(sigma) for the fixed triple, written into `out`; returns false as
// soon as a coordinate goes negative. rs_alpha[k] = (r_s,r_t)_k + (alpha,beta)_k,
// weights[j] = lambda_j + mn - j, deg = degree table rows.
bool sigma_b(const std::vector<long long>& rs_alpha, const std::vector<long long>& weights,
             const DegreeTable& dt, const std::vector<int>& sigma_one_line,
             std::vector<long long>& out) {
    const int vars = dt.vars();
    const int mn = dt.num_z();
    for (int k = 0; k < vars; ++k) out[static_cast<std::size_t>(k)] = rs_alpha[static_cast<std::size_t>(k)];
    for (int p = 0; p < mn; ++p) {
        const long long w = weights[static_cast<std::size_t>(sigma_one_line[static_cast<std::size_t>(p)] - 1)];
        const auto& row = dt.rows[static_cast<std::size_t>(p)];
        for (int k = 0; k < vars; ++k)
            out[static_cast<std::size_t>(k)] -= w * row[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k < vars; ++k)
        if (out[static_cast<std::size_t>(k)] < 0) return false;
    return true;
}

int one_line_sign(const std::vector<int>& s) {
    int inv = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

KroneckerResult KronEngine::sum_over_sigma(const PartitionTriple& t, bool collect_terms) {
    const int m = t.m, n = t.n, mn = m * n;
    // the sigma loop accumulates in 64-bit; parts this large are far past
    // any computable range anyway
    if (t.lambda.part(1) > (1LL << 52) || t.mu.part(1) > (1LL << 52) ||
        t.nu.part(1) > (1LL << 52))
        throw TooLargeError("partition parts exceed the exact 64-bit range of the sigma loop");
    ShapeCache& sc = shape(m, n);

    std::vector<long long> rs_alpha(static_cast<std::size_t>(mn == 0 ? 0 : m + n - 2));
    for (int k = 0; k < m + n - 2; ++k)
        rs_alpha[static_cast<std::size_t>(k)] =
            rs_rt_form(m, n, k).eval(t) + sc.alpha_beta[static_cast<std::size_t>(k)];
    std::vector<long long> weights(static_cast<std::size_t>(mn));
    for (int j = 1; j <= mn; ++j)
        weights[static_cast<std::size_t>(j - 1)] = t.lambda.part(static_cast<std::size_t>(j)) + (mn - j);

    KroneckerResult res;
    res.g = 0;

    // b(Id) dominates b(sigma) componentwise, so a negative coordinate at
    // the identity kills every term at once.
    std::vector<long long> b_id(static_cast<std::size_t>(m + n - 2));
    const bool id_ok =
        sigma_b(rs_alpha, weights, sc.table, Permutation::identity(mn).one_line(), b_id);
    const std::uint64_t total = factorial_u64(mn);
    if (!id_ok && !collect_terms) {
        res.terms_skipped = total;
        return res;
    }

    // strategy: dense box over [0, b(Id)] when it fits, else memo recursion
    std::unique_ptr<BoxTable> box;
    if (id_ok) {
        std::size_t volume = 1;
        bool fits = true;
        for (long long c : b_id) {
            const auto dim = static_cast<std::size_t>(c) + 1;
            if (volume > opts_.box_cell_budget / dim + 1) {
                fits = false;
                break;
            }
            volume *= dim;
        }
        if (fits && volume <= opts_.box_cell_budget) {
            try {
                box = std::make_unique<BoxTable>(sc.matrix, b_id, opts_.box_cell_budget);
            } catch (const TooLargeError&) {
                box.reset();  // u64 overflow: fall back to exact memo path
            }
        }
    }

    const int nthreads = std::max(1, std::min<int>(opts_.threads, static_cast<int>(
                                                        std::min<std::uint64_t>(total, 64))));
    struct Partial {
        BigInt sum = 0;
        std::uint64_t evaluated = 0, skipped = 0, positive = 0;
        std::vector<TermReport> terms;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(nthreads));

    auto worker = [&](int w) {
        Partial& out = partials[static_cast<std::size_t>(w)];
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(nthreads);
        const std::uint64_t hi =
            total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(nthreads);
        if (lo >= hi) return;
        Permutation sigma = Permutation::nth(mn, lo);
        std::vector<long long> b(static_cast<std::size_t>(m + n - 2));
        for (std::uint64_t r = lo; r < hi; ++r, sigma.next()) {
            const std::vector<int>& s = sigma.one_line();
            const bool ok = sigma_b(rs_alpha, weights, sc.table, s, b);
            if (!ok) {
                ++out.skipped;
                if (collect_terms)
                    out.terms.push_back({sigma, one_line_sign(s), b, BigInt(0), true});
                continue;
            }
            const int sign = one_line_sign(s);
            BigInt count = box ? box->at(b) : sc.evaluator->eval(b, *sc.memo);
            ++out.evaluated;
            if (count > 0) ++out.positive;
            if (sign > 0)
                out.sum += count;
            else
                out.sum -= count;
            if (collect_terms) out.terms.push_back({sigma, sign, b, std::move(count), false});
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    for (auto& p : partials) {
        res.g += p.sum;
        res.terms_evaluated += p.evaluated;
        res.terms_skipped += p.skipped;
        res.terms_positive += p.positive;
        if (collect_terms)
            res.terms.insert(res.terms.end(), std::make_move_iterator(p.terms.begin()),
                             std::make_move_iterator(p.terms.end()));
    }
    if (res.g < 0)
        throw Error("signed sum came out negative; Kronecker coefficients are non-negative");
    return res;
}

KroneckerResult KronEngine::kronecker(const PartitionTriple& t, bool collect_terms) {
    t.require_equal_sizes();
    KroneckerResult res;
    if (t.m == 1 || t.n == 1) {
        // tensoring with the trivial representation
        const Partition& other = (t.m == 1) ? t.nu : t.mu;
        bool match = true;
        const std::size_t len = std::max(t.lambda.length(), other.length());
        for (std::size_t i = 1; i <= len; ++i) {
            const long long a = i <= t.lambda.length() ? t.lambda.part(i) : 0;
            const long long b = i <= other.length() ? other.part(i) : 0;
            if (a != b) match = false;
        }
        res.g = match ? 1 : 0;
        res.terms_evaluated = 1;
        return res;
    }
    if (t.m * t.n > opts_.max_mn)
        throw ResourceGuardError("(mn)! enumeration guard: mn = " + std::to_string(t.m * t.n));
    return sum_over_sigma(t, collect_terms);
}

BigInt KronEngine::atomic(const PartitionTriple& t) {
    t.require_equal_sizes();
    if (t.m == 1 || t.n == 1) return kronecker(t).g;
    ShapeCache& sc = shape(t.m, t.n);
    const Permutation id = Permutation::identity(t.m * t.n);
    const VpfInput in = vpf_input(t, id, sc.table);
    return sc.evaluator->eval(in.coords, *sc.memo);
}

std::uint64_t KronEngine::count_contributing_terms(const PartitionTriple& t) {
    t.require_equal_sizes();
    if (t.m == 1 || t.n == 1) return kronecker(t).g == 0 ? 0 : 1;
    if (t.m * t.n > opts_.max_mn)
        throw ResourceGuardError("(mn)! enumeration guard: mn = " + std::to_string(t.m * t.n));
    return sum_over_sigma(t, false).terms_positive;
}

std::vector<BigInt> KronEngine::stability_sequence(const PartitionTriple& base,
                                                   const PartitionTriple& direction, int k_max) {
    if (base.m != direction.m || base.n != direction.n)
        throw DimensionMismatchError("base and direction shapes differ");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        PartitionTriple t(add_scaled(base.lambda, direction.lambda, k),
                          add_scaled(base.mu, direction.mu, k),
                          add_scaled(base.nu, direction.nu, k), base.m, base.n);
        out.push_back(kronecker(t).g);
    }
    return out;
}

// ------------------------------------------------------- feasibility / poset

std::vector<Permutation> feasible_sigma_set(int m, int n, bool include_size_equality,
                                            const FmLimits& limits) {
    const int mn = m * n;
    if (mn > 8) throw ResourceGuardError("feasible_sigma_set guarded to mn <= 8");
    const DegreeTable dt = build_degree_table(m, n);
    const auto ab = alpha_beta(m, n);
    const int vars = m + n - 2;
    const std::size_t nv = static_cast<std::size_t>(mn + m + n);  // lambda, mu, nu parts

    // partition-cone rows shared by every sigma
    std::vector<LinIneq> base_rows;
    auto chain = [&](std::size_t offset, int len) {
        for (int i = 0; i < len; ++i) {
            LinIneq r;
            r.a.assign(nv, 0);
            r.c = 0;
            r.a[offset + static_cast<std::size_t>(i)] = 1;
            if (i + 1 < len) r.a[offset + static_cast<std::size_t>(i) + 1] = -1;
            base_rows.push_back(std::move(r));
        }
    };
    chain(0, mn);
    chain(static_cast<std::size_t>(mn), m);
    chain(static_cast<std::size_t>(mn + m), n);

    std::vector<LinEq> eqs;
    if (include_size_equality) {
        for (int which = 0; which < 2; ++which) {
            LinEq e;
            e.a.assign(nv, 0);
            e.c = 0;
            for (int i = 0; i < mn; ++i) e.a[static_cast<std::size_t>(i)] = 1;
            const std::size_t off = which == 0 ? static_cast<std::size_t>(mn)
                                               : static_cast<std::size_t>(mn + m);
            const int len = which == 0 ? m : n;
            for (int i = 0; i < len; ++i) e.a[off + static_cast<std::size_t>(i)] = -1;
            eqs.push_back(std::move(e));
        }
    }

    std::vector<LinearForm> rs(static_cast<std::size_t>(vars));
    for (int k = 0; k < vars; ++k) rs[static_cast<std::size_t>(k)] = rs_rt_form(m, n, k);

    auto decide = [&](const Permutation& sigma) {
        const Permutation inv = sigma.inverse();
        std::vector<LinIneq> rows = base_rows;
        for (int k = 0; k < vars; ++k) {
            LinIneq r;
            r.a.assign(nv, 0);
            const LinearForm& f = rs[static_cast<std::size_t>(k)];
            long long cst = f.constant + ab[static_cast<std::size_t>(k)];
            for (int i = 1; i <= mn; ++i) {
                const int d = dt.rows[static_cast<std::size_t>(inv.image(i) - 1)][static_cast<std::size_t>(k)];
                r.a[static_cast<std::size_t>(i - 1)] = -d;
                cst -= static_cast<long long>(mn - i) * d;
            }
            for (int i = 0; i < m; ++i)
                r.a[static_cast<std::size_t>(mn + i)] = to_big(f.coeff_mu[static_cast<std::size_t>(i)]);
            for (int j = 0; j < n; ++j)
                r.a[static_cast<std::size_t>(mn + m + j)] = to_big(f.coeff_nu[static_cast<std::size_t>(j)]);
            r.c = to_big(cst);
            rows.push_back(std::move(r));
        }
        try {
            return rational_polyhedron_feasible(rows, eqs, nv, limits);
        } catch (const ResourceGuardError&) {
            // elimination can blow up for a handful of sigma at mn = 8;
            // the exact simplex decides those without row growth
            return rational_polyhedron_feasible_lp(rows, eqs, nv);
        }
    };

    // independent per sigma; chunked over the lex order
    const std::uint64_t total = factorial_u64(mn);
    const unsigned hc = std::thread::hardware_concurrency();
    const int nthreads =
        static_cast<int>(std::min<std::uint64_t>(total, hc ? hc : 1));
    std::vector<std::vector<Permutation>> found(static_cast<std::size_t>(nthreads));
    auto worker = [&](int w) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(nthreads);
        const std::uint64_t hi =
            total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(nthreads);
        if (lo >= hi) return;
        Permutation sigma = Permutation::nth(mn, lo);
        for (std::uint64_t r = lo; r < hi; ++r, sigma.next())
            if (decide(sigma)) found[static_cast<std::size_t>(w)].push_back(sigma);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    std::vector<Permutation> feasible;
    for (auto& chunk : found)
        feasible.insert(feasible.end(), std::make_move_iterator(chunk.begin()),
                        std::make_move_iterator(chunk.end()));
    return feasible;
}

SigmaPoset build_sigma_poset(int m, int n,
                             const std::optional<std::vector<Permutation>>& restrict_to,
                             std::size_t max_elements) {
    const int mn = m * n;
    if (mn > 8) throw ResourceGuardError("build_sigma_poset guarded to mn <= 8");
    SigmaPoset poset;
    if (restrict_to) {
        poset.elements = *restrict_to;
    } else {
        Permutation sigma = Permutation::identity(mn);
        do poset.elements.push_back(sigma);
        while (sigma.next());
    }
    if (poset.elements.size() > max_elements)
        throw ResourceGuardError("poset element guard: " + std::to_string(poset.elements.size()));

    const DegreeTable dt = build_degree_table(m, n);
    const int vars = m + n - 2;

    // prefix matrices: P[j][k] = sum_{i<=j} deg_k(z_{sigma^{-1}(i)});
    // sigma_a <= sigma_b iff P_a >= P_b entrywise (prefix-sum criterion)
    auto prefix_matrix = [&](const Permutation& sigma) {
        const Permutation inv = sigma.inverse();
        std::vector<long long> pm(static_cast<std::size_t>(mn * vars), 0);
        std::vector<long long> run(static_cast<std::size_t>(vars), 0);
        for (int i = 1; i <= mn; ++i) {
            const auto& row = dt.rows[static_cast<std::size_t>(inv.image(i) - 1)];
            for (int k = 0; k < vars; ++k) {
                run[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k)];
                pm[static_cast<std::size_t>((i - 1) * vars + k)] = run[static_cast<std::size_t>(k)];
            }
        }
        return pm;
    };
    std::vector<std::vector<long long>> pms;
    pms.reserve(poset.elements.size());
    for (const auto& s : poset.elements) pms.push_back(prefix_matrix(s));

    const std::size_t count = poset.elements.size();
    poset.leq.assign(count, std::vector<std::uint8_t>(count, 0));
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            bool le = true;
            for (std::size_t q = 0; q < pms[a].size() && le; ++q)
                if (pms[a][q] < pms[b][q]) le = false;
            poset.leq[a][b] = le ? 1 : 0;
        }

    // covers between elements with distinct forms
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b || !poset.leq[a][b] || poset.leq[b][a]) continue;  // skip equal forms
            bool cover = true;
            for (std::size_t c = 0; c < count && cover; ++c) {
                if (c == a || c == b) continue;
                if (poset.leq[a][c] && !poset.leq[c][a] && poset.leq[c][b] && !poset.leq[b][c])
                    cover = false;
            }
            if (cover) poset.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return poset;
}

}  // namespace kron
