#include "kron/bounds.hpp"

#include <algorithm>

#include "kron/engine.hpp"
#include "kron/errors.hpp"
#include "kron/linear_forms.hpp"
#include "kron/substitution.hpp"

namespace kron {

namespace {

long long binom2(long long a) { return a >= 2 ? a * (a - 1) / 2 : 0; }

long long c1_of(int m, int n) { return (static_cast<long long>(m) * m - 1) * (n - 1) - 1; }
long long c2_of(int m, int n) {
    return static_cast<long long>(m - 1) * (n - 1) * (n - 1) - 1;
}
long long c3_of(int m, int n) { return binom2(m - 1) * (n - 1) + (m - 1) - 1; }
long long f1_of(int n, int i) { return 2 * binom2(n - 1) * (i - 2) - 1; }
long long f2_of(int m, int n, int j) {
    return static_cast<long long>(n - j - 1) * (m - 1) - 1;
}

// C(b + c, b), i.e. b balls into c+1 boxes; c = -1 means zero boxes.
BigInt stars_bars(long long b, long long c) {
    if (c < 0) return b == 0 ? 1 : 0;
    return big_binomial(to_big(b + c), static_cast<unsigned long>(c));
}

std::vector<long long> b_id_coords(const PartitionTriple& t) {
    std::vector<long long> b(static_cast<std::size_t>(t.m + t.n - 2));
    for (int k = 0; k < t.m + t.n - 2; ++k)
        b[static_cast<std::size_t>(k)] = b_form_id(t.m, t.n, k).eval(t);
    return b;
}

BigInt binomial_bound_at(const std::vector<long long>& b, int m, int n) {
    for (long long v : b)
        if (v < 0) return 0;
    BigInt out = stars_bars(b[0], c1_of(m, n));
    out *= stars_bars(b[1], c2_of(m, n));
    out *= stars_bars(b[static_cast<std::size_t>(m + n - 3)], c3_of(m, n));
    for (int i = 3; i <= m; ++i) out *= stars_bars(b[static_cast<std::size_t>(i - 1)], f1_of(n, i));
    for (int j = 1; j <= n - 3; ++j)
        out *= stars_bars(b[static_cast<std::size_t>(m + j - 1)], f2_of(m, n, j));
    return out;
}

BigInt half_factorial(int mn) { return big_factorial(static_cast<unsigned long>(mn)) / 2; }

}  // namespace

BigInt atomic_binomial_bound(const PartitionTriple& t) {
    if (t.m < 2 || t.n < 2) throw UnsupportedShapeError("binomial bound needs m, n >= 2");
    return binomial_bound_at(b_id_coords(t), t.m, t.n);
}

BigInt kron_factorial_bound(const PartitionTriple& t) {
    return half_factorial(t.m * t.n) * atomic_binomial_bound(t);
}

BigInt kron_factorial_bound_atomic(const PartitionTriple& t, KronEngine& engine) {
    if (t.m < 2 || t.n < 2) throw UnsupportedShapeError("factorial bound needs m, n >= 2");
    return half_factorial(t.m * t.n) * engine.atomic(t);
}

BigInt atomic_n_only_bound(const PartitionTriple& t) {
    if (t.m < 2 || t.n < 2) throw UnsupportedShapeError("n-only bound needs m, n >= 2");
    t.require_equal_sizes();
    const BigInt N = t.lambda.size();
    if (!N.fits_slong_p()) throw TooLargeError("partition size too large");
    const long long Nl = N.get_si();
    std::vector<long long> b(static_cast<std::size_t>(t.m + t.n - 2));
    b[0] = Nl;
    for (int i = 2; i <= t.m; ++i) b[static_cast<std::size_t>(i - 1)] = 2 * Nl;
    for (int j = 1; j <= t.n - 2; ++j)
        b[static_cast<std::size_t>(t.m + j - 1)] = (2 * t.m - 1) * Nl;
    return binomial_bound_at(b, t.m, t.n);
}

BigInt n_only_bound(const PartitionTriple& t) {
    return half_factorial(t.m * t.n) * atomic_n_only_bound(t);
}

PakPanovaBounds pak_panova_bounds(const PartitionTriple& t, int l, int m, int n) {
    PakPanovaBounds out;
    const long long mn = static_cast<long long>(m) * n;

    out.bound1 = 1;
    for (int i = 1; i <= l; ++i) {
        const long long k = mn - i;
        if (k < 0) {
            out.bound1 = 0;
            break;
        }
        const long long li =
            i <= static_cast<int>(t.lambda.length()) ? t.lambda.part(static_cast<std::size_t>(i)) : 0;
        out.bound1 *= big_binomial(to_big(li - i + mn), static_cast<unsigned long>(k));
    }

    t.require_equal_sizes();
    const BigInt N = t.lambda.size();
    const long long lmn = static_cast<long long>(l) * m * n;
    if (N == 0) {
        out.bound2 = 1;
    } else {
        if (!N.fits_ulong_p()) throw TooLargeError("partition size too large");
        // (1 + lmn/N)^N (1 + N/lmn)^{lmn} = (N+lmn)^{N+lmn} / (N^N lmn^{lmn}),
        // evaluated exactly and rounded up.
        const unsigned long Nu = N.get_ui();
        const BigInt num = big_pow(N + to_big(lmn), Nu + static_cast<unsigned long>(lmn));
        const BigInt den = big_pow(N, Nu) * big_pow(to_big(lmn), static_cast<unsigned long>(lmn));
        out.bound2 = ceil_div(num, den);
    }

    out.hook_bound =
        std::min({hook_dimension(t.lambda), hook_dimension(t.mu), hook_dimension(t.nu)});
    return out;
}

BoundReport compare_bounds(const PartitionTriple& t, KronEngine* engine) {
    BoundReport rep;
    rep.entries.push_back({"factorial_x_binomial", kron_factorial_bound(t)});
    if (engine)
        rep.entries.push_back({"factorial_x_atomic", kron_factorial_bound_atomic(t, *engine)});
    rep.entries.push_back({"n_only", n_only_bound(t)});
    const PakPanovaBounds pp = pak_panova_bounds(t, t.m * t.n, t.m, t.n);
    rep.entries.push_back({"pak_panova_1", pp.bound1});
    rep.entries.push_back({"pak_panova_2", pp.bound2});
    rep.entries.push_back({"hook_length", pp.hook_bound});
    const BoundEntry* best = nullptr;
    for (const auto& e : rep.entries)
        if (!best || e.value < best->value) best = &e;
    rep.best = best->source;
    return rep;
}

ReplacementAccounting replacement_accounting(int m, int n, bool strict) {
    if (m < 2 || n < 2) throw UnsupportedShapeError("accounting needs m, n >= 2");
    const VpfMatrix A = build_matrix(m, n);
    const int vars = m + n - 2;

    ReplacementAccounting acc;
    acc.m = m;
    acc.n = n;
    acc.tally.assign(static_cast<std::size_t>(vars), 0);
    acc.closed_form.assign(static_cast<std::size_t>(vars), 0);

    for (int c = 0; c < A.cols(); ++c) {
        const ColumnProvenance& p = A.provenance[static_cast<std::size_t>(c)];
        int target = 0;  // 1-based basis index
        switch (p.family) {
            case BinomialFamily::A:
            case BinomialFamily::B:
            case BinomialFamily::C2:
            case BinomialFamily::D1: target = 1; break;
            case BinomialFamily::C1:
            case BinomialFamily::D2: target = 2; break;
            case BinomialFamily::E: target = p.index[2] + 1; break;  // e_{k+1}
            case BinomialFamily::F1: target = vars; break;           // e_{m+n-2}
            case BinomialFamily::F2: target = m + p.index[1]; break; // e_{m+j}
        }
        // legality per the column-replacement lemma: positive entry at the target
        const auto& col = A.columns[static_cast<std::size_t>(c)];
        if (col[static_cast<std::size_t>(target - 1)] <= 0) {
            if (p.family == BinomialFamily::F1 && n == 2) {
                target = p.index[2] + 1;  // degenerate shape: largest s present
                acc.note = "F1 fallback replacements used at n = 2";
            }
            if (col[static_cast<std::size_t>(target - 1)] <= 0)
                throw AccountingMismatchError("illegal replacement target e_" +
                                              std::to_string(target));
        }
        ++acc.tally[static_cast<std::size_t>(target - 1)];
    }

    acc.closed_form[0] += c1_of(m, n) + 1;
    acc.closed_form[1] += c2_of(m, n) + 1;
    acc.closed_form[static_cast<std::size_t>(vars - 1)] += c3_of(m, n) + 1;
    for (int i = 3; i <= m; ++i) acc.closed_form[static_cast<std::size_t>(i - 1)] += f1_of(n, i) + 1;
    for (int j = 1; j <= n - 3; ++j)
        acc.closed_form[static_cast<std::size_t>(m + j - 1)] += f2_of(m, n, j) + 1;

    long long total = 0;
    for (long long v : acc.tally) total += v;
    if (total != A.cols()) throw Error("accounting tally does not cover all columns");

    acc.matches_closed_forms = acc.tally == acc.closed_form;
    if (!acc.matches_closed_forms && acc.note.empty())
        acc.note = "walk tally differs from the closed forms (degenerate shape)";
    if (strict && !acc.matches_closed_forms)
        throw AccountingMismatchError("tallies disagree with closed forms at (" +
                                      std::to_string(m) + "," + std::to_string(n) + ")");
    return acc;
}

}  // namespace kron
