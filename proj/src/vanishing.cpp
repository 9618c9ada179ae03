#include "kron/vanishing.hpp"

#include "kron/errors.hpp"
#include "kron/linear_forms.hpp"

namespace kron {

VanishingReport check_vanishing(const PartitionTriple& t) {
    t.require_equal_sizes();
    const int m = t.m, n = t.n, mn = m * n;
    auto L = [&](int i) { return t.lambda.part(static_cast<std::size_t>(i)); };
    auto M = [&](int i) { return t.mu.part(static_cast<std::size_t>(i)); };
    auto Nu = [&](int j) { return t.nu.part(static_cast<std::size_t>(j)); };

    VanishingReport rep;

    {
        InequalityCheck c;
        c.label = "S";
        for (int k = 1; k <= m; ++k) c.lhs += L(k);
        c.rhs = Nu(1);
        rep.inequalities.push_back(c);
    }
    // a-family: rewritten form of b_{a+1} >= 0. The printed upper limit
    // m+(a+1)(n-1) only matches at m = 2; the sum runs to mn.
    for (int a = 1; a <= m - 1; ++a) {
        InequalityCheck c;
        c.label = "A" + std::to_string(a);
        for (int k = 1; k <= a; ++k) c.lhs += L(k);
        for (int k = m + a * (n - 1) + 1; k <= mn; ++k) c.lhs -= L(k);
        c.rhs = Nu(1);
        for (int k = a + 1; k <= m; ++k) c.rhs -= M(k);
        rep.inequalities.push_back(c);
    }
    for (int b = 1; b <= n - 2; ++b) {
        InequalityCheck c;
        c.label = "B" + std::to_string(b);
        c.lhs = static_cast<long long>(m) * L(1);
        for (int k = 2; k <= m; ++k) c.lhs += static_cast<long long>(m - k + 1) * L(k);
        for (int k = m + 1; k <= m + b; ++k) c.lhs += L(k);
        for (int i = 1; i <= m - 1; ++i) {
            for (int j = 1; j <= b; ++j)
                c.lhs -= static_cast<long long>(i - 1) * L(m + i * (n - 1) + j);
            for (int j = b + 1; j <= n - 1; ++j)
                c.lhs -= static_cast<long long>(i) * L(m + i * (n - 1) + j);
        }
        c.rhs = static_cast<long long>(m) * Nu(1);
        for (int k = 2; k <= b + 1; ++k) c.rhs += Nu(k);
        for (int k = 2; k <= m; ++k) c.rhs -= static_cast<long long>(k - 1) * M(k);
        rep.inequalities.push_back(c);
    }

    bool all_hold = true;
    for (const auto& c : rep.inequalities)
        if (!c.holds()) all_hold = false;
    rep.conclusion = all_hold ? VanishConclusion::MayBeNonzero : VanishConclusion::ForcedZero;

    // transcription-error defense: the b(Id)-coordinate route must agree
    const bool b_route_zero = check_atomic_vanishing(t);
    if (b_route_zero != rep.forced_zero())
        throw Error("vanishing formulations disagree (inequality rewrite bug)");
    return rep;
}

bool check_atomic_vanishing(const PartitionTriple& t) {
    if (t.m == 1 || t.n == 1) return false;  // no vpf coordinates; handled by the engine shortcut
    for (int k = 0; k < t.m + t.n - 2; ++k)
        if (b_form_id(t.m, t.n, k).eval(t) < 0) return true;
    return false;
}

bool ressayre_inequality_satisfied(const PartitionTriple& t, int e, int f, int j) {
    if (j < 2 || j > f + 1) throw Error("ressayre: j out of range");
    auto part_or_zero = [](const Partition& p, int i) {
        return i <= static_cast<int>(p.length()) ? p.part(static_cast<std::size_t>(i)) : 0LL;
    };
    const BigInt N = t.lambda.size();
    const BigInt lhs = N + to_big(t.lambda.part(1)) + to_big(part_or_zero(t.lambda, e + j));
    const BigInt rhs =
        to_big(t.mu.part(1)) + to_big(t.nu.part(1)) + to_big(part_or_zero(t.nu, j));
    return lhs <= rhs;
}

}  // namespace kron
