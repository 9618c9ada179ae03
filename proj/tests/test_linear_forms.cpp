#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kron/linear_forms.hpp"

using namespace kron;

namespace {

Partition zero_partition(int len) { return Partition({}, static_cast<std::size_t>(len)); }

Partition random_partition(std::mt19937& rng, int len, int max_part) {
    std::vector<long long> parts(static_cast<std::size_t>(len));
    std::uniform_int_distribution<int> d(0, max_part);
    for (auto& p : parts) p = d(rng);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts), static_cast<std::size_t>(len));
}

}  // namespace

TEST_CASE("alpha and beta at (2,3)") {
    // closed forms evaluated by hand: alpha_0 = 5, alpha_1 = 10, beta_1 = 12
    CHECK(alpha_beta(2, 3) == std::vector<long long>{5, 10, 12});
}

TEST_CASE("alpha,beta pinned by constant-term cancellation") {
    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= 5; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const DegreeTable dt = build_degree_table(m, n);
            const auto ab = alpha_beta(m, n);
            const auto lconst =
                ls_lt(zero_partition(m * n), Permutation::identity(m * n), dt);
            for (int k = 0; k < m + n - 2; ++k)
                CHECK(ab[k] == lconst[k] - rs_rt_form(m, n, k).constant);
        }
}

TEST_CASE("b(.;Id) has zero constant term") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n)
            for (int k = 0; k < m + n - 2; ++k) CHECK(b_form_id(m, n, k).constant == 0);
}

TEST_CASE("r_s, r_t worked example at (2,3)") {
    PartitionTriple t(Partition::parse("", 6), Partition::parse("12,3", 2),
                      Partition::parse("5,4,3", 3), 2, 3);
    CHECK(rs_rt_form(2, 3, 0).eval(t) == 8);   // |nu| - nu_1 + 1
    CHECK(rs_rt_form(2, 3, 1).eval(t) == 11);  // mu_2 + |nu| - nu_1 + 1
    CHECK(rs_rt_form(2, 3, 2).eval(t) == 14);  // mu_2 + nu_2 + 2 nu_3 + 1
}

TEST_CASE("r_s with zero partitions reduces to the binomial constants") {
    PartitionTriple t(zero_partition(6), zero_partition(2), zero_partition(3), 2, 3);
    CHECK(rs_rt_form(2, 3, 0).eval(t) == 1);  // C(n-1,2) = 1
}

TEST_CASE("degree-table route matches the explicit sums") {
    std::mt19937 rng(20240811);
    for (auto [m, n] : {std::pair{2, 3}, {2, 4}, {3, 3}, {2, 2}}) {
        const DegreeTable dt = build_degree_table(m, n);
        const int mn = m * n;
        // exhaustive over S_4 / S_6, random sigma for mn = 8, 9
        if (mn <= 6) {
            Permutation sigma = Permutation::identity(mn);
            do {
                Partition lam = random_partition(rng, mn, 9);
                CHECK(ls_lt(lam, sigma, dt) == ls_lt_explicit(lam, sigma, m, n));
            } while (sigma.next());
        } else {
            std::uniform_int_distribution<std::uint64_t> pick(0, factorial_u64(mn) - 1);
            for (int trial = 0; trial < 200; ++trial) {
                Permutation sigma = Permutation::nth(mn, pick(rng));
                Partition lam = random_partition(rng, mn, 20);
                CHECK(ls_lt(lam, sigma, dt) == ls_lt_explicit(lam, sigma, m, n));
            }
        }
    }
}

TEST_CASE("vpf_input worked example at (2,3)") {
    // sizes intentionally differ (15/15/12); the forms are still defined
    PartitionTriple t(Partition::parse("6,4,4,1", 6), Partition::parse("12,3", 2),
                      Partition::parse("5,4,3", 3), 2, 3);
    const DegreeTable dt = build_degree_table(2, 3);
    VpfInput in = vpf_input(t, Permutation::identity(6), dt);
    CHECK(in.coords == std::vector<long long>{2, 1, 3});
    CHECK(in.sign == 1);
}

TEST_CASE("atomic b coordinates match the printed (2,3) formulas") {
    std::mt19937 rng(7);
    const DegreeTable dt = build_degree_table(2, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Partition lam = random_partition(rng, 6, 12);
        Partition mu = random_partition(rng, 2, 30);
        Partition nu = random_partition(rng, 3, 20);
        PartitionTriple t(lam, mu, nu, 2, 3);
        auto L = [&](int i) { return lam.part(i); };
        const long long b1 = nu.part(2) + nu.part(3) - L(3) - L(4) - L(5) - L(6);
        const long long b2 = mu.part(2) + nu.part(2) + nu.part(3) - L(2) - L(3) - L(4) -
                             2 * L(5) - 2 * L(6);
        const long long b3 = mu.part(2) + nu.part(2) + 2 * nu.part(3) - L(2) - L(3) - 2 * L(4) -
                             2 * L(5) - 3 * L(6);
        VpfInput in = vpf_input(t, Permutation::identity(6), dt);
        CHECK(in.coords == std::vector<long long>{b1, b2, b3});
    }
}

TEST_CASE("atomic b coordinates match the printed (2,4) formulas") {
    std::mt19937 rng(8);
    const DegreeTable dt = build_degree_table(2, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Partition lam = random_partition(rng, 8, 12);
        Partition mu = random_partition(rng, 2, 40);
        Partition nu = random_partition(rng, 4, 20);
        PartitionTriple t(lam, mu, nu, 2, 4);
        auto L = [&](int i) { return lam.part(i); };
        auto Nu = [&](int j) { return nu.part(j); };
        const long long b1 =
            Nu(2) + Nu(3) + Nu(4) - L(3) - L(4) - L(5) - L(6) - L(7) - L(8);
        const long long b2 = mu.part(2) + Nu(2) + Nu(3) + Nu(4) - L(2) - L(3) - L(4) - L(5) -
                             2 * L(6) - 2 * L(7) - 2 * L(8);
        const long long b3 = mu.part(2) + Nu(2) + 2 * Nu(3) + 2 * Nu(4) - L(2) - L(3) -
                             2 * L(4) - 2 * L(5) - 2 * L(6) - 3 * L(7) - 3 * L(8);
        const long long b4 = mu.part(2) + Nu(2) + Nu(3) + 2 * Nu(4) - L(2) - L(3) - L(4) -
                             2 * L(5) - 2 * L(6) - 2 * L(7) - 3 * L(8);
        VpfInput in = vpf_input(t, Permutation::identity(8), dt);
        CHECK(in.coords == std::vector<long long>{b1, b2, b3, b4});
    }
}

TEST_CASE("identity minimality via prefix sums") {
    // (l_s,l_t)(sigma) dominates (l_s,l_t)(Id) over all partitions iff
    // every coordinate's coefficient difference has nonnegative prefix sums
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
        const DegreeTable dt = build_degree_table(m, n);
        const int mn = m * n;
        Permutation sigma = Permutation::identity(mn);
        do {
            const Permutation inv = sigma.inverse();
            for (int k = 0; k < m + n - 2; ++k) {
                std::vector<long long> diff(static_cast<std::size_t>(mn));
                for (int i = 1; i <= mn; ++i)
                    diff[i - 1] = dt.rows[inv.image(i) - 1][k] - dt.rows[i - 1][k];
                CHECK(prefix_sums_nonnegative(diff));
            }
        } while (sigma.next());
    }
}

TEST_CASE("prefix-sum criterion agrees with explicit quantification on small cases") {
    // oracle: enumerate all weakly decreasing lambda with parts <= 3
    auto form_nonneg_brute = [](const std::vector<long long>& c) {
        std::vector<long long> lam(c.size(), 0);
        auto rec = [&](auto&& self, std::size_t i, long long maxv) -> bool {
            if (i == c.size()) {
                long long s = 0;
                for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * lam[j];
                return s >= 0;
            }
            for (long long v = 0; v <= maxv; ++v) {
                lam[i] = v;
                if (!self(self, i + 1, v)) return false;
            }
            return true;
        };
        return rec(rec, 0, 3);
    };
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<long long> c(4);
        for (auto& v : c) v = d(rng);
        CHECK(prefix_sums_nonnegative(c) == form_nonneg_brute(c));
    }
}
