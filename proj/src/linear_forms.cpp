#include "kron/linear_forms.hpp"

#include <stdexcept>

#include "kron/errors.hpp"

namespace kron {

namespace {

long long binom2(long long a) { return a >= 2 ? a * (a - 1) / 2 : 0; }
long long binom3(long long a) { return a >= 3 ? a * (a - 1) * (a - 2) / 6 : 0; }

}  // namespace

long long LinearForm::eval(const PartitionTriple& t) const {
    __int128 acc = constant;
    for (std::size_t i = 0; i < coeff_lambda.size(); ++i)
        acc += static_cast<__int128>(coeff_lambda[i]) * t.lambda.part(i + 1);
    for (std::size_t i = 0; i < coeff_mu.size(); ++i)
        acc += static_cast<__int128>(coeff_mu[i]) * t.mu.part(i + 1);
    for (std::size_t i = 0; i < coeff_nu.size(); ++i)
        acc += static_cast<__int128>(coeff_nu[i]) * t.nu.part(i + 1);
    if (acc > static_cast<__int128>(9'223'372'036'854'775'807LL) ||
        acc < -static_cast<__int128>(9'223'372'036'854'775'807LL))
        throw TooLargeError("linear form evaluation overflows 64 bits");
    return static_cast<long long>(acc);
}

std::vector<long long> alpha_beta(int m, int n) {
    if (m < 2 || n < 2) throw UnsupportedShapeError("alpha_beta needs m, n >= 2");
    const long long M = m, N = n;
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(m + n - 2));
    out.push_back((N * M + N - M - 2) * (N - 1) * (M - 1) / 2);
    for (long long u = 1; u <= M - 1; ++u)
        out.push_back((u * u * N - 2 * u * N * M + 2 * N * M * M - u * u + u - N - 2 * M + 2) *
                      (N - 1) / 2);
    for (long long v = 1; v <= N - 2; ++v)
        out.push_back((8 * N * N * M * M - 6 * v * N * M + 5 * N * N * M - 10 * N * M * M +
                       6 * v * v - 12 * v * N + 6 * v * M - 19 * N * M + 2 * M * M + 18 * v +
                       14 * M) *
                      (M - 1) / 12);
    return out;
}

LinearForm rs_rt_form(int m, int n, int k) {
    if (k < 0 || k >= m + n - 2) throw std::out_of_range("rs_rt_form coordinate");
    LinearForm f;
    f.coeff_lambda.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
    f.coeff_mu.assign(static_cast<std::size_t>(m), 0);
    f.coeff_nu.assign(static_cast<std::size_t>(n), 0);
    if (k <= m - 1) {
        const int u = k;  // r_s(mu, nu)_u; the u = 0 coordinate carries no mu terms
        if (u >= 1)
            for (int i = u + 1; i <= m; ++i) f.coeff_mu[static_cast<std::size_t>(i - 1)] = 1;
        for (int j = 2; j <= n; ++j) f.coeff_nu[static_cast<std::size_t>(j - 1)] = 1;  // |nu| - nu_1
        f.constant = (u >= 1 ? binom2(m - u) : 0) + binom2(n - 1);
    } else {
        const int v = k - m + 1;  // r_t(mu, nu)_v, 1 <= v <= n-2
        for (int i = 2; i <= m; ++i) f.coeff_mu[static_cast<std::size_t>(i - 1)] = i - 1;
        for (int j = 2; j <= v + 1; ++j) f.coeff_nu[static_cast<std::size_t>(j - 1)] = m - 1;
        for (int j = v + 2; j <= n; ++j) f.coeff_nu[static_cast<std::size_t>(j - 1)] = m;
        f.constant = binom3(m) + static_cast<long long>(m - 1) * binom2(n - 1) + binom2(n - v - 1);
    }
    return f;
}

std::vector<long long> ls_lt(const Partition& lambda, const Permutation& sigma,
                             const DegreeTable& dt) {
    const int mn = dt.num_z();
    const int vars = dt.vars();
    if (sigma.size() != mn) throw DimensionMismatchError("sigma size != mn");
    if (static_cast<int>(lambda.length()) != mn)
        throw DimensionMismatchError("lambda not padded to mn");
    const Permutation inv = sigma.inverse();
    std::vector<long long> out(static_cast<std::size_t>(vars), 0);
    for (int i = 1; i <= mn; ++i) {
        const long long w = lambda.part(static_cast<std::size_t>(i)) + (mn - i);
        const auto& row = dt.rows[static_cast<std::size_t>(inv.image(i) - 1)];
        for (int k = 0; k < vars; ++k) out[static_cast<std::size_t>(k)] += w * row[static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<long long> ls_lt_explicit(const Partition& lambda, const Permutation& sigma, int m,
                                      int n) {
    const int mn = m * n;
    auto term = [&](int i) {  // lambda_{sigma(i)} + delta_{sigma(i)}
        const int s = sigma.image(i);
        return lambda.part(static_cast<std::size_t>(s)) + static_cast<long long>(mn - s);
    };
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(m + n - 2));
    {
        long long v = 0;
        for (int i = m + 1; i <= mn; ++i) v += term(i);
        out.push_back(v);
    }
    for (int u = 1; u <= m - 1; ++u) {
        long long v = 0;
        for (int i = u + 1; i <= m + u * (n - 1); ++i) v += term(i);
        for (int i = m + u * (n - 1) + 1; i <= mn; ++i) v += 2 * term(i);
        out.push_back(v);
    }
    for (int v = 1; v <= n - 2; ++v) {
        long long acc = 0;
        for (int i = 2; i <= m; ++i) acc += static_cast<long long>(i - 1) * term(i);
        for (int i = m + 1; i <= m + v; ++i) acc += static_cast<long long>(m - 1) * term(i);
        for (int i = m + v + 1; i <= m + n - 1; ++i) acc += static_cast<long long>(m) * term(i);
        for (int i = 1; i <= m - 1; ++i) {
            for (int j = 1; j <= v; ++j)
                acc += static_cast<long long>(i + m - 1) * term(m + i * (n - 1) + j);
            for (int j = v + 1; j <= n - 1; ++j)
                acc += static_cast<long long>(i + m) * term(m + i * (n - 1) + j);
        }
        out.push_back(acc);
    }
    return out;
}

LinearForm b_form_id(int m, int n, int k) {
    LinearForm f = rs_rt_form(m, n, k);
    const DegreeTable dt = build_degree_table(m, n);
    const int mn = m * n;
    const auto ab = alpha_beta(m, n);
    f.constant += ab[static_cast<std::size_t>(k)];
    for (int i = 1; i <= mn; ++i) {
        const int d = dt.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
        f.coeff_lambda[static_cast<std::size_t>(i - 1)] -= d;
        f.constant -= static_cast<long long>(mn - i) * d;
    }
    return f;
}

VpfInput vpf_input(const PartitionTriple& t, const Permutation& sigma, const DegreeTable& dt) {
    if (dt.m != t.m || dt.n != t.n) throw DimensionMismatchError("degree table shape mismatch");
    const auto ab = alpha_beta(t.m, t.n);
    const auto l = ls_lt(t.lambda, sigma, dt);
    VpfInput in;
    in.sigma = sigma;
    in.sign = sigma.sign();
    in.coords.resize(l.size());
    for (std::size_t k = 0; k < l.size(); ++k)
        in.coords[k] = rs_rt_form(t.m, t.n, static_cast<int>(k)).eval(t) + ab[k] - l[k];
    return in;
}

bool prefix_sums_nonnegative(const std::vector<long long>& c) {
    long long s = 0;
    for (long long v : c) {
        s += v;
        if (s < 0) return false;
    }
    return true;
}

}  // namespace kron
