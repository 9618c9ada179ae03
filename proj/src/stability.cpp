#include "kron/stability.hpp"

#include "kron/errors.hpp"
#include "kron/linalg.hpp"
#include "kron/linear_forms.hpp"

namespace kron {

std::pair<Partition, Partition> stable_mu_nu(const Partition& lambda, int m, int n) {
    const int mn = m * n;
    if (static_cast<int>(lambda.nonzero_length()) > mn)
        throw LengthBoundError("lambda longer than mn");
    Partition lam(lambda.parts(), static_cast<std::size_t>(mn));
    auto L = [&](int i) { return lam.part(static_cast<std::size_t>(i)); };

    std::vector<long long> mu(static_cast<std::size_t>(m), 0);
    for (int u = 1; u <= m; ++u) {
        long long v = L(u);
        for (int i = m + (u - 1) * (n - 1) + 1; i <= m + u * (n - 1); ++i) v += L(i);
        mu[static_cast<std::size_t>(u - 1)] = v;
    }
    std::vector<long long> nu(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= m; ++i) nu[0] += L(i);
    for (int v = 2; v <= n; ++v) {
        long long s = 0;
        for (int i = 0; i <= m - 1; ++i) s += L(m + (n - 1) * i + v - 1);
        nu[static_cast<std::size_t>(v - 1)] = s;
    }
    try {
        return {Partition(std::move(mu), static_cast<std::size_t>(m)),
                Partition(std::move(nu), static_cast<std::size_t>(n))};
    } catch (const NonDecreasingError& e) {
        throw NotAPartitionError(std::string("rewrite equations yield a non-partition: ") +
                                 e.what());
    }
}

bool is_stable_face_member(const PartitionTriple& t) {
    t.require_equal_sizes();
    bool b_zero = true;
    if (t.m >= 2 && t.n >= 2) {
        for (int k = 0; k < t.m + t.n - 2 && b_zero; ++k)
            if (b_form_id(t.m, t.n, k).eval(t) != 0) b_zero = false;
    }
    bool eq_match = false;
    try {
        auto [mu, nu] = stable_mu_nu(t.lambda, t.m, t.n);
        eq_match = (mu == t.mu) && (nu == t.nu);
    } catch (const NotAPartitionError&) {
        eq_match = false;
    }
    if (t.m >= 2 && t.n >= 2 && b_zero != eq_match)
        throw Error("stable-face tests disagree (b(Id)=0 vs rewrite equations)");
    return t.m >= 2 && t.n >= 2 ? b_zero : eq_match;
}

AdditiveTableau build_additive_tableau(int m, int n) {
    if (m < 1 || n < 1) throw UnsupportedShapeError("tableau needs m, n >= 1");
    AdditiveTableau T;
    T.m = m;
    T.n = n;
    T.cell.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= m; ++i) {
        T.cell[static_cast<std::size_t>(i - 1)][0] = i;
        for (int j = 2; j <= n; ++j)
            T.cell[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                m + (i - 1) * (n - 1) + (j - 1);
    }
    T.xs.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        T.xs[static_cast<std::size_t>(i - 1)] =
            (n == 1) ? (i - 1) : static_cast<long long>(i - 1) * (n - 1);
    T.ys.resize(static_cast<std::size_t>(n));
    T.ys[0] = 0;
    for (int j = 2; j <= n; ++j)
        T.ys[static_cast<std::size_t>(j - 1)] = static_cast<long long>(m - 1) * (n - 1) + j - 1;

    // bijection onto 1..mn
    std::vector<char> seen(static_cast<std::size_t>(m * n) + 1, 0);
    for (const auto& row : T.cell)
        for (int e : row) {
            if (e < 1 || e > m * n || seen[static_cast<std::size_t>(e)])
                throw Error("tableau entries are not a bijection");
            seen[static_cast<std::size_t>(e)] = 1;
        }
    // additivity: entry order realized by x_i + y_j, over all cell pairs
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= n; ++l) {
                    const bool lt_entries = T.entry(i, j) < T.entry(k, l);
                    const bool lt_sums = T.xs[static_cast<std::size_t>(i - 1)] +
                                             T.ys[static_cast<std::size_t>(j - 1)] <
                                         T.xs[static_cast<std::size_t>(k - 1)] +
                                             T.ys[static_cast<std::size_t>(l - 1)];
                    if (lt_entries != lt_sums) throw Error("tableau is not additive");
                }
    return T;
}

Partition tableau_row_sums(const AdditiveTableau& T, const Partition& lambda) {
    Partition lam(lambda.parts(), static_cast<std::size_t>(T.m) * static_cast<std::size_t>(T.n));
    std::vector<long long> sums(static_cast<std::size_t>(T.m), 0);
    for (int i = 1; i <= T.m; ++i)
        for (int j = 1; j <= T.n; ++j)
            sums[static_cast<std::size_t>(i - 1)] +=
                lam.part(static_cast<std::size_t>(T.entry(i, j)));
    return Partition(std::move(sums), static_cast<std::size_t>(T.m));
}

Partition tableau_col_sums(const AdditiveTableau& T, const Partition& lambda) {
    Partition lam(lambda.parts(), static_cast<std::size_t>(T.m) * static_cast<std::size_t>(T.n));
    std::vector<long long> sums(static_cast<std::size_t>(T.n), 0);
    for (int i = 1; i <= T.m; ++i)
        for (int j = 1; j <= T.n; ++j)
            sums[static_cast<std::size_t>(j - 1)] +=
                lam.part(static_cast<std::size_t>(T.entry(i, j)));
    return Partition(std::move(sums), static_cast<std::size_t>(T.n));
}

bool verify_rank_condition(int m, int n) {
    if (m < 2 || n < 2) throw UnsupportedShapeError("rank condition needs m, n >= 2");
    const int mn = m * n;
    const std::size_t nv = static_cast<std::size_t>(mn + m + n);
    std::vector<std::vector<long long>> Q;
    // |mu| = |lambda| and |nu| = |lambda|
    for (int which = 0; which < 2; ++which) {
        std::vector<long long> row(nv, 0);
        for (int i = 0; i < mn; ++i) row[static_cast<std::size_t>(i)] = -1;
        const std::size_t off =
            which == 0 ? static_cast<std::size_t>(mn) : static_cast<std::size_t>(mn + m);
        const int len = which == 0 ? m : n;
        for (int i = 0; i < len; ++i) row[off + static_cast<std::size_t>(i)] = 1;
        Q.push_back(std::move(row));
    }
    for (int k = 0; k < m + n - 2; ++k) {
        const LinearForm f = b_form_id(m, n, k);
        std::vector<long long> row(nv, 0);
        for (int i = 0; i < mn; ++i)
            row[static_cast<std::size_t>(i)] = f.coeff_lambda[static_cast<std::size_t>(i)];
        for (int i = 0; i < m; ++i)
            row[static_cast<std::size_t>(mn + i)] = f.coeff_mu[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            row[static_cast<std::size_t>(mn + m + j)] = f.coeff_nu[static_cast<std::size_t>(j)];
        Q.push_back(std::move(row));
    }
    return integer_matrix_rank(std::move(Q)) == m + n;
}

}  // namespace kron
