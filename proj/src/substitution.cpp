#include "kron/substitution.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kron/errors.hpp"

namespace kron {

namespace {

// x_i = s_1...s_i (t_1...t_{n-2})^i
std::vector<int> x_degree(int m, int n, int i) {
    std::vector<int> v(static_cast<std::size_t>(m + n - 2), 0);
    for (int a = 1; a <= i; ++a) v[static_cast<std::size_t>(a)] += 1;
    for (int b = 1; b <= n - 2; ++b) v[static_cast<std::size_t>(m + b - 1)] += i;
    return v;
}

// y_j = s_0...s_{m-1} (t_1...t_{n-2})^{m-1} t_1...t_{j-1}
std::vector<int> y_degree(int m, int n, int j) {
    std::vector<int> v(static_cast<std::size_t>(m + n - 2), 0);
    for (int a = 0; a <= m - 1; ++a) v[static_cast<std::size_t>(a)] += 1;
    for (int b = 1; b <= n - 2; ++b)
        v[static_cast<std::size_t>(m + b - 1)] += (m - 1) + (b <= j - 1 ? 1 : 0);
    return v;
}

std::vector<int> vec_add(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

std::vector<int> vec_sub(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
    return w;
}

}  // namespace

DegreeTable build_degree_table(int m, int n) {
    if (m < 1 || n < 1) throw UnsupportedShapeError("degree table needs m, n >= 1");
    DegreeTable dt;
    dt.m = m;
    dt.n = n;
    dt.rows.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    dt.rows.emplace_back(static_cast<std::size_t>(m + n - 2), 0);  // the constant variable 1
    for (int i = 1; i <= m - 1; ++i) dt.rows.push_back(x_degree(m, n, i));
    for (int j = 1; j <= n - 1; ++j) dt.rows.push_back(y_degree(m, n, j));
    for (int i = 1; i <= m - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            dt.rows.push_back(vec_add(x_degree(m, n, i), y_degree(m, n, j)));
    return dt;
}

const char* family_name(BinomialFamily f) {
    switch (f) {
        case BinomialFamily::A: return "A";
        case BinomialFamily::B: return "B";
        case BinomialFamily::C1: return "C1";
        case BinomialFamily::C2: return "C2";
        case BinomialFamily::D1: return "D1";
        case BinomialFamily::D2: return "D2";
        case BinomialFamily::E: return "E";
        case BinomialFamily::F1: return "F1";
        case BinomialFamily::F2: return "F2";
    }
    return "?";
}

VpfMatrix build_matrix(int m, int n) {
    if (m < 2 || n < 2)
        throw UnsupportedShapeError("A^{m,n} needs m, n >= 2; smaller shapes are engine shortcuts");

    struct Raw {
        std::vector<int> col;
        ColumnProvenance prov;
    };
    std::vector<Raw> raw;
    auto push = [&](std::vector<int> col, BinomialFamily f, int i, int j, int k, int l) {
        for (int e : col)
            if (e < 0)
                throw UnsupportedShapeError("negative exponent after substitution (builder bug)");
        raw.push_back({std::move(col), {f, {i, j, k, l}}});
    };

    auto X = [&](int i) { return x_degree(m, n, i); };
    auto Y = [&](int j) { return y_degree(m, n, j); };

    // A: 1 - y_j/x_i
    for (int i = 1; i <= m - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            push(vec_sub(Y(j), X(i)), BinomialFamily::A, i, j, 0, 0);
    // B: 1 - x_i y_j
    for (int i = 1; i <= m - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            push(vec_add(X(i), Y(j)), BinomialFamily::B, i, j, 0, 0);
    // C: (1 - x_i)^{n-1} and (1 - y_j)^{m-1}
    for (int i = 1; i <= m - 1; ++i)
        for (int rep = 0; rep < n - 1; ++rep) push(X(i), BinomialFamily::C1, i, 0, 0, 0);
    for (int j = 1; j <= n - 1; ++j)
        for (int rep = 0; rep < m - 1; ++rep) push(Y(j), BinomialFamily::C2, 0, j, 0, 0);
    // D: 1 - x_i y_j / x_k (k != i) and 1 - x_i y_j / y_k (k != j)
    for (int i = 1; i <= m - 1; ++i)
        for (int k = 1; k <= m - 1; ++k) {
            if (k == i) continue;
            for (int j = 1; j <= n - 1; ++j)
                push(vec_sub(vec_add(X(i), Y(j)), X(k)), BinomialFamily::D1, i, j, k, 0);
        }
    for (int i = 1; i <= m - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            for (int k = 1; k <= n - 1; ++k) {
                if (k == j) continue;
                push(vec_sub(vec_add(X(i), Y(j)), Y(k)), BinomialFamily::D2, i, j, k, 0);
            }
    // E: 1 - x_k y_l / (x_i y_j), i < k, j != l
    for (int i = 1; i <= m - 1; ++i)
        for (int k = i + 1; k <= m - 1; ++k)
            for (int j = 1; j <= n - 1; ++j)
                for (int l = 1; l <= n - 1; ++l) {
                    if (l == j) continue;
                    push(vec_sub(vec_add(X(k), Y(l)), vec_add(X(i), Y(j))), BinomialFamily::E, i,
                         j, k, l);
                }
    // F: (1 - x_k/x_i)^{n-1}, i < k, and (1 - y_l/y_j)^{m-1}, j < l
    for (int i = 1; i <= m - 1; ++i)
        for (int k = i + 1; k <= m - 1; ++k)
            for (int rep = 0; rep < n - 1; ++rep)
                push(vec_sub(X(k), X(i)), BinomialFamily::F1, i, 0, k, 0);
    for (int j = 1; j <= n - 1; ++j)
        for (int l = j + 1; l <= n - 1; ++l)
            for (int rep = 0; rep < m - 1; ++rep)
                push(vec_sub(Y(l), Y(j)), BinomialFamily::F2, 0, j, 0, l);

    std::stable_sort(raw.begin(), raw.end(),
                     [](const Raw& a, const Raw& b) { return a.col > b.col; });

    VpfMatrix A;
    A.m = m;
    A.n = n;
    A.columns.reserve(raw.size());
    A.provenance.reserve(raw.size());
    for (auto& r : raw) {
        A.columns.push_back(std::move(r.col));
        A.provenance.push_back(r.prov);
    }
    return A;
}

namespace {

long long binom2(long long a) { return a * (a - 1) / 2; }

// integer Gaussian elimination rank (fraction-free)
int integer_rank(std::vector<std::vector<long long>> M) {
    int rank = 0;
    std::size_t rows = M.size();
    if (rows == 0) return 0;
    std::size_t cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (M[i][c] == 0) continue;
            long long a = M[r][c], b = M[i][c];
            long long g = std::gcd(a, b);
            long long fa = b / g, fb = a / g;
            for (std::size_t k = c; k < cols; ++k) M[i][k] = M[i][k] * fb - M[r][k] * fa;
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace

MatrixPropertyReport check_matrix_properties(const VpfMatrix& A) {
    MatrixPropertyReport rep;
    const int m = A.m, n = A.n;
    const int r = m + n - 2;

    rep.entries_nonnegative = true;
    rep.max_entry = 0;
    for (const auto& col : A.columns)
        for (int e : col) {
            if (e < 0) rep.entries_nonnegative = false;
            rep.max_entry = std::max(rep.max_entry, e);
        }
    // 2m-1 needs a t-variable (n >= 3); with n = 2 the B/D1 columns top out at 2
    rep.expected_max_entry = (n >= 3) ? 2 * m - 1 : 2;
    rep.max_entry_ok = rep.max_entry == rep.expected_max_entry;

    rep.expected_columns =
        binom2(static_cast<long long>(m) * n) - binom2(n) - binom2(m);
    rep.column_count_ok = A.cols() == rep.expected_columns;
    rep.row_count_ok = !A.columns.empty() && static_cast<int>(A.columns[0].size()) == r;

    rep.basis_witness.assign(static_cast<std::size_t>(r), -1);
    for (int c = 0; c < A.cols(); ++c) {
        const auto& col = A.columns[static_cast<std::size_t>(c)];
        int nz = 0, at = -1;
        for (int k = 0; k < r; ++k)
            if (col[static_cast<std::size_t>(k)] != 0) {
                ++nz;
                at = k;
            }
        if (nz == 1 && col[static_cast<std::size_t>(at)] == 1 &&
            rep.basis_witness[static_cast<std::size_t>(at)] < 0)
            rep.basis_witness[static_cast<std::size_t>(at)] = c;
    }
    rep.basis_vectors_present =
        std::all_of(rep.basis_witness.begin(), rep.basis_witness.end(), [](int w) { return w >= 0; });

    std::vector<std::vector<long long>> M(static_cast<std::size_t>(r),
                                          std::vector<long long>(A.columns.size()));
    for (std::size_t c = 0; c < A.columns.size(); ++c)
        for (int k = 0; k < r; ++k)
            M[static_cast<std::size_t>(k)][c] = A.columns[c][static_cast<std::size_t>(k)];
    rep.rank_full = integer_rank(std::move(M)) == r;

    rep.no_nonneg_kernel = true;  // nonnegative entries: a zero column would be the only obstruction
    for (const auto& col : A.columns)
        if (std::all_of(col.begin(), col.end(), [](int e) { return e == 0; }))
            rep.no_nonneg_kernel = false;

    return rep;
}

void write_matrix(const VpfMatrix& A, std::ostream& os) {
    os << A.m << " " << A.n << " " << A.rows() << " " << A.cols() << "\n";
    for (std::size_t c = 0; c < A.columns.size(); ++c) {
        for (std::size_t k = 0; k < A.columns[c].size(); ++k) {
            if (k) os << " ";
            os << A.columns[c][k];
        }
        const auto& p = A.provenance[c];
        os << " # " << family_name(p.family) << " " << p.index[0] << " " << p.index[1] << " "
           << p.index[2] << " " << p.index[3] << "\n";
    }
}

VpfMatrix read_matrix(std::istream& is) {
    VpfMatrix A;
    int rows = 0, cols = 0;
    if (!(is >> A.m >> A.n >> rows >> cols)) throw MatrixIoError("bad matrix header");
    std::string line;
    std::getline(is, line);
    for (int c = 0; c < cols; ++c) {
        if (!std::getline(is, line)) throw MatrixIoError("truncated matrix file");
        std::istringstream ls(line);
        std::vector<int> col(static_cast<std::size_t>(rows));
        for (int k = 0; k < rows; ++k)
            if (!(ls >> col[static_cast<std::size_t>(k)])) throw MatrixIoError("short column line");
        std::string hash, fam;
        ColumnProvenance prov;
        if (!(ls >> hash) || hash != "#" || !(ls >> fam))
            throw MatrixIoError("missing provenance comment");
        bool known = false;
        for (BinomialFamily f : {BinomialFamily::A, BinomialFamily::B, BinomialFamily::C1,
                                 BinomialFamily::C2, BinomialFamily::D1, BinomialFamily::D2,
                                 BinomialFamily::E, BinomialFamily::F1, BinomialFamily::F2})
            if (fam == family_name(f)) {
                prov.family = f;
                known = true;
            }
        if (!known) throw MatrixIoError("unknown provenance family '" + fam + "'");
        for (auto& ix : prov.index)
            if (!(ls >> ix)) throw MatrixIoError("short provenance indices");
        A.columns.push_back(std::move(col));
        A.provenance.push_back(prov);
    }
    return A;
}

std::string matrix_hash(const VpfMatrix& A) {
    std::ostringstream os;
    write_matrix(A, os);
    const std::string text = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

}  // namespace kron
