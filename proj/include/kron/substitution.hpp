#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace kron {

/// Exponent vectors of the mn variables of XY = (1, x_1..x_{m-1},
/// y_1..y_{n-1}, x_1y_1, ..., x_{m-1}y_{n-1}) after the substitution
/// into (s_0..s_{m-1}, t_1..t_{n-2}). Row i (0-based) belongs to z_{i+1}.
struct DegreeTable {
    int m = 0, n = 0;
    std::vector<std::vector<int>> rows;  // mn rows x (m+n-2) columns

    int vars() const { return m + n - 2; }
    int num_z() const { return m * n; }
};

DegreeTable build_degree_table(int m, int n);

/// Which binomial family of the alternant-ratio factorization a column
/// came from. C and F carry powered binomials, one column per power.
enum class BinomialFamily { A, B, C1, C2, D1, D2, E, F1, F2 };

const char* family_name(BinomialFamily f);

struct ColumnProvenance {
    BinomialFamily family{};
    std::array<int, 4> index{};  // (i, j, k, l), unused slots 0
};

/// The matrix A^{m,n}: one column per binomial factor (1 - monomial),
/// columns in canonical (lexicographically descending) order. Duplicate
/// columns are kept; the partition function counts the full multiset.
struct VpfMatrix {
    int m = 0, n = 0;
    std::vector<std::vector<int>> columns;  // each of length m+n-2
    std::vector<ColumnProvenance> provenance;

    int rows() const { return m + n - 2; }
    int cols() const { return static_cast<int>(columns.size()); }
};

/// Requires m, n >= 2 (m = 1 / n = 1 is short-circuited in the engine).
VpfMatrix build_matrix(int m, int n);

struct MatrixPropertyReport {
    bool entries_nonnegative = false;      // (i)
    bool max_entry_ok = false;             // (ii) 2m-1, or 2 when n = 2
    bool column_count_ok = false;          // (iii) C(mn,2)-C(n,2)-C(m,2)
    bool row_count_ok = false;             // (iv) m+n-2
    bool basis_vectors_present = false;    // (v) every e_k is a column
    bool rank_full = false;                // (v) rank = m+n-2
    bool no_nonneg_kernel = false;         // every column nonzero => p_A finite

    int max_entry = 0;
    int expected_max_entry = 0;
    long long expected_columns = 0;
    std::vector<int> basis_witness;  // column index of each e_k

    bool all() const {
        return entries_nonnegative && max_entry_ok && column_count_ok && row_count_ok &&
               basis_vectors_present && rank_full && no_nonneg_kernel;
    }
};

MatrixPropertyReport check_matrix_properties(const VpfMatrix& A);

/// Cache file: "m n rows cols" then one column per line with a
/// provenance comment. Round trips bit-exactly.
void write_matrix(const VpfMatrix& A, std::ostream& os);
VpfMatrix read_matrix(std::istream& is);

/// FNV-1a over the canonical text form; keys on-disk memo caches.
std::string matrix_hash(const VpfMatrix& A);

}  // namespace kron
