#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kron/bigint.hpp"
#include "kron/substitution.hpp"

namespace kron {

/// Shared memo for the column recursion, keyed on (column index,
/// residual vector). Concurrent insert-or-read; duplicate computation of
/// a key is permitted (values are deterministic), and no lock is held
/// while a value is being computed.
class MemoTable {
public:
    explicit MemoTable(std::string matrix_id = {});

    const std::string& matrix_id() const { return matrix_id_; }

    bool lookup(int col, std::span<const long long> residual, BigInt& out) const;
    void insert(int col, std::span<const long long> residual, const BigInt& value);
    std::size_t size() const;
    void clear();

    /// Text cache: header "kron-vpf-memo 1 <matrix_id>", then
    /// "col r1 .. rk value" lines. Loading a mismatched id throws
    /// CacheMismatchError.
    void save(std::ostream& os) const;
    void load(std::istream& is);

private:
    struct Key {
        int col;
        std::vector<long long> residual;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<Key, BigInt, KeyHash> map;
    };

    static constexpr std::size_t kShards = 64;
    std::string matrix_id_;
    std::unique_ptr<Shard[]> shards_;

    Shard& shard_for(const Key& k) const;
};

/// Exact count of x in N^d with Ax = b, by the memoized column
/// recursion. Columns are branched in descending coordinate-sum order;
/// once only standard basis columns remain the tail is a closed-form
/// product of negative binomials.
class VpfEvaluator {
public:
    explicit VpfEvaluator(const VpfMatrix& A);

    BigInt eval(std::span<const long long> b, MemoTable& memo) const;
    int rows() const { return rows_; }

private:
    int rows_ = 0;
    std::vector<std::vector<int>> branch_cols_;  // ascending sum; branched back-to-front
    std::vector<int> unit_mult_;                 // copies of each e_k
    BigInt closed_tail(std::span<const long long> r) const;
    BigInt rec(int j, std::vector<long long>& r, MemoTable& memo) const;
};

BigInt vpf(const VpfMatrix& A, std::span<const long long> b, MemoTable& memo);

/// Exhaustive backtracking, no memoization; the independent oracle.
/// Trips TooLargeError when more than `guard` partial states are visited.
BigInt brute_force_vpf(const VpfMatrix& A, std::span<const long long> b,
                       std::uint64_t guard = 10'000'000);

/// cols(A) - rank(A): the generic quasi-polynomial degree of p_A.
int vpf_polynomial_degree(const VpfMatrix& A);

/// Dense DP table of p_A over the box [0, corner]; every evaluation in
/// the box is then a lookup. Cells are u64 with checked adds, rebuilt
/// once with 128-bit cells if a count overflows.
class BoxTable {
public:
    /// Throws TooLargeError if the box exceeds `cell_budget` cells (u64
    /// pass) or a count overflows 128 bits (callers fall back to the
    /// memo path).
    BoxTable(const VpfMatrix& A, std::vector<long long> corner, std::size_t cell_budget);

    BigInt at(std::span<const long long> b) const;
    std::size_t cells() const { return wide_ ? table128_.size() : table_.size(); }
    bool wide() const { return wide_; }

private:
    std::vector<long long> corner_;
    std::vector<std::size_t> stride_;
    std::vector<std::uint64_t> table_;
    std::vector<unsigned __int128> table128_;
    bool wide_ = false;

    template <typename Cell>
    void sweep(const VpfMatrix& A, std::vector<Cell>& table);
    std::size_t index_of(std::span<const long long> b) const;
};

}  // namespace kron
