#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "kron/bigint.hpp"
#include "kron/fm.hpp"
#include "kron/linear_forms.hpp"
#include "kron/partition.hpp"
#include "kron/permutation.hpp"
#include "kron/substitution.hpp"
#include "kron/vpf.hpp"

namespace kron {

struct EngineOptions {
    int threads = 0;                              // 0 = hardware concurrency
    std::size_t box_cell_budget = 200'000'000;    // dense-DP cells (u64 each)
    int max_mn = 10;                              // (mn)! enumeration guard
};

struct TermReport {
    Permutation sigma;
    int sign = 1;
    std::vector<long long> b;
    BigInt count;
    bool skipped = false;  // some b_i < 0, no VPF evaluation
};

struct KroneckerResult {
    BigInt g;
    std::uint64_t terms_evaluated = 0;
    std::uint64_t terms_skipped = 0;
    std::uint64_t terms_positive = 0;  // sigma with count > 0
    std::vector<TermReport> terms;     // only filled on request
};

/// Computes g_{lambda,mu,nu} as the signed sum of vector partition
/// function evaluations over S_{mn}. Matrices, degree tables and memo
/// tables are cached per (m,n) and shared across calls and threads.
class KronEngine {
public:
    explicit KronEngine(EngineOptions opts = {});

    KroneckerResult kronecker(const PartitionTriple& t, bool collect_terms = false);
    BigInt atomic(const PartitionTriple& t);
    /// Number of sigma whose term is nonzero for this triple.
    std::uint64_t count_contributing_terms(const PartitionTriple& t);
    /// g(base + k*direction) for k = 0..k_max.
    std::vector<BigInt> stability_sequence(const PartitionTriple& base,
                                           const PartitionTriple& direction, int k_max);

    const VpfMatrix& matrix(int m, int n);
    const DegreeTable& degree_table(int m, int n);
    MemoTable& memo(int m, int n);

    const EngineOptions& options() const { return opts_; }

private:
    struct ShapeCache {
        VpfMatrix matrix;
        DegreeTable table;
        std::unique_ptr<VpfEvaluator> evaluator;
        std::unique_ptr<MemoTable> memo;
        std::vector<long long> alpha_beta;
    };

    EngineOptions opts_;
    std::mutex cache_mu_;
    std::map<std::pair<int, int>, std::unique_ptr<ShapeCache>> cache_;

    ShapeCache& shape(int m, int n);
    KroneckerResult sum_over_sigma(const PartitionTriple& t, bool collect_terms);
};

/// The set of sigma for which some partition triple (optionally of equal
/// sizes) has b(lambda,mu,nu;sigma) >= 0 — decided by exact rational
/// Fourier-Motzkin over the partition cone. Guarded to mn <= 8.
std::vector<Permutation> feasible_sigma_set(int m, int n, bool include_size_equality,
                                            const FmLimits& limits = {});

/// sigma_2 >= sigma_1 iff (l_s,l_t)(sigma_1) dominates (l_s,l_t)(sigma_2)
/// for every partition lambda; decided by the prefix-sum criterion.
struct SigmaPoset {
    std::vector<Permutation> elements;
    std::vector<std::vector<std::uint8_t>> leq;  // leq[a][b]: a <= b
    std::vector<std::pair<int, int>> covers;     // (lower, upper)
};

SigmaPoset build_sigma_poset(int m, int n,
                             const std::optional<std::vector<Permutation>>& restrict_to = {},
                             std::size_t max_elements = 2000);

}  // namespace kron
