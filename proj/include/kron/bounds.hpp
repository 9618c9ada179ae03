#pragma once

#include <string>
#include <vector>

#include "kron/bigint.hpp"
#include "kron/partition.hpp"

namespace kron {

class KronEngine;

/// Binomial-product upper bound on the atomic coefficient; 0 when some
/// coordinate of b(.;Id) is negative (the atomic coefficient is 0 there).
BigInt atomic_binomial_bound(const PartitionTriple& t);

/// (mn)!/2 times the binomial bound.
BigInt kron_factorial_bound(const PartitionTriple& t);
/// The tighter variant: (mn)!/2 times the actual atomic coefficient.
BigInt kron_factorial_bound_atomic(const PartitionTriple& t, KronEngine& engine);

/// Size-only bounds: coordinates replaced by N, 2N, (2m-1)N.
BigInt atomic_n_only_bound(const PartitionTriple& t);
BigInt n_only_bound(const PartitionTriple& t);  // times (mn)!/2

struct PakPanovaBounds {
    BigInt bound1;     // product of binomials in the parts of lambda
    BigInt bound2;     // contingency-table bound, rounded up
    BigInt hook_bound; // min of the three hook-length dimensions
};

PakPanovaBounds pak_panova_bounds(const PartitionTriple& t, int l, int m, int n);

struct BoundEntry {
    std::string source;
    BigInt value;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    std::string best;  // label of the minimum
};

/// All bound families; includes the factorial-times-atomic variant when
/// an engine is supplied.
BoundReport compare_bounds(const PartitionTriple& t, KronEngine* engine = nullptr);

/// Per standard basis vector e_k, how many columns of A^{m,n} the
/// replacement walk assigns to it, against the published closed forms.
struct ReplacementAccounting {
    int m = 0, n = 0;
    std::vector<long long> tally;        // size m+n-2, indexed by target e_k
    std::vector<long long> closed_form;  // expected counts per e_k
    bool matches_closed_forms = false;
    std::string note;
};

/// Walks the actual columns with their provenance and applies the
/// replacement choices; every chosen e_k is checked to be legal (the
/// column has a positive entry at k). With strict = true a tally
/// mismatch throws AccountingMismatchError instead of being reported.
ReplacementAccounting replacement_accounting(int m, int n, bool strict = false);

}  // namespace kron
