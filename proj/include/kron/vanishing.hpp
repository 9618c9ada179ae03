#pragma once

#include <string>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

struct InequalityCheck {
    std::string label;
    long long lhs = 0, rhs = 0;
    bool holds() const { return lhs >= rhs; }
};

enum class VanishConclusion { MayBeNonzero, ForcedZero };

struct VanishingReport {
    std::vector<InequalityCheck> inequalities;
    VanishConclusion conclusion = VanishConclusion::MayBeNonzero;
    bool forced_zero() const { return conclusion == VanishConclusion::ForcedZero; }
};

/// The m+n-2 generalized Bravyi inequalities. Requires equal sizes.
/// Each inequality is equivalent to a coordinate of b(.;Id) >= 0 under
/// |lambda| = |mu| = |nu|; both routes are evaluated and must agree.
VanishingReport check_vanishing(const PartitionTriple& t);

/// true = g forced to zero because some coordinate of b(.;Id) is
/// negative (equivalently the atomic coefficient vanishes).
bool check_atomic_vanishing(const PartitionTriple& t);

/// Ressayre's inequality N + lambda_1 + lambda_{e+j} <= mu_1 + nu_1 + nu_j.
/// Demonstration only: known counterexamples exist, so this is never
/// used as a pruning step.
bool ressayre_inequality_satisfied(const PartitionTriple& t, int e, int f, int j);

}  // namespace kron
