#pragma once

#include <utility>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

/// The rewrite equations of the stable face: mu and nu determined by
/// lambda. Throws NotAPartitionError when the sums are not weakly
/// decreasing (lambda outside the face's partition inequalities).
std::pair<Partition, Partition> stable_mu_nu(const Partition& lambda, int m, int n);

/// b(lambda,mu,nu;Id) == 0, cross-checked against the rewrite equations.
bool is_stable_face_member(const PartitionTriple& t);

/// Appendix-C standard tableau whose entry order is realized by sums of
/// two increasing sequences; generates the stable face.
struct AdditiveTableau {
    int m = 0, n = 0;
    std::vector<std::vector<int>> cell;  // m rows, n columns, entries 1..mn
    std::vector<long long> xs;           // length m
    std::vector<long long> ys;           // length n

    int entry(int i, int j) const {  // 1-based
        return cell[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
};

/// Additivity is verified exhaustively on construction.
AdditiveTableau build_additive_tableau(int m, int n);

/// a_T(lambda): row sums; equals the stable mu.
Partition tableau_row_sums(const AdditiveTableau& T, const Partition& lambda);
/// b_T(lambda): column sums; equals the stable nu.
Partition tableau_col_sums(const AdditiveTableau& T, const Partition& lambda);

/// Rank of the b(Id)=0 system plus the two size equalities over the
/// (mn+m+n)-dimensional part space equals m+n (exact elimination).
bool verify_rank_condition(int m, int n);

}  // namespace kron
