#pragma once

#include <vector>

#include "kron/partition.hpp"
#include "kron/permutation.hpp"
#include "kron/substitution.hpp"

namespace kron {

/// Integer linear form over the parts (lambda_1..lambda_mn, mu_1..mu_m,
/// nu_1..nu_n) plus a constant.
struct LinearForm {
    std::vector<long long> coeff_lambda;
    std::vector<long long> coeff_mu;
    std::vector<long long> coeff_nu;
    long long constant = 0;

    long long eval(const PartitionTriple& t) const;
};

/// (alpha_0..alpha_{m-1}, beta_1..beta_{n-2}) from the closed-form
/// polynomials; independent of the partitions.
std::vector<long long> alpha_beta(int m, int n);

/// Coordinate k (0-based, k < m+n-2) of (r_s(mu,nu), r_t(mu,nu)) as a
/// form over mu, nu with its binomial constant.
LinearForm rs_rt_form(int m, int n, int k);

/// (l_s, l_t)(lambda; sigma) via the degree table:
///   coordinate k = sum_i (lambda_i + mn - i) * deg_k(z_{sigma^{-1}(i)}).
/// This is the production route; it carries the staircase constants.
std::vector<long long> ls_lt(const Partition& lambda, const Permutation& sigma,
                             const DegreeTable& dt);

/// Same quantity from the explicit per-coordinate sums, sigma applied
/// uniformly (the printed last sum of l_t omits sigma; that is a typo).
/// Test oracle for the degree-table route.
std::vector<long long> ls_lt_explicit(const Partition& lambda, const Permutation& sigma, int m,
                                      int n);

/// Coordinate k of b(.; Id) as a linear form over (lambda, mu, nu).
/// Its constant is identically zero (asserted in tests).
LinearForm b_form_id(int m, int n, int k);

struct VpfInput {
    std::vector<long long> coords;  // b_1..b_{m+n-2}
    Permutation sigma;
    int sign = 1;
};

/// b^{m,n}(lambda, mu, nu; sigma) = (r_s + alpha - l_s, r_t + beta - l_t).
/// Size equality is not required here; the engine enforces it.
VpfInput vpf_input(const PartitionTriple& t, const Permutation& sigma, const DegreeTable& dt);

/// Prefix-sum dominance test: sum_i c_i lambda_i >= 0 for every weakly
/// decreasing lambda >= 0 iff every prefix sum of c is >= 0.
bool prefix_sums_nonnegative(const std::vector<long long>& c);

}  // namespace kron
