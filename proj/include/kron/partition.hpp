#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kron/bigint.hpp"

namespace kron {

/// Weakly decreasing non-negative integer sequence, zero-padded at
/// construction to a declared length. All downstream formulas index
/// parts 1..declared_length with no bounds checks.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<long long> parts, std::size_t declared_length);

    /// Comma/space separated integers; "" is the empty partition.
    static Partition parse(std::string_view text, std::size_t declared_length);
    /// delta^(k) = (k-1, k-2, ..., 1, 0)
    static Partition staircase(std::size_t k);

    std::size_t length() const { return parts_.size(); }  // declared length
    /// 1-based part accessor, the convention used by every formula here.
    long long part(std::size_t i) const { return parts_[i - 1]; }
    const std::vector<long long>& parts() const { return parts_; }

    BigInt size() const;
    std::size_t nonzero_length() const;

    /// Canonical text form "a1,a2,...,ak" (zero-padded).
    std::string to_string() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<long long> parts_;
};

/// this + k * dir, both padded to the same declared length.
Partition add_scaled(const Partition& base, const Partition& dir, long long k);

/// Product of hook lengths over the Ferrers diagram.
BigInt hook_product(const Partition& p);

/// f^p = |p|! / hook_product(p), the S_N irreducible dimension.
BigInt hook_dimension(const Partition& p);

/// (lambda, mu, nu) with declared lengths (m*n, m, n).
struct PartitionTriple {
    Partition lambda, mu, nu;
    int m = 0, n = 0;

    PartitionTriple() = default;
    /// Pads to the (m*n, m, n) lengths; throws LengthBoundError if a
    /// partition has more nonzero parts than its slot allows.
    PartitionTriple(Partition lambda_, Partition mu_, Partition nu_, int m_, int n_);

    bool equal_sizes() const;
    BigInt size() const { return lambda.size(); }
    /// Throws SizeMismatchError unless |lambda| = |mu| = |nu|.
    void require_equal_sizes() const;
};

}  // namespace kron
