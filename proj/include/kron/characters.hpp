#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "kron/bigint.hpp"
#include "kron/partition.hpp"

namespace kron {

/// All partitions of N in lexicographic order (deterministic class indexing).
std::vector<Partition> partitions_of(int N);
std::vector<Partition> partitions_of_max_length(int N, int max_len);

/// |C_rho| = N! / z_rho
BigInt conjugacy_class_size(const Partition& rho);

/// Independent brute-force side: symmetric group characters via the
/// Murnaghan-Nakayama border-strip recursion (beta-number form), and the
/// inner-product formula for g. Shares no code with the VPF path.
class CharacterOracle {
public:
    explicit CharacterOracle(int size_limit = 14) : size_limit_(size_limit) {}

    /// chi^lambda(rho), |lambda| = |rho| required.
    long long character(const Partition& lambda, const Partition& rho);

    /// g = (1/N!) sum_rho |C_rho| chi^lambda chi^mu chi^nu; divisibility
    /// by N! and non-negativity are asserted.
    BigInt kronecker(const PartitionTriple& t);
    BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

    int size_limit() const { return size_limit_; }

private:
    int size_limit_;
    std::mutex mu_;
    std::unordered_map<std::string, long long> memo_;

    long long strip_rec(std::vector<long long>& shape, const std::vector<long long>& cycles,
                        std::size_t idx);
};

struct CharacterTable {
    int N = 0;
    std::vector<Partition> shapes;                 // row/column index, lex order
    std::vector<std::vector<long long>> chi;       // chi[shape][class]
    std::vector<BigInt> class_sizes;
};

CharacterTable build_character_table(int N, CharacterOracle& oracle);

}  // namespace kron
