#pragma once

#include <vector>

namespace kron {

/// Rank over Q by fraction-free integer elimination.
int integer_matrix_rank(std::vector<std::vector<long long>> M);

}  // namespace kron
