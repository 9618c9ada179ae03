#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kron {

/// Permutation of {1..k} in one-line notation. image(i) is 1-based to
/// match the index conventions of the alternant sums.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int k);
    /// Unrank: the `index`-th permutation of {1..k} in lexicographic
    /// order, index in [0, k!).
    static Permutation nth(int k, std::uint64_t index);

    int size() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return img_; }

    Permutation inverse() const;
    int sign() const;  // +1 / -1 by inversion count
    bool is_identity() const;

    /// Advance to the lexicographic successor; false after the last one.
    bool next();

    std::string to_string() const;  // "1324" style when k <= 9, else "1,3,2,4"

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

std::uint64_t factorial_u64(int k);  // k <= 20

}  // namespace kron
