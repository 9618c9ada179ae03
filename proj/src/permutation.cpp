#include "kron/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kron {

std::uint64_t factorial_u64(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<char> seen(img_.size() + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..k");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.img_ = std::move(v);
    return p;
}

Permutation Permutation::nth(int k, std::uint64_t index) {
    std::vector<int> pool(static_cast<std::size_t>(k));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int pos = k; pos >= 1; --pos) {
        std::uint64_t f = factorial_u64(pos - 1);
        std::uint64_t q = index / f;
        index %= f;
        out.push_back(pool[static_cast<std::size_t>(q)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
    }
    Permutation p;
    p.img_ = std::move(out);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t p = 0; p < img_.size(); ++p)
        inv[static_cast<std::size_t>(img_[p] - 1)] = static_cast<int>(p + 1);
    Permutation out;
    out.img_ = std::move(inv);
    return out;
}

int Permutation::sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i + 1)) return false;
    return true;
}

bool Permutation::next() {
    return std::next_permutation(img_.begin(), img_.end());
}

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = img_.size() <= 9;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (!compact && i) out += ",";
        out += std::to_string(img_[i]);
    }
    return out;
}

}  // namespace kron
