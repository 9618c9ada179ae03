#include "kron/partition.hpp"

#include <algorithm>
#include <charconv>

#include "kron/errors.hpp"

namespace kron {

namespace {

void validate(const std::vector<long long>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw NegativePartError("negative part at position " + std::to_string(i + 1));
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw NonDecreasingError("parts increase at position " + std::to_string(i + 2));
    }
}

}  // namespace

Partition::Partition(std::vector<long long> parts, std::size_t declared_length) {
    // trailing zeros never count against the declared length
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    validate(parts);
    if (parts.size() > declared_length)
        throw LengthExceededError("partition has " + std::to_string(parts.size()) +
                                  " nonzero parts, declared length " + std::to_string(declared_length));
    parts.resize(declared_length, 0);
    parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text, std::size_t declared_length) {
    std::vector<long long> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '\t')) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ',' && text[j] != ' ' && text[j] != '\t') ++j;
        long long v = 0;
        auto res = std::from_chars(text.data() + i, text.data() + j, v);
        if (res.ec != std::errc() || res.ptr != text.data() + j)
            throw ParseError("bad partition token '" + std::string(text.substr(i, j - i)) + "'");
        parts.push_back(v);
        i = j;
    }
    return Partition(std::move(parts), declared_length);
}

Partition Partition::staircase(std::size_t k) {
    std::vector<long long> parts(k);
    for (std::size_t i = 0; i < k; ++i) parts[i] = static_cast<long long>(k - 1 - i);
    return Partition(std::move(parts), k);
}

BigInt Partition::size() const {
    BigInt s = 0;
    for (long long p : parts_) s += to_big(p);
    return s;
}

std::size_t Partition::nonzero_length() const {
    std::size_t n = parts_.size();
    while (n > 0 && parts_[n - 1] == 0) --n;
    return n;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition add_scaled(const Partition& base, const Partition& dir, long long k) {
    std::size_t len = std::max(base.length(), dir.length());
    std::vector<long long> parts(len, 0);
    for (std::size_t i = 1; i <= len; ++i) {
        long long b = i <= base.length() ? base.part(i) : 0;
        long long d = i <= dir.length() ? dir.part(i) : 0;
        parts[i - 1] = b + k * d;
    }
    return Partition(std::move(parts), len);
}

BigInt hook_product(const Partition& p) {
    const std::size_t rows = p.nonzero_length();
    // column lengths = conjugate parts
    std::vector<long long> col_len;
    if (rows > 0) {
        col_len.resize(static_cast<std::size_t>(p.part(1)), 0);
        for (std::size_t r = 1; r <= rows; ++r)
            for (long long c = 0; c < p.part(r); ++c) ++col_len[static_cast<std::size_t>(c)];
    }
    BigInt prod = 1;
    for (std::size_t r = 1; r <= rows; ++r) {
        for (long long c = 1; c <= p.part(r); ++c) {
            long long arm = p.part(r) - c;
            long long leg = col_len[static_cast<std::size_t>(c - 1)] - static_cast<long long>(r);
            prod *= to_big(arm + leg + 1);
        }
    }
    return prod;
}

BigInt hook_dimension(const Partition& p) {
    BigInt n = p.size();
    if (!n.fits_ulong_p()) throw TooLargeError("partition too large for factorial");
    return big_factorial(n.get_ui()) / hook_product(p);
}

PartitionTriple::PartitionTriple(Partition lambda_, Partition mu_, Partition nu_, int m_, int n_)
    : m(m_), n(n_) {
    if (m < 1 || n < 1) throw LengthBoundError("m and n must be positive");
    auto repad = [](Partition p, std::size_t len, const char* name) {
        if (p.nonzero_length() > len)
            throw LengthBoundError(std::string(name) + " has more than " + std::to_string(len) +
                                   " nonzero parts");
        std::vector<long long> parts(p.parts().begin(),
                                     p.parts().begin() + static_cast<std::ptrdiff_t>(p.nonzero_length()));
        return Partition(std::move(parts), len);
    };
    lambda = repad(std::move(lambda_), static_cast<std::size_t>(m) * static_cast<std::size_t>(n), "lambda");
    mu = repad(std::move(mu_), static_cast<std::size_t>(m), "mu");
    nu = repad(std::move(nu_), static_cast<std::size_t>(n), "nu");
}

bool PartitionTriple::equal_sizes() const {
    return lambda.size() == mu.size() && lambda.size() == nu.size();
}

void PartitionTriple::require_equal_sizes() const {
    if (!equal_sizes())
        throw SizeMismatchError("|lambda| = " + lambda.size().get_str() + ", |mu| = " +
                                mu.size().get_str() + ", |nu| = " + nu.size().get_str());
}

}  // namespace kron
