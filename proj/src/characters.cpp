#include "kron/characters.hpp"

#include <algorithm>

#include "kron/errors.hpp"

namespace kron {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<long long>& cur,
                    std::vector<Partition>& out, int max_len) {
    if (remaining == 0) {
        out.emplace_back(cur, cur.size());
        return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out, max_len);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int N) {
    std::vector<Partition> out;
    if (N == 0) {
        out.emplace_back(std::vector<long long>{}, 0);
        return out;
    }
    std::vector<long long> cur;
    gen_partitions(N, N, cur, out, -1);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

std::vector<Partition> partitions_of_max_length(int N, int max_len) {
    std::vector<Partition> out;
    if (N == 0) {
        out.emplace_back(std::vector<long long>{}, static_cast<std::size_t>(max_len));
        return out;
    }
    std::vector<long long> cur;
    gen_partitions(N, N, cur, out, max_len);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    // re-pad to the declared bound
    for (auto& p : out) p = Partition(p.parts(), static_cast<std::size_t>(max_len));
    return out;
}

BigInt conjugacy_class_size(const Partition& rho) {
    BigInt n = rho.size();
    if (!n.fits_ulong_p()) throw SizeLimitError("class size needs a small N");
    BigInt z = 1;
    long long prev = -1;
    long long mult = 0;
    auto flush = [&]() {
        for (long long i = 1; i <= mult; ++i) z *= to_big(prev) * to_big(i);  // prev^mult * mult!
    };
    for (std::size_t i = 1; i <= rho.nonzero_length(); ++i) {
        const long long part = rho.part(i);
        if (part == prev) {
            ++mult;
        } else {
            flush();
            prev = part;
            mult = 1;
        }
    }
    flush();
    return big_factorial(n.get_ui()) / z;
}

long long CharacterOracle::strip_rec(std::vector<long long>& shape,
                                     const std::vector<long long>& cycles, std::size_t idx) {
    if (idx == cycles.size()) return 1;  // shape must be empty here (sizes agree)

    // key = shape | remaining cycle suffix (memo is shared across rho's)
    std::string key;
    key.reserve(shape.size() * 3 + (cycles.size() - idx) * 3 + 2);
    for (long long s : shape) {
        key += std::to_string(s);
        key += ',';
    }
    key += '|';
    for (std::size_t j = idx; j < cycles.size(); ++j) {
        key += std::to_string(cycles[j]);
        key += ',';
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    // beta-numbers beta_i = shape_i + (k - i), strictly decreasing
    const long long r = cycles[idx];
    const std::size_t k = shape.size();
    std::vector<long long> beta(k);
    for (std::size_t i = 0; i < k; ++i)
        beta[i] = shape[i] + static_cast<long long>(k - 1 - i);

    long long total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const long long target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        std::size_t below = 0;  // betas strictly between target and beta_i
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++below;
        }
        if (occupied) continue;
        // new shape from the modified beta set
        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<long long> nshape(k);
        for (std::size_t j = 0; j < k; ++j)
            nshape[j] = nb[j] - static_cast<long long>(k - 1 - j);
        while (!nshape.empty() && nshape.back() == 0) nshape.pop_back();
        const long long sign = (below % 2 == 0) ? 1 : -1;
        total += sign * strip_rec(nshape, cycles, idx + 1);
    }

    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(key), total);
    return total;
}

long long CharacterOracle::character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw SizeMismatchError("|lambda| != |rho|");
    if (lambda.size() > size_limit_) throw SizeLimitError("character oracle size limit");
    std::vector<long long> shape(lambda.parts().begin(),
                                 lambda.parts().begin() +
                                     static_cast<std::ptrdiff_t>(lambda.nonzero_length()));
    std::vector<long long> cycles(rho.parts().begin(),
                                  rho.parts().begin() +
                                      static_cast<std::ptrdiff_t>(rho.nonzero_length()));
    return strip_rec(shape, cycles, 0);
}

BigInt CharacterOracle::kronecker(const PartitionTriple& t) {
    return kronecker(t.lambda, t.mu, t.nu);
}

BigInt CharacterOracle::kronecker(const Partition& lambda, const Partition& mu,
                                  const Partition& nu) {
    if (lambda.size() != mu.size() || lambda.size() != nu.size())
        throw SizeMismatchError("kronecker_by_characters needs equal sizes");
    BigInt nbig = lambda.size();
    if (nbig > size_limit_) throw SizeLimitError("character oracle size limit");
    const int N = static_cast<int>(nbig.get_si());
    BigInt sum = 0;
    for (const Partition& rho : partitions_of(N)) {
        const BigInt cls = conjugacy_class_size(rho);
        const long long a = character(lambda, rho);
        if (a == 0) continue;
        const long long b = character(mu, rho);
        if (b == 0) continue;
        const long long c = character(nu, rho);
        if (c == 0) continue;
        sum += cls * to_big(a) * to_big(b) * to_big(c);
    }
    const BigInt nf = big_factorial(static_cast<unsigned long>(N));
    if (sum % nf != 0) throw Error("character sum not divisible by N! (oracle bug)");
    BigInt g = sum / nf;
    if (g < 0) throw Error("negative Kronecker coefficient from characters (oracle bug)");
    return g;
}

CharacterTable build_character_table(int N, CharacterOracle& oracle) {
    CharacterTable tab;
    tab.N = N;
    tab.shapes = partitions_of(N);
    tab.chi.resize(tab.shapes.size());
    tab.class_sizes.reserve(tab.shapes.size());
    for (const auto& rho : tab.shapes) tab.class_sizes.push_back(conjugacy_class_size(rho));
    for (std::size_t s = 0; s < tab.shapes.size(); ++s) {
        tab.chi[s].resize(tab.shapes.size());
        for (std::size_t c = 0; c < tab.shapes.size(); ++c)
            tab.chi[s][c] = oracle.character(tab.shapes[s], tab.shapes[c]);
    }
    return tab;
}

}  // namespace kron
