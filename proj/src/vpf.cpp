#include "kron/vpf.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kron/errors.hpp"
#include "kron/linalg.hpp"

namespace kron {

// ---------------------------------------------------------------- MemoTable

MemoTable::MemoTable(std::string matrix_id)
    : matrix_id_(std::move(matrix_id)), shards_(new Shard[kShards]) {}

std::size_t MemoTable::KeyHash::operator()(const Key& k) const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(k.col);
    for (long long v : k.residual) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

MemoTable::Shard& MemoTable::shard_for(const Key& k) const {
    return shards_[KeyHash{}(k) % kShards];
}

bool MemoTable::lookup(int col, std::span<const long long> residual, BigInt& out) const {
    Key k{col, {residual.begin(), residual.end()}};
    Shard& s = shard_for(k);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(k);
    if (it == s.map.end()) return false;
    out = it->second;
    return true;
}

void MemoTable::insert(int col, std::span<const long long> residual, const BigInt& value) {
    Key k{col, {residual.begin(), residual.end()}};
    Shard& s = shard_for(k);
    std::lock_guard<std::mutex> lock(s.mu);
    s.map.emplace(std::move(k), value);  // first writer wins; values identical anyway
}

std::size_t MemoTable::size() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < kShards; ++i) {
        std::lock_guard<std::mutex> lock(shards_[i].mu);
        total += shards_[i].map.size();
    }
    return total;
}

void MemoTable::clear() {
    for (std::size_t i = 0; i < kShards; ++i) {
        std::lock_guard<std::mutex> lock(shards_[i].mu);
        shards_[i].map.clear();
    }
}

void MemoTable::save(std::ostream& os) const {
    os << "kron-vpf-memo 1 " << matrix_id_ << "\n";
    // deterministic order
    std::vector<std::pair<Key, BigInt>> entries;
    for (std::size_t i = 0; i < kShards; ++i) {
        std::lock_guard<std::mutex> lock(shards_[i].mu);
        for (const auto& [k, v] : shards_[i].map) entries.emplace_back(k, v);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first.col != b.first.col) return a.first.col < b.first.col;
        return a.first.residual < b.first.residual;
    });
    for (const auto& [k, v] : entries) {
        os << k.col;
        for (long long r : k.residual) os << " " << r;
        os << " " << v.get_str() << "\n";
    }
}

void MemoTable::load(std::istream& is) {
    std::string magic;
    int version = 0;
    std::string id;
    if (!(is >> magic >> version >> id) || magic != "kron-vpf-memo" || version != 1)
        throw CacheMismatchError("not a memo cache file");
    if (id != matrix_id_)
        throw CacheMismatchError("memo cache is for matrix " + id + ", expected " + matrix_id_);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.size() < 2) throw CacheMismatchError("short memo cache line");
        Key k;
        k.col = std::stoi(tok[0]);
        for (std::size_t i = 1; i + 1 < tok.size(); ++i) k.residual.push_back(std::stoll(tok[i]));
        BigInt v = parse_bigint(tok.back());
        Shard& s = shard_for(k);
        std::lock_guard<std::mutex> lock(s.mu);
        s.map.emplace(std::move(k), std::move(v));
    }
}

// ------------------------------------------------------------ VpfEvaluator

VpfEvaluator::VpfEvaluator(const VpfMatrix& A) {
    rows_ = A.rows();
    unit_mult_.assign(static_cast<std::size_t>(rows_), 0);
    for (const auto& col : A.columns) {
        int nz = 0, at = -1;
        for (int k = 0; k < rows_; ++k)
            if (col[static_cast<std::size_t>(k)] != 0) {
                ++nz;
                at = k;
            }
        if (nz == 1 && col[static_cast<std::size_t>(at)] == 1)
            ++unit_mult_[static_cast<std::size_t>(at)];
        else
            branch_cols_.push_back(col);
    }
    std::sort(branch_cols_.begin(), branch_cols_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  const int sa = std::accumulate(a.begin(), a.end(), 0);
                  const int sb = std::accumulate(b.begin(), b.end(), 0);
                  if (sa != sb) return sa < sb;
                  return a < b;
              });
}

BigInt VpfEvaluator::closed_tail(std::span<const long long> r) const {
    BigInt prod = 1;
    for (int k = 0; k < rows_; ++k) {
        const long long b = r[static_cast<std::size_t>(k)];
        const int u = unit_mult_[static_cast<std::size_t>(k)];
        if (u == 0) {
            if (b != 0) return 0;
        } else if (u == 1) {
            continue;  // exactly one way
        } else {
            prod *= big_binomial(to_big(b + u - 1), static_cast<unsigned long>(u - 1));
        }
    }
    return prod;
}

BigInt VpfEvaluator::rec(int j, std::vector<long long>& r, MemoTable& memo) const {
    if (j == 0) return closed_tail(r);
    BigInt cached;
    if (memo.lookup(j, r, cached)) return cached;
    const auto& col = branch_cols_[static_cast<std::size_t>(j - 1)];
    BigInt sum = 0;
    std::vector<long long> res = r;
    for (;;) {
        sum += rec(j - 1, res, memo);
        bool ok = true;
        for (int k = 0; k < rows_; ++k) {
            res[static_cast<std::size_t>(k)] -= col[static_cast<std::size_t>(k)];
            if (res[static_cast<std::size_t>(k)] < 0) ok = false;
        }
        if (!ok) break;
    }
    memo.insert(j, r, sum);
    return sum;
}

BigInt VpfEvaluator::eval(std::span<const long long> b, MemoTable& memo) const {
    if (static_cast<int>(b.size()) != rows_) throw DimensionMismatchError("b has wrong length");
    for (long long v : b)
        if (v < 0) return 0;
    std::vector<long long> r(b.begin(), b.end());
    return rec(static_cast<int>(branch_cols_.size()), r, memo);
}

BigInt vpf(const VpfMatrix& A, std::span<const long long> b, MemoTable& memo) {
    return VpfEvaluator(A).eval(b, memo);
}

BigInt brute_force_vpf(const VpfMatrix& A, std::span<const long long> b, std::uint64_t guard) {
    const int rows = A.rows();
    if (static_cast<int>(b.size()) != rows) throw DimensionMismatchError("b has wrong length");
    for (long long v : b)
        if (v < 0) return 0;
    std::uint64_t visited = 0;
    BigInt count = 0;
    std::vector<long long> r(b.begin(), b.end());
    // recursive backtracking, largest columns first
    std::vector<std::vector<int>> cols = A.columns;
    std::sort(cols.begin(), cols.end(), [](const std::vector<int>& a, const std::vector<int>& b2) {
        return std::accumulate(a.begin(), a.end(), 0) > std::accumulate(b2.begin(), b2.end(), 0);
    });
    auto all_zero = [&](const std::vector<long long>& v) {
        return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    };
    auto step = [&](auto&& self, std::size_t j) -> void {
        if (++visited > guard) throw TooLargeError("brute force guard tripped");
        if (j == cols.size()) {
            if (all_zero(r)) count += 1;
            return;
        }
        // remaining columns all nonnegative: stop when residual already zero
        const auto& col = cols[j];
        long long reps = 0;
        for (;;) {
            self(self, j + 1);
            bool ok = true;
            for (int k = 0; k < rows; ++k) {
                r[static_cast<std::size_t>(k)] -= col[static_cast<std::size_t>(k)];
                if (r[static_cast<std::size_t>(k)] < 0) ok = false;
            }
            ++reps;
            if (!ok) break;
        }
        for (int k = 0; k < rows; ++k)
            r[static_cast<std::size_t>(k)] += reps * col[static_cast<std::size_t>(k)];
    };
    step(step, 0);
    return count;
}

int vpf_polynomial_degree(const VpfMatrix& A) {
    std::vector<std::vector<long long>> M(static_cast<std::size_t>(A.rows()),
                                          std::vector<long long>(A.columns.size()));
    for (std::size_t c = 0; c < A.columns.size(); ++c)
        for (int k = 0; k < A.rows(); ++k)
            M[static_cast<std::size_t>(k)][c] = A.columns[c][static_cast<std::size_t>(k)];
    return A.cols() - integer_matrix_rank(std::move(M));
}

// ---------------------------------------------------------------- BoxTable

namespace {

inline bool add_checked(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
    return !__builtin_add_overflow(a, b, &out);
}
inline bool add_checked(unsigned __int128 a, unsigned __int128 b, unsigned __int128& out) {
    out = a + b;
    return out >= a;
}

}  // namespace

template <typename Cell>
void BoxTable::sweep(const VpfMatrix& A, std::vector<Cell>& table) {
    table[0] = 1;
    const std::size_t last = corner_.size() - 1;
    std::vector<long long> idx(corner_.size());
    // unbounded-knapsack pass per column (duplicates get their own pass)
    for (const auto& col : A.columns) {
        std::size_t off = 0;
        bool fits = true;
        for (std::size_t k = 0; k < corner_.size(); ++k) {
            off += static_cast<std::size_t>(col[k]) * stride_[k];
            if (col[k] > corner_[k]) fits = false;
        }
        if (!fits) continue;  // column can never be used inside this box
        for (std::size_t k = 0; k < corner_.size(); ++k) idx[k] = col[k];
        for (;;) {
            std::size_t base = 0;
            for (std::size_t k = 0; k < last; ++k)
                base += static_cast<std::size_t>(idx[k]) * stride_[k];
            const std::size_t lo = base + static_cast<std::size_t>(col[last]);
            const std::size_t hi = base + static_cast<std::size_t>(corner_[last]);
            for (std::size_t p = lo; p <= hi; ++p) {
                Cell sum;
                if (!add_checked(table[p], table[p - off], sum))
                    throw TooLargeError("box table count overflows the cell type");
                table[p] = sum;
            }
            // advance the outer counter (dims 0..last-1)
            std::size_t k = last;
            while (k-- > 0) {
                if (++idx[k] <= corner_[k]) break;
                idx[k] = col[k];
                if (k == 0) goto next_column;
            }
            if (last == 0) break;  // single-dimension boxes have no outer counter
        }
    next_column:;
    }
}

BoxTable::BoxTable(const VpfMatrix& A, std::vector<long long> corner, std::size_t cell_budget)
    : corner_(std::move(corner)) {
    const int rows = A.rows();
    if (static_cast<int>(corner_.size()) != rows) throw DimensionMismatchError("corner length");
    for (long long c : corner_)
        if (c < 0) throw DimensionMismatchError("negative box corner");
    std::size_t total = 1;
    for (long long c : corner_) {
        const auto dim = static_cast<std::size_t>(c) + 1;
        if (total > cell_budget / dim + 1) throw TooLargeError("box exceeds cell budget");
        total *= dim;
    }
    if (total > cell_budget) throw TooLargeError("box exceeds cell budget");

    stride_.assign(corner_.size(), 0);
    std::size_t s = 1;
    for (std::size_t k = corner_.size(); k-- > 0;) {
        stride_[k] = s;
        s *= static_cast<std::size_t>(corner_[k]) + 1;
    }

    try {
        table_.assign(total, 0);
        sweep(A, table_);
        return;
    } catch (const TooLargeError&) {
        table_.clear();
        table_.shrink_to_fit();
    }
    // second pass with 128-bit cells (twice the memory, still in budget x2)
    wide_ = true;
    table128_.assign(total, 0);
    sweep(A, table128_);
}

std::size_t BoxTable::index_of(std::span<const long long> b) const {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < corner_.size(); ++k) {
        if (b[k] < 0 || b[k] > corner_[k]) throw DimensionMismatchError("query outside box");
        pos += static_cast<std::size_t>(b[k]) * stride_[k];
    }
    return pos;
}

BigInt BoxTable::at(std::span<const long long> b) const {
    for (long long v : b)
        if (v < 0) return 0;
    const std::size_t pos = index_of(b);
    if (!wide_) return BigInt(static_cast<unsigned long>(table_[pos]));
    const unsigned __int128 v = table128_[pos];
    BigInt hi(static_cast<unsigned long>(v >> 64));
    BigInt lo(static_cast<unsigned long>(v & 0xffffffffffffffffull));
    return (hi << 64) + lo;
}

}  // namespace kron
