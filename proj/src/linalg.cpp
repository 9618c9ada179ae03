#include "kron/linalg.hpp"

#include <numeric>
#include <utility>

namespace kron {

int integer_matrix_rank(std::vector<std::vector<long long>> M) {
    int rank = 0;
    const std::size_t rows = M.size();
    if (rows == 0) return 0;
    const std::size_t cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (M[i][c] == 0) continue;
            const long long a = M[r][c], b = M[i][c];
            const long long g = std::gcd(a, b);
            const long long fa = b / g, fb = a / g;
            for (std::size_t k = c; k < cols; ++k) M[i][k] = M[i][k] * fb - M[r][k] * fa;
            // keep entries small
            long long rowg = 0;
            for (std::size_t k = c; k < cols; ++k) rowg = std::gcd(rowg, M[i][k]);
            if (rowg > 1)
                for (std::size_t k = c; k < cols; ++k) M[i][k] /= rowg;
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace kron
