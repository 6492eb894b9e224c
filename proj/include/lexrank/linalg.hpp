#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lexrank {

// Rank of a dense matrix over an exact field, by Gaussian elimination.
// Rows are consumed; pivoting picks the first nonzero entry (deterministic).
template <class F>
int matrix_rank(const F& K, std::vector<std::vector<typename F::Elem>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && K.is_zero(rows[piv][col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        auto ipiv = K.inv(rows[row][col]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (K.is_zero(rows[r][col])) continue;
            auto factor = K.mul(rows[r][col], ipiv);
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = K.sub(rows[r][c], K.mul(factor, rows[row][c]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace lexrank
