#include "linalg.hpp"

#include <stdexcept>

namespace genera {

std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
    std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("linalg: matrix/vector size mismatch");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("linalg: matrix must be square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);

        Rational inv = a[col][col].inverse();
        for (std::size_t j = col; j < n; ++j)
            a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            Rational factor = a[row][col];
            for (std::size_t j = col; j < n; ++j)
                a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

}  // namespace genera
