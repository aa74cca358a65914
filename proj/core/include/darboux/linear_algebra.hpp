#pragma once

#include "darboux/field_scalar.hpp"
#include "darboux/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace darboux {

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_is_zero(const FieldScalar& x) { return x.is_zero(); }

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form in place (first nonzero pivot in each column,
/// rows scanned top-down). Returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && field_is_zero(a[p][col])) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        const F inv = F(1) / a[row][col];
        for (std::size_t c = col; c < cols; ++c) a[row][c] = a[row][c] * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || field_is_zero(a[r][col])) continue;
            const F factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - factor * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of {v : a v = 0}, one vector per free column in increasing order,
/// with that free coordinate equal to 1.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> a, std::size_t cols) {
    const auto pivots = row_reduce(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace darboux
