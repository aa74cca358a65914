#include "feasibility.hpp"

#include <stdexcept>
#include <vector>

namespace darboux::detail {

namespace {

// Dense tableau over Q. Columns 0..cols-2 are variables, the last is the rhs.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : cols_(cols), cells_(rows * cols) {}
    Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

private:
    std::size_t cols_;
    std::vector<Rational> cells_;
};

}  // namespace

bool in_convex_hull(std::span<const LatticePoint> points, std::span<const Rational> target) {
    if (points.empty()) return false;
    const std::size_t n = target.size();
    const std::size_t vars = points.size();
    const std::size_t rows = n + 1;
    const std::size_t cols = vars + rows + 1;  // lambdas, artificials, rhs
    const std::size_t rhs = cols - 1;

    // Cheap rejection against the bounding box.
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t lo = points[0][j];
        std::int64_t hi = points[0][j];
        for (const auto& p : points) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        if (target[j] < lo || target[j] > hi) return false;
    }

    Tableau t(rows + 1, cols);  // last row holds reduced costs
    for (std::size_t r = 0; r < rows; ++r) {
        const bool affine_row = r == n;
        Rational b = affine_row ? Rational(1) : target[r];
        const bool flip = sgn(b) < 0;
        for (std::size_t i = 0; i < vars; ++i) {
            Rational a = affine_row ? Rational(1) : Rational(points[i][r]);
            t.at(r, i) = flip ? Rational(-a) : a;
        }
        t.at(r, vars + r) = 1;
        t.at(r, rhs) = flip ? Rational(-b) : b;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = vars + r;
    const std::size_t cost = rows;
    for (std::size_t c = 0; c < cols; ++c) {
        if (c >= vars && c < rhs) continue;
        Rational s = 0;
        for (std::size_t r = 0; r < rows; ++r) s -= t.at(r, c);
        t.at(cost, c) = s;
    }

    // Bland's rule: smallest entering index, smallest basic index on ties.
    for (;;) {
        std::size_t enter = rhs;
        for (std::size_t c = 0; c < rhs; ++c) {
            if (sgn(t.at(cost, c)) < 0) {
                enter = c;
                break;
            }
        }
        if (enter == rhs) break;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (sgn(t.at(r, enter)) <= 0) continue;
            Rational ratio = t.at(r, rhs) / t.at(r, enter);
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) throw std::logic_error("phase-one simplex is unbounded");

        const Rational pivot = t.at(leave, enter);
        for (std::size_t c = 0; c < cols; ++c) t.at(leave, c) /= pivot;
        for (std::size_t r = 0; r <= rows; ++r) {
            if (r == leave) continue;
            const Rational factor = t.at(r, enter);
            if (sgn(factor) == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) t.at(r, c) -= factor * t.at(leave, c);
        }
        basis[leave] = enter;
    }
    // -cost[rhs] is the remaining artificial mass.
    return sgn(t.at(cost, rhs)) == 0;
}

}  // namespace darboux::detail
