#pragma once

#include "darboux/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace darboux {

class LaurentPoly;

using LatticePoint = std::vector<std::int64_t>;

/// Convex hull of finitely many lattice points, stored by its vertices.
///
/// The vertex list is irredundant and sorted lexicographically; an empty list
/// is the empty polytope.
class IntPolytope {
public:
    explicit IntPolytope(std::size_t n) : n_(n) {}

    std::size_t ambient_dimension() const { return n_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    bool is_empty() const { return vertices_.empty(); }

    friend bool operator==(const IntPolytope& a, const IntPolytope& b) {
        return a.n_ == b.n_ && a.vertices_ == b.vertices_;
    }

private:
    friend IntPolytope convex_hull(std::size_t n, std::span<const LatticePoint> points);
    friend IntPolytope translate(const IntPolytope& p, std::span<const std::int64_t> v);

    std::size_t n_;
    std::vector<LatticePoint> vertices_;
};

/// nu . m <= offset, with nu primitive and nonzero.
struct Halfspace {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Irredundant hull of the points, all of dimension n. Throws
/// std::invalid_argument on a dimension mismatch.
IntPolytope convex_hull(std::size_t n, std::span<const LatticePoint> points);
/// As above, taking n from the first point; the list must be nonempty.
IntPolytope convex_hull(std::span<const LatticePoint> points);

/// Exact membership of a rational point; the empty polytope contains nothing.
bool contains_point(const IntPolytope& p, std::span<const Rational> m);
bool contains_point(const IntPolytope& p, std::span<const std::int64_t> m);

/// max over P of nu . m. Throws std::domain_error for the empty polytope.
std::int64_t deg_nu(const IntPolytope& p, std::span<const std::int64_t> nu);

/// Empty when either summand is empty.
IntPolytope minkowski_sum(const IntPolytope& p, const IntPolytope& q);

IntPolytope translate(const IntPolytope& p, std::span<const std::int64_t> v);

/// m in Z^n, m >= 0, m in P; lexicographic order.
std::vector<LatticePoint> lattice_points_nonneg(const IntPolytope& p);

/// Vertices of a planar polytope in counterclockwise order, starting at the
/// lexicographic minimum. Throws std::invalid_argument unless n == 2.
std::vector<LatticePoint> ccw_vertices_2d(const IntPolytope& p);

/// A halfspace description of a nonempty planar polytope: one halfspace
/// per edge for polygons, plus cap halfspaces for segments and points.
/// Throws std::invalid_argument unless n == 2 and P is nonempty.
std::vector<Halfspace> halfspaces_2d(const IntPolytope& p);

/// Newton polytope of f: hull of the exponents of its nonzero terms.
IntPolytope newton_polytope(const LaurentPoly& f);

}  // namespace darboux
