#include "darboux/polytope.hpp"

#include "darboux/laurent_poly.hpp"
#include "feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace darboux {

namespace {

std::vector<Rational> to_rational(std::span<const std::int64_t> m) {
    return {m.begin(), m.end()};
}

std::vector<Rational> to_rational_point(const LatticePoint& m) {
    std::vector<Rational> out;
    out.reserve(m.size());
    for (auto x : m) out.emplace_back(static_cast<long>(x));
    return out;
}

void check_dimension(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(expected) + " vs " + std::to_string(got) + ")");
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<std::int64_t> primitive(std::int64_t a, std::int64_t b) {
    const std::int64_t g = std::gcd(a, b);
    return {a / g, b / g};
}

}  // namespace

IntPolytope convex_hull(std::size_t n, std::span<const LatticePoint> points) {
    for (const auto& p : points) check_dimension(n, p.size(), "convex_hull");
    std::vector<LatticePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Drop points one at a time while they lie in the hull of the rest; the
    // hull is unchanged by each removal, so the survivors are the vertices.
    std::size_t i = 0;
    while (pts.size() > 1 && i < pts.size()) {
        std::vector<LatticePoint> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (detail::in_convex_hull(others, to_rational_point(pts[i])))
            pts.erase(pts.begin() + static_cast<long>(i));
        else
            ++i;
    }
    IntPolytope out(n);
    out.vertices_ = std::move(pts);
    return out;
}

IntPolytope convex_hull(std::span<const LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: no points and no dimension given");
    if (points.front().empty()) throw std::invalid_argument("convex_hull: dimension must be at least 1");
    return convex_hull(points.front().size(), points);
}

bool contains_point(const IntPolytope& p, std::span<const Rational> m) {
    check_dimension(p.ambient_dimension(), m.size(), "contains_point");
    if (p.is_empty()) return false;
    return detail::in_convex_hull(p.vertices(), m);
}

bool contains_point(const IntPolytope& p, std::span<const std::int64_t> m) {
    const auto q = to_rational(m);
    return contains_point(p, std::span<const Rational>(q));
}

std::int64_t deg_nu(const IntPolytope& p, std::span<const std::int64_t> nu) {
    check_dimension(p.ambient_dimension(), nu.size(), "deg_nu");
    if (p.is_empty()) throw std::domain_error("deg_nu: empty polytope has no maximum");
    std::int64_t best = dot(nu, p.vertices().front());
    for (const auto& v : p.vertices()) best = std::max(best, dot(nu, v));
    return best;
}

IntPolytope minkowski_sum(const IntPolytope& p, const IntPolytope& q) {
    check_dimension(p.ambient_dimension(), q.ambient_dimension(), "minkowski_sum");
    const std::size_t n = p.ambient_dimension();
    if (p.is_empty() || q.is_empty()) return IntPolytope(n);
    std::vector<LatticePoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            LatticePoint s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = a[i] + b[i];
            sums.push_back(std::move(s));
        }
    }
    return convex_hull(n, sums);
}

IntPolytope translate(const IntPolytope& p, std::span<const std::int64_t> v) {
    check_dimension(p.ambient_dimension(), v.size(), "translate");
    IntPolytope out(p.ambient_dimension());
    out.vertices_ = p.vertices();
    for (auto& x : out.vertices_)
        for (std::size_t i = 0; i < v.size(); ++i) x[i] += v[i];
    return out;
}

std::vector<LatticePoint> lattice_points_nonneg(const IntPolytope& p) {
    std::vector<LatticePoint> out;
    if (p.is_empty()) return out;
    const std::size_t n = p.ambient_dimension();
    LatticePoint lo(n);
    LatticePoint hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] = 0;
        hi[j] = p.vertices().front()[j];
        for (const auto& v : p.vertices()) hi[j] = std::max(hi[j], v[j]);
        if (hi[j] < 0) return out;
    }
    // Odometer over the clipped box, last coordinate fastest: lexicographic.
    LatticePoint m = lo;
    for (;;) {
        if (contains_point(p, std::span<const std::int64_t>(m))) out.push_back(m);
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (m[j] < hi[j]) {
                ++m[j];
                break;
            }
            m[j] = lo[j];
            if (j == 0) return out;
        }
    }
}

std::vector<LatticePoint> ccw_vertices_2d(const IntPolytope& p) {
    if (p.ambient_dimension() != 2) throw std::invalid_argument("ccw_vertices_2d: polytope is not planar");
    const auto& v = p.vertices();
    if (v.size() <= 2) return v;
    const LatticePoint& first = v.front();
    const LatticePoint& last = v.back();
    std::vector<LatticePoint> lower;
    std::vector<LatticePoint> upper;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        (cross(first, last, v[i]) < 0 ? lower : upper).push_back(v[i]);
    std::vector<LatticePoint> out;
    out.push_back(first);
    out.insert(out.end(), lower.begin(), lower.end());
    out.push_back(last);
    out.insert(out.end(), upper.rbegin(), upper.rend());
    return out;
}

std::vector<Halfspace> halfspaces_2d(const IntPolytope& p) {
    if (p.ambient_dimension() != 2) throw std::invalid_argument("halfspaces_2d: polytope is not planar");
    if (p.is_empty()) throw std::invalid_argument("halfspaces_2d: empty polytope");
    const auto ring = ccw_vertices_2d(p);
    std::vector<Halfspace> out;
    auto add = [&](std::vector<std::int64_t> nu, const LatticePoint& on) {
        const std::int64_t offset = dot(nu, on);
        out.push_back({std::move(nu), offset});
    };
    if (ring.size() == 1) {
        add({1, 0}, ring[0]);
        add({-1, 0}, ring[0]);
        add({0, 1}, ring[0]);
        add({0, -1}, ring[0]);
    } else if (ring.size() == 2) {
        const auto d = primitive(ring[1][0] - ring[0][0], ring[1][1] - ring[0][1]);
        add({d[1], -d[0]}, ring[0]);
        add({-d[1], d[0]}, ring[0]);
        add({d[0], d[1]}, ring[1]);
        add({-d[0], -d[1]}, ring[0]);
    } else {
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const auto& a = ring[i];
            const auto& b = ring[(i + 1) % ring.size()];
            // Outward normal of a counterclockwise edge.
            add(primitive(b[1] - a[1], a[0] - b[0]), a);
        }
    }
    return out;
}

IntPolytope newton_polytope(const LaurentPoly& f) {
    const std::size_t n = f.num_variables();
    std::vector<LatticePoint> pts;
    pts.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) {
        LatticePoint x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = m[i];
        pts.push_back(std::move(x));
    }
    return convex_hull(n, pts);
}

}  // namespace darboux
