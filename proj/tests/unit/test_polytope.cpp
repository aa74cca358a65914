#include "darboux/laurent_poly.hpp"
#include "darboux/polytope.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace darboux;

namespace {

using Points = std::vector<LatticePoint>;

IntPolytope hull(const Points& pts) { return convex_hull(pts); }

const Points kSupportE3{{0, 0}, {3, 3}, {2, 3}, {3, 2}};
const Points kNdE3{{-1, 0}, {0, -1}, {1, 3}, {2, 3}, {3, 1}, {3, 2}};

// Outward primitive edge normals of a counterclockwise ring.
std::vector<std::vector<std::int64_t>> edge_normals(const Points& ring) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % ring.size()];
        std::int64_t nx = b[1] - a[1], ny = a[0] - b[0];
        const std::int64_t g = std::gcd(nx, ny);
        out.push_back({nx / g, ny / g});
    }
    return out;
}

std::int64_t max_dot(const std::vector<std::int64_t>& nu, const Points& pts) {
    std::int64_t best = oracle::dot(nu, pts.front());
    for (const auto& p : pts) best = std::max(best, oracle::dot(nu, p));
    return best;
}

}  // namespace

TEST(ConvexHull, CollinearPoints) {
    EXPECT_EQ(hull({{0, 0}, {1, 0}, {2, 0}}).vertices(), (Points{{0, 0}, {2, 0}}));
}

TEST(ConvexHull, SinglePoint) { EXPECT_EQ(hull({{0, 0}}).vertices(), (Points{{0, 0}})); }

TEST(ConvexHull, FamilySupportIsAllVertices) {
    EXPECT_EQ(hull(kSupportE3).vertices(), (Points{{0, 0}, {2, 3}, {3, 2}, {3, 3}}));
}

TEST(ConvexHull, MixedDimensionsThrow) {
    EXPECT_THROW(convex_hull(Points{{0, 0}, {1, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(convex_hull(3, Points{{0, 0}}), std::invalid_argument);
}

TEST(ConvexHull, EmptyInput) { EXPECT_TRUE(convex_hull(2, Points{}).is_empty()); }

TEST(ConvexHull, MatchesMonotoneChainOn2dSamples) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const auto pts = testgen::points(rng, 2, 1 + trial % 12, -4, 4);
        EXPECT_EQ(hull(pts).vertices(), oracle::hull2d(pts));
    }
}

TEST(ConvexHull, Idempotent) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const IntPolytope p = hull(testgen::points(rng, n, 8, -3, 3));
        EXPECT_EQ(hull(p.vertices()), p);
    }
}

TEST(ConvexHull, ThreeDimensionalCube) {
    Points pts;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) pts.push_back({a, b, c});
    EXPECT_EQ(hull(pts).vertices().size(), 8u);
}

TEST(ContainsPoint, Triangle) {
    const IntPolytope p = hull({{0, 0}, {2, 0}, {0, 2}});
    EXPECT_TRUE(contains_point(p, std::vector<std::int64_t>{1, 1}));
    EXPECT_FALSE(contains_point(p, std::vector<std::int64_t>{2, 1}));
    EXPECT_TRUE(contains_point(p, std::vector<Rational>{Rational(1, 3), Rational(5, 3)}));
    EXPECT_FALSE(contains_point(p, std::vector<Rational>{Rational(1, 3), Rational(7, 4)}));
}

TEST(ContainsPoint, FamilyPolygonExcludesTwoZero) {
    const IntPolytope p = hull(kNdE3);
    EXPECT_FALSE(contains_point(p, std::vector<std::int64_t>{2, 0}));
    EXPECT_FALSE(oracle::inside2d(kNdE3, {2, 0}));
    // The facet through (0,-1) and (3,1): 2x - 3y <= 3.
    EXPECT_EQ(deg_nu(p, std::vector<std::int64_t>{2, -3}), 3);
    EXPECT_GT(2 * 2 - 3 * 0, 3);
}

TEST(ContainsPoint, EmptyPolytopeContainsNothing) {
    EXPECT_FALSE(contains_point(IntPolytope(2), std::vector<std::int64_t>{0, 0}));
}

TEST(ContainsPoint, AgreesWithOrientationTest) {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = testgen::points(rng, 2, 1 + trial % 7, -3, 3);
        const IntPolytope p = hull(pts);
        for (std::int64_t x = -4; x <= 4; ++x)
            for (std::int64_t y = -4; y <= 4; ++y)
                ASSERT_EQ(contains_point(p, std::vector<std::int64_t>{x, y}), oracle::inside2d(pts, {x, y}));
    }
}

TEST(DegNu, Examples) {
    EXPECT_EQ(deg_nu(hull(kSupportE3), std::vector<std::int64_t>{1, 1}), 6);
    EXPECT_EQ(deg_nu(hull({{0, 0}}), std::vector<std::int64_t>{-7, 4}), 0);
    EXPECT_EQ(deg_nu(hull({{0, 0}, {2, 3}}), std::vector<std::int64_t>{3, -2}), 0);
    EXPECT_THROW(deg_nu(IntPolytope(2), std::vector<std::int64_t>{1, 0}), std::domain_error);
}

TEST(MinkowskiSum, Examples) {
    EXPECT_EQ(minkowski_sum(hull({{0, 0}, {1, 0}}), hull({{0, 0}, {0, 1}})).vertices(),
              (Points{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    const IntPolytope p = hull(kNdE3);
    EXPECT_EQ(minkowski_sum(p, hull({{0, 0}})), p);
    EXPECT_EQ(minkowski_sum(hull({{0, 0}, {1, 2}}), hull({{0, 0}, {2, 1}})).vertices(),
              oracle::hull2d({{0, 0}, {1, 2}, {2, 1}, {3, 3}}));
    EXPECT_TRUE(minkowski_sum(p, IntPolytope(2)).is_empty());
}

TEST(MinkowskiSum, DegNuIsAdditive) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const IntPolytope p = hull(testgen::points(rng, n, 5, -3, 3));
        const IntPolytope q = hull(testgen::points(rng, n, 5, -3, 3));
        const auto nu = testgen::direction(rng, n);
        EXPECT_EQ(deg_nu(minkowski_sum(p, q), nu), deg_nu(p, nu) + deg_nu(q, nu));
    }
}

TEST(MinkowskiSum, OstrowskiOnRandomPolynomials) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const LaurentPoly f = testgen::sparse_poly(rng, n, 6);
        const LaurentPoly g = testgen::sparse_poly(rng, n, 6);
        EXPECT_EQ(newton_polytope(f * g), minkowski_sum(newton_polytope(f), newton_polytope(g)));
    }
}

TEST(Translate, Examples) {
    const IntPolytope shifted = translate(hull(kSupportE3), std::vector<std::int64_t>{-1, 0});
    EXPECT_EQ(shifted.vertices(), (Points{{-1, 0}, {1, 3}, {2, 2}, {2, 3}}));
    const IntPolytope p = hull(kNdE3);
    EXPECT_EQ(translate(p, std::vector<std::int64_t>{0, 0}), p);
    EXPECT_EQ(translate(hull({{0, 0}}), std::vector<std::int64_t>{0, -1}).vertices(), (Points{{0, -1}}));
}

TEST(LatticePoints, Examples) {
    EXPECT_EQ(lattice_points_nonneg(hull({{0, 0}})), (Points{{0, 0}}));
    const auto pts_e3 = lattice_points_nonneg(hull(kNdE3));
    EXPECT_EQ(pts_e3.size(), 11u);
    EXPECT_EQ(pts_e3.size(), oracle::nonneg_count2d(kNdE3, 4));
    EXPECT_EQ(lattice_points_nonneg(hull({{0, 0}, {2, 0}})), (Points{{0, 0}, {1, 0}, {2, 0}}));
    EXPECT_TRUE(lattice_points_nonneg(hull({{-2, -1}, {-1, -3}})).empty());
    EXPECT_TRUE(lattice_points_nonneg(IntPolytope(3)).empty());
}

TEST(LatticePoints, ExactlyTheMembersOfTheBox) {
    std::mt19937 rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const IntPolytope p = hull(testgen::points(rng, n, 6, -2, 4));
        const auto listed = lattice_points_nonneg(p);
        std::set<LatticePoint> found(listed.begin(), listed.end());
        EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
        LatticePoint m(n, 0);
        while (true) {
            EXPECT_EQ(found.count(m) == 1, contains_point(p, m));
            std::size_t i = 0;
            while (i < n && ++m[i] > 5) m[i++] = 0;
            if (i == n) break;
        }
    }
}

TEST(Halfspaces2d, FamilyPolygon) {
    const IntPolytope p = hull(kNdE3);
    const auto hs = halfspaces_2d(p);
    const auto ring = ccw_vertices_2d(p);
    EXPECT_EQ(ring, oracle::ring2d(kNdE3));
    const auto normals = edge_normals(ring);
    ASSERT_EQ(hs.size(), normals.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        EXPECT_EQ(hs[i].normal, normals[i]);
        EXPECT_EQ(hs[i].offset, max_dot(normals[i], kNdE3));
    }
}

TEST(Halfspaces2d, DegenerateShapes) {
    for (const Points& pts : {Points{{1, 2}}, Points{{0, 0}, {2, 4}}}) {
        const IntPolytope p = hull(pts);
        for (std::int64_t x = -2; x <= 4; ++x)
            for (std::int64_t y = -2; y <= 5; ++y) {
                bool inside = true;
                for (const auto& h : halfspaces_2d(p)) inside = inside && oracle::dot(h.normal, {x, y}) <= h.offset;
                EXPECT_EQ(inside, oracle::inside2d(pts, {x, y}));
            }
    }
    EXPECT_THROW(halfspaces_2d(IntPolytope(2)), std::invalid_argument);
    EXPECT_THROW(ccw_vertices_2d(hull({{0, 0, 0}})), std::invalid_argument);
}

TEST(Inclusion, FacetDegreesDecideContainment2d) {
    std::mt19937 rng(12);
    int positives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = testgen::points(rng, 2, 6, -3, 3);
        const auto ring = oracle::ring2d(pts);
        if (ring.size() < 3) continue;
        const IntPolytope p = hull(pts);
        const auto q = testgen::points(rng, 2, 1 + trial % 4, -2, 2);
        bool dominated = true;
        for (const auto& nu : edge_normals(ring)) dominated = dominated && max_dot(nu, q) <= max_dot(nu, pts);
        bool contained = true;
        const IntPolytope qh = hull(q);
        for (const auto& v : qh.vertices()) contained = contained && contains_point(p, v);
        EXPECT_EQ(dominated, contained);
        positives += dominated;
    }
    EXPECT_GT(positives, 30);
}

TEST(Inclusion, FacetDegreesDecideContainment3d) {
    std::mt19937 rng(13);
    int checked = 0, positives = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto pts = testgen::points(rng, 3, 7, 0, 2);
        if (oracle::affine_rank(pts) < 3) continue;
        const IntPolytope p = hull(pts);
        const auto normals = oracle::facet_normals_3d(p.vertices(), 8);
        ASSERT_GE(normals.size(), 4u);
        for (int k = 0; k < 10; ++k) {
            const auto q = testgen::points(rng, 3, 1 + k % 3, 0, 2);
            bool dominated = true;
            for (const auto& nu : normals) dominated = dominated && max_dot(nu, q) <= max_dot(nu, pts);
            bool contained = true;
            const IntPolytope qh = hull(q);
            for (const auto& v : qh.vertices()) contained = contained && contains_point(p, v);
            EXPECT_EQ(dominated, contained);
            positives += dominated;
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
    EXPECT_GT(positives, 10);
}

TEST(NewtonPolytope, OfPolynomials) {
    LaurentPoly f(2);
    f.add_term(Monomial{3, 3}, Rational(1));
    f.add_term(Monomial{2, 3}, Rational(2));
    f.add_term(Monomial{3, 2}, Rational(3));
    f.add_term(Monomial{0, 0}, Rational(5));
    EXPECT_EQ(newton_polytope(f), hull(kSupportE3));
    EXPECT_TRUE(newton_polytope(LaurentPoly(2)).is_empty());
}
