#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "toric/polytope.hpp"

using namespace toric;

namespace {
Vec v1(long a) { return Vec{Int(a)}; }
Vec v2(long a, long b) { return Vec{Int(a), Int(b)}; }
}  // namespace

TEST_CASE("polytope hull keeps only extreme points") {
    LatticePolytope p = LatticePolytope::from_points(
        2, {v2(0, 0), v2(2, 0), v2(0, 2), v2(1, 1), v2(1, 0)});
    CHECK(p.vertices() == std::vector<Vec>{v2(0, 0), v2(0, 2), v2(2, 0)});
    CHECK(p.is_full_dimensional());
    CHECK(p.contains(v2(1, 1)));
    CHECK_FALSE(p.contains(v2(2, 1)));
}

TEST_CASE("lower-dimensional polytopes are detected") {
    LatticePolytope seg = LatticePolytope::from_points(2, {v2(0, 0), v2(3, 3)});
    CHECK(seg.dim() == 1);
    CHECK_FALSE(seg.is_full_dimensional());
    CHECK_THROWS_AS(normal_fan(seg), std::invalid_argument);
}

TEST_CASE("normal fan of a segment is the projective line fan") {
    LatticePolytope seg = LatticePolytope::from_points(1, {v1(0), v1(5)});
    NormalFan nf = normal_fan(seg);
    CHECK(nf.fan.is_complete());
    CHECK(nf.fan.rays() == std::vector<Vec>{v1(-1), v1(1)});
    // vertex 0 maps to cone(e1): inner normals at 0 point towards the polytope
    std::size_t c0 = nf.cone_of_vertex[0];
    CHECK(nf.fan.rays()[nf.fan.cones()[c0].ray_ids[0]] == v1(1));
    std::size_t c5 = nf.cone_of_vertex[1];
    CHECK(nf.fan.rays()[nf.fan.cones()[c5].ray_ids[0]] == v1(-1));
}

TEST_CASE("normal fan of the unit square is the four quadrants") {
    LatticePolytope sq = LatticePolytope::from_points(2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    NormalFan nf = normal_fan(sq);
    CHECK(nf.fan.is_complete());
    CHECK(nf.fan.is_smooth());
    CHECK(nf.fan.maximal_cones().size() == 4);
    CHECK(nf.fan.rays().size() == 4);
}

TEST_CASE("normal fan of the standard triangle is the projective plane fan") {
    LatticePolytope tri = LatticePolytope::from_points(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
    NormalFan nf = normal_fan(tri);
    CHECK(nf.fan.is_complete());
    CHECK(nf.fan.maximal_cones().size() == 3);
    std::vector<Vec> expect{v2(-1, -1), v2(0, 1), v2(1, 0)};
    CHECK(nf.fan.rays() == expect);
}

TEST_CASE("normal fan has one maximal cone per vertex") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(oracle::random_vec(rng, 2, -4, 4));
        LatticePolytope p = LatticePolytope::from_points(2, pts);
        if (!p.is_full_dimensional()) continue;
        NormalFan nf = normal_fan(p);
        CHECK(nf.fan.is_complete());
        CHECK(nf.fan.maximal_cones().size() == p.vertices().size());
        // normal cones are distinct per vertex
        std::set<std::size_t> distinct(nf.cone_of_vertex.begin(), nf.cone_of_vertex.end());
        CHECK(distinct.size() == p.vertices().size());
    }
}
