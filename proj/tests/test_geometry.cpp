#include <doctest.h>

#include <cmath>
#include <random>

#include "hgr/geometry.hpp"

using namespace hgr;

namespace {

std::vector<Vec2> dirs(std::initializer_list<std::pair<long long, long long>> v) {
    std::vector<Vec2> out;
    for (auto [x, y] : v) out.emplace_back(x, y);
    return out;
}

// Independent floating oracle: sum of signed turn angles over pi.
long long float_half_turns(const std::vector<Vec2>& d) {
    double total = 0;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        double cx = cross(d[k], d[k + 1]).to_double();
        double dx = dot(d[k], d[k + 1]).to_double();
        total += std::atan2(cx, dx);
    }
    double half = total / 3.14159265358979323846;
    long long rounded = std::llround(half);
    REQUIRE(std::abs(half - rounded) < 1e-6);
    return rounded;
}

}  // namespace

TEST_CASE("turning on the d1 arc direction sequences") {
    // directions of the drawn arc from c to d in data/d1_w.hgr
    auto arc1 = dirs({{-5, 0}, {-5, 6}, {-7, 0}, {-5, -3}, {0, -3}, {4, 0}});
    CHECK(turning_half_turns(arc1) == HalfInt(1));  // d_e = 1/2
    auto arc2 = dirs({{3, 0}, {0, -6}, {-11, -2}, {-6, 0}, {-1, 8}, {-3, 0}});
    CHECK(turning_half_turns(arc2) == HalfInt(-1));
}

TEST_CASE("turning basic cases") {
    CHECK(turning_half_turns(dirs({{1, 0}, {1, 0}, {5, 0}})) == HalfInt(0));
    CHECK(turning_half_turns(dirs({{1, 0}})) == HalfInt(0));
    // full counterclockwise half-circle
    CHECK(turning_half_turns(dirs({{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}})) == HalfInt(1));
    // clockwise
    CHECK(turning_half_turns(dirs({{1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}})) == HalfInt(-1));
    // two full turns up
    CHECK(turning_half_turns(dirs({{1, 0}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {1, 0},
                                   {1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {1, 0}})) == HalfInt(4));
}

TEST_CASE("turning with exact vertical directions") {
    // monotone passage through +y, sampled exactly at the vertical
    CHECK(turning_half_turns(dirs({{1, 0}, {0, 1}, {-1, 0}})) == HalfInt(1));
    CHECK(turning_half_turns(dirs({{1, 0}, {0, -1}, {-1, 0}})) == HalfInt(-1));
    // touch-and-return at a vertical counts zero
    CHECK(turning_half_turns(dirs({{1, 0}, {0, 1}, {1, 0}})) == HalfInt(0));
    CHECK(turning_half_turns(dirs({{-1, 0}, {0, -1}, {-1, 0}})) == HalfInt(0));
    // wiggle just short of vertical
    CHECK(turning_half_turns(dirs({{1, 0}, {1, 100}, {1, 0}})) == HalfInt(0));
}

TEST_CASE("turning error cases") {
    CHECK_THROWS_AS(turning_half_turns(dirs({{1, 0}, {-1, 0}})), AntiparallelStep);
    CHECK_THROWS_AS(turning_half_turns(dirs({{1, 1}, {1, 0}})), NonHorizontalEnds);
    CHECK_THROWS_AS(turning_half_turns(dirs({{1, 0}, {1, 1}})), NonHorizontalEnds);
    CHECK_THROWS_AS(turning_half_turns(dirs({{0, 1}, {1, 0}})), NonHorizontalEnds);
}

TEST_CASE("turning agrees with the float oracle on random walks") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int it = 0; it < 1500; ++it) {
        std::vector<Vec2> d;
        d.emplace_back(rng() & 1 ? 1 : -1, 0);
        int steps = 1 + static_cast<int>(rng() % 10);
        for (int s = 0; s < steps; ++s) {
            for (;;) {
                Vec2 cand(coord(rng), coord(rng));
                if (cand.is_zero()) continue;
                if (antiparallel(d.back(), cand)) continue;
                d.push_back(cand);
                break;
            }
        }
        // Close with a horizontal direction on the same side, never antiparallel.
        d.emplace_back(d.back().x.sign() < 0 ? -1 : 1, 0);
        CHECK(turning_half_turns(d).half_turns == float_half_turns(d));
    }
}

TEST_CASE("segment intersection predicate") {
    Vec2 a(0, 0), b(4, 4), c(0, 4), d(4, 0);
    CHECK(segments_intersect(a, b, c, d));                      // proper cross
    CHECK(segments_intersect(a, b, b, Vec2(8, 0)));             // shared endpoint
    CHECK(segments_intersect(a, Vec2(4, 0), Vec2(2, 0), Vec2(6, 0)));  // collinear overlap
    CHECK(!segments_intersect(a, Vec2(4, 0), Vec2(5, 0), Vec2(9, 0))); // collinear disjoint
    CHECK(!segments_intersect(a, b, Vec2(5, 0), Vec2(9, 0)));
    CHECK(segments_intersect(a, Vec2(4, 0), Vec2(2, 0), Vec2(2, 5)));  // T-touch
    CHECK(!segments_intersect(a, Vec2(4, 0), Vec2(2, 1), Vec2(2, 5)));
}

TEST_CASE("segment vs disk") {
    Vec2 o(0, 0);
    Rational r2(4);  // radius 2
    // far segment
    CHECK(!segment_violates_disk(Vec2(5, 5), Vec2(9, 5), o, r2, false, false));
    // secant
    CHECK(segment_violates_disk(Vec2(-5, 0), Vec2(5, 0), o, r2, false, false));
    // tangent line touches the closed disk
    CHECK(segment_violates_disk(Vec2(-5, 2), Vec2(5, 2), o, r2, false, false));
    // endpoint exactly on the circle: violation unless exempt
    CHECK(segment_violates_disk(Vec2(2, 0), Vec2(5, 0), o, r2, false, false));
    CHECK(!segment_violates_disk(Vec2(2, 0), Vec2(5, 0), o, r2, true, false));
    // exempt endpoint on the circle but segment dips inside
    CHECK(segment_violates_disk(Vec2(0, 2), Vec2(4, -2), o, r2, true, false));
    // exempt endpoint strictly inside is still a violation
    CHECK(segment_violates_disk(Vec2(1, 0), Vec2(5, 0), o, r2, true, false));
    // tangent direction from a point on the circle stays outside
    CHECK(!segment_violates_disk(Vec2(2, 0), Vec2(2, 5), o, r2, true, false));
}

TEST_CASE("angular ordering") {
    std::vector<Vec2> v = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            CHECK(angular_less(v[i], v[j]) == (i < j));
        }
}

TEST_CASE("half integers") {
    CHECK(HalfInt(1).value() == Rational(1, 2));
    CHECK(HalfInt(-3).value() == Rational(-3, 2));
    CHECK((HalfInt(1) + HalfInt(3)).value() == Rational(2));
    CHECK(HalfInt(4).is_integer());
    CHECK(!HalfInt(3).is_integer());
}
