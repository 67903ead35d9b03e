#pragma once

#include <vector>

#include "hgr/errors.hpp"
#include "hgr/rational.hpp"

namespace hgr {

struct Vec2 {
    Rational x, y;
    Vec2() = default;
    Vec2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Vec2(long long px, long long py) : x(px), y(py) {}

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational sq_norm(const Vec2& a) { return dot(a, a); }

// Counterclockwise tangent of a circle at direction (p - center); the
// clockwise tangent is its negative.
inline Vec2 rot90_ccw(const Vec2& v) { return {-v.y, v.x}; }
inline Vec2 rot90_cw(const Vec2& v) { return {v.y, -v.x}; }

inline int sign_of(const Rational& r) { return r.sign(); }

// Orientation of the triple (a, b, c): sign of the cross product of b-a, c-a.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

inline bool parallel_same_direction(const Vec2& u, const Vec2& v) {
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

inline bool antiparallel(const Vec2& u, const Vec2& v) {
    return cross(u, v).is_zero() && dot(u, v).sign() < 0;
}

// c collinear with [a,b] assumed; true when c lies in the closed box of a, b.
inline bool on_segment_collinear(const Vec2& a, const Vec2& b, const Vec2& c) {
    auto between = [](const Rational& lo, const Rational& hi, const Rational& v) {
        return (lo <= v && v <= hi) || (hi <= v && v <= lo);
    };
    return between(a.x, b.x, c.x) && between(a.y, b.y, c.y);
}

// Closed segments; any shared point counts, including touching endpoints and
// collinear overlap. Exact.
inline bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
    int o1 = orient(p1, p2, q1);
    int o2 = orient(p1, p2, q2);
    int o3 = orient(q1, q2, p1);
    int o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) return true;
    if (o1 == 0 && on_segment_collinear(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment_collinear(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment_collinear(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment_collinear(q1, q2, p2)) return true;
    return false;
}

// Squared distance from point o to the closed segment [a,b], exact.
inline Rational sq_dist_point_segment(const Vec2& o, const Vec2& a, const Vec2& b) {
    Vec2 d = b - a;
    Rational dd = sq_norm(d);
    if (dd.is_zero()) return sq_norm(a - o);
    Rational t = dot(o - a, d);
    if (t.sign() <= 0) return sq_norm(a - o);
    if (t >= dd) return sq_norm(b - o);
    // |a + (t/dd) d - o|^2 = |a-o|^2 - t^2/dd
    return sq_norm(a - o) - t * t / dd;
}

// Does the closed segment [a,b] meet the closed disk of squared radius r2
// anywhere except at exempt endpoints? An exempt endpoint (an attachment on
// this circle) may lie on the circle itself but not strictly inside, and the
// rest of the segment must stay strictly outside.
inline bool segment_violates_disk(const Vec2& a, const Vec2& b, const Vec2& o, const Rational& r2,
                                  bool exempt_a, bool exempt_b) {
    Rational da = sq_norm(a - o);
    Rational db = sq_norm(b - o);
    if (exempt_a ? da < r2 : da <= r2) return true;
    if (exempt_b ? db < r2 : db <= r2) return true;
    // Both endpoints acceptable; check the interior minimum.
    Vec2 d = b - a;
    Rational dd = sq_norm(d);
    if (dd.is_zero()) return false;
    Rational t = dot(o - a, d);
    if (t.sign() <= 0 || t >= dd) return false;  // minimum at an endpoint
    Rational interior_min = da - t * t / dd;
    return interior_min <= r2;
}

// Angular ordering of direction vectors around the origin, counterclockwise
// starting from the positive x-axis. Exact; vectors must be nonzero.
inline int angular_half(const Vec2& v) {
    // 0 for angle in [0, pi), 1 for [pi, 2pi)
    int ys = v.y.sign();
    if (ys > 0) return 0;
    if (ys < 0) return 1;
    return v.x.sign() > 0 ? 0 : 1;
}

inline bool angular_less(const Vec2& u, const Vec2& v) {
    int hu = angular_half(u), hv = angular_half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v).sign() > 0;
}

// Half-integer arithmetic for tangent-map degrees: value() = half_turns/2.
struct HalfInt {
    long long half_turns = 0;
    HalfInt() = default;
    explicit HalfInt(long long h) : half_turns(h) {}

    Rational value() const { return Rational(half_turns, 2); }
    bool is_integer() const { return half_turns % 2 == 0; }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.half_turns + b.half_turns); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.half_turns - b.half_turns); }
    HalfInt& operator+=(HalfInt o) {
        half_turns += o.half_turns;
        return *this;
    }
    friend bool operator==(HalfInt a, HalfInt b) { return a.half_turns == b.half_turns; }
    friend bool operator!=(HalfInt a, HalfInt b) { return !(a == b); }
};

// Total rotation of a continuously turning direction along a direction list,
// in half-turns (rotation / pi). The first and last directions must be
// horizontal, consecutive directions never antiparallel, each step turning by
// less than pi. The count equals the signed number of passages of the
// rotating direction through the vertical directions +y and -y. Each step's
// rotation arc is taken half-open, closed at its clockwise end, so a
// direction lying exactly at a vertical is counted exactly once whether the
// rotation passes it within one step or touches it at a shared vertex; a
// touch-and-return at a vertical contributes zero.
inline HalfInt turning_half_turns(const std::vector<Vec2>& dirs) {
    if (dirs.empty()) return HalfInt(0);
    for (const Vec2& d : dirs)
        if (d.is_zero()) throw NonHorizontalEnds("zero direction vector");
    auto horizontal = [](const Vec2& d) { return d.y.is_zero(); };
    if (!horizontal(dirs.front()) || !horizontal(dirs.back()))
        throw NonHorizontalEnds();

    static const Vec2 up(0, 1), down(0, -1);
    long long count = 0;
    for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
        const Vec2& u = dirs[k];
        const Vec2& v = dirs[k + 1];
        int s = cross(u, v).sign();
        if (s == 0) {
            if (dot(u, v).sign() < 0)
                throw AntiparallelStep("antiparallel directions at step " + std::to_string(k));
            continue;  // same direction, no rotation
        }
        for (const Vec2& w : {up, down}) {
            bool passed;
            if (s > 0) {
                // ccw arc [u, v): closed at the clockwise end u
                passed = parallel_same_direction(u, w) ||
                         (cross(u, w).sign() > 0 && cross(w, v).sign() > 0);
            } else {
                // cw arc (u, v]: closed at the clockwise end v
                passed = parallel_same_direction(v, w) ||
                         (cross(u, w).sign() < 0 && cross(w, v).sign() < 0);
            }
            if (passed) count += s;
        }
    }
    return HalfInt(count);
}

}  // namespace hgr
