#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgr/diagram.hpp"
#include "hgr/errors.hpp"
#include "hgr/exact_json.hpp"
#include "hgr/geometry.hpp"

namespace hgr {

// Geometric rectangular diagram: the cut surface drawn in a rectangle with two
// circle copies per alpha curve (prime counterclockwise, second clockwise),
// beta curves as polyline arcs between crossing attachments, and the matching
// marked. The exterior point w is not a field: a layout IS a choice of w.

enum class Copy { Prime, Second };

inline const char* copy_name(Copy c) { return c == Copy::Prime ? "prime" : "second"; }

struct Circle {
    Vec2 center;
    Rational radius;
};

struct AlphaPair {
    Circle prime;
    Circle second;
};

struct CrossingGeom {
    std::string id;
    int alpha = 0;  // 1-based
    Vec2 prime_point;
    Vec2 second_point;
};

struct ArcEnd {
    int crossing = -1;  // index into RectLayout::crossings
    Copy copy = Copy::Prime;
};

struct BetaArc {
    ArcEnd from;
    ArcEnd to;
    std::vector<Vec2> via;
};

struct BetaCurve {
    int index = 0;  // 1-based
    std::vector<BetaArc> arcs;
};

struct Rect {
    Rational x_min, y_min, x_max, y_max;
};

struct RectLayout {
    Rect rect;
    std::vector<AlphaPair> alpha;        // [i-1]
    std::vector<CrossingGeom> crossings;
    std::vector<BetaCurve> beta;         // [j-1]
    std::vector<int> matching;           // crossing indices

    int genus() const { return static_cast<int>(alpha.size()); }

    int find(const std::string& id) const {
        for (std::size_t k = 0; k < crossings.size(); ++k)
            if (crossings[k].id == id) return static_cast<int>(k);
        return -1;
    }

    const Vec2& attachment(int crossing, Copy c) const {
        return c == Copy::Prime ? crossings[crossing].prime_point
                                : crossings[crossing].second_point;
    }

    const Circle& circle(int alpha_index, Copy c) const {
        const AlphaPair& p = alpha[static_cast<std::size_t>(alpha_index) - 1];
        return c == Copy::Prime ? p.prime : p.second;
    }

    // Polyline of an arc: from-attachment, via points, to-attachment.
    std::vector<Vec2> arc_points(const BetaArc& a) const {
        std::vector<Vec2> pts;
        pts.push_back(attachment(a.from.crossing, a.from.copy));
        for (const Vec2& v : a.via) pts.push_back(v);
        pts.push_back(attachment(a.to.crossing, a.to.copy));
        return pts;
    }

    bool in_matching(int crossing) const {
        return std::find(matching.begin(), matching.end(), crossing) != matching.end();
    }
};

// ---------------------------------------------------------------------------
// Parsing (.hgr files)
// ---------------------------------------------------------------------------

namespace detail {

inline Vec2 parse_point(const JValue& v, const std::string& at) {
    const auto& arr = expect_array(v, at);
    if (arr.size() != 2) throw ParseError(at + ": a point is a two-element array");
    return {expect_rational(arr[0], at + "[0]"), expect_rational(arr[1], at + "[1]")};
}

inline Circle parse_circle(const JValue& v, const std::string& at) {
    Circle c;
    c.center = parse_point(expect_field(v, "center", at), at + ".center");
    c.radius = expect_rational(expect_field(v, "radius", at), at + ".radius");
    if (c.radius.sign() <= 0) throw ParseError(at + ".radius: must be positive");
    return c;
}

inline Copy parse_copy(const JValue& v, const std::string& at) {
    const std::string& s = expect_string(v, at);
    if (s == "prime") return Copy::Prime;
    if (s == "second") return Copy::Second;
    throw ParseError(at + ": copy must be \"prime\" or \"second\"");
}

}  // namespace detail

inline RectLayout parse_layout(std::string_view text) {
    JValue doc = parse_exact_json(text);
    if (!doc.is_object()) throw ParseError("layout: top level must be an object");
    RectLayout l;

    long long genus = expect_int(expect_field(doc, "genus", "layout"), "layout.genus");
    if (genus < 0) throw ParseError("layout.genus: must be >= 0");

    const JValue& rect = expect_field(doc, "rect", "layout");
    l.rect.x_min = expect_rational(expect_field(rect, "x_min", "rect"), "rect.x_min");
    l.rect.y_min = expect_rational(expect_field(rect, "y_min", "rect"), "rect.y_min");
    l.rect.x_max = expect_rational(expect_field(rect, "x_max", "rect"), "rect.x_max");
    l.rect.y_max = expect_rational(expect_field(rect, "y_max", "rect"), "rect.y_max");
    if (!(l.rect.x_min < l.rect.x_max) || !(l.rect.y_min < l.rect.y_max))
        throw ParseError("rect: empty rectangle");

    const auto& alpha = expect_array(expect_field(doc, "alpha", "layout"), "layout.alpha");
    if (static_cast<long long>(alpha.size()) != genus)
        throw ParseError("layout.alpha: expected one circle pair per alpha curve");
    l.alpha.resize(alpha.size());
    std::vector<bool> alpha_seen(alpha.size(), false);
    for (std::size_t n = 0; n < alpha.size(); ++n) {
        std::string at = "alpha[" + std::to_string(n) + "]";
        long long idx = expect_int(expect_field(alpha[n], "index", at), at + ".index");
        if (idx < 1 || idx > genus) throw ParseError(at + ".index: out of range");
        if (alpha_seen[static_cast<std::size_t>(idx) - 1])
            throw DuplicateId(at + ".index: alpha index " + std::to_string(idx) + " repeated");
        alpha_seen[static_cast<std::size_t>(idx) - 1] = true;
        AlphaPair& p = l.alpha[static_cast<std::size_t>(idx) - 1];
        p.prime = detail::parse_circle(expect_field(alpha[n], "prime", at), at + ".prime");
        p.second = detail::parse_circle(expect_field(alpha[n], "second", at), at + ".second");
    }

    const auto& cross = expect_array(expect_field(doc, "crossings", "layout"), "layout.crossings");
    for (std::size_t n = 0; n < cross.size(); ++n) {
        std::string at = "crossings[" + std::to_string(n) + "]";
        CrossingGeom c;
        c.id = expect_string(expect_field(cross[n], "id", at), at + ".id");
        if (c.id.empty()) throw ParseError(at + ".id: empty crossing id");
        if (l.find(c.id) >= 0) throw DuplicateId(at + ".id: crossing id \"" + c.id + "\" repeated");
        long long a = expect_int(expect_field(cross[n], "alpha", at), at + ".alpha");
        if (a < 1 || a > genus) throw ParseError(at + ".alpha: out of range");
        c.alpha = static_cast<int>(a);
        c.prime_point =
            detail::parse_point(expect_field(cross[n], "prime_point", at), at + ".prime_point");
        c.second_point =
            detail::parse_point(expect_field(cross[n], "second_point", at), at + ".second_point");
        l.crossings.push_back(std::move(c));
    }

    const auto& beta = expect_array(expect_field(doc, "beta", "layout"), "layout.beta");
    if (static_cast<long long>(beta.size()) != genus)
        throw ParseError("layout.beta: expected one curve per beta index");
    l.beta.resize(beta.size());
    std::vector<bool> beta_seen(beta.size(), false);
    for (std::size_t n = 0; n < beta.size(); ++n) {
        std::string at = "beta[" + std::to_string(n) + "]";
        long long idx = expect_int(expect_field(beta[n], "index", at), at + ".index");
        if (idx < 1 || idx > genus) throw ParseError(at + ".index: out of range");
        if (beta_seen[static_cast<std::size_t>(idx) - 1])
            throw DuplicateId(at + ".index: beta index " + std::to_string(idx) + " repeated");
        beta_seen[static_cast<std::size_t>(idx) - 1] = true;
        BetaCurve& curve = l.beta[static_cast<std::size_t>(idx) - 1];
        curve.index = static_cast<int>(idx);
        const auto& arcs = expect_array(expect_field(beta[n], "arcs", at), at + ".arcs");
        for (std::size_t m = 0; m < arcs.size(); ++m) {
            std::string aat = at + ".arcs[" + std::to_string(m) + "]";
            BetaArc arc;
            auto parse_end = [&](const char* name) {
                const JValue& e = expect_field(arcs[m], name, aat);
                ArcEnd end;
                const std::string& id =
                    expect_string(expect_field(e, "crossing", aat), aat + "." + name + ".crossing");
                int k = l.find(id);
                if (k < 0)
                    throw UnknownReference(aat + "." + name + ": unknown crossing id \"" + id +
                                           "\"");
                end.crossing = k;
                end.copy = detail::parse_copy(expect_field(e, "copy", aat), aat + "." + name + ".copy");
                return end;
            };
            arc.from = parse_end("from");
            arc.to = parse_end("to");
            if (const JValue* via = arcs[m].get("via")) {
                const auto& pts = expect_array(*via, aat + ".via");
                for (std::size_t p = 0; p < pts.size(); ++p)
                    arc.via.push_back(
                        detail::parse_point(pts[p], aat + ".via[" + std::to_string(p) + "]"));
            }
            curve.arcs.push_back(std::move(arc));
        }
    }

    if (const JValue* m = doc.get("matching")) {
        for (const JValue& v : expect_array(*m, "layout.matching")) {
            const std::string& id = expect_string(v, "layout.matching");
            int k = l.find(id);
            if (k < 0)
                throw UnknownReference("layout.matching: unknown crossing id \"" + id + "\"");
            if (l.in_matching(k))
                throw DuplicateId("layout.matching: crossing \"" + id + "\" repeated");
            l.matching.push_back(k);
        }
    }
    return l;
}

// ---------------------------------------------------------------------------
// Tangents and attachment classification
// ---------------------------------------------------------------------------

namespace detail {

// Alpha tangent at an attachment: counterclockwise on the prime copy,
// clockwise on the second copy (the two copies carry opposite boundary
// orientations of the cut surface).
inline Vec2 alpha_tangent(const RectLayout& l, int crossing, Copy copy) {
    const CrossingGeom& c = l.crossings[static_cast<std::size_t>(crossing)];
    const Circle& circ = l.circle(c.alpha, copy);
    Vec2 radial = l.attachment(crossing, copy) - circ.center;
    return copy == Copy::Prime ? rot90_ccw(radial) : rot90_cw(radial);
}

struct ArcEndUse {
    int beta_index = 0;   // 1-based
    int arc = -1;         // position in that curve's arc list
    bool is_from = false;
};

// Map (crossing, copy) -> the unique arc end sitting there.
inline bool collect_arc_ends(const RectLayout& l,
                             std::vector<std::array<std::optional<ArcEndUse>, 2>>& ends,
                             ValidationReport* rep) {
    ends.assign(l.crossings.size(), {});
    bool ok = true;
    for (const BetaCurve& b : l.beta) {
        for (std::size_t m = 0; m < b.arcs.size(); ++m) {
            const BetaArc& arc = b.arcs[m];
            for (int side = 0; side < 2; ++side) {
                const ArcEnd& e = side == 0 ? arc.from : arc.to;
                auto& slot = ends[static_cast<std::size_t>(e.crossing)][e.copy == Copy::Prime ? 0 : 1];
                if (slot.has_value()) {
                    ok = false;
                    if (rep)
                        rep->add("arc end multiplicity", l.crossings[e.crossing].id,
                                 std::string("more than one arc end on the ") + copy_name(e.copy) +
                                     " copy");
                } else {
                    slot = ArcEndUse{b.index, static_cast<int>(m), side == 0};
                }
            }
        }
    }
    if (rep) {
        for (std::size_t k = 0; k < l.crossings.size(); ++k)
            for (int s = 0; s < 2; ++s)
                if (!ends[k][s].has_value()) {
                    ok = false;
                    rep->add("arc end multiplicity", l.crossings[k].id,
                             std::string("no arc end on the ") + (s == 0 ? "prime" : "second") +
                                 " copy");
                }
    }
    return ok;
}

// Direction of the beta strand at the given arc end (pointing along the
// strand's orientation). For a from-end this is the first segment direction,
// for a to-end the last.
inline Vec2 strand_direction(const RectLayout& l, const BetaArc& arc, bool at_from) {
    std::vector<Vec2> pts = l.arc_points(arc);
    if (at_from) return pts[1] - pts[0];
    return pts[pts.size() - 1] - pts[pts.size() - 2];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

// Exact-predicate validation of the drawing conventions. Report-based: all
// rules are checked, each violation carries a stable rule id.
inline ValidationReport validate_layout(const RectLayout& l) {
    ValidationReport rep;
    const int g = l.genus();

    auto circle_entity = [&](int i, Copy c) {
        return "alpha" + std::to_string(i) + " " + copy_name(c);
    };

    // Circles inside the rectangle, pairwise disjoint.
    std::vector<std::pair<Circle, std::string>> circles;
    for (int i = 1; i <= g; ++i) {
        circles.push_back({l.circle(i, Copy::Prime), circle_entity(i, Copy::Prime)});
        circles.push_back({l.circle(i, Copy::Second), circle_entity(i, Copy::Second)});
    }
    for (const auto& [c, name] : circles) {
        if (!(c.center.x - c.radius > l.rect.x_min) || !(c.center.x + c.radius < l.rect.x_max) ||
            !(c.center.y - c.radius > l.rect.y_min) || !(c.center.y + c.radius < l.rect.y_max))
            rep.add("circle outside rectangle", name,
                    "circle must lie strictly inside the rectangle");
    }
    for (std::size_t a = 0; a < circles.size(); ++a)
        for (std::size_t b = a + 1; b < circles.size(); ++b) {
            Rational d2 = sq_norm(circles[a].first.center - circles[b].first.center);
            Rational rr = circles[a].first.radius + circles[b].first.radius;
            if (!(d2 > rr * rr))
                rep.add("circles overlap", circles[a].second + " / " + circles[b].second,
                        "circle disks must be disjoint");
        }

    // Attachment tangent classes; favourite placement.
    for (std::size_t k = 0; k < l.crossings.size(); ++k) {
        bool matched = l.in_matching(static_cast<int>(k));
        for (Copy copy : {Copy::Prime, Copy::Second}) {
            Vec2 t = detail::alpha_tangent(l, static_cast<int>(k), copy);
            int up = t.y.sign();
            std::string entity = l.crossings[k].id + std::string(" (") + copy_name(copy) + ")";
            if (up == 0) {
                rep.add("attachment tangent degenerate", entity,
                        "alpha tangent at the attachment is horizontal");
            } else if (matched && up < 0) {
                rep.add("favourite placement", entity,
                        "matching crossing must sit at an up-tangent attachment");
            } else if (!matched && up > 0) {
                rep.add("favourite placement", entity,
                        "non-matching crossing must sit at a down-tangent attachment");
            }
            // Attachment may lie on its circle but not strictly inside it.
            const Circle& circ = l.circle(l.crossings[k].alpha, copy);
            if (sq_norm(l.attachment(static_cast<int>(k), copy) - circ.center) <
                circ.radius * circ.radius)
                rep.add("attachment inside circle", entity,
                        "attachment point lies strictly inside its circle disk");
        }
    }

    // Matching well-formedness: one crossing per alpha curve. (The beta side
    // is checked after arc chains are known.)
    {
        std::vector<int> per_alpha(g, 0);
        for (int k : l.matching) ++per_alpha[l.crossings[k].alpha - 1];
        if (static_cast<int>(l.matching.size()) != g)
            rep.add("matching malformed", "matching",
                    "matching must list exactly one crossing per curve");
        else
            for (int i = 0; i < g; ++i)
                if (per_alpha[i] != 1)
                    rep.add("matching malformed", "alpha" + std::to_string(i + 1),
                            "matching must hit every alpha curve exactly once");
    }

    // Arc ends: one per crossing copy.
    std::vector<std::array<std::optional<detail::ArcEndUse>, 2>> ends;
    detail::collect_arc_ends(l, ends, &rep);

    // Chain structure: consecutive arcs pass through a crossing on opposite
    // copies; strand direction is horizontal and continuous there.
    for (const BetaCurve& b : l.beta) {
        std::string bname = "beta" + std::to_string(b.index);
        if (b.arcs.empty()) continue;
        for (std::size_t m = 0; m < b.arcs.size(); ++m) {
            const BetaArc& cur = b.arcs[m];
            const BetaArc& nxt = b.arcs[(m + 1) % b.arcs.size()];
            if (cur.to.crossing != nxt.from.crossing)
                rep.add("chain broken", bname + " arc " + std::to_string(m),
                        "consecutive arcs must pass through the same crossing");
            else if (cur.to.copy == nxt.from.copy)
                rep.add("chain broken", bname + " arc " + std::to_string(m),
                        "the strand must emerge on the opposite copy");
        }
    }

    // Per-arc polyline rules.
    struct SegRef {
        Vec2 a, b;
        int beta_index;
        std::size_t arc;
        std::size_t seg;
    };
    std::vector<SegRef> all_segments;
    for (const BetaCurve& b : l.beta) {
        for (std::size_t m = 0; m < b.arcs.size(); ++m) {
            const BetaArc& arc = b.arcs[m];
            std::string aname = "beta" + std::to_string(b.index) + " arc " + std::to_string(m);
            std::vector<Vec2> pts = l.arc_points(arc);

            bool degenerate = false;
            for (std::size_t p = 0; p + 1 < pts.size(); ++p)
                if (pts[p] == pts[p + 1]) {
                    rep.add("degenerate segment", aname, "consecutive polyline points coincide");
                    degenerate = true;
                }
            if (degenerate) continue;

            if (!(pts[1].y == pts[0].y))
                rep.add("non-horizontal arc end", aname, "first segment must be horizontal");
            if (!(pts[pts.size() - 1].y == pts[pts.size() - 2].y))
                rep.add("non-horizontal arc end", aname, "last segment must be horizontal");

            for (std::size_t p = 0; p + 2 < pts.size(); ++p) {
                Vec2 u = pts[p + 1] - pts[p];
                Vec2 v = pts[p + 2] - pts[p + 1];
                if (antiparallel(u, v))
                    rep.add("antiparallel vertex", aname,
                            "polyline reverses direction at vertex " + std::to_string(p + 1));
            }

            for (const Vec2& p : pts)
                if (!(p.x > l.rect.x_min && p.x < l.rect.x_max && p.y > l.rect.y_min &&
                      p.y < l.rect.y_max)) {
                    rep.add("arc outside rectangle", aname,
                            "polyline must stay strictly inside the rectangle");
                    break;
                }

            // Simplicity: non-adjacent segments must not meet.
            for (std::size_t p = 0; p + 1 < pts.size(); ++p)
                for (std::size_t q = p + 2; q + 1 < pts.size(); ++q)
                    if (segments_intersect(pts[p], pts[p + 1], pts[q], pts[q + 1])) {
                        rep.add("arc self-intersection", aname,
                                "segments " + std::to_string(p) + " and " + std::to_string(q) +
                                    " intersect");
                    }

            // Disk avoidance, exempting this arc's own attachment endpoints.
            for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
                for (int i = 1; i <= g; ++i) {
                    for (Copy copy : {Copy::Prime, Copy::Second}) {
                        const Circle& circ = l.circle(i, copy);
                        bool exempt_a = p == 0 && arc.from.copy == copy &&
                                        l.crossings[arc.from.crossing].alpha == i;
                        bool exempt_b = p + 2 == pts.size() && arc.to.copy == copy &&
                                        l.crossings[arc.to.crossing].alpha == i;
                        if (segment_violates_disk(pts[p], pts[p + 1], circ.center,
                                                  circ.radius * circ.radius, exempt_a, exempt_b))
                            rep.add("arc enters circle", aname,
                                    "segment " + std::to_string(p) + " meets the disk of " +
                                        circle_entity(i, copy));
                    }
                }
            }

            for (std::size_t p = 0; p + 1 < pts.size(); ++p)
                all_segments.push_back({pts[p], pts[p + 1], b.index, m, p});
        }
    }

    // Arcs are pairwise disjoint (they share no endpoints by construction).
    for (std::size_t a = 0; a < all_segments.size(); ++a)
        for (std::size_t b = a + 1; b < all_segments.size(); ++b) {
            const SegRef& s = all_segments[a];
            const SegRef& t = all_segments[b];
            if (s.beta_index == t.beta_index && s.arc == t.arc) continue;
            if (segments_intersect(s.a, s.b, t.a, t.b))
                rep.add("arcs intersect",
                        "beta" + std::to_string(s.beta_index) + " arc " + std::to_string(s.arc) +
                            " / beta" + std::to_string(t.beta_index) + " arc " +
                            std::to_string(t.arc),
                        "beta arcs must be pairwise disjoint");
        }

    // Direction continuity through crossings: incoming horizontal direction
    // equals outgoing.
    bool ends_ok = true;
    for (std::size_t k = 0; k < l.crossings.size(); ++k)
        for (int s = 0; s < 2; ++s)
            if (!ends[k][s].has_value()) ends_ok = false;
    if (ends_ok) {
        for (std::size_t k = 0; k < l.crossings.size(); ++k) {
            const auto& e0 = *ends[k][0];
            const auto& e1 = *ends[k][1];
            if (e0.is_from == e1.is_from) {
                rep.add("chain broken", l.crossings[k].id,
                        "a strand must arrive on one copy and leave on the other");
                continue;
            }
            const auto& arr = e0.is_from ? e1 : e0;
            const auto& dep = e0.is_from ? e0 : e1;
            const BetaArc& arc_in = l.beta[arr.beta_index - 1].arcs[arr.arc];
            const BetaArc& arc_out = l.beta[dep.beta_index - 1].arcs[dep.arc];
            Vec2 din = detail::strand_direction(l, arc_in, false);
            Vec2 dout = detail::strand_direction(l, arc_out, true);
            if (!din.y.is_zero() || !dout.y.is_zero()) continue;  // already reported
            if (din.x.sign() != dout.x.sign())
                rep.add("direction discontinuity", l.crossings[k].id,
                        "incoming and outgoing horizontal directions differ");
        }
    }

    // Matching hits each beta curve once (beta membership from arc ends).
    if (ends_ok && static_cast<int>(l.matching.size()) == g) {
        std::vector<int> per_beta(g, 0);
        for (int k : l.matching) {
            const auto& use = *ends[static_cast<std::size_t>(k)][0];
            ++per_beta[use.beta_index - 1];
        }
        for (int j = 0; j < g; ++j)
            if (per_beta[j] != 1)
                rep.add("matching malformed", "beta" + std::to_string(j + 1),
                        "matching must hit every beta curve exactly once");
    }

    // Cyclic order consistency: the counterclockwise word around the prime
    // copy equals the clockwise word around the second copy.
    for (int i = 1; i <= g; ++i) {
        std::vector<int> on_curve;
        for (std::size_t k = 0; k < l.crossings.size(); ++k)
            if (l.crossings[k].alpha == i) on_curve.push_back(static_cast<int>(k));
        if (on_curve.size() < 2) continue;

        bool collision = false;
        for (Copy copy : {Copy::Prime, Copy::Second}) {
            const Circle& circ = l.circle(i, copy);
            for (std::size_t a = 0; a < on_curve.size() && !collision; ++a)
                for (std::size_t b = a + 1; b < on_curve.size(); ++b) {
                    Vec2 u = l.attachment(on_curve[a], copy) - circ.center;
                    Vec2 v = l.attachment(on_curve[b], copy) - circ.center;
                    if (parallel_same_direction(u, v)) {
                        rep.add("attachment direction collision",
                                circle_entity(i, copy),
                                l.crossings[on_curve[a]].id + " and " +
                                    l.crossings[on_curve[b]].id +
                                    " attach in the same direction");
                        collision = true;
                        break;
                    }
                }
        }
        if (collision) continue;

        auto sorted_ccw = [&](Copy copy) {
            const Circle& circ = l.circle(i, copy);
            std::vector<int> v = on_curve;
            std::sort(v.begin(), v.end(), [&](int x, int y) {
                return angular_less(l.attachment(x, copy) - circ.center,
                                    l.attachment(y, copy) - circ.center);
            });
            return v;
        };
        std::vector<int> prime_ccw = sorted_ccw(Copy::Prime);
        std::vector<int> second_cw = sorted_ccw(Copy::Second);
        std::reverse(second_cw.begin(), second_cw.end());

        auto canonical = [&](std::vector<int> word) {
            auto lowest = std::min_element(word.begin(), word.end(), [&](int x, int y) {
                return l.crossings[x].id < l.crossings[y].id;
            });
            std::rotate(word.begin(), lowest, word.end());
            return word;
        };
        if (canonical(prime_ccw) != canonical(second_cw))
            rep.add("copy order mismatch", "alpha" + std::to_string(i),
                    "prime-counterclockwise and second-clockwise attachment orders differ");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Tangent degrees
// ---------------------------------------------------------------------------

inline std::vector<Vec2> arc_directions(const RectLayout& l, const BetaArc& arc) {
    std::vector<Vec2> pts = l.arc_points(arc);
    std::vector<Vec2> dirs;
    dirs.reserve(pts.size() - 1);
    for (std::size_t p = 0; p + 1 < pts.size(); ++p) dirs.push_back(pts[p + 1] - pts[p]);
    return dirs;
}

// Tangent-map degree of one drawn arc, in half-turns (value is d_e of the arc).
inline HalfInt de_arc(const RectLayout& l, const BetaArc& arc) {
    return turning_half_turns(arc_directions(l, arc));
}

// Total tangent degree of the beta curve; an integer on conforming layouts.
inline HalfInt de_beta(const RectLayout& l, int j) {
    const BetaCurve& b = l.beta.at(static_cast<std::size_t>(j) - 1);
    HalfInt total(0);
    for (const BetaArc& arc : b.arcs) total += de_arc(l, arc);
    if (!total.is_integer())
        throw OddBetaDegree("beta" + std::to_string(j) + " tangent degree is not an integer");
    return total;
}

// Degree of the chain of arcs from one crossing to another along beta_j;
// empty (zero) when the crossings coincide.
inline HalfInt de_chain(const RectLayout& l, int j, int from_crossing, int to_crossing) {
    const BetaCurve& b = l.beta.at(static_cast<std::size_t>(j) - 1);
    if (from_crossing < 0 || from_crossing >= static_cast<int>(l.crossings.size()) ||
        to_crossing < 0 || to_crossing >= static_cast<int>(l.crossings.size()))
        throw CrossingNotOnCurve("crossing index out of range");
    if (from_crossing == to_crossing) return HalfInt(0);
    // Find the arc leaving from_crossing, then walk until to_crossing.
    std::size_t start = b.arcs.size();
    for (std::size_t m = 0; m < b.arcs.size(); ++m)
        if (b.arcs[m].from.crossing == from_crossing) start = m;
    if (start == b.arcs.size())
        throw CrossingNotOnCurve("crossing " + l.crossings[from_crossing].id + " is not on beta" +
                                 std::to_string(j));
    HalfInt total(0);
    std::size_t m = start;
    for (std::size_t steps = 0; steps <= b.arcs.size(); ++steps) {
        total += de_arc(l, b.arcs[m]);
        if (b.arcs[m].to.crossing == to_crossing) return total;
        m = (m + 1) % b.arcs.size();
    }
    throw CrossingNotOnCurve("crossing " + l.crossings[to_crossing].id + " is not on beta" +
                             std::to_string(j));
}

// ---------------------------------------------------------------------------
// Derivation of the combinatorial diagram
// ---------------------------------------------------------------------------

struct DerivedDiagram {
    CombinatorialDiagram diagram;
    std::optional<Matching> matching;  // the layout's matching, if well formed
};

// Reads signs, cyclic orders and arc degrees off a parsed layout. Signs are
// sign det(t_alpha, t_beta) at the prime copy, cross-checked at the second
// copy. Callers normally validate first; this function only needs the chain
// structure to be intact.
inline DerivedDiagram derive_combinatorics(const RectLayout& l) {
    const int g = l.genus();
    std::vector<std::array<std::optional<detail::ArcEndUse>, 2>> ends;
    if (!detail::collect_arc_ends(l, ends, nullptr))
        throw ParseError("layout arc ends are inconsistent; validate the layout first");

    CombinatorialDiagram d;
    d.genus = g;
    d.alpha_orders.resize(g);
    d.beta_orders.resize(g);
    std::vector<std::vector<HalfInt>> half_turns(g);

    // Signs.
    for (std::size_t k = 0; k < l.crossings.size(); ++k) {
        Crossing c;
        c.id = l.crossings[k].id;
        c.alpha = l.crossings[k].alpha;
        const auto& prime_use = *ends[k][0];
        const auto& second_use = *ends[k][1];
        c.beta = prime_use.beta_index;
        if (second_use.beta_index != c.beta)
            throw ParseError("crossing " + c.id + " attaches to two different beta curves");

        int sig = 0;
        for (Copy copy : {Copy::Prime, Copy::Second}) {
            const auto& use = copy == Copy::Prime ? prime_use : second_use;
            const BetaArc& arc = l.beta[use.beta_index - 1].arcs[use.arc];
            Vec2 t_beta = detail::strand_direction(l, arc, use.is_from);
            Vec2 t_alpha = detail::alpha_tangent(l, static_cast<int>(k), copy);
            int s = cross(t_alpha, t_beta).sign();
            if (s == 0)
                throw DegenerateTangent("crossing " + c.id + ": alpha tangent parallel to the " +
                                        "beta direction on the " + copy_name(copy) + " copy");
            if (copy == Copy::Prime)
                sig = s;
            else if (s != sig)
                throw SignMismatch("crossing " + c.id +
                                   ": prime and second copies disagree on the sign");
        }
        c.sign = sig;
        d.crossings.push_back(std::move(c));
    }

    // Alpha orders: counterclockwise around the prime circles, anchored at the
    // smallest crossing id for a canonical serialization.
    for (int i = 1; i <= g; ++i) {
        std::vector<int> on_curve;
        for (std::size_t k = 0; k < l.crossings.size(); ++k)
            if (l.crossings[k].alpha == i) on_curve.push_back(static_cast<int>(k));
        const Circle& circ = l.circle(i, Copy::Prime);
        std::sort(on_curve.begin(), on_curve.end(), [&](int x, int y) {
            return angular_less(l.attachment(x, Copy::Prime) - circ.center,
                                l.attachment(y, Copy::Prime) - circ.center);
        });
        if (!on_curve.empty()) {
            auto lowest = std::min_element(on_curve.begin(), on_curve.end(), [&](int x, int y) {
                return l.crossings[x].id < l.crossings[y].id;
            });
            std::rotate(on_curve.begin(), lowest, on_curve.end());
        }
        d.alpha_orders[i - 1] = std::move(on_curve);
    }

    // Beta orders from the arc chains, rotated to the smallest id; the arc
    // degree array follows the same rotation (entry p is the arc leaving the
    // crossing at position p).
    for (const BetaCurve& b : l.beta) {
        std::vector<int> order;
        std::vector<HalfInt> degs;
        for (std::size_t m = 0; m < b.arcs.size(); ++m) {
            const BetaArc& arc = b.arcs[m];
            if (m > 0 && b.arcs[m - 1].to.crossing != arc.from.crossing)
                throw ParseError("beta" + std::to_string(b.index) + " arcs do not chain");
            order.push_back(arc.from.crossing);
            degs.push_back(de_arc(l, arc));
        }
        if (!order.empty() && b.arcs.back().to.crossing != order.front())
            throw ParseError("beta" + std::to_string(b.index) + " arc chain does not close");
        if (!order.empty()) {
            auto lowest = std::min_element(order.begin(), order.end(), [&](int x, int y) {
                return l.crossings[x].id < l.crossings[y].id;
            });
            std::size_t shift = static_cast<std::size_t>(lowest - order.begin());
            std::rotate(order.begin(), order.begin() + shift, order.end());
            std::rotate(degs.begin(), degs.begin() + shift, degs.end());
        }
        d.beta_orders[b.index - 1] = std::move(order);
        half_turns[b.index - 1] = std::move(degs);
    }
    d.arc_half_turns = std::move(half_turns);

    DerivedDiagram out;
    out.diagram = std::move(d);
    // the empty matching is the (unique) matching of a genus-0 diagram
    if (!l.matching.empty() || l.genus() == 0) {
        try {
            out.matching = make_matching(out.diagram, l.matching);
        } catch (const InvalidMatching&) {
            out.matching = std::nullopt;
        }
    }
    return out;
}

}  // namespace hgr
