#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgr/errors.hpp"
#include "hgr/geometry.hpp"
#include "hgr/matrix.hpp"

namespace hgr {

// A crossing of an alpha curve and a beta curve, with its tangent-frame sign.
// Curve indices are 1-based, matching the usual numbering of the curves.
struct Crossing {
    std::string id;
    int alpha = 0;
    int beta = 0;
    int sign = 0;
};

enum class CurveFamily { Alpha, Beta };

struct CurveRef {
    CurveFamily family;
    int index;  // 1-based
};

inline std::string curve_name(CurveRef c) {
    return (c.family == CurveFamily::Alpha ? "alpha" : "beta") + std::to_string(c.index);
}

// Purely combinatorial Heegaard diagram: crossings with signs plus the cyclic
// order of the crossings along every curve. Cyclic orders are stored with an
// arbitrary anchor; all operations are anchor-independent. arc_half_turns,
// when present, records twice the tangent-map degree of the planar arc that
// leaves each beta_order position, as derived from a rectangular layout.
class CombinatorialDiagram {
public:
    int genus = 0;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> alpha_orders;  // [i-1] -> crossing indices
    std::vector<std::vector<int>> beta_orders;   // [j-1] -> crossing indices
    std::optional<std::vector<std::vector<HalfInt>>> arc_half_turns;

    int find(const std::string& id) const {
        for (std::size_t k = 0; k < crossings.size(); ++k)
            if (crossings[k].id == id) return static_cast<int>(k);
        return -1;
    }

    int require(const std::string& id) const {
        int k = find(id);
        if (k < 0) throw UnknownReference("unknown crossing id: " + id);
        return k;
    }

    const std::vector<int>& order_of(CurveRef c) const {
        const auto& fam = c.family == CurveFamily::Alpha ? alpha_orders : beta_orders;
        return fam.at(static_cast<std::size_t>(c.index) - 1);
    }

    int curve_index_of(int crossing, CurveFamily f) const {
        return f == CurveFamily::Alpha ? crossings[crossing].alpha : crossings[crossing].beta;
    }
};

inline ValidationReport validate_diagram(const CombinatorialDiagram& d) {
    ValidationReport rep;
    const int g = d.genus;
    if (g < 0) rep.add("genus negative", "diagram", "genus must be >= 0");
    if (static_cast<int>(d.alpha_orders.size()) != g)
        rep.add("order count", "alpha", "expected one cyclic order per alpha curve");
    if (static_cast<int>(d.beta_orders.size()) != g)
        rep.add("order count", "beta", "expected one cyclic order per beta curve");

    std::map<std::string, int> seen;
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const Crossing& c = d.crossings[k];
        if (seen.count(c.id))
            rep.add("duplicate crossing id", c.id, "crossing id appears more than once");
        seen[c.id] = static_cast<int>(k);
        if (c.sign != 1 && c.sign != -1)
            rep.add("bad sign", c.id, "crossing sign must be +1 or -1");
        if (c.alpha < 1 || c.alpha > g)
            rep.add("bad curve index", c.id, "alpha index out of range");
        if (c.beta < 1 || c.beta > g)
            rep.add("bad curve index", c.id, "beta index out of range");
    }

    auto check_orders = [&](const std::vector<std::vector<int>>& orders, CurveFamily fam,
                            const char* fam_name) {
        std::vector<int> count(d.crossings.size(), 0);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            for (int k : orders[i]) {
                if (k < 0 || k >= static_cast<int>(d.crossings.size())) {
                    rep.add("bad order entry", fam_name + std::to_string(i + 1),
                            "order references a crossing out of range");
                    continue;
                }
                ++count[k];
                int want = d.curve_index_of(k, fam);
                if (want != static_cast<int>(i) + 1)
                    rep.add(std::string("crossing in multiple ") + fam_name + " curves",
                            d.crossings[k].id,
                            std::string("crossing listed on ") + fam_name + std::to_string(i + 1) +
                                " but carries index " + std::to_string(want));
            }
        }
        for (std::size_t k = 0; k < d.crossings.size(); ++k)
            if (count[k] != 1)
                rep.add(count[k] == 0 ? std::string("crossing missing from ") + fam_name + " order"
                                      : std::string("crossing in multiple ") + fam_name + " curves",
                        d.crossings[k].id,
                        "crossing must appear exactly once in the order of its curve");
    };
    check_orders(d.alpha_orders, CurveFamily::Alpha, "alpha");
    check_orders(d.beta_orders, CurveFamily::Beta, "beta");

    if (d.arc_half_turns) {
        const auto& ht = *d.arc_half_turns;
        if (ht.size() != d.beta_orders.size()) {
            rep.add("arc degree shape", "beta", "arc_half_turns must parallel beta_orders");
        } else {
            for (std::size_t j = 0; j < ht.size(); ++j) {
                if (ht[j].size() != d.beta_orders[j].size()) {
                    rep.add("arc degree shape", "beta" + std::to_string(j + 1),
                            "one arc per consecutive pair of the cyclic order");
                    continue;
                }
                long long total = 0;
                for (const HalfInt& h : ht[j]) total += h.half_turns;
                if (total % 2 != 0)
                    rep.add("odd beta degree", "beta" + std::to_string(j + 1),
                            "half-turns around a closed beta curve must sum to an even number");
            }
        }
    }
    return rep;
}

// Crossing -> weight map supported on one curve, produced by the half-open
// arc constructors below. Weights are 0, 1/2 or 1.
struct ArcWeighting {
    CurveRef curve;
    std::map<int, Rational> weights;  // crossing index -> weight

    Rational weight(int crossing) const {
        auto it = weights.find(crossing);
        return it == weights.end() ? Rational(0) : it->second;
    }
};

namespace detail {

inline int position_on(const CombinatorialDiagram& d, CurveRef curve, int crossing) {
    const auto& ord = d.order_of(curve);
    for (std::size_t p = 0; p < ord.size(); ++p)
        if (ord[p] == crossing) return static_cast<int>(p);
    throw CrossingNotOnCurve("crossing " + d.crossings[crossing].id + " is not on " +
                             curve_name(curve));
}

}  // namespace detail

// The arc from a to b along the curve's cyclic orientation, not wrapping past
// the first occurrence of b; the start counts fully, the end with weight 1/2.
// For a == b the arc is the single half-counted point.
inline ArcWeighting arc_closed_half(const CombinatorialDiagram& d, CurveRef curve, int a, int b) {
    ArcWeighting w{curve, {}};
    const auto& ord = d.order_of(curve);
    int pa = detail::position_on(d, curve, a);
    int pb = detail::position_on(d, curve, b);
    if (a == b) {
        w.weights[a] = Rational(1, 2);
        return w;
    }
    w.weights[a] = Rational(1);
    int n = static_cast<int>(ord.size());
    for (int p = (pa + 1) % n; p != pb; p = (p + 1) % n) w.weights[ord[p]] = Rational(1);
    w.weights[b] = Rational(1, 2);
    return w;
}

// Both endpoints count with weight 1/2; the degenerate arc from a crossing to
// itself is empty.
inline ArcWeighting arc_half_half(const CombinatorialDiagram& d, CurveRef curve, int a, int b) {
    ArcWeighting w{curve, {}};
    const auto& ord = d.order_of(curve);
    int pa = detail::position_on(d, curve, a);
    int pb = detail::position_on(d, curve, b);
    if (a == b) return w;
    w.weights[a] = Rational(1, 2);
    int n = static_cast<int>(ord.size());
    for (int p = (pa + 1) % n; p != pb; p = (p + 1) % n) w.weights[ord[p]] = Rational(1);
    w.weights[b] = Rational(1, 2);
    return w;
}

// The whole curve, weight 1 at each of its crossings.
inline ArcWeighting full_curve(const CombinatorialDiagram& d, CurveRef curve) {
    ArcWeighting w{curve, {}};
    for (int k : d.order_of(curve)) w.weights[k] = Rational(1);
    return w;
}

// <A, B> = sum over crossings x on alpha_i and beta_j of wA(x) wB(x) sigma(x).
// A must live on an alpha curve and B on a beta curve.
inline Rational pair_weights(const CombinatorialDiagram& d, const ArcWeighting& a,
                             const ArcWeighting& b) {
    Rational sum(0);
    const ArcWeighting& small = a.weights.size() <= b.weights.size() ? a : b;
    const ArcWeighting& other = (&small == &a) ? b : a;
    for (const auto& [k, w] : small.weights) {
        Rational wo = other.weight(k);
        if (wo.is_zero() || w.is_zero()) continue;
        sum += w * wo * Rational(d.crossings[k].sign);
    }
    return sum;
}

// Algebraic intersection matrix A[i][k] = <alpha_i, beta_k> (0-based storage).
inline RatMatrix intersection_matrix(const CombinatorialDiagram& d) {
    RatMatrix m(d.genus);
    for (const Crossing& c : d.crossings)
        m.at(c.alpha - 1, c.beta - 1) += Rational(c.sign);
    return m;
}

// Inverse intersection matrix: the returned matrix Jm satisfies
// sum_i Jm[j][i] <alpha_i, beta_k> = delta_{jk}, i.e. Jm is the plain inverse
// of intersection_matrix, with rows indexed by beta and columns by alpha.
inline RatMatrix j_matrix(const CombinatorialDiagram& d) {
    try {
        return mat_inverse(intersection_matrix(d));
    } catch (const SingularMatrix&) {
        throw NotQSphere();
    }
}

// A matching: one crossing on each alpha curve and one on each beta curve.
struct Matching {
    std::vector<int> crossings;  // crossing indices, stored sorted by id

    bool contains(int crossing) const {
        return std::find(crossings.begin(), crossings.end(), crossing) != crossings.end();
    }
};

inline bool is_matching(const CombinatorialDiagram& d, const Matching& m) {
    if (static_cast<int>(m.crossings.size()) != d.genus) return false;
    std::vector<int> a(d.genus, 0), b(d.genus, 0);
    for (int k : m.crossings) {
        if (k < 0 || k >= static_cast<int>(d.crossings.size())) return false;
        ++a[d.crossings[k].alpha - 1];
        ++b[d.crossings[k].beta - 1];
    }
    for (int i = 0; i < d.genus; ++i)
        if (a[i] != 1 || b[i] != 1) return false;
    return true;
}

inline Matching make_matching(const CombinatorialDiagram& d, std::vector<int> crossings) {
    Matching m{std::move(crossings)};
    std::sort(m.crossings.begin(), m.crossings.end(),
              [&](int x, int y) { return d.crossings[x].id < d.crossings[y].id; });
    if (!is_matching(d, m))
        throw InvalidMatching("crossing set is not a matching (one crossing per curve required)");
    return m;
}

// The matching crossing lying on beta_j (the favourite crossing of that curve).
inline int matching_crossing_on_beta(const CombinatorialDiagram& d, const Matching& m, int j) {
    for (int k : m.crossings)
        if (d.crossings[k].beta == j) return k;
    throw InvalidMatching("matching misses beta" + std::to_string(j));
}

inline int matching_crossing_on_alpha(const CombinatorialDiagram& d, const Matching& m, int i) {
    for (int k : m.crossings)
        if (d.crossings[k].alpha == i) return k;
    throw InvalidMatching("matching misses alpha" + std::to_string(i));
}

// All perfect matchings of the bipartite crossing graph, as sorted-id lists in
// lexicographic order. Throws CapExceeded once more than `cap` are found.
inline std::vector<Matching> enumerate_matchings(const CombinatorialDiagram& d, std::size_t cap) {
    std::vector<std::vector<int>> by_alpha(d.genus);
    for (std::size_t k = 0; k < d.crossings.size(); ++k)
        by_alpha[d.crossings[k].alpha - 1].push_back(static_cast<int>(k));
    for (auto& v : by_alpha)
        std::sort(v.begin(), v.end(),
                  [&](int x, int y) { return d.crossings[x].id < d.crossings[y].id; });

    std::vector<Matching> out;
    std::vector<int> chosen;
    std::vector<bool> beta_used(d.genus, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == d.genus) {
            out.push_back(make_matching(d, chosen));
            if (out.size() > cap) throw CapExceeded(out.size());
            return;
        }
        for (int k : by_alpha[i]) {
            int j = d.crossings[k].beta - 1;
            if (beta_used[j]) continue;
            beta_used[j] = true;
            chosen.push_back(k);
            self(self, i + 1);
            chosen.pop_back();
            beta_used[j] = false;
        }
    };
    rec(rec, 0);
    auto key = [&](const Matching& m) {
        std::string s;
        for (int k : m.crossings) {
            s += d.crossings[k].id;
            s += '\x1f';
        }
        return s;
    };
    std::sort(out.begin(), out.end(),
              [&](const Matching& x, const Matching& y) { return key(x) < key(y); });
    return out;
}

// Coefficients t(c) of the 1-cycle L(m): t(c) = [c in m] - J[j(c)][i(c)] sigma(c).
inline std::vector<Rational> l_cycle_coefficients(const CombinatorialDiagram& d, const RatMatrix& J,
                                                  const Matching& m) {
    std::vector<Rational> t(d.crossings.size());
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const Crossing& c = d.crossings[k];
        t[k] = Rational(m.contains(static_cast<int>(k)) ? 1 : 0) -
               J.at(c.beta - 1, c.alpha - 1) * Rational(c.sign);
    }
    return t;
}

// Dense coefficient map over crossing pairs, g[c][d].
using CoeffMatrix = std::vector<std::vector<Rational>>;

inline CoeffMatrix zero_coeffs(const CombinatorialDiagram& d) {
    return CoeffMatrix(d.crossings.size(), std::vector<Rational>(d.crossings.size()));
}

// 2-cycle condition: for each fixed index in one slot, the formal boundary
// sum_c g[c][d'] (b_{j(c)} - a_{i(c)}) vanishes, i.e. the coefficients summed
// over each beta curve and over each alpha curve are zero; and symmetrically
// with the slots exchanged.
inline bool cycle_check(const CombinatorialDiagram& d, const CoeffMatrix& g) {
    const std::size_t n = d.crossings.size();
    for (std::size_t fixed = 0; fixed < n; ++fixed) {
        std::vector<Rational> arow(d.genus), brow(d.genus), acol(d.genus), bcol(d.genus);
        for (std::size_t c = 0; c < n; ++c) {
            arow[d.crossings[c].alpha - 1] += g[c][fixed];
            brow[d.crossings[c].beta - 1] += g[c][fixed];
            acol[d.crossings[c].alpha - 1] += g[fixed][c];
            bcol[d.crossings[c].beta - 1] += g[fixed][c];
        }
        for (int i = 0; i < d.genus; ++i)
            if (!arow[i].is_zero() || !brow[i].is_zero() || !acol[i].is_zero() ||
                !bcol[i].is_zero())
                return false;
    }
    return true;
}

// Degree bookkeeping along beta curves, from stored arc half-turn data.

inline const std::vector<HalfInt>& beta_arc_half_turns(const CombinatorialDiagram& d, int j) {
    if (!d.arc_half_turns)
        throw MatchingMismatch("diagram carries no arc degree data (no rectangular layout)");
    return (*d.arc_half_turns)[static_cast<std::size_t>(j) - 1];
}

inline HalfInt beta_degree(const CombinatorialDiagram& d, int j) {
    HalfInt total(0);
    for (const HalfInt& h : beta_arc_half_turns(d, j)) total += h;
    if (!total.is_integer())
        throw OddBetaDegree("beta" + std::to_string(j) + " tangent degree is not an integer");
    return total;
}

// Sum of arc degrees walking beta_j from crossing a to crossing b; empty for
// a == b.
inline HalfInt beta_chain_half_turns(const CombinatorialDiagram& d, int j, int a, int b) {
    CurveRef curve{CurveFamily::Beta, j};
    const auto& ord = d.order_of(curve);
    const auto& ht = beta_arc_half_turns(d, j);
    int pa = detail::position_on(d, curve, a);
    int pb = detail::position_on(d, curve, b);
    HalfInt total(0);
    int n = static_cast<int>(ord.size());
    for (int p = pa; p != pb; p = (p + 1) % n) total += ht[static_cast<std::size_t>(p)];
    return total;
}

}  // namespace hgr
