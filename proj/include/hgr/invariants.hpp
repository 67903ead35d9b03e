#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgr/diagram.hpp"
#include "hgr/errors.hpp"
#include "hgr/layout.hpp"

namespace hgr {

// Basepoint on each alpha and each beta curve, restricted to crossings (every
// curve of a Q-sphere diagram has one, and generic basepoints change no value).
struct BasepointChoice {
    std::vector<int> alpha;  // [i-1] -> crossing index on alpha_i
    std::vector<int> beta;   // [j-1] -> crossing index on beta_j
};

inline BasepointChoice default_basepoints(const CombinatorialDiagram& d, const Matching& m) {
    BasepointChoice bp;
    bp.alpha.resize(d.genus);
    bp.beta.resize(d.genus);
    for (int i = 1; i <= d.genus; ++i) bp.alpha[i - 1] = matching_crossing_on_alpha(d, m, i);
    for (int j = 1; j <= d.genus; ++j) bp.beta[j - 1] = matching_crossing_on_beta(d, m, j);
    return bp;
}

inline void check_basepoints(const CombinatorialDiagram& d, const BasepointChoice& bp) {
    if (static_cast<int>(bp.alpha.size()) != d.genus ||
        static_cast<int>(bp.beta.size()) != d.genus)
        throw InvalidMatching("basepoint choice must name one crossing per curve");
    for (int i = 1; i <= d.genus; ++i)
        if (d.crossings.at(bp.alpha[i - 1]).alpha != i)
            throw CrossingNotOnCurve("basepoint for alpha" + std::to_string(i) +
                                     " does not lie on it");
    for (int j = 1; j <= d.genus; ++j)
        if (d.crossings.at(bp.beta[j - 1]).beta != j)
            throw CrossingNotOnCurve("basepoint for beta" + std::to_string(j) +
                                     " does not lie on it");
}

// All pairing values l(c,d) for one diagram and basepoint choice:
//   l(c,d) = <[p(alpha(c)),c|, [p(beta(d)),d|>
//            - sum_{i,j} J[j][i] <[p(alpha(c)),c|, beta_j> <alpha_i, [p(beta(d)),d|>.
// ell_2 and lk share these values, so they are computed once per table.
class EllTable {
public:
    EllTable(const CombinatorialDiagram& d, const RatMatrix& J, const BasepointChoice& bp)
        : n_(d.crossings.size()), cell_(n_ * n_) {
        check_basepoints(d, bp);
        const int g = d.genus;
        std::vector<ArcWeighting> row_arc(n_), col_arc(n_);
        std::vector<std::vector<Rational>> u(n_, std::vector<Rational>(g));
        std::vector<std::vector<Rational>> v(n_, std::vector<Rational>(g));
        std::vector<ArcWeighting> full_beta, full_alpha;
        for (int j = 1; j <= g; ++j) full_beta.push_back(full_curve(d, {CurveFamily::Beta, j}));
        for (int i = 1; i <= g; ++i) full_alpha.push_back(full_curve(d, {CurveFamily::Alpha, i}));

        for (std::size_t c = 0; c < n_; ++c) {
            int ic = d.crossings[c].alpha;
            row_arc[c] = arc_closed_half(d, {CurveFamily::Alpha, ic}, bp.alpha[ic - 1],
                                         static_cast<int>(c));
            for (int j = 0; j < g; ++j) u[c][j] = pair_weights(d, row_arc[c], full_beta[j]);
            int jc = d.crossings[c].beta;
            col_arc[c] = arc_closed_half(d, {CurveFamily::Beta, jc}, bp.beta[jc - 1],
                                         static_cast<int>(c));
            for (int i = 0; i < g; ++i) v[c][i] = pair_weights(d, full_alpha[i], col_arc[c]);
        }
        for (std::size_t c = 0; c < n_; ++c)
            for (std::size_t e = 0; e < n_; ++e) {
                Rational correction(0);
                for (int j = 0; j < g; ++j) {
                    if (u[c][j].is_zero()) continue;
                    for (int i = 0; i < g; ++i)
                        correction += J.at(j, i) * u[c][j] * v[e][i];
                }
                cell_[c * n_ + e] = pair_weights(d, row_arc[c], col_arc[e]) - correction;
            }
    }

    const Rational& ell(int c, int d) const {
        return cell_[static_cast<std::size_t>(c) * n_ + static_cast<std::size_t>(d)];
    }

private:
    std::size_t n_;
    std::vector<Rational> cell_;
};

// Single pairing value; prefer EllTable when several values are needed.
inline Rational ell(const CombinatorialDiagram& d, const RatMatrix& J, const BasepointChoice& bp,
                    int c, int e) {
    return EllTable(d, J, bp).ell(c, e);
}

// Evaluates the homology class of a 2-cycle with coefficients g[c][d]:
// sum g[c][d] l(c,d), which must coincide with sum g[c][d] l(d,c). Rejects
// coefficient maps that are not cycles, where the formula does not apply.
inline Rational evaluate_cycle(const CombinatorialDiagram& d, const EllTable& table,
                               const CoeffMatrix& g) {
    if (!cycle_check(d, g)) throw NotACycle();
    const std::size_t n = d.crossings.size();
    Rational first(0), second(0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
            if (g[c][e].is_zero()) continue;
            first += g[c][e] * table.ell(static_cast<int>(c), static_cast<int>(e));
            second += g[c][e] * table.ell(static_cast<int>(e), static_cast<int>(c));
        }
    if (first != second)
        throw Error("cycle evaluation mismatch between the two pairing orders");
    return first;
}

// Coefficients of the canonical 2-cycle G(D):
// g[c][d] = J[j(c)][i(d)] J[j(d)][i(c)] sigma(c) sigma(d) - delta_{cd} J[j(c)][i(c)] sigma(c).
inline CoeffMatrix g_cycle_coefficients(const CombinatorialDiagram& d, const RatMatrix& J) {
    CoeffMatrix g = zero_coeffs(d);
    const std::size_t n = d.crossings.size();
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
            const Crossing& cc = d.crossings[c];
            const Crossing& ce = d.crossings[e];
            g[c][e] = J.at(cc.beta - 1, ce.alpha - 1) * J.at(ce.beta - 1, cc.alpha - 1) *
                      Rational(cc.sign * ce.sign);
            if (c == e) g[c][e] -= J.at(cc.beta - 1, cc.alpha - 1) * Rational(cc.sign);
        }
    return g;
}

inline CoeffMatrix tensor_square(const CombinatorialDiagram& d, const std::vector<Rational>& t) {
    CoeffMatrix g = zero_coeffs(d);
    for (std::size_t c = 0; c < t.size(); ++c)
        for (std::size_t e = 0; e < t.size(); ++e) g[c][e] = t[c] * t[e];
    return g;
}

// The main term: evaluation of G(D). Independent of the basepoint choice.
inline Rational ell_two(const CombinatorialDiagram& d, const RatMatrix& J, const EllTable& table) {
    return evaluate_cycle(d, table, g_cycle_coefficients(d, J));
}

// lk(L(m), L(m)_parallel), evaluated as the tensor square of the L(m)
// coefficients (algebraically identical to the expanded three-sum form).
inline Rational lk_parallel(const CombinatorialDiagram& d, const RatMatrix& J,
                            const EllTable& table, const Matching& m) {
    if (!is_matching(d, m)) throw InvalidMatching("not a matching of this diagram");
    return evaluate_cycle(d, table, tensor_square(d, l_cycle_coefficients(d, J, m)));
}

// d_e(c) = d_e(|c_rho(j(c)), c|) - sum_{r,s} J[s][r] <alpha_r, |c_rho(j(c)), c|> d_e(beta_s),
// taking the matching crossing of beta_{j(c)} as the chain start. Requires the
// diagram's arc degree data (a rectangular layout behind it).
inline Rational de_crossing(const CombinatorialDiagram& d, const RatMatrix& J, const Matching& m,
                            int c) {
    const Crossing& cr = d.crossings.at(static_cast<std::size_t>(c));
    int fav = matching_crossing_on_beta(d, m, cr.beta);
    if (fav == c) return Rational(0);
    Rational chain = beta_chain_half_turns(d, cr.beta, fav, c).value();
    ArcWeighting arc = arc_half_half(d, {CurveFamily::Beta, cr.beta}, fav, c);
    Rational correction(0);
    for (int r = 1; r <= d.genus; ++r) {
        Rational overlap = pair_weights(d, full_curve(d, {CurveFamily::Alpha, r}), arc);
        if (overlap.is_zero()) continue;
        for (int s = 1; s <= d.genus; ++s) {
            Rational deg = beta_degree(d, s).value();
            if (deg.is_zero()) continue;
            correction += J.at(s - 1, r - 1) * overlap * deg;
        }
    }
    return chain - correction;
}

// e(w,m) = sum_c J[j(c)][i(c)] sigma(c) d_e(c).
inline Rational euler_term(const CombinatorialDiagram& d, const RatMatrix& J, const Matching& m) {
    if (!is_matching(d, m)) throw InvalidMatching("not a matching of this diagram");
    Rational e(0);
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const Crossing& cr = d.crossings[c];
        Rational de = de_crossing(d, J, m, static_cast<int>(c));
        if (de.is_zero()) continue;
        e += J.at(cr.beta - 1, cr.alpha - 1) * Rational(cr.sign) * de;
    }
    return e;
}

// ---------------------------------------------------------------------------
// Theta
// ---------------------------------------------------------------------------

struct ThetaReport {
    Rational ell2;
    Rational lk;
    std::optional<Rational> euler;  // absent when the matching is not the layout's
    std::optional<Rational> theta;  // ell2 + lk - euler when available
    Matching matching;              // the matching used for lk (and euler if available)
    BasepointChoice basepoints;
    std::string diagram_hash;
    std::optional<Rational> p1;     // 4*theta - 24*lambda, only on request
};

inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline std::string diagram_hash(const CombinatorialDiagram& d) {
    std::string s = "g" + std::to_string(d.genus) + ";";
    for (const Crossing& c : d.crossings)
        s += c.id + "," + std::to_string(c.alpha) + "," + std::to_string(c.beta) + "," +
             std::to_string(c.sign) + ";";
    auto orders = [&](const std::vector<std::vector<int>>& os) {
        for (const auto& o : os) {
            for (int k : o) s += d.crossings[k].id + ",";
            s += "|";
        }
    };
    orders(d.alpha_orders);
    orders(d.beta_orders);
    if (d.arc_half_turns)
        for (const auto& row : *d.arc_half_turns) {
            for (const HalfInt& h : row) s += std::to_string(h.half_turns) + ",";
            s += "|";
        }
    return fnv1a_hex(s);
}

// Full pipeline over a validated, derived diagram. `layout_matching` is the
// matching realized by the rectangular picture; euler and theta are refused
// when the computed-for matching differs from it (the favourite-placement
// convention ties e to the picture), while ell2 and lk are still produced.
inline ThetaReport compute_theta(const CombinatorialDiagram& d, const Matching& matching,
                                 const std::optional<Matching>& layout_matching,
                                 const std::optional<BasepointChoice>& bp_opt = std::nullopt,
                                 const std::optional<Rational>& lambda = std::nullopt) {
    RatMatrix J = j_matrix(d);
    BasepointChoice bp = bp_opt ? *bp_opt : default_basepoints(d, matching);
    EllTable table(d, J, bp);

    ThetaReport rep;
    rep.matching = matching;
    rep.basepoints = bp;
    rep.diagram_hash = diagram_hash(d);
    rep.ell2 = ell_two(d, J, table);
    rep.lk = lk_parallel(d, J, table, matching);

    bool matching_is_layouts =
        layout_matching && layout_matching->crossings == matching.crossings;
    if (matching_is_layouts && d.arc_half_turns) {
        rep.euler = euler_term(d, J, matching);
        rep.theta = rep.ell2 + rep.lk - *rep.euler;
        if (lambda) rep.p1 = Rational(4) * *rep.theta - Rational(24) * *lambda;
    }
    return rep;
}

// Convenience entry point from a layout. Throws on validation failure.
inline ThetaReport theta(const RectLayout& l,
                         const std::optional<BasepointChoice>& bp = std::nullopt,
                         const std::optional<Rational>& lambda = std::nullopt) {
    ValidationReport v = validate_layout(l);
    if (!v.pass()) {
        std::string msg = "layout is invalid:";
        for (const auto& viol : v.violations) msg += " [" + viol.rule + "] " + viol.entity + ";";
        throw ParseError(msg);
    }
    DerivedDiagram derived = derive_combinatorics(l);
    if (!derived.matching)
        throw MatchingMismatch("layout carries no well-formed matching");
    return compute_theta(derived.diagram, *derived.matching, derived.matching, bp, lambda);
}

}  // namespace hgr
