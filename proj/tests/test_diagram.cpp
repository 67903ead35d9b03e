#include <doctest.h>

#include <set>

#include "hgr/diagram.hpp"
#include "hgr/diagram_json.hpp"

using namespace hgr;

namespace {

// D1: genus 1, crossings c, d on alpha1/beta1, both positive.
CombinatorialDiagram make_d1() {
    CombinatorialDiagram d;
    d.genus = 1;
    d.crossings = {{"c", 1, 1, 1}, {"d", 1, 1, 1}};
    d.alpha_orders = {{0, 1}};
    d.beta_orders = {{0, 1}};
    return d;
}

// D2: genus 2; beta1 = (c, d, f), beta2 = (e); alpha1 = (c, d), alpha2 = (e, f).
CombinatorialDiagram make_d2() {
    CombinatorialDiagram d;
    d.genus = 2;
    d.crossings = {{"c", 1, 1, 1}, {"d", 1, 1, 1}, {"e", 2, 2, 1}, {"f", 2, 1, 1}};
    d.alpha_orders = {{0, 1}, {2, 3}};
    d.beta_orders = {{0, 1, 3}, {2}};
    return d;
}

CombinatorialDiagram make_s3() {
    CombinatorialDiagram d;
    d.genus = 1;
    d.crossings = {{"c", 1, 1, 1}};
    d.alpha_orders = {{0}};
    d.beta_orders = {{0}};
    return d;
}

std::set<std::set<std::string>> matching_ids(const CombinatorialDiagram& d,
                                             const std::vector<Matching>& ms) {
    std::set<std::set<std::string>> out;
    for (const Matching& m : ms) {
        std::set<std::string> ids;
        for (int k : m.crossings) ids.insert(d.crossings[k].id);
        out.insert(ids);
    }
    return out;
}

// Brute force: every size-g crossing subset that covers each curve once.
std::set<std::set<std::string>> brute_force_matchings(const CombinatorialDiagram& d) {
    std::set<std::set<std::string>> out;
    const std::size_t n = d.crossings.size();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != d.genus) continue;
        std::vector<int> ca(d.genus, 0), cb(d.genus, 0);
        std::set<std::string> ids;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) {
                ++ca[d.crossings[k].alpha - 1];
                ++cb[d.crossings[k].beta - 1];
                ids.insert(d.crossings[k].id);
            }
        bool ok = true;
        for (int i = 0; i < d.genus; ++i) ok = ok && ca[i] == 1 && cb[i] == 1;
        if (ok) out.insert(ids);
    }
    return out;
}

}  // namespace

TEST_CASE("validate_diagram") {
    CHECK(validate_diagram(make_d1()).pass());
    CHECK(validate_diagram(make_d2()).pass());
    CHECK(validate_diagram(CombinatorialDiagram{}).pass());  // genus 0, S^3

    CombinatorialDiagram bad = make_d2();
    bad.alpha_orders = {{0, 1, 2}, {3}};  // e listed on alpha1 but carries index 2
    ValidationReport rep = validate_diagram(bad);
    CHECK(!rep.pass());
    CHECK(rep.has_rule("crossing in multiple alpha curves"));

    bad = make_d1();
    bad.crossings[1].sign = 0;
    CHECK(validate_diagram(bad).has_rule("bad sign"));

    bad = make_d1();
    bad.beta_orders = {{0}};
    CHECK(validate_diagram(bad).has_rule("crossing missing from beta order"));
}

TEST_CASE("intersection matrix") {
    RatMatrix a1 = intersection_matrix(make_d1());
    CHECK(a1.size() == 1);
    CHECK(a1.at(0, 0) == Rational(2));

    RatMatrix a2 = intersection_matrix(make_d2());
    CHECK(a2.at(0, 0) == Rational(2));
    CHECK(a2.at(0, 1) == Rational(0));
    CHECK(a2.at(1, 0) == Rational(1));
    CHECK(a2.at(1, 1) == Rational(1));

    CombinatorialDiagram neg = make_s3();
    neg.crossings[0].sign = -1;
    CHECK(intersection_matrix(neg).at(0, 0) == Rational(-1));
}

TEST_CASE("j matrix layout and defining identity") {
    CombinatorialDiagram d1 = make_d1();
    RatMatrix j1 = j_matrix(d1);
    CHECK(j1.at(0, 0) == Rational(1, 2));

    CombinatorialDiagram d2 = make_d2();
    RatMatrix j2 = j_matrix(d2);
    CHECK(j2.at(0, 0) == Rational(1, 2));   // J_11
    CHECK(j2.at(0, 1) == Rational(0));      // J_12
    CHECK(j2.at(1, 0) == Rational(-1, 2));  // J_21
    CHECK(j2.at(1, 1) == Rational(1));      // J_22

    for (const CombinatorialDiagram& d : {make_d1(), make_d2(), make_s3()}) {
        RatMatrix J = j_matrix(d);
        RatMatrix A = intersection_matrix(d);
        CHECK(J * A == RatMatrix::identity(d.genus));
    }

    // crossing-free beta curve: zero column
    CombinatorialDiagram empty_beta;
    empty_beta.genus = 2;
    empty_beta.crossings = {{"x", 1, 1, 1}, {"y", 2, 1, 1}};
    empty_beta.alpha_orders = {{0}, {1}};
    empty_beta.beta_orders = {{0, 1}, {}};
    CHECK_THROWS_AS(j_matrix(empty_beta), NotQSphere);
}

TEST_CASE("arc weightings") {
    CombinatorialDiagram d1 = make_d1();
    CurveRef a1{CurveFamily::Alpha, 1};
    CurveRef b1{CurveFamily::Beta, 1};
    int c = 0, dd = 1;

    ArcWeighting cc = arc_closed_half(d1, a1, c, c);
    CHECK(cc.weight(c) == Rational(1, 2));
    CHECK(cc.weight(dd) == Rational(0));

    ArcWeighting cd = arc_closed_half(d1, a1, c, dd);
    CHECK(cd.weight(c) == Rational(1));
    CHECK(cd.weight(dd) == Rational(1, 2));

    ArcWeighting hh = arc_half_half(d1, b1, c, dd);
    CHECK(hh.weight(c) == Rational(1, 2));
    CHECK(hh.weight(dd) == Rational(1, 2));

    CHECK(arc_half_half(d1, a1, c, c).weights.empty());

    // strictly-between crossings get weight 1
    CombinatorialDiagram d2 = make_d2();
    ArcWeighting cf = arc_closed_half(d2, {CurveFamily::Beta, 1}, 0, 3);
    CHECK(cf.weight(0) == Rational(1));
    CHECK(cf.weight(1) == Rational(1));
    CHECK(cf.weight(3) == Rational(1, 2));

    CHECK_THROWS_AS(arc_closed_half(d2, {CurveFamily::Beta, 2}, 0, 0), CrossingNotOnCurve);
}

TEST_CASE("pairing values from the worked genus-1 example") {
    CombinatorialDiagram d = make_d1();
    CurveRef a1{CurveFamily::Alpha, 1};
    CurveRef b1{CurveFamily::Beta, 1};
    int c = 0, dd = 1;

    auto A = [&](int x, int y) { return arc_closed_half(d, a1, x, y); };
    auto B = [&](int x, int y) { return arc_closed_half(d, b1, x, y); };

    CHECK(pair_weights(d, A(c, c), B(c, c)) == Rational(1, 4));
    CHECK(pair_weights(d, A(c, c), B(c, dd)) == Rational(1, 2));
    CHECK(pair_weights(d, A(c, dd), B(c, c)) == Rational(1, 2));
    CHECK(pair_weights(d, A(c, dd), B(c, dd)) == Rational(5, 4));
    CHECK(pair_weights(d, A(c, c), full_curve(d, b1)) == Rational(1, 2));
    CHECK(pair_weights(d, A(c, dd), full_curve(d, b1)) == Rational(3, 2));
}

TEST_CASE("half-point pairing against a whole curve is sigma over two") {
    for (CombinatorialDiagram d : {make_d1(), make_d2(), make_s3()}) {
        for (std::size_t k = 0; k < d.crossings.size(); ++k) {
            const Crossing& cr = d.crossings[k];
            ArcWeighting half = arc_closed_half(d, {CurveFamily::Alpha, cr.alpha},
                                                static_cast<int>(k), static_cast<int>(k));
            Rational got = pair_weights(d, half, full_curve(d, {CurveFamily::Beta, cr.beta}));
            CHECK(got == Rational(cr.sign, 2));
        }
    }
}

TEST_CASE("shared-endpoint pairing identity") {
    // For crossings c, d on one alpha curve and e, d on one beta curve,
    // <[c,d|, [e,d|> = sigma(d)/4 + sum of sigma over the crossings lying
    // strictly before d on both arcs (the closed starts included).
    for (const CombinatorialDiagram& d : {make_d1(), make_d2()}) {
        for (std::size_t dd = 0; dd < d.crossings.size(); ++dd) {
            CurveRef a{CurveFamily::Alpha, d.crossings[dd].alpha};
            CurveRef b{CurveFamily::Beta, d.crossings[dd].beta};
            for (int c : d.order_of(a))
                for (int e : d.order_of(b)) {
                    if (c == static_cast<int>(dd) || e == static_cast<int>(dd)) continue;
                    ArcWeighting wa = arc_closed_half(d, a, c, static_cast<int>(dd));
                    ArcWeighting wb = arc_closed_half(d, b, e, static_cast<int>(dd));
                    Rational expect(d.crossings[dd].sign, 4);
                    for (const auto& [k, w] : wa.weights) {
                        if (k == static_cast<int>(dd)) continue;
                        if (wb.weight(k) == Rational(1) && w == Rational(1))
                            expect += Rational(d.crossings[k].sign);
                    }
                    CHECK(pair_weights(d, wa, wb) == expect);
                }
        }
    }
}

TEST_CASE("pairing is bilinear in the weights") {
    CombinatorialDiagram d = make_d2();
    ArcWeighting a = arc_closed_half(d, {CurveFamily::Alpha, 1}, 0, 1);
    ArcWeighting b1 = arc_closed_half(d, {CurveFamily::Beta, 1}, 0, 1);
    ArcWeighting b2 = arc_half_half(d, {CurveFamily::Beta, 1}, 1, 3);
    ArcWeighting sum{b1.curve, {}};
    for (const auto& [k, w] : b1.weights) sum.weights[k] = sum.weights[k] + w;
    for (const auto& [k, w] : b2.weights) sum.weights[k] = sum.weights[k] + w;
    CHECK(pair_weights(d, a, sum) == pair_weights(d, a, b1) + pair_weights(d, a, b2));
}

TEST_CASE("matching enumeration") {
    CombinatorialDiagram d1 = make_d1();
    auto m1 = enumerate_matchings(d1, 100);
    CHECK(matching_ids(d1, m1) == std::set<std::set<std::string>>{{"c"}, {"d"}});

    CombinatorialDiagram d2 = make_d2();
    auto m2 = enumerate_matchings(d2, 100);
    CHECK(matching_ids(d2, m2) == std::set<std::set<std::string>>{{"c", "e"}, {"d", "e"}});
    // deterministic lexicographic order by crossing id
    CHECK(d2.crossings[m2[0].crossings[0]].id == "c");
    CHECK(d2.crossings[m2[1].crossings[0]].id == "d");

    CombinatorialDiagram s3 = make_s3();
    auto m3 = enumerate_matchings(s3, 100);
    CHECK(matching_ids(s3, m3) == std::set<std::set<std::string>>{{"c"}});

    for (const CombinatorialDiagram& d : {make_d1(), make_d2(), make_s3()})
        CHECK(matching_ids(d, enumerate_matchings(d, 1000)) == brute_force_matchings(d));

    CHECK_THROWS_AS(enumerate_matchings(d1, 0), CapExceeded);
    CHECK_THROWS_AS(enumerate_matchings(d1, 1), CapExceeded);

    CHECK_THROWS_AS(make_matching(d2, std::vector<int>{0, 1}), InvalidMatching);
}

TEST_CASE("l cycle coefficients") {
    CombinatorialDiagram d1 = make_d1();
    RatMatrix j1 = j_matrix(d1);
    Matching m1 = make_matching(d1, {0});
    auto t1 = l_cycle_coefficients(d1, j1, m1);
    CHECK(t1[0] == Rational(1, 2));
    CHECK(t1[1] == Rational(-1, 2));

    CombinatorialDiagram d2 = make_d2();
    RatMatrix j2 = j_matrix(d2);
    Matching m2 = make_matching(d2, {0, 2});
    auto t2 = l_cycle_coefficients(d2, j2, m2);
    CHECK(t2[0] == Rational(1, 2));
    CHECK(t2[1] == Rational(-1, 2));
    CHECK(t2[2] == Rational(0));
    CHECK(t2[3] == Rational(0));

    CombinatorialDiagram s3 = make_s3();
    auto t3 = l_cycle_coefficients(s3, j_matrix(s3), make_matching(s3, {0}));
    CHECK(t3[0] == Rational(0));
}

TEST_CASE("cycle check") {
    CombinatorialDiagram d = make_d1();

    // G(D1) coefficients: g_cc = g_dd = -1/4, g_cd = g_dc = 1/4
    CoeffMatrix g = zero_coeffs(d);
    g[0][0] = Rational(-1, 4);
    g[0][1] = Rational(1, 4);
    g[1][0] = Rational(1, 4);
    g[1][1] = Rational(-1, 4);
    CHECK(cycle_check(d, g));

    // tensor square of the L(m) coefficients is a cycle
    auto t = l_cycle_coefficients(d, j_matrix(d), make_matching(d, {0}));
    CoeffMatrix tt = zero_coeffs(d);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) tt[a][b] = t[a] * t[b];
    CHECK(cycle_check(d, tt));

    CoeffMatrix bad = zero_coeffs(d);
    bad[0][0] = Rational(1);
    CHECK(!cycle_check(d, bad));
}

TEST_CASE("beta chain degrees from stored half turns") {
    CombinatorialDiagram d = make_d1();
    d.arc_half_turns = {{HalfInt(1), HalfInt(-1)}};  // arc c->d then d->c
    CHECK(beta_degree(d, 1) == HalfInt(0));
    CHECK(beta_chain_half_turns(d, 1, 0, 1) == HalfInt(1));
    CHECK(beta_chain_half_turns(d, 1, 1, 0) == HalfInt(-1));
    CHECK(beta_chain_half_turns(d, 1, 0, 0) == HalfInt(0));

    d.arc_half_turns = {{HalfInt(1), HalfInt(2)}};
    CHECK_THROWS_AS(beta_degree(d, 1), OddBetaDegree);

    CombinatorialDiagram plain = make_d1();
    CHECK_THROWS_AS(beta_degree(plain, 1), MatchingMismatch);
}

TEST_CASE("combinatorial json round trip") {
    CombinatorialDiagram d = make_d2();
    d.arc_half_turns = {{HalfInt(1), HalfInt(0), HalfInt(-1)}, {HalfInt(0)}};
    Matching m = make_matching(d, {0, 2});
    std::string text = serialize_diagram(d, m);
    ParsedDiagram back = parse_diagram_json(text);
    CHECK(back.diagram.genus == 2);
    CHECK(back.diagram.crossings.size() == 4);
    CHECK(back.diagram.alpha_orders == d.alpha_orders);
    CHECK(back.diagram.beta_orders == d.beta_orders);
    REQUIRE(back.diagram.arc_half_turns.has_value());
    CHECK((*back.diagram.arc_half_turns)[0][0] == HalfInt(1));
    REQUIRE(back.matching.has_value());
    CHECK(back.matching->crossings == m.crossings);
    CHECK(validate_diagram(back.diagram).pass());

    CHECK_THROWS_AS(parse_diagram_json("{\"genus\": 1}"), ParseError);
    CHECK_THROWS_AS(
        parse_diagram_json("{\"genus\": 0, \"crossings\": [], \"alpha_orders\": [], "
                           "\"beta_orders\": [], \"matching\": [\"z\"]}"),
        UnknownReference);
}
