#include <doctest.h>

#include <random>

#include "hgr/matrix.hpp"

using hgr::mat_det;
using hgr::mat_inverse;
using hgr::Rational;
using hgr::RatMatrix;
using hgr::SingularMatrix;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("determinant worked values") {
    CHECK(mat_det(from_rows({{2}})) == Rational(2));
    CHECK(mat_det(RatMatrix::identity(2)) == Rational(1));
    // cofactor expansion by hand: 2*1 - 0*1 = 2
    CHECK(mat_det(from_rows({{2, 0}, {1, 1}})) == Rational(2));
    CHECK(mat_det(from_rows({{1, 1}, {1, 1}})) == Rational(0));
    CHECK(mat_det(RatMatrix()) == Rational(1));  // empty product
    // first pivot is zero, needs a row swap
    CHECK(mat_det(from_rows({{0, 1}, {1, 0}})) == Rational(-1));
}

TEST_CASE("inverse worked values") {
    RatMatrix inv1 = mat_inverse(from_rows({{2}}));
    CHECK(inv1.at(0, 0) == Rational(1, 2));

    CHECK(mat_inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));

    RatMatrix inv2 = mat_inverse(from_rows({{2, 0}, {1, 1}}));
    CHECK(inv2.at(0, 0) == Rational(1, 2));
    CHECK(inv2.at(0, 1) == Rational(0));
    CHECK(inv2.at(1, 0) == Rational(-1, 2));
    CHECK(inv2.at(1, 1) == Rational(1));

    CHECK_THROWS_AS(mat_inverse(from_rows({{1, 1}, {1, 1}})), SingularMatrix);
    CHECK_THROWS_AS(mat_inverse(from_rows({{1, 0}, {1, 0}})), SingularMatrix);
    CHECK(mat_inverse(RatMatrix()).size() == 0);
}

TEST_CASE("random nonsingular matrices invert exactly") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (int it = 0; it < 120; ++it) {
        int g = 1 + static_cast<int>(rng() % 5);
        RatMatrix m(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                long long d = 0;
                while (d == 0) d = dist(rng);
                m.at(i, j) = Rational(dist(rng), d);
            }
        Rational det = mat_det(m);
        if (det.is_zero()) {
            CHECK_THROWS_AS(mat_inverse(m), SingularMatrix);
            continue;
        }
        RatMatrix inv = mat_inverse(m);
        CHECK(m * inv == RatMatrix::identity(g));
        CHECK(inv * m == RatMatrix::identity(g));
        CHECK(det * mat_det(inv) == Rational(1));
    }
}
