#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homeoforge/scalar.hpp>

#include "oracle_helpers.hpp"

using namespace homeoforge;

namespace {
QuadScalar sqrt2() { return QuadScalar(Rational(0), Rational(1), 2); }
QuadScalar lam() { return QuadScalar(Rational(1), Rational(1), 2); }  // 1+sqrt(2)
}  // namespace

TEST_CASE("rational canonical form") {
    Rational r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational::parse("-3/2") == r);
    CHECK(Rational(0).str() == "0");
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK(Rational(3, 8).is_dyadic());
    CHECK_FALSE(Rational(1, 3).is_dyadic());
}

TEST_CASE("field ops: conjugate product and identities") {
    QuadScalar x(Rational(1), Rational(1), 2);
    QuadScalar y(Rational(-1), Rational(1), 2);
    CHECK(x * y == QuadScalar(1));          // (1+sqrt2)(-1+sqrt2) = 1
    CHECK(x + QuadScalar(0) == x);
    CHECK(x * x == QuadScalar(Rational(3), Rational(2), 2));  // (1+sqrt2)^2 = 3+2sqrt2
    // confirm the squared value against the interval oracle
    QuadScalar diff = x * x - QuadScalar(Rational(3), Rational(2), 2);
    CHECK(diff.is_zero());
    CHECK(oracle::sign_by_interval(x * x - QuadScalar(Rational(58, 10))) > 0);
    CHECK(oracle::sign_by_interval(x * x - QuadScalar(Rational(59, 10))) < 0);

    CHECK(x * x.inverse() == QuadScalar(1));
    CHECK_THROWS_AS(QuadScalar(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(x / QuadScalar(0), std::domain_error);
}

TEST_CASE("mixed-field arithmetic rejected") {
    QuadScalar x(Rational(0), Rational(1), 2);
    QuadScalar y(Rational(0), Rational(1), 3);
    CHECK_THROWS_AS(x + y, std::domain_error);
    CHECK_THROWS_AS(QuadScalar(Rational(1), Rational(1), 4), std::domain_error);
    CHECK_THROWS_AS(QuadScalar(Rational(1), Rational(1), 1), std::domain_error);
}

TEST_CASE("compare: pinned instances") {
    CHECK(compare(QuadScalar(12), QuadScalar(5) * lam()) < 0);  // 5(1+sqrt2) ~ 12.07
    CHECK(compare(lam(), lam()) == 0);
    CHECK(compare(lam(), QuadScalar(2)) > 0);
}

TEST_CASE("compare agrees with interval oracle on random pairs") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 10000; ++i) {
        QuadScalar x = oracle::random_quad(rng);
        QuadScalar y = oracle::random_quad(rng);
        QuadScalar diff = x - y;
        int expected = diff.is_zero() ? 0 : oracle::sign_by_interval(diff);
        CHECK(compare(x, y) == expected);
    }
}

TEST_CASE("canonical form idempotence") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        QuadScalar x = oracle::random_quad(rng);
        QuadScalar again(x.rational_part(), x.radical_part(),
                         x.field_d() == 0 ? 2 : x.field_d());
        CHECK(x == again);
        if (x.radical_part().is_zero()) CHECK(x.field_d() == 0);
    }
}

TEST_CASE("period_index") {
    CHECK(period_index(lam(), QuadScalar(1)) == 2);  // 1 < sqrt2 < 2
    CHECK(period_index(QuadScalar(0), lam()) == 0);
    CHECK(period_index(QuadScalar(0), QuadScalar(Rational(1, 7))) == 0);
    CHECK(period_index(QuadScalar(5), lam()) == 2);  // 2λ ≈ 4.83 <= 5 < 3λ
    CHECK(period_index(QuadScalar(-1), QuadScalar(1)) == -1);
    CHECK(period_index(QuadScalar(Rational(-1, 2)), lam()) == -1);
    CHECK_THROWS_AS(period_index(QuadScalar(1), QuadScalar(0)), std::domain_error);
}

TEST_CASE("floor_int across sign and magnitude") {
    CHECK(floor_int(lam()) == 2);
    CHECK(floor_int(-lam()) == -3);
    CHECK(floor_int(QuadScalar(Rational(7, 2))) == 3);
    CHECK(floor_int(QuadScalar(Rational(-7, 2))) == -4);
    QuadScalar big = lam() * lam() * lam() * lam();  // (1+sqrt2)^4 = 17+12sqrt2 ~ 33.97
    CHECK(floor_int(big) == 33);
}

TEST_CASE("continued fraction of 1+sqrt2 and sqrt2") {
    CFExpansion cf = continued_fraction(lam(), 4);
    REQUIRE(cf.quotients.size() == 4);
    for (const Int& q : cf.quotients) CHECK(q == 2);  // [2; 2, 2, 2]
    REQUIRE(cf.period_start.has_value());
    CHECK(*cf.period_start == 0);  // purely periodic

    CFExpansion cf2 = continued_fraction(sqrt2(), 3);
    REQUIRE(cf2.quotients.size() == 3);
    CHECK(cf2.quotients[0] == 1);
    CHECK(cf2.quotients[1] == 2);
    CHECK(cf2.quotients[2] == 2);
    REQUIRE(cf2.period_start.has_value());
    CHECK(*cf2.period_start == 1);

    CHECK_THROWS_AS(continued_fraction(QuadScalar(Rational(3, 2)), 4), std::domain_error);
}

TEST_CASE("convergents of lambda: 2, 5/2, 12/5, 29/12") {
    CFExpansion cf;
    cf.quotients = {Int(2), Int(2), Int(2), Int(2)};
    auto cs = convergents(cf);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == std::pair<Int, Int>(2, 1));
    CHECK(cs[1] == std::pair<Int, Int>(5, 2));
    CHECK(cs[2] == std::pair<Int, Int>(12, 5));
    CHECK(cs[3] == std::pair<Int, Int>(29, 12));
    // cross-multiplied compare against lambda: convergents alternate sides
    for (std::size_t k = 0; k < cs.size(); ++k) {
        QuadScalar approx(Rational(cs[k].first, cs[k].second));
        int side = compare(approx, lam());
        CHECK(side == (k % 2 == 0 ? -1 : 1));
    }
}

TEST_CASE("best approximation property up to q = 50") {
    // For each convergent p/q of lambda, |q*lambda - p| beats every q' < q.
    CFExpansion cf;
    cf.quotients = std::vector<Int>(6, Int(2));
    auto cs = convergents(cf);
    for (const auto& [p, q] : cs) {
        if (q > 50) break;
        QuadScalar err = abs(QuadScalar(Rational(q)) * lam() - QuadScalar(Rational(p)));
        for (Int qp = 1; qp < q; ++qp) {
            QuadScalar target = QuadScalar(Rational(qp)) * lam();
            Int pp = floor_int(target);
            QuadScalar e1 = abs(target - QuadScalar(Rational(pp)));
            QuadScalar e2 = abs(target - QuadScalar(Rational(pp + 1)));
            QuadScalar best = e1 < e2 ? e1 : e2;
            CHECK(err < best);
        }
    }
}

TEST_CASE("text round-trip") {
    QuadScalar vals[] = {
        QuadScalar(0),
        QuadScalar(Rational(-5, 3)),
        lam(),
        QuadScalar(Rational(3), Rational(-2), 2),
        QuadScalar(Rational(0), Rational(-1, 7), 5),
        QuadScalar(Rational(1, 2), Rational(1, 2), 3),
    };
    for (const QuadScalar& v : vals) {
        CHECK(QuadScalar::parse(v.str()) == v);
    }
    CHECK(QuadScalar::parse("1+sqrt2") == lam());
    CHECK(QuadScalar::parse("1 + 1*sqrt(2)") == lam());
    CHECK(QuadScalar::parse("-sqrt(2)") == -sqrt2());
    CHECK_THROWS_AS(QuadScalar::parse("1+sqrt"), std::invalid_argument);
    CHECK_THROWS_AS(QuadScalar::parse(""), std::invalid_argument);
}
