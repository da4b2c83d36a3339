#include <random>

#include "doctest.h"
#include "uq/ratfun.hpp"

using namespace uq;

namespace {

RationalFunction qpow(long e) { return RationalFunction::q_power(e); }

// Random rational function: ratio of small random Laurent polynomials.
RationalFunction random_rf(std::mt19937& rng, bool allow_den = true) {
    std::uniform_int_distribution<int> nterms(1, 3), exp(-3, 3), coef(-4, 4);
    auto poly = [&]() {
        LaurentPoly p;
        int t = nterms(rng);
        for (int k = 0; k < t; ++k)
            p = p + LaurentPoly::monomial(coef(rng), exp(rng));
        return p;
    };
    LaurentPoly num = poly();
    LaurentPoly den = allow_den ? poly() : LaurentPoly(1);
    if (den.is_zero()) den = LaurentPoly(1);
    return RationalFunction(num, den);
}

}  // namespace

TEST_CASE("laurent basics and rendering") {
    LaurentPoly p = LaurentPoly::q_power(2) + LaurentPoly(1) +
                    LaurentPoly::q_power(-2);
    CHECK(p.str() == "q^2 + 1 + q^-2");
    CHECK((LaurentPoly(1) - LaurentPoly(1)).is_zero());
    CHECK(p.eval(2) == Rational(21, 4));
}

TEST_CASE("add: identity and school algebra") {
    RationalFunction x = qpow(1) + qpow(-1);
    CHECK(x + RationalFunction(0) == x);
    // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
    RationalFunction a(LaurentPoly(1), LaurentPoly::q_power(1) - LaurentPoly(1));
    RationalFunction b(LaurentPoly(1), LaurentPoly::q_power(1) + LaurentPoly(1));
    RationalFunction expect(LaurentPoly::monomial(2, 1),
                            LaurentPoly::q_power(2) - LaurentPoly(1));
    CHECK(a + b == expect);
}

TEST_CASE("canonicalization clears Laurent units into the numerator") {
    // (q^2-1)/(q+q^-1) -> (q^3-q)/(q^2+1), by hand: multiply through by q
    RationalFunction x(LaurentPoly::q_power(2) - LaurentPoly(1),
                       LaurentPoly::q_power(1) + LaurentPoly::q_power(-1));
    CHECK(x.num() == LaurentPoly::q_power(3) - LaurentPoly::q_power(1));
    CHECK(x.den() == LaurentPoly::q_power(2) + LaurentPoly(1));
    CHECK((x + RationalFunction(0)) == x);
}

TEST_CASE("mul, inv, neg") {
    CHECK(qpow(1) * qpow(-1) == RationalFunction(1));
    // inv(q+q^-1) = q/(q^2+1)
    RationalFunction x = (qpow(1) + qpow(-1)).inv();
    CHECK(x.num() == LaurentPoly::q_power(1));
    CHECK(x.den() == LaurentPoly::q_power(2) + LaurentPoly(1));
    RationalFunction y = qpow(2) - RationalFunction(1);
    CHECK(y * y.inv() == RationalFunction(1));
    CHECK(RationalFunction(0) - y == -y);
    CHECK_THROWS_AS(RationalFunction(0).inv(), DivisionByZero);
}

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0, 1).is_zero());
    CHECK(quantum_integer(1, 1) == RationalFunction(1));
    CHECK(quantum_integer(2, 1) == qpow(1) + qpow(-1));
    CHECK(quantum_integer(3, 1) == qpow(2) + RationalFunction(1) + qpow(-2));
    CHECK(quantum_integer(2, 2) == qpow(2) + qpow(-2));
}

TEST_CASE("quantum factorial and binomial") {
    CHECK(quantum_binomial(3, 0, 1) == RationalFunction(1));
    CHECK(quantum_binomial(2, 1, 1) == qpow(1) + qpow(-1));
    CHECK(quantum_factorial(2, 1) == qpow(1) + qpow(-1));
    CHECK_THROWS_AS(quantum_binomial(2, 3, 1), InvalidArgument);
    // binomials are Laurent polynomials and symmetric in k <-> m-k
    for (long d : {1L, 2L, 3L})
        for (long m = 0; m <= 6; ++m)
            for (long k = 0; k <= m; ++k) {
                RationalFunction b = quantum_binomial(m, k, d);
                CHECK(b.is_polynomial());
                CHECK(b == quantum_binomial(m, m - k, d));
            }
}

TEST_CASE("eval_at") {
    CHECK((qpow(1) + qpow(-1)).eval_at(2) == Rational(5, 2));
    RationalFunction pole(LaurentPoly(1),
                          LaurentPoly::q_power(1) - LaurentPoly(1));
    CHECK_THROWS_AS(pole.eval_at(1), PoleError);
    CHECK_THROWS_AS(pole.eval_at(0), InvalidArgument);
    RationalFunction x = qpow(2) + RationalFunction(1) + qpow(-2);
    CHECK(x.eval_at(Rational(3, 2)) == Rational(133, 36));
}

TEST_CASE("quantum integer matches its defining formula at sample points") {
    // eval([s]_d, v) = (v^{ds} - v^{-ds})/(v^d - v^{-d})
    for (long d : {1L, 2L, 3L})
        for (long s = 0; s <= 5; ++s)
            for (Rational v : {Rational(2), Rational(3, 2)}) {
                Rational lhs = quantum_integer(s, d).eval_at(v);
                Rational rhs = (rational_pow(v, d * s) -
                                rational_pow(v, -d * s)) /
                               (rational_pow(v, d) - rational_pow(v, -d));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        RationalFunction a = random_rf(rng), b = random_rf(rng),
                         c = random_rf(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RationalFunction(0));
        if (!a.is_zero()) CHECK(a * a.inv() == RationalFunction(1));
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        RationalFunction a = random_rf(rng);
        RationalFunction again(a.num(), a.den());
        CHECK(again == a);
    }
}

TEST_CASE("rendering of rational functions") {
    CHECK((qpow(1) + qpow(-1)).str() == "q + q^-1");
    RationalFunction x(LaurentPoly(1), LaurentPoly::q_power(2) + LaurentPoly(1));
    CHECK(x.str() == "1/(q^2 + 1)");
}
