#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "uq/errors.hpp"

namespace uq {

using Rational = mpq_class;

// a^e for integer e (e < 0 requires a != 0).
Rational rational_pow(const Rational& a, long e);

// Laurent polynomial in q with rational coefficients.
// Canonical: no zero coefficients stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);  // NOLINT: implicit by design
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly monomial(const Rational& coeff, long exp);
    static LaurentPoly q_power(long exp) { return monomial(1, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // A single term c*q^e.
    bool is_monomial() const { return coeffs_.size() == 1; }

    const std::map<long, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long exp) const;
    void set_coeff(long exp, const Rational& c);

    long min_exp() const;  // requires nonzero
    long max_exp() const;  // requires nonzero
    Rational leading_coeff() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Arbitrary total order, for use as a map key.
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    // Multiply by q^e.
    LaurentPoly shifted(long e) const;

    // gcd of coefficient numerators over lcm of denominators, signed so that
    // dividing by it leaves a positive leading coefficient. Requires nonzero.
    Rational content_signed() const;

    // Exact rational evaluation at q = v (v != 0 when negative exponents occur).
    Rational eval(const Rational& v) const;

    // Decreasing exponent order, e.g. "q^2 + 1 + q^-2", "3*q^-1 - 5/2".
    std::string str() const;

private:
    std::map<long, Rational> coeffs_;
};

// gcd over Q[q] of two ordinary polynomials (min_exp >= 0), normalized so
// the result is monic. gcd(0, b) = b made monic. Both zero -> zero.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

// Exact division: a / b where b divides a in Q[q] (both ordinary).
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace uq
