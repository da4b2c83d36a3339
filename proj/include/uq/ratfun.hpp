#pragma once

#include <string>

#include "uq/laurent.hpp"

namespace uq {

// Element of Q(q), stored canonically: gcd(num, den) = 1 after clearing
// Laurent units, den an ordinary polynomial in q with content 1, positive
// leading coefficient and nonzero constant term. Equality is structural.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(const LaurentPoly& num);  // NOLINT: implicit by design
    RationalFunction(long constant) : RationalFunction(LaurentPoly(constant)) {}
    RationalFunction(const Rational& c) : RationalFunction(LaurentPoly(c)) {}
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction q_power(long e) {
        return RationalFunction(LaurentPoly::q_power(e));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inv() const;
    RationalFunction pow(long e) const;

    RationalFunction& operator+=(const RationalFunction& o) {
        return *this = *this + o;
    }
    RationalFunction& operator-=(const RationalFunction& o) {
        return *this = *this - o;
    }
    RationalFunction& operator*=(const RationalFunction& o) {
        return *this = *this * o;
    }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    // Arbitrary total order, for use as a map key.
    bool operator<(const RationalFunction& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    // Exact evaluation at q = v. Throws InvalidArgument for v = 0 and
    // PoleError when the denominator vanishes at v.
    Rational eval_at(const Rational& v) const;

    // "num / den" with den omitted when 1; multi-term parts parenthesized
    // so the output re-parses.
    std::string str() const;

private:
    void canonicalize();

    LaurentPoly num_, den_ = LaurentPoly(1);
};

inline RationalFunction operator*(const Rational& c,
                                  const RationalFunction& f) {
    return RationalFunction(c) * f;
}

// Quantum combinatorics, with q_i = q^d.
// [s]_i = (q_i^s - q_i^-s)/(q_i - q_i^-1); [0] = 0, [1] = 1.
RationalFunction quantum_integer(long s, long d);
// [s]_i! = [1]_i ... [s]_i.
RationalFunction quantum_factorial(long s, long d);
// [m k]_i; requires 0 <= k <= m; [m 0]_i = 1.
RationalFunction quantum_binomial(long m, long k, long d);

}  // namespace uq
