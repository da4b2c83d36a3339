#include "uq/ratfun.hpp"

#include <sstream>

namespace uq {

RationalFunction::RationalFunction(const LaurentPoly& num) : num_(num) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Clear Laurent units: shift both to ordinary polynomials with nonzero
    // constant term, remembering the net q-power on the numerator.
    long shift = num_.min_exp() - den_.min_exp();
    LaurentPoly a = num_.shifted(-num_.min_exp());
    LaurentPoly b = den_.shifted(-den_.min_exp());
    LaurentPoly g = poly_gcd(a, b);
    if (!g.is_one()) {
        a = poly_divexact(a, g);
        b = poly_divexact(b, g);
    }
    Rational c = b.content_signed();
    num_ = a.shifted(shift) * (1 / c);
    den_ = b * (1 / c);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    RationalFunction base = e < 0 ? inv() : *this;
    long n = e < 0 ? -e : e;
    RationalFunction r(1);
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Rational RationalFunction::eval_at(const Rational& v) const {
    if (v == 0) throw InvalidArgument("eval_at: v = 0");
    Rational d = den_.eval(v);
    if (d == 0) throw PoleError(v.get_str());
    return num_.eval(v) / d;
}

std::string RationalFunction::str() const {
    auto bracket = [](const LaurentPoly& p) {
        std::string s = p.str();
        return p.coeffs().size() > 1 ? "(" + s + ")" : s;
    };
    if (den_.is_one()) return num_.str();
    std::ostringstream out;
    out << bracket(num_) << "/" << bracket(den_);
    return out.str();
}

RationalFunction quantum_integer(long s, long d) {
    if (s < 0) throw InvalidArgument("quantum_integer: s < 0");
    // [s] = q^{d(s-1)} + q^{d(s-3)} + ... + q^{-d(s-1)}
    LaurentPoly p;
    for (long e = s - 1; e >= 1 - s; e -= 2) p = p + LaurentPoly::q_power(d * e);
    return RationalFunction(p);
}

RationalFunction quantum_factorial(long s, long d) {
    if (s < 0) throw InvalidArgument("quantum_factorial: s < 0");
    RationalFunction r(1);
    for (long t = 2; t <= s; ++t) r = r * quantum_integer(t, d);
    return r;
}

RationalFunction quantum_binomial(long m, long k, long d) {
    if (k < 0 || k > m)
        throw InvalidArgument("quantum_binomial: requires 0 <= k <= m");
    return quantum_factorial(m, d) /
           (quantum_factorial(k, d) * quantum_factorial(m - k, d));
}

}  // namespace uq
