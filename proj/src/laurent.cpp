#include "uq/laurent.hpp"

#include <sstream>

namespace uq {

Rational rational_pow(const Rational& a, long e) {
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw DivisionByZero();
        return 0;
    }
    Rational base = a;
    long n = e;
    if (n < 0) {
        base = 1 / base;
        n = -n;
    }
    Rational r = 1;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
}

Rational LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(long exp, const Rational& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

long LaurentPoly::min_exp() const { return coeffs_.begin()->first; }
long LaurentPoly::max_exp() const { return coeffs_.rbegin()->first; }
Rational LaurentPoly::leading_coeff() const { return coeffs_.rbegin()->second; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end()) {
                Rational p = c1 * c2;
                if (p != 0) r.coeffs_[e1 + e2] = p;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, cc] : coeffs_) r.coeffs_[e] = cc * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly r;
    for (const auto& [ex, c] : coeffs_) r.coeffs_[ex + e] = c;
    return r;
}

Rational LaurentPoly::content_signed() const {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : coeffs_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coeff() < 0) content = -content;
    return content;
}

Rational LaurentPoly::eval(const Rational& v) const {
    Rational r = 0;
    for (const auto& [e, c] : coeffs_) r += c * rational_pow(v, e);
    return r;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else if (a < 0) {
            out << " - ";
            a = -a;
        } else {
            out << " + ";
        }
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    auto make_monic = [](const LaurentPoly& p) {
        return p.is_zero() ? p : p * (1 / p.leading_coeff());
    };
    while (!b.is_zero()) {
        // a mod b
        LaurentPoly r = a;
        while (!r.is_zero() && r.max_exp() >= b.max_exp()) {
            Rational f = r.leading_coeff() / b.leading_coeff();
            r = r - b.shifted(r.max_exp() - b.max_exp()) * f;
        }
        a = b;
        b = make_monic(r);
    }
    return make_monic(a);
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    LaurentPoly r = a, quot;
    while (!r.is_zero() && r.max_exp() >= b.max_exp()) {
        Rational f = r.leading_coeff() / b.leading_coeff();
        long sh = r.max_exp() - b.max_exp();
        quot.set_coeff(sh, f);
        r = r - b.shifted(sh) * f;
    }
    if (!r.is_zero())
        throw InvalidArgument("poly_divexact: division is not exact");
    return quot;
}

}  // namespace uq
