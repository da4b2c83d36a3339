#include "uq/algebra.hpp"

#include <sstream>

namespace uq {

int Generator::rank_in(int n) const {
    int i = index - 1;
    switch (kind) {
        case GenKind::F:
            return i;
        case GenKind::Kminus:
            return n + 2 * i;
        case GenKind::Kplus:
            return n + 2 * i + 1;
        case GenKind::E:
            return 3 * n + i;
    }
    return 0;
}

std::string Generator::str() const {
    switch (kind) {
        case GenKind::E:
            return "E" + std::to_string(index);
        case GenKind::F:
            return "F" + std::to_string(index);
        case GenKind::Kplus:
            return "K" + std::to_string(index);
        case GenKind::Kminus:
            return "K" + std::to_string(index) + "^-1";
    }
    return "?";
}

int ef_degree(const Word& w) {
    int d = 0;
    for (const auto& g : w) d += g.is_ef() ? 1 : 0;
    return d;
}

bool WordOrder::operator()(const Word& a, const Word& b) const {
    int da = ef_degree(a), db = ef_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        int ra = a[k].rank_in(n), rb = b[k].rank_in(n);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out << "*";
        out << w[k].str();
    }
    return out.str();
}

AlgElement AlgElement::monomial(int rank, const Word& w,
                                const RationalFunction& c) {
    AlgElement x(rank);
    if (!c.is_zero()) x.terms_.emplace(w, c);
    return x;
}

RationalFunction AlgElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void AlgElement::add_term(const Word& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    AlgElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    AlgElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

AlgElement AlgElement::operator-() const {
    AlgElement r(rank_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

AlgElement AlgElement::operator*(const RationalFunction& c) const {
    AlgElement r(rank_);
    if (c.is_zero()) return r;
    for (const auto& [w, cc] : terms_) r.terms_.emplace(w, cc * c);
    return r;
}

AlgElement AlgElement::free_mul(const AlgElement& o) const {
    AlgElement r(rank_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

int AlgElement::n_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, ef_degree(w));
    return d;
}

std::optional<RootLatticeElement> AlgElement::q_degree() const {
    if (is_zero()) throw InvalidArgument("q_degree: zero element");
    std::optional<RootLatticeElement> weight;
    for (const auto& [w, c] : terms_) {
        RootLatticeElement wt{std::vector<long>(rank_, 0)};
        for (const auto& g : w) {
            if (g.kind == GenKind::E) wt.coords[g.index - 1] += 1;
            if (g.kind == GenKind::F) wt.coords[g.index - 1] -= 1;
        }
        if (!weight)
            weight = wt;
        else if (*weight != wt)
            return std::nullopt;
    }
    return weight;
}

bool AlgElement::is_positive_part() const {
    for (const auto& [w, c] : terms_)
        for (const auto& g : w)
            if (g.kind != GenKind::E) return false;
    return true;
}

AlgElement AlgElement::homogeneous_component(int d) const {
    AlgElement r(rank_);
    for (const auto& [w, c] : terms_)
        if (ef_degree(w) == d) r.terms_.emplace(w, c);
    return r;
}

std::map<Word, Rational, WordOrder> AlgElement::eval_at(
    const Rational& v) const {
    std::map<Word, Rational, WordOrder> out(WordOrder{rank_});
    for (const auto& [w, c] : terms_) {
        Rational val = c.eval_at(v);
        if (val != 0) out.emplace(w, val);
    }
    return out;
}

std::string AlgElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        RationalFunction c = it->second;
        bool negative = c.num().leading_coeff() < 0;
        if (negative) c = -c;
        bool leading = first;
        if (first) {
            if (negative) out << "- ";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (w.empty()) {
            std::string cs = c.str();
            // after an extracted sign a bare sum must be bracketed
            if (!(leading && !negative) && c.is_polynomial() &&
                c.num().coeffs().size() > 1)
                cs = "(" + cs + ")";
            out << cs;
        } else {
            if (!c.is_one()) {
                std::string cs = c.str();
                // bracket a bare polynomial sum so "c * word" re-parses
                if (c.is_polynomial() && c.num().coeffs().size() > 1)
                    cs = "(" + cs + ")";
                out << cs << " * ";
            }
            out << word_str(w);
        }
    }
    return out.str();
}

std::optional<RationalFunction> proportionality_scalar(const AlgElement& x,
                                                       const AlgElement& y) {
    if (x.is_zero() || y.is_zero())
        throw InvalidArgument("proportionality_scalar: zero element");
    if (x.terms().size() != y.terms().size()) return std::nullopt;
    std::optional<RationalFunction> scalar;
    auto ix = x.terms().begin();
    auto iy = y.terms().begin();
    for (; ix != x.terms().end(); ++ix, ++iy) {
        if (ix->first != iy->first) return std::nullopt;
        RationalFunction ratio = ix->second / iy->second;
        if (!scalar)
            scalar = ratio;
        else if (*scalar != ratio)
            return std::nullopt;
    }
    return scalar;
}

AlgElement serre_relation(const CartanData& cd, int i, int j, GenKind kind) {
    if (i == j) throw InvalidArgument("serre_relation: i = j");
    if (kind != GenKind::E && kind != GenKind::F)
        throw InvalidArgument("serre_relation: kind must be E or F");
    int n = cd.rank();
    long m = 1 - cd.a(i, j);
    Generator xi = kind == GenKind::E ? Generator::E(i) : Generator::F(i);
    Generator xj = kind == GenKind::E ? Generator::E(j) : Generator::F(j);
    AlgElement rel(n);
    for (long k = 0; k <= m; ++k) {
        Word w;
        w.insert(w.end(), m - k, xi);
        w.push_back(xj);
        w.insert(w.end(), k, xi);
        RationalFunction c = quantum_binomial(m, k, cd.d(i));
        if (k % 2 == 1) c = -c;
        rel.add_term(w, c);
    }
    return rel;
}

Presentation relations(const CartanData& cd) {
    int n = cd.rank();
    Presentation p{cd, {}, {}};
    auto add = [&](AlgElement rel, std::string label) {
        p.relations.push_back(std::move(rel));
        p.labels.push_back(std::move(label));
    };
    auto mono = [&](const Word& w, const RationalFunction& c) {
        return AlgElement::monomial(n, w, c);
    };
    for (int i = 1; i <= n; ++i) {
        // K_i K_i^-1 = 1 = K_i^-1 K_i
        add(mono({Generator::K(i), Generator::Kinv(i)}, 1) -
                AlgElement::scalar(n, 1),
            "K" + std::to_string(i) + " invertible (right)");
        add(mono({Generator::Kinv(i), Generator::K(i)}, 1) -
                AlgElement::scalar(n, 1),
            "K" + std::to_string(i) + " invertible (left)");
        for (int j = 1; j <= n; ++j) {
            if (i < j)
                add(mono({Generator::K(i), Generator::K(j)}, 1) -
                        mono({Generator::K(j), Generator::K(i)}, 1),
                    "K" + std::to_string(i) + "K" + std::to_string(j) +
                        " commute");
            // K_i E_j = q_i^{a_ij} E_j K_i ; K_i F_j = q_i^{-a_ij} F_j K_i
            add(mono({Generator::K(i), Generator::E(j)}, 1) -
                    mono({Generator::E(j), Generator::K(i)},
                         RationalFunction::q_power(cd.d(i) * cd.a(i, j))),
                "K" + std::to_string(i) + "-E" + std::to_string(j) +
                    " conjugation");
            add(mono({Generator::K(i), Generator::F(j)}, 1) -
                    mono({Generator::F(j), Generator::K(i)},
                         RationalFunction::q_power(-cd.d(i) * cd.a(i, j))),
                "K" + std::to_string(i) + "-F" + std::to_string(j) +
                    " conjugation");
            // E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)
            AlgElement ef =
                mono({Generator::E(i), Generator::F(j)}, 1) -
                mono({Generator::F(j), Generator::E(i)}, 1);
            if (i == j) {
                RationalFunction den =
                    RationalFunction::q_power(cd.d(i)) -
                    RationalFunction::q_power(-cd.d(i));
                ef = ef - (mono({Generator::K(i)}, 1) -
                           mono({Generator::Kinv(i)}, 1)) *
                              den.inv();
            }
            add(ef, "E" + std::to_string(i) + "-F" + std::to_string(j) +
                        " relation");
            if (i != j) {
                add(serre_relation(cd, i, j, GenKind::E),
                    "E-Serre (" + std::to_string(i) + "," + std::to_string(j) +
                        ")");
                add(serre_relation(cd, i, j, GenKind::F),
                    "F-Serre (" + std::to_string(i) + "," + std::to_string(j) +
                        ")");
            }
        }
    }
    return p;
}

}  // namespace uq
