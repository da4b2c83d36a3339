#include "uq/structure.hpp"

#include <algorithm>

namespace uq {

namespace {

// Pure-E rule left sides of the system (the only rules a pure-E word can
// match).
std::vector<Word> pure_e_lhs(const RewriteSystem& rs) {
    std::vector<Word> out;
    for (const auto& r : rs.rules()) {
        bool pure = std::all_of(r.lhs.begin(), r.lhs.end(), [](Generator g) {
            return g.kind == GenKind::E;
        });
        if (pure) out.push_back(r.lhs);
    }
    return out;
}

bool has_suffix_match(const Word& w, const std::vector<Word>& patterns) {
    for (const auto& p : patterns) {
        if (p.size() > w.size()) continue;
        bool ok = true;
        std::size_t off = w.size() - p.size();
        for (std::size_t k = 0; k < p.size() && ok; ++k)
            ok = w[off + k] == p[k];
        if (ok) return true;
    }
    return false;
}

}  // namespace

GradedComponent component_basis(const RewriteSystem& rs, int d) {
    if (d > rs.cap()) throw CapExceeded(d);
    int n = rs.cartan().rank();
    std::vector<Word> lhs = pure_e_lhs(rs);
    GradedComponent comp{d, {}};
    Word cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == d) {
            comp.basis.push_back(cur);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            cur.push_back(Generator::E(i));
            if (!has_suffix_match(cur, lhs)) self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(comp.basis.begin(), comp.basis.end(), WordOrder{n});
    return comp;
}

std::vector<AlgElement> center_basis(const RewriteSystem& rs,
                                     const RootVectorTable& table, int d) {
    if (d > rs.cap() - 1)
        throw CapExceeded(d + 1);
    int n = rs.cartan().rank();
    GradedComponent comp = component_basis(rs, d);
    // Rows: (generator index, degree-(d+1) normal word); columns: basis
    // words of degree d. Entries from [b, E_i] in normal form.
    std::map<std::pair<int, Word>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, RationalFunction>>> colvals(
        comp.basis.size());
    for (std::size_t col = 0; col < comp.basis.size(); ++col) {
        AlgElement b = AlgElement::monomial(n, comp.basis[col]);
        for (int i = 1; i <= n; ++i) {
            AlgElement comm = rs.commutator(b, rs.e(i));
            for (const auto& [w, c] : comm.terms()) {
                auto key = std::make_pair(i, w);
                auto [it, ins] = row_of.emplace(key, row_of.size());
                colvals[col].emplace_back(it->second, c);
            }
        }
    }
    Matrix mat(row_of.size(), Vec(comp.basis.size(), RationalFunction(0)));
    for (std::size_t col = 0; col < comp.basis.size(); ++col)
        for (const auto& [row, c] : colvals[col]) mat[row][col] = c;
    std::vector<AlgElement> out;
    for (const auto& v : null_space(std::move(mat), comp.basis.size())) {
        AlgElement x(n);
        for (std::size_t col = 0; col < comp.basis.size(); ++col)
            x.add_term(comp.basis[col], v[col]);
        // Scale: lexicographically first PBW coordinate = 1.
        auto coords = pbw_expand(rs, table, x);
        if (!coords.empty()) x = x * coords.begin()->second.inv();
        out.push_back(std::move(x));
    }
    return out;
}

bool check_central(const RewriteSystem& rs, const AlgElement& x) {
    for (int i = 1; i <= rs.cartan().rank(); ++i)
        if (!rs.commutator(x, rs.e(i)).is_zero()) return false;
    return true;
}

NormalCheckResult check_normal(const RewriteSystem& rs, const AlgElement& x) {
    if (x.is_zero()) throw InvalidArgument("check_normal: zero element");
    NormalCertificate cert{x, {}};
    for (int i = 1; i <= rs.cartan().rank(); ++i) {
        AlgElement xe = rs.multiply(x, rs.e(i));
        AlgElement ex = rs.multiply(rs.e(i), x);
        auto c = proportionality_scalar(xe, ex);
        if (!c) return NormalCheckResult{std::nullopt, i};
        cert.scalars.push_back(*c);
    }
    return NormalCheckResult{std::move(cert), 0};
}

namespace {

NamedElement make_named(const RewriteSystem& rs, std::string name,
                        AlgElement x) {
    AlgElement nf = rs.normal_form(x);
    auto wt = nf.q_degree();
    if (!wt)
        throw ConsistencyError("named element " + name + " is inhomogeneous");
    return NamedElement{std::move(name), nf, nf.n_degree(), *wt};
}

}  // namespace

std::vector<std::string> named_tags(TypeTag type) {
    if (type == TypeTag::A2) return {"E3", "E3p", "Omega"};
    return {"E3", "E3p", "E4", "z", "zp"};
}

NamedElement named(const RewriteSystem& rs, TypeTag type,
                   const std::string& tag) {
    int n = rs.cartan().rank();
    auto mono = [&](const Word& w, const RationalFunction& c) {
        return AlgElement::monomial(n, w, c);
    };
    Word e12 = {Generator::E(1), Generator::E(2)};
    Word e21 = {Generator::E(2), Generator::E(1)};
    auto qp = [](long e) { return RationalFunction::q_power(e); };
    if (type == TypeTag::A2) {
        AlgElement e3 = mono(e12, RationalFunction(-1)) + mono(e21, qp(-1));
        if (tag == "E3") return make_named(rs, tag, e3);
        AlgElement e3p = mono(e21, RationalFunction(-1)) + mono(e12, qp(-1));
        if (tag == "E3p") return make_named(rs, tag, e3p);
        if (tag == "Omega") return make_named(rs, tag, rs.multiply(e3, e3p));
    } else {
        AlgElement e3 = mono(e12, RationalFunction(1)) + mono(e21, -qp(-2));
        if (tag == "E3") return make_named(rs, tag, e3);
        if (tag == "E3p")
            return make_named(
                rs, tag, mono(e12, RationalFunction(1)) + mono(e21, -qp(2)));
        AlgElement e4 = apply_T(rs, 1, rs.e(2));
        if (tag == "E4") return make_named(rs, tag, e4);
        // z = (1-q^2) E1 E3 + q^2 (q+q^-1) E4
        AlgElement z =
            rs.multiply(rs.e(1), e3) * (RationalFunction(1) - qp(2)) +
            e4 * (qp(2) * (qp(1) + qp(-1)));
        if (tag == "z") return make_named(rs, tag, z);
        // z' = -(q^2-q^-2)(q+q^-1) E4 E2 + q^2 (q^2-1) E3^2
        AlgElement zp =
            rs.multiply(e4, rs.e(2)) * (-(qp(2) - qp(-2)) * (qp(1) + qp(-1))) +
            rs.multiply(e3, e3) * (qp(2) * (qp(2) - RationalFunction(1)));
        if (tag == "zp") return make_named(rs, tag, zp);
    }
    throw InvalidArgument("named: unknown tag '" + tag + "' for this type");
}

bool verify_e3e3p_identity(const RewriteSystem& rs, TypeTag type) {
    if (type != TypeTag::B2)
        throw InvalidArgument("verify_e3e3p_identity: B2 only");
    auto qp = [](long e) { return RationalFunction::q_power(e); };
    AlgElement e3 = named(rs, type, "E3").element;
    AlgElement e3p = named(rs, type, "E3p").element;
    AlgElement z = named(rs, type, "z").element;
    AlgElement zp = named(rs, type, "zp").element;
    AlgElement lhs = rs.multiply(e3, e3p) * (qp(2) - RationalFunction(1));
    AlgElement rhs = rs.multiply(z, rs.e(2)) * (qp(4) - RationalFunction(1)) +
                     zp * qp(2);
    return lhs == rhs;
}

AlgElement solve_zprime_decomposition(const RewriteSystem& rs, TypeTag type) {
    if (type != TypeTag::B2)
        throw InvalidArgument("solve_zprime_decomposition: B2 only");
    int n = rs.cartan().rank();
    auto qp = [](long e) { return RationalFunction::q_power(e); };
    AlgElement e3p = named(rs, type, "E3p").element;
    AlgElement zp = named(rs, type, "zp").element;
    AlgElement target =
        zp - rs.multiply(e3p, e3p) * (qp(-2) * (qp(2) - RationalFunction(1)));
    // Solve E2 u = target with u in the degree-3 component.
    GradedComponent comp = component_basis(rs, 3);
    std::map<Word, std::size_t, WordOrder> row_of(WordOrder{n});
    std::vector<AlgElement> cols;
    for (const auto& b : comp.basis) {
        cols.push_back(rs.multiply(rs.e(2), AlgElement::monomial(n, b)));
        for (const auto& [w, c] : cols.back().terms())
            row_of.emplace(w, row_of.size());
    }
    for (const auto& [w, c] : target.terms()) row_of.emplace(w, row_of.size());
    Matrix mat(row_of.size(), Vec(cols.size(), RationalFunction(0)));
    Vec rhs(row_of.size(), RationalFunction(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [w, c] : cols[j].terms()) mat[row_of.at(w)][j] = c;
    for (const auto& [w, c] : target.terms()) rhs[row_of.at(w)] = c;
    auto sol = solve(std::move(mat), std::move(rhs));
    if (!sol)
        throw ConsistencyError(
            "z' decomposition: no solution u with z' = q^-2(q^2-1)E3'^2 + E2 u");
    AlgElement u(n);
    for (std::size_t j = 0; j < comp.basis.size(); ++j)
        u.add_term(comp.basis[j], (*sol)[j]);
    return u;
}

bool is_h_eigenvector(const AlgElement& x) {
    return x.q_degree().has_value();
}

}  // namespace uq
