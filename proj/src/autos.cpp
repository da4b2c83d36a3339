#include "uq/autos.hpp"

#include "uq/linalg.hpp"

namespace uq {

EndoSpec as_endo(const RewriteSystem& rs, const TorusAut& t) {
    int n = rs.cartan().rank();
    if (static_cast<int>(t.scalars.size()) != n)
        throw InvalidArgument("torus automorphism: wrong number of scalars");
    EndoSpec s;
    for (int i = 1; i <= n; ++i) {
        if (t.scalars[i - 1].is_zero())
            throw InvalidArgument("torus automorphism: zero scalar");
        s.images.push_back(rs.e(i) * t.scalars[i - 1]);
    }
    return s;
}

EndoSpec as_endo(const RewriteSystem& rs, const DiagramAut& d) {
    int n = rs.cartan().rank();
    EndoSpec s;
    for (int i = 1; i <= n; ++i) s.images.push_back(rs.e(d.symmetry(i)));
    return s;
}

AlgElement apply_endo(const RewriteSystem& rs, const EndoSpec& s,
                      const AlgElement& x) {
    int n = rs.cartan().rank();
    if (static_cast<int>(s.images.size()) != n)
        throw InvalidArgument("endomorphism: wrong number of images");
    for (const auto& img : s.images)
        if (img.is_zero() || !img.is_positive_part())
            throw InvalidArgument("endomorphism: images must be nonzero pure-E");
    AlgElement out(n);
    for (const auto& [w, c] : x.terms()) {
        AlgElement prod = AlgElement::scalar(n, c);
        for (const auto& g : w) {
            if (g.kind != GenKind::E)
                throw InvalidArgument(
                    "endomorphism: argument must lie in the positive part");
            prod = prod.free_mul(s.images[g.index - 1]);
        }
        if (prod.n_degree() > rs.cap()) throw CapExceeded(prod.n_degree());
        out = out + prod;
    }
    return rs.normal_form(out);
}

EndoSpec compose(const RewriteSystem& rs, const EndoSpec& a,
                 const EndoSpec& b) {
    EndoSpec out;
    for (const auto& img : b.images) out.images.push_back(apply_endo(rs, a, img));
    return out;
}

EndoReport verify_endo(const RewriteSystem& rs, const EndoSpec& s) {
    const CartanData& cd = rs.cartan();
    EndoReport report{{}, true};
    for (int i = 1; i <= cd.rank(); ++i)
        for (int j = 1; j <= cd.rank(); ++j) {
            if (i == j) continue;
            AlgElement rel = serre_relation(cd, i, j, GenKind::E);
            bool ok = apply_endo(rs, s, rel).is_zero();
            report.passed = report.passed && ok;
            report.lines.push_back("E-Serre (" + std::to_string(i) + "," +
                                   std::to_string(j) + "): " +
                                   (ok ? "preserved" : "VIOLATED"));
        }
    return report;
}

LowestDegreeReport lowest_degree_check(const RewriteSystem& rs,
                                       const EndoSpec& s,
                                       const AlgElement& x) {
    if (x.is_zero()) throw InvalidArgument("lowest_degree_check: zero element");
    int d = x.n_degree();
    AlgElement img = apply_endo(rs, s, x);
    LowestDegreeReport report{d, {}, false};
    for (int t = 0; t <= img.n_degree(); ++t)
        if (!img.homogeneous_component(t).is_zero())
            report.component_degrees.push_back(t);
    report.passed = !report.component_degrees.empty() &&
                    report.component_degrees.front() == d;
    return report;
}

std::optional<RationalFunction> central_action(const RewriteSystem& rs,
                                               const EndoSpec& s,
                                               const AlgElement& x) {
    if (x.is_zero()) throw InvalidArgument("central_action: zero element");
    AlgElement img = apply_endo(rs, s, x);
    if (img.is_zero()) return std::nullopt;
    return proportionality_scalar(img, rs.normal_form(x));
}

std::vector<int> degree_profile(const RewriteSystem& rs, const EndoSpec& s) {
    std::vector<int> out;
    for (const auto& img : s.images) out.push_back(rs.normal_form(img).n_degree());
    return out;
}

bool linear_part_invertible(const RewriteSystem& rs, const EndoSpec& s) {
    int n = rs.cartan().rank();
    Matrix m(n, Vec(n, RationalFunction(0)));
    for (int i = 1; i <= n; ++i) {
        AlgElement lin = rs.normal_form(s.images[i - 1]).homogeneous_component(1);
        for (const auto& [w, c] : lin.terms()) m[w[0].index - 1][i - 1] = c;
    }
    // determinant != 0 iff the null space is trivial
    return null_space(std::move(m), n).empty();
}

}  // namespace uq
