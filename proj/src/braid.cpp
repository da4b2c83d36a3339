#include "uq/braid.hpp"

#include <sstream>

#include "uq/linalg.hpp"

namespace uq {

AlgElement divided_power(const RewriteSystem& rs, int i, int s, GenKind kind) {
    if (s < 0) throw InvalidArgument("divided_power: s < 0");
    int n = rs.cartan().rank();
    Word w(s, kind == GenKind::E ? Generator::E(i) : Generator::F(i));
    return AlgElement::monomial(n, w,
                                quantum_factorial(s, rs.cartan().d(i)).inv());
}

namespace {

// Monomial K_{alpha} for a lattice element alpha.
AlgElement k_alpha(const RewriteSystem& rs, const RootLatticeElement& alpha) {
    AlgElement x = rs.one();
    for (int j = 1; j <= rs.cartan().rank(); ++j)
        x = x.free_mul(rs.k(j, static_cast<int>(alpha.coords[j - 1])));
    return x;
}

// Generator image under T_i.
AlgElement t_image(const RewriteSystem& rs, int i, const Generator& g) {
    const CartanData& cd = rs.cartan();
    int n = cd.rank();
    int j = g.index;
    switch (g.kind) {
        case GenKind::E: {
            if (j == i)
                return AlgElement::monomial(
                    n, {Generator::F(i), Generator::K(i)}, RationalFunction(-1));
            long m = -cd.a(i, j);
            AlgElement sum(n);
            for (long s = 0; s <= m; ++s) {
                AlgElement term =
                    divided_power(rs, i, static_cast<int>(m - s))
                        .free_mul(rs.e(j))
                        .free_mul(divided_power(rs, i, static_cast<int>(s)));
                RationalFunction c = RationalFunction::q_power(-cd.d(i) * s);
                if ((s + m) % 2 == 1) c = -c;
                sum = sum + term * c;
            }
            return sum;
        }
        case GenKind::F: {
            if (j == i)
                return AlgElement::monomial(
                    n, {Generator::Kinv(i), Generator::E(i)},
                    RationalFunction(-1));
            long m = -cd.a(i, j);
            AlgElement sum(n);
            for (long s = 0; s <= m; ++s) {
                AlgElement term =
                    divided_power(rs, i, static_cast<int>(s), GenKind::F)
                        .free_mul(rs.f(j))
                        .free_mul(divided_power(rs, i, static_cast<int>(m - s),
                                                GenKind::F));
                RationalFunction c = RationalFunction::q_power(cd.d(i) * s);
                if ((s + m) % 2 == 1) c = -c;
                sum = sum + term * c;
            }
            return sum;
        }
        case GenKind::Kplus:
            return k_alpha(rs, cd.reflect(i, simple_root(n, j)));
        case GenKind::Kminus:
            return k_alpha(rs, -cd.reflect(i, simple_root(n, j)));
    }
    throw InvalidArgument("t_image: bad generator");
}

}  // namespace

AlgElement apply_T(const RewriteSystem& rs, int i, const AlgElement& x) {
    int n = rs.cartan().rank();
    AlgElement out(n);
    for (const auto& [w, c] : x.terms()) {
        AlgElement prod = AlgElement::scalar(n, c);
        for (const auto& g : w) prod = prod.free_mul(t_image(rs, i, g));
        out = out + prod;
    }
    return rs.normal_form(out);
}

RootVectorTable root_vectors(const RewriteSystem& rs,
                             const ReducedWord& word) {
    auto res = positive_roots_from_word(rs.cartan(), word);
    if (!res.reduced)
        throw InvalidArgument("root_vectors: word is not reduced (position " +
                              std::to_string(res.failure_position) + ")");
    RootVectorTable table{word, res.roots, {}};
    for (std::size_t k = 0; k < word.letters.size(); ++k) {
        AlgElement x = rs.e(word.letters[k]);
        for (std::size_t t = k; t-- > 0;) x = apply_T(rs, word.letters[t], x);
        if (!x.is_positive_part())
            throw ConsistencyError("root vector " + std::to_string(k + 1) +
                                   " left the positive part");
        auto wt = x.q_degree();
        if (!wt || *wt != res.roots[k])
            throw ConsistencyError("root vector " + std::to_string(k + 1) +
                                   " has the wrong weight");
        // A simple root must yield its generator.
        for (int j = 1; j <= rs.cartan().rank(); ++j)
            if (res.roots[k] == simple_root(rs.cartan().rank(), j) &&
                x != rs.e(j))
                throw ConsistencyError(
                    "simple-root vector differs from its generator");
        table.vectors.push_back(std::move(x));
    }
    return table;
}

std::string RootVectorTable::export_text() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < roots.size(); ++k)
        out << "beta = " << roots[k].str()
            << " ; E_beta = " << vectors[k].str() << "\n";
    return out.str();
}

BraidCheckReport verify_braid_relation(const RewriteSystem& rs, int i, int j) {
    if (i == j) throw InvalidArgument("verify_braid_relation: i = j");
    const CartanData& cd = rs.cartan();
    long prod = cd.a(i, j) * cd.a(j, i);
    int m;
    switch (prod) {
        case 0: m = 2; break;
        case 1: m = 3; break;
        case 2: m = 4; break;
        case 3: m = 6; break;
        default:
            throw InvalidArgument("verify_braid_relation: a_ij*a_ji > 3");
    }
    BraidCheckReport report{i, j, m, {}, true};
    auto chain = [&](int first, int second, const AlgElement& x) {
        AlgElement y = x;
        // Composition T_a T_b T_a ... (m factors) applied to x: rightmost
        // factor acts first.
        std::vector<int> order;
        for (int t = 0; t < m; ++t) order.push_back(t % 2 == 0 ? first : second);
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            y = apply_T(rs, *it, y);
        return y;
    };
    for (int g = 1; g <= cd.rank(); ++g) {
        std::vector<std::pair<std::string, AlgElement>> gens = {
            {"E" + std::to_string(g), rs.e(g)},
            {"F" + std::to_string(g), rs.f(g)},
            {"K" + std::to_string(g), rs.k(g)}};
        for (const auto& [name, x] : gens) {
            bool equal = chain(i, j, x) == chain(j, i, x);
            report.passed = report.passed && equal;
            report.lines.push_back(name + std::string(": ") +
                                   (equal ? "agree" : "DISAGREE"));
        }
    }
    return report;
}

std::vector<std::vector<int>> pbw_monomials(const RootVectorTable& table,
                                            int d) {
    std::size_t N = table.size();
    std::vector<int> heights(N);
    for (std::size_t t = 0; t < N; ++t)
        heights[t] = table.vectors[t].n_degree();
    std::vector<std::vector<int>> out;
    std::vector<int> cur(N, 0);
    // lexicographic enumeration by backtracking
    auto rec = [&](auto&& self, std::size_t t, int remaining) -> void {
        if (t == N) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int k = 0; k * heights[t] <= remaining; ++k) {
            cur[t] = k;
            self(self, t + 1, remaining - k * heights[t]);
        }
        cur[t] = 0;
    };
    rec(rec, 0, d);
    return out;
}

AlgElement pbw_monomial_element(const RewriteSystem& rs,
                                const RootVectorTable& table,
                                const std::vector<int>& exponents) {
    AlgElement x = rs.one();
    for (std::size_t t = 0; t < table.size(); ++t)
        for (int k = 0; k < exponents[t]; ++k)
            x = rs.multiply(x, table.vectors[t]);
    return x;
}

std::map<std::vector<int>, RationalFunction> pbw_expand(
    const RewriteSystem& rs, const RootVectorTable& table,
    const AlgElement& x) {
    if (!x.is_positive_part())
        throw InvalidArgument("pbw_expand: element is not in the positive part");
    std::map<std::vector<int>, RationalFunction> out;
    AlgElement nf = rs.normal_form(x);
    if (nf.is_zero()) return out;
    int n = rs.cartan().rank();
    for (int d = 0; d <= nf.n_degree(); ++d) {
        AlgElement comp = nf.homogeneous_component(d);
        if (comp.is_zero()) continue;
        auto monos = pbw_monomials(table, d);
        // Columns: normal forms of PBW monomials; rows: normal words.
        std::map<Word, std::size_t, WordOrder> row_of(WordOrder{n});
        std::vector<AlgElement> cols;
        for (const auto& m : monos) {
            cols.push_back(pbw_monomial_element(rs, table, m));
            for (const auto& [w, c] : cols.back().terms())
                row_of.emplace(w, row_of.size());
        }
        for (const auto& [w, c] : comp.terms()) row_of.emplace(w, row_of.size());
        Matrix mat(row_of.size(), Vec(monos.size(), RationalFunction(0)));
        Vec rhs(row_of.size(), RationalFunction(0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [w, c] : cols[j].terms())
                mat[row_of.at(w)][j] = c;
        for (const auto& [w, c] : comp.terms()) rhs[row_of.at(w)] = c;
        auto sol = solve(std::move(mat), std::move(rhs));
        if (!sol)
            throw ConsistencyError(
                "pbw_expand: element is outside the PBW span at degree " +
                std::to_string(d));
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (!(*sol)[j].is_zero()) out.emplace(monos[j], (*sol)[j]);
    }
    return out;
}

StraighteningRelation ls_straighten(const RewriteSystem& rs,
                                    const RootVectorTable& table, int i,
                                    int j) {
    if (!(1 <= i && i < j && j <= static_cast<int>(table.size())))
        throw InvalidArgument("ls_straighten: requires 1 <= i < j <= N");
    const AlgElement& ei = table.vectors[i - 1];
    const AlgElement& ej = table.vectors[j - 1];
    long ip = rs.cartan().inner(table.roots[i - 1], table.roots[j - 1]);
    RationalFunction scalar = RationalFunction::q_power(-ip);
    AlgElement lhs = rs.q_commutator(ej, ei, scalar);
    auto coords = pbw_expand(rs, table, lhs);
    StraighteningRelation rel{i, j, scalar, {}};
    for (const auto& [exps, c] : coords) {
        for (int t = 0; t < static_cast<int>(exps.size()); ++t)
            if (exps[t] != 0 && (t < i || t >= j - 1)) {
                if (t == i - 1 || t == j - 1)
                    throw ConsistencyError(
                        "ls_straighten: support touches the outer pair");
                throw ConsistencyError(
                    "ls_straighten: support outside the intermediate window");
            }
        std::vector<int> inner(exps.begin() + i, exps.begin() + (j - 1));
        rel.coefficients.emplace(std::move(inner), c);
    }
    return rel;
}

}  // namespace uq
