#pragma once

#include <map>
#include <string>
#include <vector>

#include "uq/rewrite.hpp"

namespace uq {

// E_i^(s) = E_i^s / [s]_i!  (likewise for F with kind = F).
AlgElement divided_power(const RewriteSystem& rs, int i, int s,
                         GenKind kind = GenKind::E);

// Image of x under Lusztig's braid operator T_i, normalized:
//   T_i(E_i) = -F_i K_i
//   T_i(E_j) = sum_s (-1)^{s-a_ij} q_i^{-s} E_i^(-a_ij-s) E_j E_i^(s)
//   T_i(F_i) = -K_i^-1 E_i
//   T_i(F_j) = sum_s (-1)^{s-a_ij} q_i^{s} F_i^(s) F_j F_i^(-a_ij-s)
//   T_i(K_a) = K_{s_i(a)}
AlgElement apply_T(const RewriteSystem& rs, int i, const AlgElement& x);

struct RootVectorTable {
    ReducedWord word;
    std::vector<RootLatticeElement> roots;     // beta_1..beta_N
    std::vector<AlgElement> vectors;           // E_{beta_1}..E_{beta_N}

    std::size_t size() const { return roots.size(); }
    // One line per root: "beta = <coords> ; E_beta = <element>".
    std::string export_text() const;
};

// E_{beta_k} = T_{i_1}...T_{i_{k-1}}(E_{i_k}). Rejects non-reduced words;
// a positivity or weight failure is a ConsistencyError.
RootVectorTable root_vectors(const RewriteSystem& rs, const ReducedWord& word);

struct BraidCheckReport {
    int i, j, order;
    std::vector<std::string> lines;  // one comparison per generator
    bool passed;
};

// T_iT_jT_i... = T_jT_iT_j... (m factors each) on every generator, m the
// order of s_is_j read off a_ij*a_ji.
BraidCheckReport verify_braid_relation(const RewriteSystem& rs, int i, int j);

// Exponent vectors (k_1..k_N) with sum k_t * height(beta_t) = d, in
// lexicographic order.
std::vector<std::vector<int>> pbw_monomials(const RootVectorTable& table,
                                            int d);

// The normalized product E_{beta_1}^{k_1}...E_{beta_N}^{k_N}.
AlgElement pbw_monomial_element(const RewriteSystem& rs,
                                const RootVectorTable& table,
                                const std::vector<int>& exponents);

// Coordinates of x (pure-E) over the PBW basis. Inconsistency of the solve
// is a ConsistencyError.
std::map<std::vector<int>, RationalFunction> pbw_expand(
    const RewriteSystem& rs, const RootVectorTable& table, const AlgElement& x);

struct StraighteningRelation {
    int i, j;                      // 1-based positions, i < j
    RationalFunction q_scalar;     // q^{-(beta_i, beta_j)}
    // intermediate exponent vector (k_{i+1}..k_{j-1}) -> coefficient
    std::map<std::vector<int>, RationalFunction> coefficients;
};

// E_{beta_j}E_{beta_i} - q^{-(beta_i,beta_j)} E_{beta_i}E_{beta_j} expanded
// over PBW monomials; support outside the intermediate window is a
// ConsistencyError.
StraighteningRelation ls_straighten(const RewriteSystem& rs,
                                    const RootVectorTable& table, int i,
                                    int j);

}  // namespace uq
