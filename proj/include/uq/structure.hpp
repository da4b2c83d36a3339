#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uq/braid.hpp"
#include "uq/linalg.hpp"
#include "uq/rewrite.hpp"

namespace uq {

struct GradedComponent {
    int degree;
    std::vector<Word> basis;  // pure-E normal words, term order
    std::size_t dimension() const { return basis.size(); }
};

// All pure-E normal words of total degree d, in term order.
GradedComponent component_basis(const RewriteSystem& rs, int d);

// Basis of the degree-d part of the center of U_q^+(g), by exact null-space
// computation. Each basis element is scaled so its lexicographically first
// nonzero PBW coordinate (w.r.t. the given root-vector table) equals 1.
std::vector<AlgElement> center_basis(const RewriteSystem& rs,
                                     const RootVectorTable& table, int d);

// True iff x commutes with every generator E_i.
bool check_central(const RewriteSystem& rs, const AlgElement& x);

struct NormalCertificate {
    AlgElement element;
    std::vector<RationalFunction> scalars;  // c_i with x E_i = c_i E_i x
};

struct NormalCheckResult {
    std::optional<NormalCertificate> certificate;
    // When absent: the first i with no scalar. Absence of a certificate is
    // not a proof of non-normality.
    int failing_index = 0;
};

NormalCheckResult check_normal(const RewriteSystem& rs, const AlgElement& x);

struct NamedElement {
    std::string name;
    AlgElement element;
    int n_degree;
    RootLatticeElement q_degree;
};

// Named elements per preset; tags (CLI spelling): A2: "E3", "E3p", "Omega";
// B2: "E3", "E3p", "E4", "z", "zp".
NamedElement named(const RewriteSystem& rs, TypeTag type,
                   const std::string& tag);
std::vector<std::string> named_tags(TypeTag type);

// (q^2 - 1) E3 E3' = (q^4 - 1) z E2 + q^2 z'  (B2 only).
bool verify_e3e3p_identity(const RewriteSystem& rs, TypeTag type);

// z' = q^-2 (q^2-1) E3'^2 + E2 u with u homogeneous of degree 3; returns u.
// B2 only; no solution is a ConsistencyError.
AlgElement solve_zprime_decomposition(const RewriteSystem& rs, TypeTag type);

// True iff q_degree(x) is a single weight (x != 0).
bool is_h_eigenvector(const AlgElement& x);

}  // namespace uq
