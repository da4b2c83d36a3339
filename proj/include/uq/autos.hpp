#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uq/rewrite.hpp"

namespace uq {

// Candidate endomorphism of U_q^+(g), given by generator images.
struct EndoSpec {
    std::vector<AlgElement> images;  // images[i-1] = image of E_i, pure-E

    bool operator==(const EndoSpec&) const = default;
};

// phi_lambda with phi(E_i) = lambda_i E_i; scalars range over nonzero
// elements of Q(q).
struct TorusAut {
    std::vector<RationalFunction> scalars;
};

struct DiagramAut {
    DiagramSymmetry symmetry;
};

EndoSpec as_endo(const RewriteSystem& rs, const TorusAut& t);
EndoSpec as_endo(const RewriteSystem& rs, const DiagramAut& d);

// Image of x under generator substitution followed by normal_form.
AlgElement apply_endo(const RewriteSystem& rs, const EndoSpec& s,
                      const AlgElement& x);

// compose(a, b)(E_i) = a(b(E_i)).
EndoSpec compose(const RewriteSystem& rs, const EndoSpec& a,
                 const EndoSpec& b);

struct EndoReport {
    std::vector<std::string> lines;  // one Serre relation verdict per line
    bool passed;
};

// Substitutes the images into every E-Serre relation and checks the result
// normalizes to zero.
EndoReport verify_endo(const RewriteSystem& rs, const EndoSpec& s);

struct LowestDegreeReport {
    int input_degree;
    std::vector<int> component_degrees;  // degrees present in the image
    bool passed;  // degree-d part nonzero and nothing below d
};

LowestDegreeReport lowest_degree_check(const RewriteSystem& rs,
                                       const EndoSpec& s, const AlgElement& x);

// Scalar c with s(x) = c x, when the image is proportional to x.
std::optional<RationalFunction> central_action(const RewriteSystem& rs,
                                               const EndoSpec& s,
                                               const AlgElement& x);

// (deg s(E_1), ..., deg s(E_n)).
std::vector<int> degree_profile(const RewriteSystem& rs, const EndoSpec& s);

// Necessary condition for invertibility: the degree-1 linear part of the
// images has nonzero determinant.
bool linear_part_invertible(const RewriteSystem& rs, const EndoSpec& s);

// Automorphism definition file: lines "E<i> -> <expression>"; blank lines
// and '#' comments ignored. Expressions use the CLI grammar; parsing is
// supplied by the caller to avoid a parser dependency here.

}  // namespace uq
