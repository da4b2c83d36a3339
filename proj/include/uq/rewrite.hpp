#pragma once

#include <string>
#include <vector>

#include "uq/algebra.hpp"

namespace uq {

// Oriented relation: leading word -> combination of strictly smaller words.
struct RewriteRule {
    Word lhs;
    AlgElement rhs;
};

enum class ReductionStrategy { LeftmostFirstRule, RightmostLastRule };

// Confluent-at-cap rewriting system for U_q(g): straightening rules for the
// E/F/K interplay plus Buchberger-completed pure-E and pure-F Serre rules
// up to the degree cap. Immutable after construction.
class RewriteSystem {
public:
    // Throws InvalidArgument when cap < 2 or too small to hold a base
    // Serre relation.
    RewriteSystem(CartanData cd, int cap);

    const CartanData& cartan() const { return cd_; }
    int cap() const { return cap_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<std::string>& completion_log() const { return log_; }

    // Exhaustive reduction to the unique (at cap) normal form. Words of
    // E/F-degree above the cap are rejected with CapExceeded.
    AlgElement normal_form(
        const AlgElement& x,
        ReductionStrategy strategy = ReductionStrategy::LeftmostFirstRule) const;

    AlgElement multiply(const AlgElement& x, const AlgElement& y) const;
    // xy - yx, normalized.
    AlgElement commutator(const AlgElement& x, const AlgElement& y) const;
    // xy - c*yx, normalized.
    AlgElement q_commutator(const AlgElement& x, const AlgElement& y,
                            const RationalFunction& c) const;

    AlgElement e(int i) const {
        return AlgElement::generator(cd_.rank(), Generator::E(i));
    }
    AlgElement f(int i) const {
        return AlgElement::generator(cd_.rank(), Generator::F(i));
    }
    AlgElement k(int i, int exp = 1) const;
    AlgElement one() const { return AlgElement::scalar(cd_.rank(), 1); }

    // True iff w contains no rule left side.
    bool is_normal_word(const Word& w) const;

private:
    void add_base_rules();
    void complete_serre(GenKind kind);
    void orient_into_rule(const AlgElement& rel, std::vector<int>& pure_rules);
    bool find_match(const Word& w, ReductionStrategy strategy, std::size_t* pos,
                    std::size_t* rule) const;

    CartanData cd_;
    int cap_;
    std::vector<RewriteRule> rules_;
    // rule indices by first-letter rank, for matching
    std::vector<std::vector<std::size_t>> by_first_;
    std::vector<std::string> log_;
};

}  // namespace uq
