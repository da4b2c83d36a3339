#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uq/ratfun.hpp"
#include "uq/rootdata.hpp"

namespace uq {

enum class GenKind : std::uint8_t { F, Kminus, Kplus, E };

// One letter of the free monoid on E_i, F_i, K_i^{+-1}.
struct Generator {
    GenKind kind;
    std::uint8_t index;  // 1..n

    static Generator E(int i) { return {GenKind::E, std::uint8_t(i)}; }
    static Generator F(int i) { return {GenKind::F, std::uint8_t(i)}; }
    static Generator K(int i) { return {GenKind::Kplus, std::uint8_t(i)}; }
    static Generator Kinv(int i) { return {GenKind::Kminus, std::uint8_t(i)}; }

    bool is_ef() const { return kind == GenKind::E || kind == GenKind::F; }
    bool is_k() const { return !is_ef(); }

    // Letter rank realizing F1 < .. < Fn < K1^-1 < K1 < .. < Kn^-1 < Kn
    // < E1 < .. < En for a rank-n algebra.
    int rank_in(int n) const;

    // raw (kind, index) ordering for generic containers; semantic letter
    // order is rank_in / WordOrder
    auto operator<=>(const Generator&) const = default;
    std::string str() const;  // "E1", "F2", "K1", "K1^-1"
};

using Word = std::vector<Generator>;

// Count of E/F letters; K letters contribute 0.
int ef_degree(const Word& w);

// Degree-lexicographic order: compare (ef_degree, length, letter ranks).
// Compatible with concatenation; K-cancellation strictly decreases it.
struct WordOrder {
    int n;
    bool operator()(const Word& a, const Word& b) const;
};

std::string word_str(const Word& w);  // letters joined by '*'; "1" if empty

// Finitely supported map Word -> Q(q), no zero coefficients stored.
// Iteration order is the term order (smallest first).
class AlgElement {
public:
    explicit AlgElement(int rank) : terms_(WordOrder{rank}), rank_(rank) {}
    static AlgElement zero(int rank) { return AlgElement(rank); }
    static AlgElement monomial(int rank, const Word& w,
                               const RationalFunction& c = RationalFunction(1));
    static AlgElement scalar(int rank, const RationalFunction& c) {
        return monomial(rank, {}, c);
    }
    static AlgElement generator(int rank, Generator g) {
        return monomial(rank, {g});
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, RationalFunction, WordOrder>& terms() const {
        return terms_;
    }
    RationalFunction coeff(const Word& w) const;
    void add_term(const Word& w, const RationalFunction& c);

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator-() const;
    AlgElement operator*(const RationalFunction& c) const;
    // Free product (no reduction); see RewriteSystem::multiply for the
    // normalized product.
    AlgElement free_mul(const AlgElement& o) const;

    bool operator==(const AlgElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgElement& o) const { return !(*this == o); }

    // Max E/F-letter count over the support; 0 for the zero element.
    int n_degree() const;
    // Common Q-weight (E_i -> alpha_i, F_i -> -alpha_i, K -> 0), or nullopt
    // when the support mixes weights. Rejects the zero element.
    std::optional<RootLatticeElement> q_degree() const;
    // True iff every support word uses only E letters.
    bool is_positive_part() const;
    // Component of given total E/F degree.
    AlgElement homogeneous_component(int d) const;

    // Evaluate every coefficient at q = v; zero coefficients pruned.
    std::map<Word, Rational, WordOrder> eval_at(const Rational& v) const;

    // Decreasing term order; "0" when zero. Re-parses to the same element.
    std::string str() const;

private:
    std::map<Word, RationalFunction, WordOrder> terms_;
    int rank_;
};

inline AlgElement operator*(const RationalFunction& c, const AlgElement& x) {
    return x * c;
}

// The scalar c with x = c*y, when one exists (x, y nonzero, same support).
std::optional<RationalFunction> proportionality_scalar(const AlgElement& x,
                                                       const AlgElement& y);

// Left side of the quantum Serre relation for the pair (i, j), i != j:
//   sum_{k=0}^{1-a_ij} (-1)^k [1-a_ij, k]_i X_i^{1-a_ij-k} X_j X_i^k
// with X = E or F.
AlgElement serre_relation(const CartanData& cd, int i, int j,
                          GenKind kind = GenKind::E);

struct Presentation {
    CartanData cd;
    // Relation elements, all of which normalize to zero.
    std::vector<AlgElement> relations;
    std::vector<std::string> labels;
};

// Full defining relation list of U_q(g): K commutation and inversion,
// K-E / K-F conjugation, the E-F relation, and both Serre families.
Presentation relations(const CartanData& cd);

}  // namespace uq
