#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uq/errors.hpp"

namespace uq {

// Element of the root lattice Q in the simple-root basis.
struct RootLatticeElement {
    std::vector<long> coords;

    bool operator==(const RootLatticeElement&) const = default;
    bool operator<(const RootLatticeElement& o) const {
        return coords < o.coords;
    }

    bool in_positive_cone() const;
    bool is_zero() const;
    RootLatticeElement operator+(const RootLatticeElement& o) const;
    RootLatticeElement operator-() const;
    std::string str() const;  // e.g. "2a1+a2"
};

RootLatticeElement simple_root(int rank, int i);  // alpha_i, 1-based

enum class TypeTag { A2, B2 };

// Cartan matrix with symmetrizers and the induced inner product.
class CartanData {
public:
    // Validates: a_ii = 2, a_ij in {0,-1,-2,-3} off-diagonal, a_ij = 0 iff
    // a_ji = 0, symmetrizable with min d_i = 1, and every node has a
    // neighbor (no zero off-diagonal row).
    explicit CartanData(std::vector<std::vector<long>> cartan_matrix);

    static CartanData preset(TypeTag tag);
    // Plain-text format: first line rank n, then n lines of n integers.
    static CartanData from_stream(std::istream& in);

    int rank() const { return n_; }
    long a(int i, int j) const { return A_[i - 1][j - 1]; }     // 1-based
    long d(int i) const { return d_[i - 1]; }                   // 1-based
    long inner(int i, int j) const { return d(i) * a(i, j); }   // (alpha_i, alpha_j)
    long inner(const RootLatticeElement& x, const RootLatticeElement& y) const;

    // s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i, with
    // <alpha_j, alpha_i^vee> = a_ij.
    RootLatticeElement reflect(int i, const RootLatticeElement& gamma) const;

    bool operator==(const CartanData& o) const { return A_ == o.A_; }

private:
    int n_;
    std::vector<std::vector<long>> A_;
    std::vector<long> d_;
};

struct ReducedWord {
    std::vector<int> letters;  // indices in 1..n

    bool operator==(const ReducedWord&) const = default;
    std::string str() const;  // "1,2,1"
};

struct PositiveRootsResult {
    std::vector<RootLatticeElement> roots;  // beta_1..beta_k (prefix if rejected)
    bool reduced;
    int failure_position;  // 1-based position of the first offence; 0 if none
};

// beta_k := s_{i_1}...s_{i_{k-1}}(alpha_{i_k}); the word is accepted as
// reduced iff all beta_k lie in Q+ and are pairwise distinct.
PositiveRootsResult positive_roots_from_word(const CartanData& cd,
                                             const ReducedWord& word);

// All reduced words for the longest element w_0, found by extending words
// while the positive-root criterion holds. Throws InvalidArgument when the
// search exceeds the built-in feasibility bound.
std::vector<ReducedWord> longest_words(const CartanData& cd);

// Permutation w of {1..n} with (alpha_i,alpha_j) = (alpha_w(i),alpha_w(j)).
struct DiagramSymmetry {
    std::vector<int> perm;  // perm[i-1] = w(i), 1-based values

    bool operator==(const DiagramSymmetry&) const = default;
    int operator()(int i) const { return perm[i - 1]; }
    bool is_identity() const;
};

std::vector<DiagramSymmetry> diagram_symmetries(const CartanData& cd);

}  // namespace uq
