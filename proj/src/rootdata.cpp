#include "uq/rootdata.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "uq/laurent.hpp"

namespace uq {

bool RootLatticeElement::in_positive_cone() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](long c) { return c >= 0; });
}

bool RootLatticeElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](long c) { return c == 0; });
}

RootLatticeElement RootLatticeElement::operator+(
    const RootLatticeElement& o) const {
    RootLatticeElement r = *this;
    for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
    return r;
}

RootLatticeElement RootLatticeElement::operator-() const {
    RootLatticeElement r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

std::string RootLatticeElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        long c = coords[k];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? "+" : "-");
        else if (c < 0) out << "-";
        first = false;
        if (std::abs(c) != 1) out << std::abs(c) << "*";
        out << "a" << (k + 1);
    }
    return first ? "0" : out.str();
}

RootLatticeElement simple_root(int rank, int i) {
    RootLatticeElement r{std::vector<long>(rank, 0)};
    r.coords[i - 1] = 1;
    return r;
}

CartanData::CartanData(std::vector<std::vector<long>> cartan_matrix)
    : A_(std::move(cartan_matrix)) {
    n_ = static_cast<int>(A_.size());
    if (n_ == 0) throw InvalidArgument("Cartan matrix: empty");
    for (const auto& row : A_)
        if (static_cast<int>(row.size()) != n_)
            throw InvalidArgument("Cartan matrix: not square");
    for (int i = 0; i < n_; ++i) {
        if (A_[i][i] != 2) throw InvalidArgument("Cartan matrix: a_ii != 2");
        bool has_neighbor = false;
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            if (A_[i][j] > 0 || A_[i][j] < -3)
                throw InvalidArgument("Cartan matrix: a_ij not in {0,-1,-2,-3}");
            if ((A_[i][j] == 0) != (A_[j][i] == 0))
                throw InvalidArgument("Cartan matrix: a_ij = 0 iff a_ji = 0 violated");
            if (A_[i][j] != 0) has_neighbor = true;
        }
        if (n_ > 1 && !has_neighbor)
            throw InvalidArgument("Cartan matrix: node without neighbor");
    }
    // Recover symmetrizers from d_i a_ij = d_j a_ji with min d_i = 1,
    // propagating along edges of the diagram.
    d_.assign(n_, 0);
    // Work over rationals to avoid committing to an integer scale early.
    std::vector<Rational> dr(n_, 0);
    for (int start = 0; start < n_; ++start) {
        if (dr[start] != 0) continue;
        dr[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n_; ++j) {
                if (i == j || A_[i][j] == 0) continue;
                Rational want = dr[i] * A_[i][j] / A_[j][i];
                if (dr[j] == 0) {
                    dr[j] = want;
                    stack.push_back(j);
                } else if (dr[j] != want) {
                    throw InvalidArgument("Cartan matrix: not symmetrizable");
                }
            }
        }
    }
    // Scale so all d_i are integers with min 1.
    mpz_class den_lcm = 1;
    for (const auto& r : dr)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                r.get_den().get_mpz_t());
    std::vector<mpz_class> di(n_);
    mpz_class g = 0;
    for (int i = 0; i < n_; ++i) {
        di[i] = dr[i].get_num() * (den_lcm / dr[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di[i].get_mpz_t());
    }
    for (int i = 0; i < n_; ++i) d_[i] = mpz_class(di[i] / g).get_si();
}

CartanData CartanData::preset(TypeTag tag) {
    switch (tag) {
        case TypeTag::A2:
            return CartanData({{2, -1}, {-1, 2}});
        case TypeTag::B2:
            return CartanData({{2, -2}, {-1, 2}});
    }
    throw InvalidArgument("unknown preset");
}

CartanData CartanData::from_stream(std::istream& in) {
    int n;
    if (!(in >> n) || n <= 0)
        throw InvalidArgument("Cartan file: bad rank line");
    std::vector<std::vector<long>> A(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> A[i][j]))
                throw InvalidArgument("Cartan file: missing matrix entry");
    return CartanData(std::move(A));
}

long CartanData::inner(const RootLatticeElement& x,
                       const RootLatticeElement& y) const {
    long s = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            s += x.coords[i - 1] * y.coords[j - 1] * inner(i, j);
    return s;
}

RootLatticeElement CartanData::reflect(int i,
                                       const RootLatticeElement& gamma) const {
    if (i < 1 || i > n_) throw InvalidArgument("reflect: index out of range");
    long pairing = 0;  // <gamma, alpha_i^vee> = sum_j c_j a_ij
    for (int j = 1; j <= n_; ++j) pairing += gamma.coords[j - 1] * a(i, j);
    RootLatticeElement r = gamma;
    r.coords[i - 1] -= pairing;
    return r;
}

std::string ReducedWord::str() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) out << ",";
        out << letters[k];
    }
    return out.str();
}

PositiveRootsResult positive_roots_from_word(const CartanData& cd,
                                             const ReducedWord& word) {
    PositiveRootsResult res{{}, true, 0};
    std::set<RootLatticeElement> seen;
    for (std::size_t k = 0; k < word.letters.size(); ++k) {
        RootLatticeElement beta = simple_root(cd.rank(), word.letters[k]);
        for (std::size_t t = k; t-- > 0;) beta = cd.reflect(word.letters[t], beta);
        res.roots.push_back(beta);
        if (!beta.in_positive_cone() || !seen.insert(beta).second) {
            res.reduced = false;
            res.failure_position = static_cast<int>(k + 1);
            return res;
        }
    }
    return res;
}

namespace {

void extend_reduced(const CartanData& cd, std::vector<int>& word,
                    std::set<RootLatticeElement>& seen,
                    std::vector<ReducedWord>& out, std::size_t limit) {
    bool extended = false;
    for (int i = 1; i <= cd.rank(); ++i) {
        RootLatticeElement beta = simple_root(cd.rank(), i);
        for (std::size_t t = word.size(); t-- > 0;)
            beta = cd.reflect(word[t], beta);
        if (!beta.in_positive_cone() || seen.count(beta)) continue;
        extended = true;
        word.push_back(i);
        seen.insert(beta);
        extend_reduced(cd, word, seen, out, limit);
        seen.erase(beta);
        word.pop_back();
    }
    if (!extended) {
        // Maximal reduced word: a reduced word for w_0.
        out.push_back(ReducedWord{word});
        if (out.size() > limit)
            throw InvalidArgument(
                "longest_words: not implemented for this Cartan matrix "
                "(too many reduced decompositions)");
    }
}

}  // namespace

std::vector<ReducedWord> longest_words(const CartanData& cd) {
    std::vector<ReducedWord> out;
    std::vector<int> word;
    std::set<RootLatticeElement> seen;
    extend_reduced(cd, word, seen, out, 100000);
    return out;
}

bool DiagramSymmetry::is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i + 1)) return false;
    return true;
}

std::vector<DiagramSymmetry> diagram_symmetries(const CartanData& cd) {
    int n = cd.rank();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<DiagramSymmetry> out;
    do {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j)
                if (cd.inner(i, j) != cd.inner(p[i - 1], p[j - 1])) ok = false;
        if (ok) out.push_back(DiagramSymmetry{p});
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end(),
              [](const DiagramSymmetry& a, const DiagramSymmetry& b) {
                  return a.perm < b.perm;
              });
    return out;
}

}  // namespace uq
