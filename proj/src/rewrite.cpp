#include "uq/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace uq {

namespace {

// Leading (largest) term of a nonzero element.
const Word& leading_word(const AlgElement& x) {
    return x.terms().rbegin()->first;
}

RewriteRule orient(const AlgElement& rel) {
    const Word& lead = leading_word(rel);
    RationalFunction lc = rel.terms().rbegin()->second;
    AlgElement rhs(rel.rank());
    for (const auto& [w, c] : rel.terms()) {
        if (w == lead) continue;
        rhs.add_term(w, -(c / lc));
    }
    return RewriteRule{lead, rhs};
}

bool matches_at(const Word& w, const Word& pattern, std::size_t pos) {
    if (pos + pattern.size() > w.size()) return false;
    for (std::size_t k = 0; k < pattern.size(); ++k)
        if (!(w[pos + k] == pattern[k])) return false;
    return true;
}

// Generic reduction against an unindexic rule list (used during completion,
// where rule sets are small).
AlgElement reduce_linear(const std::vector<RewriteRule>& rules,
                         const AlgElement& x) {
    int n = x.rank();
    std::map<Word, RationalFunction, WordOrder> pending(WordOrder{n});
    for (const auto& [w, c] : x.terms()) pending.emplace(w, c);
    AlgElement result(n);
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        RationalFunction c = it->second;
        pending.erase(it);
        bool reduced = false;
        for (std::size_t pos = 0; pos < w.size() && !reduced; ++pos) {
            for (std::size_t r = 0; r < rules.size(); ++r) {
                if (!matches_at(w, rules[r].lhs, pos)) continue;
                Word prefix(w.begin(), w.begin() + pos);
                Word suffix(w.begin() + pos + rules[r].lhs.size(), w.end());
                for (const auto& [rw, rc] : rules[r].rhs.terms()) {
                    Word nw = prefix;
                    nw.insert(nw.end(), rw.begin(), rw.end());
                    nw.insert(nw.end(), suffix.begin(), suffix.end());
                    auto [pit, ins] = pending.emplace(nw, c * rc);
                    if (!ins) {
                        pit->second += c * rc;
                        if (pit->second.is_zero()) pending.erase(pit);
                    }
                }
                reduced = true;
                break;
            }
        }
        if (!reduced) result.add_term(w, c);
    }
    return result;
}

}  // namespace

AlgElement RewriteSystem::k(int i, int exp) const {
    Word w;
    Generator g = exp >= 0 ? Generator::K(i) : Generator::Kinv(i);
    for (int t = 0; t < std::abs(exp); ++t) w.push_back(g);
    return AlgElement::monomial(cd_.rank(), w);
}

RewriteSystem::RewriteSystem(CartanData cd, int cap)
    : cd_(std::move(cd)), cap_(cap) {
    if (cap_ < 2) throw InvalidArgument("rewrite system: cap must be >= 2");
    add_base_rules();
    complete_serre(GenKind::E);
    complete_serre(GenKind::F);
    // First-letter index over the final rule list.
    by_first_.assign(4 * cd_.rank(), {});
    for (std::size_t r = 0; r < rules_.size(); ++r)
        by_first_[rules_[r].lhs.front().rank_in(cd_.rank())].push_back(r);
}

void RewriteSystem::add_base_rules() {
    int n = cd_.rank();
    auto mono = [&](const Word& w, const RationalFunction& c) {
        return AlgElement::monomial(n, w, c);
    };
    std::vector<Generator> klets;
    for (int i = 1; i <= n; ++i) {
        klets.push_back(Generator::Kinv(i));
        klets.push_back(Generator::K(i));
    }
    // K-cancellation and K-sorting
    for (int i = 1; i <= n; ++i) {
        rules_.push_back({{Generator::K(i), Generator::Kinv(i)},
                          AlgElement::scalar(n, 1)});
        rules_.push_back({{Generator::Kinv(i), Generator::K(i)},
                          AlgElement::scalar(n, 1)});
    }
    for (const auto& x : klets)
        for (const auto& y : klets) {
            if (x.rank_in(n) <= y.rank_in(n)) continue;
            if (x.index == y.index) continue;  // cancellation handles these
            rules_.push_back({{x, y}, mono({y, x}, 1)});
        }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // E_j K_i^e -> q_i^{-e a_ij} K_i^e E_j
            for (int e : {+1, -1}) {
                Generator kg = e > 0 ? Generator::K(i) : Generator::Kinv(i);
                rules_.push_back(
                    {{Generator::E(j), kg},
                     mono({kg, Generator::E(j)},
                          RationalFunction::q_power(-e * cd_.d(i) *
                                                    cd_.a(i, j)))});
                // K_i^e F_j -> q_i^{-e a_ij} F_j K_i^e
                rules_.push_back(
                    {{kg, Generator::F(j)},
                     mono({Generator::F(j), kg},
                          RationalFunction::q_power(-e * cd_.d(i) *
                                                    cd_.a(i, j)))});
            }
            // E_i F_j -> F_j E_i + delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)
            AlgElement rhs = mono({Generator::F(j), Generator::E(i)}, 1);
            if (i == j) {
                RationalFunction den = RationalFunction::q_power(cd_.d(i)) -
                                       RationalFunction::q_power(-cd_.d(i));
                rhs = rhs + (mono({Generator::K(i)}, 1) -
                             mono({Generator::Kinv(i)}, 1)) *
                                den.inv();
            }
            rules_.push_back({{Generator::E(i), Generator::F(j)}, rhs});
        }
    }
}

void RewriteSystem::complete_serre(GenKind kind) {
    int n = cd_.rank();
    const char* tag = kind == GenKind::E ? "E" : "F";
    std::vector<RewriteRule> pure;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            AlgElement rel = serre_relation(cd_, i, j, kind);
            if (rel.is_zero()) continue;
            if (ef_degree(leading_word(rel)) > cap_)
                throw InvalidArgument(
                    "rewrite system: cap too small to orient the Serre "
                    "relation for (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
            pure.push_back(orient(rel));
        }

    // Noncommutative Buchberger: resolve overlap and inclusion ambiguities
    // of leading words up to the degree cap.
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t a = 0; a < pure.size(); ++a)
        for (std::size_t b = 0; b < pure.size(); ++b) queue.emplace_back(a, b);

    auto relation_of = [&](const RewriteRule& r) {
        return AlgElement::monomial(n, r.lhs) - r.rhs;
    };

    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        const Word& u = pure[a].lhs;
        const Word& v = pure[b].lhs;
        std::vector<AlgElement> spolys;
        // suffix of u of length t = prefix of v of length t
        std::size_t tmax = std::min(u.size(), v.size()) - 1;
        for (std::size_t t = 1; t <= tmax; ++t) {
            bool ok = true;
            for (std::size_t s = 0; s < t && ok; ++s)
                ok = u[u.size() - t + s] == v[s];
            if (!ok) continue;
            if (static_cast<int>(u.size() + v.size() - t) > cap_) {
                log_.push_back(std::string(tag) +
                               "-completion: overlap beyond cap skipped");
                continue;
            }
            Word head(u.begin(), u.end() - t);
            Word tail(v.begin() + t, v.end());
            spolys.push_back(
                pure[a].rhs.free_mul(AlgElement::monomial(n, tail)) -
                AlgElement::monomial(n, head).free_mul(pure[b].rhs));
        }
        // v strictly inside u
        if (a != b && v.size() < u.size()) {
            for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
                if (!matches_at(u, v, pos)) continue;
                Word prefix(u.begin(), u.begin() + pos);
                Word suffix(u.begin() + pos + v.size(), u.end());
                spolys.push_back(pure[a].rhs -
                                 AlgElement::monomial(n, prefix)
                                     .free_mul(pure[b].rhs)
                                     .free_mul(AlgElement::monomial(n, suffix)));
            }
        }
        for (const auto& sp : spolys) {
            AlgElement nf = reduce_linear(pure, sp);
            if (nf.is_zero()) continue;
            RewriteRule nr = orient(nf);
            pure.push_back(nr);
            log_.push_back(std::string(tag) + "-completion: added rule " +
                           word_str(nr.lhs) + " -> " + nr.rhs.str());
            std::size_t idx = pure.size() - 1;
            for (std::size_t t = 0; t < pure.size(); ++t) {
                queue.emplace_back(t, idx);
                queue.emplace_back(idx, t);
            }
        }
    }

    // Interreduce: drop rules whose relation follows from the others and
    // fully reduce the remaining right sides.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < pure.size(); ++r) {
            std::vector<RewriteRule> others;
            for (std::size_t t = 0; t < pure.size(); ++t)
                if (t != r) others.push_back(pure[t]);
            AlgElement nf = reduce_linear(others, relation_of(pure[r]));
            if (nf.is_zero()) {
                log_.push_back(std::string(tag) +
                               "-completion: interreduction dropped rule " +
                               word_str(pure[r].lhs));
                pure.erase(pure.begin() + r);
                changed = true;
                break;
            }
            RewriteRule re = orient(nf);
            if (!(re.lhs == pure[r].lhs) || re.rhs != pure[r].rhs) {
                pure[r] = re;
                changed = true;
            }
        }
    }

    for (auto& r : pure) rules_.push_back(std::move(r));
}

bool RewriteSystem::find_match(const Word& w, ReductionStrategy strategy,
                               std::size_t* pos, std::size_t* rule) const {
    auto try_pos = [&](std::size_t p) -> bool {
        const auto& bucket = by_first_[w[p].rank_in(cd_.rank())];
        if (strategy == ReductionStrategy::LeftmostFirstRule) {
            for (std::size_t r : bucket)
                if (matches_at(w, rules_[r].lhs, p)) {
                    *pos = p;
                    *rule = r;
                    return true;
                }
        } else {
            for (auto it = bucket.rbegin(); it != bucket.rend(); ++it)
                if (matches_at(w, rules_[*it].lhs, p)) {
                    *pos = p;
                    *rule = *it;
                    return true;
                }
        }
        return false;
    };
    if (strategy == ReductionStrategy::LeftmostFirstRule) {
        for (std::size_t p = 0; p < w.size(); ++p)
            if (try_pos(p)) return true;
    } else {
        for (std::size_t p = w.size(); p-- > 0;)
            if (try_pos(p)) return true;
    }
    return false;
}

bool RewriteSystem::is_normal_word(const Word& w) const {
    std::size_t pos, rule;
    return !find_match(w, ReductionStrategy::LeftmostFirstRule, &pos, &rule);
}

AlgElement RewriteSystem::normal_form(const AlgElement& x,
                                      ReductionStrategy strategy) const {
    int n = cd_.rank();
    std::map<Word, RationalFunction, WordOrder> pending(WordOrder{n});
    for (const auto& [w, c] : x.terms()) {
        if (ef_degree(w) > cap_) throw CapExceeded(ef_degree(w));
        pending.emplace(w, c);
    }
    AlgElement result(n);
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        RationalFunction c = it->second;
        pending.erase(it);
        std::size_t pos, rule;
        if (!find_match(w, strategy, &pos, &rule)) {
            result.add_term(w, c);
            continue;
        }
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + rules_[rule].lhs.size(), w.end());
        for (const auto& [rw, rc] : rules_[rule].rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            auto [pit, ins] = pending.emplace(nw, c * rc);
            if (!ins) {
                pit->second += c * rc;
                if (pit->second.is_zero()) pending.erase(pit);
            }
        }
    }
    return result;
}

AlgElement RewriteSystem::multiply(const AlgElement& x,
                                   const AlgElement& y) const {
    for (const auto& [w1, c1] : x.terms())
        for (const auto& [w2, c2] : y.terms()) {
            int d = ef_degree(w1) + ef_degree(w2);
            if (d > cap_) throw CapExceeded(d);
        }
    return normal_form(x.free_mul(y));
}

AlgElement RewriteSystem::commutator(const AlgElement& x,
                                     const AlgElement& y) const {
    return normal_form(x.free_mul(y) - y.free_mul(x));
}

AlgElement RewriteSystem::q_commutator(const AlgElement& x,
                                       const AlgElement& y,
                                       const RationalFunction& c) const {
    return normal_form(x.free_mul(y) - y.free_mul(x) * c);
}

}  // namespace uq
