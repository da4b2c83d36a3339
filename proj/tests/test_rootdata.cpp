#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "uq/rootdata.hpp"

using namespace uq;

TEST_CASE("presets") {
    CartanData a2 = CartanData::preset(TypeTag::A2);
    CHECK(a2.rank() == 2);
    CHECK(a2.a(1, 2) == -1);
    CHECK(a2.d(1) == 1);
    CHECK(a2.d(2) == 1);
    CHECK(a2.inner(1, 2) == -1);
    CHECK(a2.inner(1, 1) == 2);

    CartanData b2 = CartanData::preset(TypeTag::B2);
    CHECK(b2.a(1, 2) == -2);
    CHECK(b2.a(2, 1) == -1);
    CHECK(b2.d(1) == 1);
    CHECK(b2.d(2) == 2);
    CHECK(b2.inner(1, 2) == -2);
    CHECK(b2.inner(2, 1) == -2);
    CHECK(b2.inner(2, 2) == 4);
}

TEST_CASE("Cartan validation") {
    CHECK_THROWS_AS(CartanData({{2, -1}, {0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(CartanData({{2, 1}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(CartanData({{1, -1}, {-1, 2}}), InvalidArgument);
    // disconnected node
    CHECK_THROWS_AS(CartanData({{2, 0}, {0, 2}}), InvalidArgument);
}

TEST_CASE("Cartan file format") {
    std::istringstream in("2\n2 -2\n-1 2\n");
    CartanData cd = CartanData::from_stream(in);
    CHECK(cd == CartanData::preset(TypeTag::B2));
    std::istringstream bad("2\n2 -2\n");
    CHECK_THROWS_AS(CartanData::from_stream(bad), InvalidArgument);
}

TEST_CASE("reflections") {
    CartanData a2 = CartanData::preset(TypeTag::A2);
    CartanData b2 = CartanData::preset(TypeTag::B2);
    RootLatticeElement a1 = simple_root(2, 1), alpha2 = simple_root(2, 2);
    CHECK(a2.reflect(1, alpha2) == a1 + alpha2);
    CHECK(b2.reflect(1, alpha2) == a1 + a1 + alpha2);
    CHECK(a2.reflect(1, a1) == -a1);
    // involutive on sampled lattice points
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            for (int i : {1, 2}) {
                RootLatticeElement g{{x, y}};
                CHECK(b2.reflect(i, b2.reflect(i, g)) == g);
                CHECK(a2.reflect(i, a2.reflect(i, g)) == g);
            }
}

TEST_CASE("positive roots from reduced words") {
    CartanData a2 = CartanData::preset(TypeTag::A2);
    auto res = positive_roots_from_word(a2, ReducedWord{{1, 2, 1}});
    CHECK(res.reduced);
    RootLatticeElement a1 = simple_root(2, 1), alpha2 = simple_root(2, 2);
    REQUIRE(res.roots.size() == 3);
    CHECK(res.roots[0] == a1);
    CHECK(res.roots[1] == a1 + alpha2);
    CHECK(res.roots[2] == alpha2);

    CartanData b2 = CartanData::preset(TypeTag::B2);
    auto resb = positive_roots_from_word(b2, ReducedWord{{1, 2, 1, 2}});
    CHECK(resb.reduced);
    REQUIRE(resb.roots.size() == 4);
    CHECK(resb.roots[0] == a1);
    CHECK(resb.roots[1] == a1 + a1 + alpha2);
    CHECK(resb.roots[2] == a1 + alpha2);
    CHECK(resb.roots[3] == alpha2);

    auto bad = positive_roots_from_word(a2, ReducedWord{{1, 1, 2}});
    CHECK_FALSE(bad.reduced);
    CHECK(bad.failure_position == 2);
}

TEST_CASE("longest words") {
    CartanData a2 = CartanData::preset(TypeTag::A2);
    auto words = longest_words(a2);
    REQUIRE(words.size() == 2);
    std::set<std::string> got;
    for (const auto& w : words) got.insert(w.str());
    CHECK(got == std::set<std::string>{"1,2,1", "2,1,2"});

    CartanData b2 = CartanData::preset(TypeTag::B2);
    auto wordsb = longest_words(b2);
    REQUIRE(wordsb.size() == 2);
    std::set<std::string> gotb;
    for (const auto& w : wordsb) gotb.insert(w.str());
    CHECK(gotb == std::set<std::string>{"1,2,1,2", "2,1,2,1"});
}

TEST_CASE("positive-root multiset is word independent") {
    for (TypeTag tag : {TypeTag::A2, TypeTag::B2}) {
        CartanData cd = CartanData::preset(tag);
        auto words = longest_words(cd);
        std::multiset<RootLatticeElement> reference;
        for (std::size_t k = 0; k < words.size(); ++k) {
            auto res = positive_roots_from_word(cd, words[k]);
            REQUIRE(res.reduced);
            CHECK(res.roots.size() == (tag == TypeTag::A2 ? 3u : 4u));
            std::multiset<RootLatticeElement> roots(res.roots.begin(),
                                                    res.roots.end());
            if (k == 0)
                reference = roots;
            else
                CHECK(roots == reference);
        }
    }
}

TEST_CASE("diagram symmetries") {
    auto syms_a2 = diagram_symmetries(CartanData::preset(TypeTag::A2));
    REQUIRE(syms_a2.size() == 2);
    CHECK(syms_a2[0].is_identity());
    CHECK(syms_a2[1].perm == std::vector<int>{2, 1});

    auto syms_b2 = diagram_symmetries(CartanData::preset(TypeTag::B2));
    REQUIRE(syms_b2.size() == 1);
    CHECK(syms_b2[0].is_identity());

    // closure under composition and inverse (A2 group = S2)
    for (const auto& s : syms_a2)
        for (const auto& t : syms_a2) {
            std::vector<int> comp(2);
            for (int i = 1; i <= 2; ++i) comp[i - 1] = s(t(i));
            CHECK(std::any_of(syms_a2.begin(), syms_a2.end(),
                              [&](const DiagramSymmetry& u) {
                                  return u.perm == comp;
                              }));
        }
}
