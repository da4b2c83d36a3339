#include <doctest.h>

#include <random>
#include <sstream>

#include "uq/parser.hpp"
#include "uq/structure.hpp"

using namespace uq;

namespace {

RationalFunction qp(long e) { return RationalFunction::q_power(e); }

NameTable names_for(const RewriteSystem& rs, TypeTag tag) {
    NameTable names;
    for (const auto& t : named_tags(tag))
        names.emplace(t, named(rs, tag, t).element);
    return names;
}

AlgElement random_canonical(const RewriteSystem& rs, std::mt19937& rng) {
    int n = rs.cartan().rank();
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> idx(1, n);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> qexp(-3, 3);
    AlgElement x(n);
    for (int t = nterms(rng); t > 0; --t) {
        Word w;
        for (int l = len(rng); l > 0; --l) {
            switch (kind(rng)) {
                case 0: w.push_back(Generator::E(idx(rng))); break;
                case 1: w.push_back(Generator::F(idx(rng))); break;
                case 2: w.push_back(Generator::K(idx(rng))); break;
                default: w.push_back(Generator::Kinv(idx(rng))); break;
            }
        }
        long c = num(rng);
        if (c == 0) c = 2;
        RationalFunction coeff =
            RationalFunction(c) * qp(qexp(rng)) +
            RationalFunction(num(rng));
        if (coeff.is_zero()) coeff = RationalFunction(1);
        x.add_term(w, coeff);
    }
    return rs.normal_form(x);
}

}  // namespace

TEST_CASE("tokenizer") {
    auto toks = tokenize("-E1*E2 + q^-1*E2*E1");
    REQUIRE(!toks.empty());
    CHECK(toks[1].text == "E1");
    CHECK(toks[1].position == 1);

    CHECK_THROWS_AS(tokenize("E1 $ E2"), ParseError);
}

TEST_CASE("quoted expressions elaborate to named elements") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    NameTable names = names_for(rs, TypeTag::A2);

    AlgElement e3 = parse_element(rs, names, "-E1*E2 + q^-1*E2*E1");
    CHECK(e3 == named(rs, TypeTag::A2, "E3").element);
    CHECK(parse_element(rs, names, "E3") == e3);
    CHECK(parse_element(rs, names, "E3p") ==
          named(rs, TypeTag::A2, "E3p").element);

    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    NameTable bnames = names_for(rsb, TypeTag::B2);
    AlgElement z =
        parse_element(rsb, bnames, "(1-q^2)*E1*E3 + q^2*(q+q^-1)*E4");
    CHECK(z == named(rsb, TypeTag::B2, "z").element);
}

TEST_CASE("parse errors carry positions") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    try {
        parse_element(rs, {}, "E1^^2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(parse_element(rs, {}, "E1 +"), ParseError);
    CHECK_THROWS_AS(parse_element(rs, {}, "(E1"), ParseError);
    CHECK_THROWS_AS(parse_element(rs, {}, "E9"), InvalidArgument);
    // division only by scalars, negative powers only of scalars and K
    CHECK_THROWS_AS(parse_element(rs, {}, "E1/E2"), InvalidArgument);
    CHECK_THROWS_AS(parse_element(rs, {}, "E1^-1"), InvalidArgument);
    CHECK_NOTHROW(parse_element(rs, {}, "K1^-1 * (q+q^-1)^-2"));
}

TEST_CASE("render fixed points") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    CHECK(render(AlgElement::zero(2)) == "0");
    // decreasing term order puts the E2*E1 word first
    CHECK(render(named(rs, TypeTag::A2, "E3").element) ==
          "q^-1 * E2*E1 - E1*E2");
}

TEST_CASE("round trip on random canonical elements") {
    for (TypeTag tag : {TypeTag::A2, TypeTag::B2}) {
        RewriteSystem rs(CartanData::preset(tag), 10);
        std::mt19937 rng(tag == TypeTag::A2 ? 11 : 22);
        for (int t = 0; t < 100; ++t) {
            AlgElement x = random_canonical(rs, rng);
            AlgElement back = parse_element(rs, {}, render(x));
            CHECK(back == x);
        }
    }
}

TEST_CASE("named z round-trips in B2") {
    RewriteSystem rs(CartanData::preset(TypeTag::B2), 10);
    AlgElement z = named(rs, TypeTag::B2, "z").element;
    CHECK(parse_element(rs, {}, render(z)) == z);
}

TEST_CASE("endomorphism files") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    std::istringstream good(
        "# torus followed by the swap\n"
        "E1 -> q^2 * E2\n"
        "\n"
        "E2 -> 3*E1\n");
    EndoSpec spec = parse_endo_file(rs, {}, good);
    CHECK(spec.images[0] == rs.e(2) * qp(2));
    CHECK(spec.images[1] == rs.e(1) * RationalFunction(3));

    std::istringstream dup("E1 -> E1\nE1 -> E2\nE2 -> E2\n");
    CHECK_THROWS_AS(parse_endo_file(rs, {}, dup), InvalidArgument);
    std::istringstream missing("E1 -> E1\n");
    CHECK_THROWS_AS(parse_endo_file(rs, {}, missing), InvalidArgument);
}
