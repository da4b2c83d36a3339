#include <doctest.h>

#include "uq/structure.hpp"

using namespace uq;

namespace {

RationalFunction qp(long e) { return RationalFunction::q_power(e); }

}  // namespace

TEST_CASE("graded component dimensions") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    CHECK(component_basis(rs, 0).dimension() == 1);
    CHECK(component_basis(rs, 1).dimension() == 2);
    CHECK(component_basis(rs, 2).dimension() == 4);
    CHECK(component_basis(rs, 3).dimension() == 6);

    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    CHECK(component_basis(rsb, 2).dimension() == 4);
    // solutions of k1 + 3k4 + 2k3 + k2 = 3: seven of them
    CHECK(component_basis(rsb, 3).dimension() == 7);
}

TEST_CASE("named elements") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    for (const auto& tag : named_tags(TypeTag::A2)) {
        NamedElement x = named(rs, TypeTag::A2, tag);
        CHECK(is_h_eigenvector(x.element));
        CHECK(x.element.n_degree() == x.n_degree);
    }
    CHECK(named(rs, TypeTag::A2, "E3").n_degree == 2);
    CHECK(named(rs, TypeTag::A2, "Omega").n_degree == 4);
    CHECK(named(rs, TypeTag::A2, "Omega").q_degree.coords ==
          std::vector<long>{2, 2});

    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    CHECK(named(rsb, TypeTag::B2, "E4").q_degree.coords ==
          std::vector<long>{2, 1});
    CHECK(named(rsb, TypeTag::B2, "z").n_degree == 3);
    CHECK(named(rsb, TypeTag::B2, "zp").n_degree == 4);
    CHECK_THROWS_AS(named(rs, TypeTag::A2, "z"), InvalidArgument);
}

TEST_CASE("central elements") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    CHECK(check_central(rs, named(rs, TypeTag::A2, "Omega").element));
    CHECK_FALSE(check_central(rs, rs.e(1)));

    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    CHECK(check_central(rsb, named(rsb, TypeTag::B2, "z").element));
    CHECK(check_central(rsb, named(rsb, TypeTag::B2, "zp").element));
    CHECK_FALSE(check_central(rsb, named(rsb, TypeTag::B2, "E3").element));
}

TEST_CASE("center dimensions by degree") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    RootVectorTable ta = root_vectors(rs, ReducedWord{{1, 2, 1}});
    std::vector<std::size_t> a2;
    for (int d = 0; d <= 8; ++d) a2.push_back(center_basis(rs, ta, d).size());
    CHECK(a2 == std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});

    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    RootVectorTable tb = root_vectors(rsb, ReducedWord{{1, 2, 1, 2}});
    std::vector<std::size_t> b2;
    for (int d = 0; d <= 8; ++d) b2.push_back(center_basis(rsb, tb, d).size());
    CHECK(b2 == std::vector<std::size_t>{1, 0, 0, 1, 1, 0, 1, 1, 1});

    // degree-4 central element is Omega up to the pinned normalization
    auto deg4 = center_basis(rs, ta, 4);
    REQUIRE(deg4.size() == 1);
    AlgElement omega = named(rs, TypeTag::A2, "Omega").element;
    CHECK(proportionality_scalar(deg4[0], omega).has_value());
}

TEST_CASE("normal certificates") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);

    auto e3 = check_normal(rs, named(rs, TypeTag::A2, "E3").element);
    REQUIRE(e3.certificate.has_value());
    CHECK(e3.certificate->scalars ==
          std::vector<RationalFunction>{qp(-1), qp(1)});

    auto e3p = check_normal(rs, named(rs, TypeTag::A2, "E3p").element);
    REQUIRE(e3p.certificate.has_value());
    CHECK(e3p.certificate->scalars ==
          std::vector<RationalFunction>{qp(1), qp(-1)});

    // E1 q-commutes with itself but not with E2
    auto e1 = check_normal(rs, rs.e(1));
    CHECK_FALSE(e1.certificate.has_value());
    CHECK(e1.failing_index == 2);

    // In B2 neither E3 nor E3' is normal: commuting past E1 picks up an E4
    // correction. E3' still q-commutes with E2 alone.
    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    AlgElement be3p = named(rsb, TypeTag::B2, "E3p").element;
    auto rep = check_normal(rsb, be3p);
    CHECK_FALSE(rep.certificate.has_value());
    CHECK(rep.failing_index == 1);
    CHECK(rsb.q_commutator(be3p, rsb.e(2), qp(-2)).is_zero());
    CHECK_FALSE(
        check_normal(rsb, named(rsb, TypeTag::B2, "E3").element)
            .certificate.has_value());
}

TEST_CASE("quoted quadratic identity between E3, E3', z, z'") {
    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    CHECK(verify_e3e3p_identity(rsb, TypeTag::B2));
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    CHECK_THROWS_AS(verify_e3e3p_identity(rs, TypeTag::A2), InvalidArgument);
}

TEST_CASE("z' decomposes along E2") {
    RewriteSystem rsb(CartanData::preset(TypeTag::B2), 10);
    AlgElement u = solve_zprime_decomposition(rsb, TypeTag::B2);
    CHECK_FALSE(u.is_zero());
    CHECK(u.n_degree() == 3);

    AlgElement e3p = named(rsb, TypeTag::B2, "E3p").element;
    AlgElement zp = named(rsb, TypeTag::B2, "zp").element;
    AlgElement rhs = qp(-2) * (qp(2) - RationalFunction(1)) *
                         rsb.multiply(e3p, e3p) +
                     rsb.multiply(rsb.e(2), u);
    CHECK(zp == rhs);
}

TEST_CASE("h-eigenvector predicate") {
    RewriteSystem rs(CartanData::preset(TypeTag::A2), 10);
    CHECK(is_h_eigenvector(rs.e(1)));
    CHECK(is_h_eigenvector(rs.multiply(rs.e(1), rs.e(2))));
    CHECK_FALSE(is_h_eigenvector(rs.e(1) + rs.multiply(rs.e(1), rs.e(2))));
}
