#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "pseudohopf/groups.hpp"

using namespace pseudohopf;

namespace {

bool preserves_form(const RatMat& x, const RatMat& s) {
    RatMat cond = x.transpose() * s;
    cond += s * x;
    return cond.is_zero();
}

RatMat unit_column(std::size_t n, std::size_t i) {
    RatMat v(n, 1);
    v(i, 0) = Rat(1);
    return v;
}

}  // namespace

TEST_CASE("standard form layout") {
    RatMat s = standard_form(3, 2);
    REQUIRE(s.rows() == 5);
    CHECK(s(0, 0) == Rat(-1));
    CHECK(s(1, 1) == Rat(-1));
    CHECK(s(2, 2) == Rat(1));
    CHECK(s(4, 4) == Rat(1));
}

TEST_CASE("orthogonal realizations") {
    CatalogRealization c = so_realization(3, 2);
    CHECK(c.algebra.name() == "so(3,2)");
    CHECK(c.algebra.dim() == 10);
    CHECK(c.algebra.matrix_size() == 5);
    CHECK(c.form_neg == 2);
    CHECK(c.x0 == unit_column(5, 0));
    CHECK(c.algebra.is_semisimple());
    CHECK(inertia(c.algebra.killing_form()) == Inertia{6, 4, 0});

    CHECK(so_realization(4, 1).algebra.dim() == 10);
    CHECK(so_realization(4, 2).algebra.dim() == 15);
    CHECK_THROWS_AS(so_realization(4, 0), std::invalid_argument);
}

TEST_CASE("definite unitary family dimensions and forms") {
    CatalogRealization su12 = parse_family("su(1,2)");
    CHECK(su12.algebra.dim() == 8);
    CHECK(su12.algebra.matrix_size() == 6);
    CHECK(su12.form_neg == 4);
    CHECK(su12.form == standard_form(2, 4));
    CHECK(su12.x0 == unit_column(6, 0));
    CHECK(inertia(su12.algebra.killing_form()) == Inertia{4, 4, 0});
    CHECK(su12.algebra.center_dim() == 0);
    CHECK_NOTHROW(su12.algebra.structure(0, 1));

    CatalogRealization u11 = parse_family("u(1,1)");
    CHECK(u11.algebra.dim() == 4);
    CHECK(u11.algebra.center_dim() == 1);
    CHECK(inertia(u11.algebra.killing_form()) == Inertia{2, 1, 1});

    // The traceless family is a codimension-1 subalgebra of the full one.
    CatalogRealization su11 = parse_family("su(1,1)");
    CHECK(su11.algebra.dim() == 3);
    for (const RatMat& x : su11.algebra.basis()) CHECK(u11.algebra.contains(x));

    CHECK(parse_family("u(2,1)").algebra.dim() == 9);
    CHECK(parse_family("su(2,1)").algebra.dim() == 8);

    CatalogRealization sp11 = parse_family("sp(1,1)");
    CHECK(sp11.algebra.dim() == 10);
    CHECK(sp11.algebra.matrix_size() == 8);
    CHECK(sp11.form == standard_form(4, 4));
    CHECK(inertia(sp11.algebra.killing_form()) == Inertia{4, 6, 0});
    CHECK(parse_family("sp(2,1)").algebra.dim() == 21);
}

TEST_CASE("split para-unitary family dimensions and forms") {
    CatalogRealization supi3 = parse_family("su_pi(3)");
    CHECK(supi3.algebra.dim() == 8);
    CHECK(supi3.algebra.matrix_size() == 6);
    CHECK(supi3.form == standard_form(3, 3));
    CHECK(supi3.form_neg == 3);
    CHECK(supi3.x0 == unit_column(6, 0));
    CHECK(inertia(supi3.algebra.killing_form()) == Inertia{5, 3, 0});
    CHECK_NOTHROW(supi3.algebra.structure(2, 5));

    CatalogRealization upi2 = parse_family("u_pi(2)");
    CHECK(upi2.algebra.dim() == 4);
    CHECK(upi2.algebra.center_dim() == 1);
    CHECK(inertia(upi2.algebra.killing_form()) == Inertia{2, 1, 1});

    CatalogRealization sppi2 = parse_family("sp_pi(2)");
    CHECK(sppi2.algebra.dim() == 10);
    CHECK(sppi2.algebra.matrix_size() == 8);
    CHECK(sppi2.form == standard_form(4, 4));
    CHECK(inertia(sppi2.algebra.killing_form()) == Inertia{6, 4, 0});

    CatalogRealization sppi1 = parse_family("sp_pi(1)");
    CHECK(sppi1.algebra.dim() == 3);
    CHECK(inertia(sppi1.algebra.killing_form()) == Inertia{2, 1, 0});
    CHECK(parse_family("su_pi(2)").algebra.dim() == 3);
    CHECK(parse_family("sp_pi(3)").algebra.dim() == 21);
}

TEST_CASE("right multiplications commute, rotate fibres, and close") {
    CatalogRealization sp11 = parse_family("sp(1,1)");
    REQUIRE(sp11.fibre_right_mults.size() == 3);
    for (const RatMat& r : sp11.fibre_right_mults) {
        CHECK(preserves_form(r, sp11.form));
        for (const RatMat& x : sp11.algebra.basis()) CHECK(bracket(x, r).is_zero());
        CHECK_FALSE(sp11.algebra.contains(r));
        CHECK_FALSE((r * sp11.x0).is_zero());
    }
    // [R_i, R_j] = -2 R_k on an associative scalar field.
    RatMat rij = bracket(sp11.fibre_right_mults[0], sp11.fibre_right_mults[1]);
    RatMat expect = sp11.fibre_right_mults[2];
    expect *= Rat(-2);
    CHECK(rij == expect);

    CatalogRealization sppi2 = parse_family("sp_pi(2)");
    REQUIRE(sppi2.fibre_right_mults.size() == 3);
    for (const RatMat& r : sppi2.fibre_right_mults) {
        CHECK(preserves_form(r, sppi2.form));
        for (const RatMat& x : sppi2.algebra.basis()) CHECK(bracket(x, r).is_zero());
        CHECK_FALSE(sppi2.algebra.contains(r));
    }

    CatalogRealization su12 = parse_family("su(1,2)");
    REQUIRE(su12.fibre_right_mults.size() == 1);
    // Over a commutative scalar field right multiplication is central, hence
    // lies in the full unitary algebra but not in the traceless one.
    CHECK(parse_family("u(1,2)").algebra.contains(su12.fibre_right_mults[0]));
    CHECK_FALSE(su12.algebra.contains(su12.fibre_right_mults[0]));
}

TEST_CASE("product families append commuting factors") {
    CatalogRealization a = parse_family("sp(1,1)+sp(1)");
    CHECK(a.algebra.name() == "sp(1,1)+sp(1)");
    CHECK(a.algebra.dim() == 13);
    CHECK_NOTHROW(a.algebra.structure(0, 12));
    CHECK(parse_family("sp(1,1)+u(1)").algebra.dim() == 11);
    CHECK(parse_family("sp_pi(2)+sp_pi(1)").algebra.dim() == 13);
    CHECK(parse_family("sp_pi(2)+u(1)").algebra.dim() == 11);
    CHECK(parse_family("sp_pi(2)+u_pi0(1)").algebra.dim() == 11);

    // The appended u(1) factor is the square -1 unit, u_pi0(1) the square +1 one.
    CatalogRealization b = parse_family("sp_pi(2)+u_pi0(1)");
    RatMat last = b.algebra.basis_at(10);
    RatMat sq = last * last;
    CHECK(sq == RatMat::identity(8));
    CatalogRealization c = parse_family("sp_pi(2)+u(1)");
    RatMat lastc = c.algebra.basis_at(10);
    RatMat sqc = lastc * lastc;
    RatMat minus_id = RatMat::identity(8);
    minus_id *= Rat(-1);
    CHECK(sqc == minus_id);
}

TEST_CASE("exceptional realizations") {
    CatalogRealization g2 = parse_family("g2");
    CHECK(g2.algebra.dim() == 14);
    CHECK(g2.algebra.matrix_size() == 7);
    CHECK(g2.form == standard_form(0, 7));
    CHECK(g2.x0 == unit_column(7, 0));
    CHECK(inertia(g2.algebra.killing_form()) == Inertia{0, 14, 0});
    CHECK(g2.algebra.is_semisimple());

    CatalogRealization gs = parse_family("g2_star");
    CHECK(gs.algebra.dim() == 14);
    CHECK(gs.form == standard_form(4, 3));
    CHECK(inertia(gs.algebra.killing_form()) == Inertia{8, 6, 0});

    CatalogRealization gp = parse_family("g2_star_perm");
    CHECK(gp.algebra.dim() == 14);
    CHECK(gp.form == standard_form(3, 4));
    CHECK(inertia(gp.algebra.killing_form()) == Inertia{8, 6, 0});

    // Same derivations in permuted coordinates.
    const std::vector<std::size_t> perm{3, 4, 5, 6, 0, 1, 2};
    for (std::size_t b = 0; b < 14; ++b) {
        const RatMat& x = gs.algebra.basis_at(b);
        const RatMat& y = gp.algebra.basis_at(b);
        bool match = true;
        for (std::size_t s = 0; s < 7 && match; ++s)
            for (std::size_t t = 0; t < 7 && match; ++t)
                if (y(s, t) != x(perm[s], perm[t])) match = false;
        CHECK(match);
    }
}

TEST_CASE("spin realizations through the catalog grammar") {
    CatalogRealization s9 = parse_family("spin(9)");
    CHECK(s9.algebra.dim() == 36);
    CHECK(s9.algebra.matrix_size() == 16);
    CHECK(s9.form == standard_form(0, 16));
    CHECK(s9.gammas.size() == 9);
    CHECK(s9.x0 == unit_column(16, 0));

    CatalogRealization s43 = parse_family("spin(4,3)");
    CHECK(s43.algebra.dim() == 21);
    CHECK(s43.algebra.matrix_size() == 8);
    CHECK(s43.form == standard_form(4, 4));
    CHECK(s43.gammas.size() == 7);

    CatalogRealization s7 = parse_family("spin(7)");
    CHECK(s7.algebra.dim() == 21);
    CHECK(s7.form == standard_form(0, 8));

    CatalogRealization s81 = parse_family("spin(8,1)");
    CHECK(s81.algebra.dim() == 36);
    CHECK(s81.form == standard_form(8, 8));

    CatalogRealization s54 = parse_family("spin(5,4)");
    CHECK(s54.algebra.dim() == 36);
    CHECK(s54.form == standard_form(8, 8));
}

TEST_CASE("family grammar rejects malformed input") {
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("xyz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("so(3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("so(3,x)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("spin(6)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("su_pi(3)+sp(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("so(4,1)+u(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("sp(1,1)+sp(2)"), std::invalid_argument);
    // Definite families with no negative coordinate have an empty quadric.
    CHECK_THROWS_AS(parse_family("sp(2)"), std::logic_error);
}

TEST_CASE("catalog ambient sizes match the acted-on spaces") {
    // family, expected ambient so(pos,neg), expected algebra dimension
    struct Row {
        const char* family;
        std::size_t pos, neg, dim;
    };
    const Row rows[] = {
        {"so(3,2)", 3, 2, 10},        // H^4_1
        {"spin(9)", 0, 16, 36},       // H^15_15
        {"spin(7)", 0, 8, 21},        // H^7_7
        {"g2", 0, 7, 14},             // H^6_6
        {"spin(8,1)", 8, 8, 36},      // H^15_7
        {"spin(5,4)", 8, 8, 36},      // H^15_7
        {"spin(4,3)", 4, 4, 21},      // H^7_3
        {"g2_star", 4, 3, 14},        // H^6_2
        {"g2_star_perm", 3, 4, 14},   // H^6_3
        {"su(1,2)", 2, 4, 8},         // H^5_3
        {"sp(1,1)", 4, 4, 10},        // H^7_3
        {"su_pi(3)", 3, 3, 8},        // H^5_2
        {"sp_pi(2)", 4, 4, 10},       // H^7_3
        {"u(1,1)", 2, 2, 4},          // H^3_1
        {"u_pi(2)", 2, 2, 4},         // H^3_1
    };
    for (const Row& r : rows) {
        INFO(r.family);
        CatalogRealization c = parse_family(r.family);
        CHECK(c.form == standard_form(r.pos, r.neg));
        CHECK(c.algebra.dim() == r.dim);
        CHECK(c.x0 == unit_column(r.pos + r.neg, 0));
    }
}
