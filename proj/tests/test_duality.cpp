#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <string>
#include <vector>

#include "pseudohopf/duality.hpp"
#include "ricci_oracle.hpp"

using namespace pseudohopf;
using Catch::Matchers::ContainsSubstring;

namespace {

ReductiveSpace canonical_of(const std::string& family) {
    return canonical_space(action_instance(parse_family(family)));
}

RatMat elementary(std::size_t n, std::size_t i, std::size_t j, long v = 1) {
    RatMat m(n, n);
    m(i, j) = Rat(v);
    return m;
}

// Ric == c * metric on abstract dual data, exactly.
bool tensors_einstein_with(const ReductiveTensors& rt, const Rat& c) {
    RatMat dev = rt.metric;
    dev *= c;
    dev *= Rat(-1);
    dev += ricci(rt);
    return dev.is_zero();
}

}  // namespace

TEST_CASE("negative transpose is a Cartan involution of a hand-built algebra",
          "[duality]") {
    // The 2x2 traceless algebra: raising, lowering, diagonal.
    RatMat e = elementary(2, 0, 1);
    RatMat f = elementary(2, 1, 0);
    RatMat h = elementary(2, 0, 0);
    h += elementary(2, 1, 1, -1);
    MatrixLieAlgebra sl2("sl2", 2, {e, f, h});
    REQUIRE(sl2.is_semisimple());

    RatMat theta = cartan_involution(sl2);
    RatMat sq = theta * theta;
    REQUIRE(sq == RatMat::identity(3));

    DualityData dd = compact_dual(sl2, theta);
    // Fixed space: the rotation e - f.  Anti-fixed: the symmetric part.
    REQUIRE(dd.plus.dim() == 1);
    REQUIRE(dd.minus.dim() == 2);
    REQUIRE(dd.dual.dim == 3);

    RatMat kd = killing_matrix(dd.dual);
    Inertia in = inertia(kd);
    CHECK(in == Inertia{0, 3, 0});
    CHECK(jacobi_holds(dd.dual));
    auto rk = compact_rank(dd.dual);
    REQUIRE(rk.has_value());
    CHECK(*rk == 1);
}

TEST_CASE("involution eigenspace dimensions across the catalog", "[duality]") {
    // plus = maximal compact part, minus = the rest; dims frozen from the
    // block decompositions (orthogonal/unitary/symplectic pairs) and, for the
    // exceptional and spin families, from the known maximal compact
    // subalgebras.
    struct Row {
        const char* family;
        std::size_t plus, minus;
    };
    const std::vector<Row> rows = {
        {"so(4,1)", 6, 4},         {"so(3,2)", 4, 6},
        {"su(2,1)", 4, 4},         {"u(1,2)", 5, 4},
        {"su_pi(2)", 1, 2},        {"su_pi(3)", 3, 5},
        {"u_pi(2)", 1, 3},         {"u_pi(3)", 3, 6},
        {"sp(1,1)", 6, 4},         {"sp_pi(2)", 4, 6},
        {"g2_star", 6, 8},         {"g2_star_perm", 6, 8},
        {"spin(4,3)", 9, 12},      {"spin(8,1)", 28, 8},
        {"spin(5,4)", 16, 20},     {"spin(9)", 36, 0},
        {"sp(1,1)+u(1)", 7, 4},    {"sp(1,1)+sp(1)", 9, 4},
        {"sp_pi(2)+u(1)", 5, 6},   {"sp_pi(2)+u_pi0(1)", 4, 7},
        {"sp_pi(2)+sp_pi(1)", 5, 8}};
    for (const Row& r : rows) {
        CAPTURE(r.family);
        MatrixLieAlgebra g = parse_family(r.family).algebra;
        RatMat theta = cartan_involution(g);
        auto [plus, minus] = detail::involution_split(g, theta);
        CHECK(plus.dim() == r.plus);
        CHECK(minus.dim() == r.minus);
        CHECK(plus.dim() + minus.dim() == g.dim());
    }
}

TEST_CASE("compact duals of the rank-one orthogonal family", "[duality]") {
    {
        MatrixLieAlgebra g = parse_family("so(2,1)").algebra;
        DualityData dd = compact_dual(g, cartan_involution(g));
        REQUIRE(dd.dual.dim == 3);
        CHECK(inertia(killing_matrix(dd.dual)) == Inertia{0, 3, 0});
        auto rk = compact_rank(dd.dual);
        REQUIRE(rk.has_value());
        CHECK(*rk == 1);
    }
    {
        MatrixLieAlgebra g = parse_family("so(4,1)").algebra;
        DualityData dd = compact_dual(g, cartan_involution(g));
        REQUIRE(dd.dual.dim == 10);
        CHECK(inertia(killing_matrix(dd.dual)) == Inertia{0, 10, 0});
        auto rk = compact_rank(dd.dual);
        REQUIRE(rk.has_value());
        CHECK(*rk == 2);
    }
}

TEST_CASE("a compact algebra is its own dual", "[duality]") {
    MatrixLieAlgebra g = parse_family("spin(9)").algebra;
    RatMat theta = cartan_involution(g);
    CHECK(theta == RatMat::identity(g.dim()));

    DualityData dd = compact_dual(g, theta);
    CHECK(dd.plus.dim() == g.dim());
    CHECK(dd.minus.dim() == 0);
    // Nothing is flipped: the dual structure constants are the original ones.
    const std::size_t d = g.dim();
    bool same = true;
    for (std::size_t i = 0; i < d && same; ++i)
        for (std::size_t j = 0; j < d && same; ++j) {
            std::vector<Rat> dense(d, Rat(0));
            for (const auto& [k, c] : g.structure(i, j)) dense[k] = c;
            same = dense == dd.dual.c[i * d + j];
        }
    CHECK(same);
    CHECK(inertia(killing_matrix(dd.dual)) == Inertia{0, 36, 0});
}

TEST_CASE("dual Killing radical equals the dual centre for reductive families",
          "[duality]") {
    {
        MatrixLieAlgebra g = parse_family("u(1,2)").algebra;
        DualityData dd = compact_dual(g, cartan_involution(g));
        Inertia in = inertia(killing_matrix(dd.dual));
        CHECK(in.positive == 0);
        CHECK(in.null == 1);
        CHECK(center_coords(dd.dual).size() == 1);
        auto rk = compact_rank(dd.dual);
        REQUIRE(rk.has_value());
        CHECK(*rk == 3);
    }
    {
        MatrixLieAlgebra g = parse_family("sp_pi(2)+u_pi0(1)").algebra;
        DualityData dd = compact_dual(g, cartan_involution(g));
        Inertia in = inertia(killing_matrix(dd.dual));
        CHECK(in.positive == 0);
        CHECK(in.null == 1);
        CHECK(center_coords(dd.dual).size() == 1);
        auto rk = compact_rank(dd.dual);
        REQUIRE(rk.has_value());
        CHECK(*rk == 3);
    }
}

TEST_CASE("dual curvature flips sign on constant-curvature spaces", "[duality]") {
    SECTION("four-dimensional real hyperbolic data") {
        ReductiveSpace s = canonical_of("so(4,1)");
        RatMat theta = cartan_involution(s.algebra());
        DualSpace ds = dual_space(s, theta);
        CHECK(ds.m_fixed == 0);  // metric already positive definite
        CHECK(ds.m_anti == 4);
        CHECK(inertia(ds.tensors.metric) == Inertia{4, 0, 0});
        CHECK(tensors_einstein_with(ds.tensors, Rat(3)));
        CHECK(einstein_residual(ds.tensors) == 0);
    }
    SECTION("seven-dimensional quaternionic data of signature (4,3)") {
        ReductiveSpace s = canonical_of("sp(1,1)");
        RatMat theta = cartan_involution(s.algebra());
        DualSpace ds = dual_space(s, theta);
        CHECK(ds.m_fixed == 3);  // the metric-negative fibre directions
        CHECK(ds.m_anti == 4);
        CHECK(inertia(ds.tensors.metric) == Inertia{7, 0, 0});
        CHECK(tensors_einstein_with(ds.tensors, Rat(6)));
    }
    SECTION("six-dimensional exceptional data of signature (4,2)") {
        ReductiveSpace s = canonical_of("g2_star");
        RatMat theta = cartan_involution(s.algebra());
        DualSpace ds = dual_space(s, theta);
        CHECK(ds.m_fixed == 2);
        CHECK(ds.m_anti == 4);
        CHECK(tensors_einstein_with(ds.tensors, Rat(5)));
    }
}

TEST_CASE("the Einstein property transfers to the dual metric", "[duality]") {
    HopfFibration f = build_fibration("piH", 1, 0);
    RatMat theta = cartan_involution(f.total.algebra());

    SECTION("canonical metric") {
        DualSpace ds = dual_space(f.total, theta);
        CHECK(einstein_residual(f.total.tensors()) == 0);
        CHECK(einstein_residual(ds.tensors) == 0);
    }
    SECTION("the second Einstein parameter") {
        ReductiveSpace varied = variation(f, rat(1, 5));
        REQUIRE(einstein_residual(varied.tensors()) == 0);
        DualSpace ds = dual_space(varied, theta);
        CHECK(einstein_residual(ds.tensors) == 0);
        // Two independent curvature routes agree on the dual data.
        RatMat a = ricci(ds.tensors);
        RatMat b = oracle::ricci_koszul(ds.tensors);
        b *= Rat(-1);
        b += a;
        CHECK(b.is_zero());
    }
    SECTION("a non-Einstein metric stays non-Einstein across duality") {
        ReductiveSpace varied = variation(f, Rat(2));
        REQUIRE(einstein_residual(varied.tensors()) != 0);
        DualSpace ds = dual_space(varied, theta);
        CHECK(einstein_residual(ds.tensors) != 0);
    }
}

TEST_CASE("duality table rows verify at minimal parameters", "[duality]") {
    std::vector<Table3Report> reports = verify_table3_all();
    REQUIRE(reports.size() == kTable3Rows);
    for (const Table3Report& r : reports) {
        CAPTURE(r.row, r.family, r.space, r.failures);
        CHECK(r.pass);
        CHECK(r.killing_compact);
        CHECK(r.dual_einstein);
    }

    // Spot values for three rows.
    const Table3Report& r1 = reports[0];
    CHECK(r1.dim_g == 10);
    CHECK(r1.dim_h == 6);
    CHECK(r1.dim_m == 4);
    CHECK(r1.rank == 2);
    CHECK(r1.einstein_constant == Rat(-3));

    const Table3Report& r9 = reports[8];
    CHECK(r9.row == 9);
    CHECK(r9.dim_g == 36);
    CHECK(r9.dim_h == 21);
    CHECK(r9.dim_m == 15);
    CHECK(r9.rank == 4);
    CHECK(r9.einstein_constant == Rat(-14));

    const Table3Report& r21 = reports[20];
    CHECK(r21.row == 21);
    CHECK(r21.dim_g == 8);
    CHECK(r21.dim_h == 4);
    CHECK(r21.dim_m == 4);
    CHECK(r21.rank == 2);
}

TEST_CASE("duality table rows verify at wider parameters", "[duality]") {
    {
        Table3Report r = verify_table3(1, 5, 2);
        CAPTURE(r.failures);
        CHECK(r.pass);
        CHECK(r.dim_g == 15);
        CHECK(r.dim_h == 10);
        CHECK(r.dim_m == 5);
        CHECK(r.rank == 3);
    }
    {
        Table3Report r = verify_table3(5, 2, 1);
        CAPTURE(r.failures);
        CHECK(r.pass);
        CHECK(r.dim_g == 8);
        CHECK(r.dim_h == 3);
        CHECK(r.dim_m == 5);
        CHECK(r.rank == 2);
    }
    {
        Table3Report r = verify_table3(11, 2, 0);
        CAPTURE(r.failures);
        CHECK(r.pass);
        CHECK(r.dim_g == 21);
        CHECK(r.dim_h == 10);
        CHECK(r.dim_m == 11);
        CHECK(r.rank == 3);
    }
    {
        Table3Report r = verify_table3(18, 3, 1);
        CAPTURE(r.failures);
        CHECK(r.pass);
        CHECK(r.dim_g == 15);
        CHECK(r.dim_h == 9);
        CHECK(r.dim_m == 6);
        CHECK(r.rank == 3);
    }
}

TEST_CASE("duality parameter validation", "[duality]") {
    CHECK_THROWS_AS(verify_table3(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_table3(25), std::invalid_argument);
    CHECK_THROWS_AS(verify_table3(2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_table3(1, 1, 0), std::invalid_argument);
    // A compact source is excluded from the table.
    CHECK_THROWS_AS(verify_table3(1, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_table3(5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_table3(23, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_table3(11, 0, 0), std::invalid_argument);
    // Beyond the supported matrix size.
    CHECK_THROWS_AS(verify_table3(1, 25, 0), std::invalid_argument);
}

TEST_CASE("duality error paths", "[duality]") {
    SECTION("span not preserved by the negative transpose") {
        MatrixLieAlgebra n1("n1", 2, {elementary(2, 0, 1)});
        CHECK_THROWS_MATCHES(cartan_involution(n1), std::domain_error,
                             Catch::Matchers::MessageMatches(
                                 ContainsSubstring("base point")));
    }
    SECTION("isotropy not invariant under the involution") {
        RatMat id2 = RatMat::identity(2);
        RatMat rot = elementary(2, 0, 1);
        rot += elementary(2, 1, 0, -1);
        MatrixLieAlgebra ab("ab2", 2, {id2, rot});
        RatMat theta = cartan_involution(ab);
        RatMat hx = id2;
        hx += rot;
        RatMat mx = id2;
        RatMat mrot = rot;
        mrot *= Rat(-1);
        mx += mrot;
        RatMat metric(1, 1);
        metric(0, 0) = 1;
        ReductiveSpace skew(ab, {hx}, {mx}, metric, "skew split");
        CHECK_THROWS_MATCHES(dual_space(skew, theta), std::domain_error,
                             Catch::Matchers::MessageMatches(
                                 ContainsSubstring("involution-stable")));
    }
    SECTION("metric signs must align with the eigenspaces") {
        ReductiveSpace s = canonical_of("so(4,1)");
        RatMat neg = s.metric();
        neg *= Rat(-1);
        ReductiveSpace flipped = s.with_metric(neg);
        RatMat theta = cartan_involution(s.algebra());
        CHECK_THROWS_AS(dual_space(flipped, theta), std::domain_error);
    }
}
