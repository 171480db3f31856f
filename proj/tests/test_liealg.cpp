#include <catch2/catch_amalgamated.hpp>

#include "pseudohopf/liealg.hpp"

#include <random>

using namespace pseudohopf;

namespace {

RatMat unit_matrix(std::size_t n, std::size_t i, std::size_t j, int v = 1) {
  RatMat m(n, n);
  m(i, j) = v;
  return m;
}

// Rotation generators of 3-space.
MatrixLieAlgebra make_so3() {
  RatMat lx(3, 3), ly(3, 3), lz(3, 3);
  lx(1, 2) = -1;
  lx(2, 1) = 1;
  ly(0, 2) = 1;
  ly(2, 0) = -1;
  lz(0, 1) = -1;
  lz(1, 0) = 1;
  return MatrixLieAlgebra("so3", 3, {lx, ly, lz});
}

MatrixLieAlgebra make_sl2() {
  RatMat h(2, 2), e(2, 2), f(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  e(0, 1) = 1;
  f(1, 0) = 1;
  return MatrixLieAlgebra("sl2", 2, {h, e, f});
}

std::vector<Rat> random_coords(std::size_t d, std::mt19937& gen) {
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Rat> c(d);
  for (auto& x : c) x = dist(gen);
  return c;
}

Rat eval_form(const RatMat& gram, const std::vector<Rat>& u,
              const std::vector<Rat>& v) {
  return form_value(gram, u, v);
}

}  // namespace

TEST_CASE("so3 structure constants are the cross product") {
  auto g = make_so3();
  REQUIRE(g.dim() == 3);
  CHECK(g.structure(0, 1) == SparseVec{{2, rat(1)}});   // [x,y] = z
  CHECK(g.structure(1, 2) == SparseVec{{0, rat(1)}});   // [y,z] = x
  CHECK(g.structure(2, 0) == SparseVec{{1, rat(1)}});   // [z,x] = y
  CHECK(g.structure(1, 0) == SparseVec{{2, rat(-1)}});  // antisymmetry
  CHECK(g.is_semisimple());
  CHECK(g.center_dim() == 0);
  CHECK(g.derived_span().dim() == 3);
  CHECK(is_negative_definite(g.killing_form()));
}

TEST_CASE("sl2 structure and Killing form") {
  auto g = make_sl2();
  CHECK(g.structure(0, 1) == SparseVec{{1, rat(2)}});   // [h,e] = 2e
  CHECK(g.structure(0, 2) == SparseVec{{2, rat(-2)}});  // [h,f] = -2f
  CHECK(g.structure(1, 2) == SparseVec{{0, rat(1)}});   // [e,f] = h
  const RatMat& k = g.killing_form();
  CHECK(k(0, 0) == 8);
  CHECK(k(1, 2) == 4);
  CHECK(k(1, 1) == 0);
  CHECK(g.is_semisimple());
  CHECK(inertia(k) == Inertia{2, 1, 0});  // split real form
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("Killing form is ad-invariant") {
  std::mt19937 gen(11);
  for (auto g : {make_so3(), make_sl2()}) {
    const RatMat& k = g.killing_form();
    for (int t = 0; t < 20; ++t) {
      auto a = random_coords(g.dim(), gen);
      auto b = random_coords(g.dim(), gen);
      auto c = random_coords(g.dim(), gen);
      Rat lhs = eval_form(k, g.bracket_coords(a, b), c);
      Rat rhs = -eval_form(k, b, g.bracket_coords(a, c));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("Heisenberg algebra: centre and derived algebra") {
  auto x = unit_matrix(3, 0, 1);
  auto y = unit_matrix(3, 1, 2);
  auto z = unit_matrix(3, 0, 2);
  MatrixLieAlgebra h("heisenberg", 3, {x, y, z});
  CHECK(h.structure(0, 1) == SparseVec{{2, rat(1)}});
  CHECK(h.center_dim() == 1);
  CHECK(h.derived_span().dim() == 1);
  CHECK_FALSE(h.is_semisimple());
  CHECK(h.killing_form().is_zero());  // nilpotent
}

TEST_CASE("non-closed basis raises with the offending pair") {
  auto e12 = unit_matrix(2, 0, 1);
  auto e21 = unit_matrix(2, 1, 0);
  MatrixLieAlgebra g("open", 2, {e12, e21});
  try {
    (void)g.structure(0, 1);
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& err) {
    CHECK(err.first == 0);
    CHECK(err.second == 1);
  }
}

TEST_CASE("full matrix algebra gl2: centre, derived, degenerate Killing") {
  MatrixLieAlgebra g("gl2", 2,
                     {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1),
                      unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)});
  CHECK(g.center_dim() == 1);
  auto z = g.center_coords();
  REQUIRE(z.size() == 1);
  RatMat zmat = g.element(z[0]);
  CHECK(zmat(0, 0) == zmat(1, 1));  // multiples of the identity
  CHECK(zmat(0, 1) == 0);
  CHECK(g.derived_span().dim() == 3);
  CHECK_FALSE(g.is_semisimple());
  CHECK(rank(g.killing_form()) == 3);
}

TEST_CASE("coordinates, membership and element reconstruction") {
  auto g = make_sl2();
  std::mt19937 gen(5);
  for (int t = 0; t < 10; ++t) {
    auto c = random_coords(3, gen);
    RatMat x = g.element(c);
    CHECK(g.contains(x));
    CHECK(g.coords(x) == c);
  }
  CHECK_FALSE(g.contains(RatMat::identity(2)));
  CHECK_FALSE(g.try_coords(RatMat::identity(2)).has_value());
  CHECK_THROWS_AS(g.coords(RatMat::identity(2)), std::invalid_argument);
}

TEST_CASE("spanned() deduplicates generators") {
  auto e = unit_matrix(2, 0, 1);
  auto h = unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1);
  auto g = MatrixLieAlgebra::spanned("upper", 2, {e, h, e + h, e * Rat(2)});
  CHECK(g.dim() == 2);
  CHECK(g.contains(e));
  CHECK(g.contains(h));
}

TEST_CASE("span sums, intersections and orthogonal complements") {
  auto h = unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1);
  auto e = unit_matrix(2, 0, 1);
  auto f = unit_matrix(2, 1, 0);
  CHECK(sum_dim({h, e}, {e, f}) == 3);
  CHECK(sum_dim({e}, {e * Rat(3)}) == 1);

  auto meet = intersect_spans({h, e}, {e, f});
  REQUIRE(meet.size() == 1);
  CHECK(meet[0](0, 1) != 0);
  CHECK(meet[0](0, 0) == 0);
  CHECK(meet[0](1, 0) == 0);

  // Trace-form complement of the centre of gl2 is sl2.
  MatrixLieAlgebra gl2("gl2", 2,
                       {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1),
                        unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)});
  Subspace centre = Subspace::from_matrices(gl2, {RatMat::identity(2)});
  Subspace comp = orthogonal_complement(gl2, centre, gl2.trace_form());
  REQUIRE(comp.dim() == 3);
  for (const RatMat& m : comp.basis) CHECK(m.trace() == 0);

  // Degenerate restriction is rejected: span{e} is trace-isotropic.
  Subspace iso = Subspace::from_matrices(gl2, {e});
  CHECK_THROWS_AS(orthogonal_complement(gl2, iso, gl2.trace_form()),
                  std::invalid_argument);
}

TEST_CASE("trace form matches explicit traces") {
  auto g = make_sl2();
  const RatMat& t = g.trace_form();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(t(i, j) == (g.basis_at(i) * g.basis_at(j)).trace());
  // For sl2 the Killing form is 4x the trace form.
  CHECK(g.killing_form() == t * Rat(4));
}
