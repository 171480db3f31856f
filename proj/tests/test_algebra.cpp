#include <catch2/catch_amalgamated.hpp>

#include "pseudohopf/algebra.hpp"

#include <random>

using namespace pseudohopf;

namespace {

const std::vector<AlgebraKind> kAllKinds = {
    AlgebraKind::Real,          AlgebraKind::Complex,
    AlgebraKind::Paracomplex,   AlgebraKind::Quaternion,
    AlgebraKind::Paraquaternion, AlgebraKind::Octonion,
    AlgebraKind::SplitOctonion};

std::vector<Rat> random_element(const CompositionAlgebra& alg,
                                std::mt19937& gen) {
  std::uniform_int_distribution<int> d(-5, 5);
  auto v = alg.zero();
  for (auto& x : v) x = d(gen);
  return v;
}

}  // namespace

TEST_CASE("dimensions and unit squares") {
  CHECK(CompositionAlgebra::get(AlgebraKind::Real).dim() == 1);
  CHECK(CompositionAlgebra::get(AlgebraKind::Complex).dim() == 2);
  CHECK(CompositionAlgebra::get(AlgebraKind::Paracomplex).dim() == 2);
  CHECK(CompositionAlgebra::get(AlgebraKind::Quaternion).dim() == 4);
  CHECK(CompositionAlgebra::get(AlgebraKind::Paraquaternion).dim() == 4);
  CHECK(CompositionAlgebra::get(AlgebraKind::Octonion).dim() == 8);
  CHECK(CompositionAlgebra::get(AlgebraKind::SplitOctonion).dim() == 8);

  const auto& c = CompositionAlgebra::get(AlgebraKind::Complex);
  CHECK(c.square_sign(1) == -1);

  const auto& a = CompositionAlgebra::get(AlgebraKind::Paracomplex);
  CHECK(a.square_sign(1) == +1);

  const auto& h = CompositionAlgebra::get(AlgebraKind::Quaternion);
  for (std::size_t i = 1; i < 4; ++i) CHECK(h.square_sign(i) == -1);

  const auto& b = CompositionAlgebra::get(AlgebraKind::Paraquaternion);
  CHECK(b.square_sign(1) == -1);
  CHECK(b.square_sign(2) == +1);
  CHECK(b.square_sign(3) == +1);

  const auto& o = CompositionAlgebra::get(AlgebraKind::Octonion);
  for (std::size_t i = 1; i < 8; ++i) CHECK(o.square_sign(i) == -1);

  const auto& so = CompositionAlgebra::get(AlgebraKind::SplitOctonion);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(so.square_sign(i) == -1);
  for (std::size_t i = 4; i <= 7; ++i) CHECK(so.square_sign(i) == +1);
}

TEST_CASE("quaternion multiplication table") {
  const auto& h = CompositionAlgebra::get(AlgebraKind::Quaternion);
  auto i = h.unit(1), j = h.unit(2), k = h.unit(3);
  CHECK(h.multiply(i, j) == k);
  auto mk = k;
  mk[3] = -1;
  CHECK(h.multiply(j, i) == mk);
  CHECK(h.multiply(j, k) == i);
  CHECK(h.multiply(k, i) == j);
}

TEST_CASE("paracomplex zero divisors") {
  const auto& a = CompositionAlgebra::get(AlgebraKind::Paracomplex);
  auto e = a.unit(1);
  CHECK(a.multiply(e, e) == a.unit(0));
  // (1 - e)(1 + e) = 1 - e^2 = 0: nontrivial zero divisors.
  std::vector<Rat> p{rat(1), rat(-1)}, q{rat(1), rat(1)};
  CHECK(vec_is_zero(a.multiply(p, q)));
  CHECK(a.norm(p) == 0);
}

TEST_CASE("norm is multiplicative in every kind") {
  std::mt19937 gen(2024);
  for (AlgebraKind kind : kAllKinds) {
    const auto& alg = CompositionAlgebra::get(kind);
    // Exhaustive over unit pairs.
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        auto x = alg.unit(i), y = alg.unit(j);
        CHECK(alg.norm(alg.multiply(x, y)) == alg.norm(x) * alg.norm(y));
      }
    // Random samples.
    for (int t = 0; t < 100; ++t) {
      auto x = random_element(alg, gen), y = random_element(alg, gen);
      REQUIRE(alg.norm(alg.multiply(x, y)) == alg.norm(x) * alg.norm(y));
    }
  }
}

TEST_CASE("conjugation reverses products and fixes the norm") {
  std::mt19937 gen(77);
  for (AlgebraKind kind : kAllKinds) {
    const auto& alg = CompositionAlgebra::get(kind);
    for (int t = 0; t < 30; ++t) {
      auto x = random_element(alg, gen), y = random_element(alg, gen);
      CHECK(alg.conjugate(alg.multiply(x, y)) ==
            alg.multiply(alg.conjugate(y), alg.conjugate(x)));
      CHECK(alg.norm(alg.conjugate(x)) == alg.norm(x));
      // x * conj(x) is the scalar N(x).
      auto n = alg.multiply(x, alg.conjugate(x));
      for (std::size_t i = 1; i < alg.dim(); ++i) CHECK(n[i] == 0);
      CHECK(n[0] == alg.norm(x));
    }
  }
}

TEST_CASE("octonions are alternative but not associative") {
  std::mt19937 gen(4096);
  for (AlgebraKind kind :
       {AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    const auto& alg = CompositionAlgebra::get(kind);
    for (int t = 0; t < 40; ++t) {
      auto x = random_element(alg, gen), y = random_element(alg, gen);
      CHECK(alg.multiply(alg.multiply(x, x), y) ==
            alg.multiply(x, alg.multiply(x, y)));
      CHECK(alg.multiply(alg.multiply(x, y), y) ==
            alg.multiply(x, alg.multiply(y, y)));
    }
  }
  // Non-associativity witness: (e1 e2) e4 != e1 (e2 e4).
  const auto& o = CompositionAlgebra::get(AlgebraKind::Octonion);
  auto lhs = o.multiply(o.multiply(o.unit(1), o.unit(2)), o.unit(4));
  auto rhs = o.multiply(o.unit(1), o.multiply(o.unit(2), o.unit(4)));
  CHECK(lhs != rhs);
}

TEST_CASE("left and right multiplication operators") {
  std::mt19937 gen(31337);
  for (AlgebraKind kind : kAllKinds) {
    const auto& alg = CompositionAlgebra::get(kind);
    for (int t = 0; t < 10; ++t) {
      auto u = random_element(alg, gen), x = random_element(alg, gen);
      CHECK(mat_vec(alg.left_mult(u), x) == alg.multiply(u, x));
      CHECK(mat_vec(alg.right_mult(u), x) == alg.multiply(x, u));
    }
  }
  // In the associative kinds, left and right multiplications commute.
  for (AlgebraKind kind : {AlgebraKind::Quaternion, AlgebraKind::Paraquaternion}) {
    const auto& alg = CompositionAlgebra::get(kind);
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        RatMat l = alg.left_mult(alg.unit(i));
        RatMat r = alg.right_mult(alg.unit(j));
        CHECK(l * r == r * l);
      }
  }
}

TEST_CASE("imaginary left multiplications satisfy the Clifford relation") {
  // For purely imaginary x, y:  L_x L_y + L_y L_x = -2 <x,y> Id.
  // This survives non-associativity thanks to (linearised) alternativity.
  std::mt19937 gen(8);
  for (AlgebraKind kind :
       {AlgebraKind::Quaternion, AlgebraKind::Paraquaternion,
        AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    const auto& alg = CompositionAlgebra::get(kind);
    for (int t = 0; t < 15; ++t) {
      auto x = random_element(alg, gen), y = random_element(alg, gen);
      x[0] = 0;
      y[0] = 0;
      RatMat lx = alg.left_mult(x), ly = alg.left_mult(y);
      RatMat lhs = lx * ly + ly * lx;
      RatMat rhs = RatMat::identity(alg.dim()) * (Rat(-2) * alg.inner(x, y));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("norm gram matrices and their realifications") {
  using AK = AlgebraKind;
  auto sig = [](AK k, std::size_t m) {
    return inertia(realified_norm_gram(CompositionAlgebra::get(k), m));
  };
  CHECK(sig(AK::Complex, 3) == Inertia{6, 0, 0});
  CHECK(sig(AK::Paracomplex, 3) == Inertia{3, 3, 0});
  CHECK(sig(AK::Quaternion, 2) == Inertia{8, 0, 0});
  CHECK(sig(AK::Paraquaternion, 2) == Inertia{4, 4, 0});
  CHECK(sig(AK::Octonion, 1) == Inertia{8, 0, 0});
  CHECK(sig(AK::SplitOctonion, 1) == Inertia{4, 4, 0});

  // The polar form agrees with the inner product helper.
  const auto& o = CompositionAlgebra::get(AK::SplitOctonion);
  std::mt19937 gen(100);
  for (int t = 0; t < 20; ++t) {
    auto x = random_element(o, gen), y = random_element(o, gen);
    auto sum = x;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
    Rat polar = (o.norm(sum) - o.norm(x) - o.norm(y)) / 2;
    CHECK(polar == o.inner(x, y));
  }
}
