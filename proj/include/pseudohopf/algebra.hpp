#ifndef PSEUDOHOPF_ALGEBRA_HPP
#define PSEUDOHOPF_ALGEBRA_HPP

// The seven real composition algebras, built by the Cayley-Dickson doubling
//   (a,b)(c,d) = (ac + g*conj(d)*b, da + b*conj(c)),   conj(a,b) = (conj(a), -b)
// with doubling parameter g = -1 (division flavour) or g = +1 (split flavour):
//
//   real          R                     norm  x^2
//   complex       C  = CD(R, -1)              x^2 + y^2
//   paracomplex   A  = CD(R, +1)              x^2 - y^2
//   quaternion    H  = CD(C, -1)              definite
//   paraquaternion B = CD(C, +1)              signature (2,2)
//   octonion      O  = CD(H, -1)              definite
//   split octonion  = CD(H, +1)               signature (4,4)
//
// Elements are coordinate vectors over Q in the unit basis e_0, ..., e_{d-1};
// products of units are always +/- a unit, so the whole algebra is a sign
// table. Everything downstream (left-multiplication operators for the
// classical families, the two exceptional derivation algebras, spin
// representations in dimension eight) reads off these tables.

#include "pseudohopf/matrix.hpp"
#include "pseudohopf/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudohopf {

enum class AlgebraKind {
  Real,
  Complex,
  Paracomplex,
  Quaternion,
  Paraquaternion,
  Octonion,
  SplitOctonion,
};

inline std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Real: return "real";
    case AlgebraKind::Complex: return "complex";
    case AlgebraKind::Paracomplex: return "paracomplex";
    case AlgebraKind::Quaternion: return "quaternion";
    case AlgebraKind::Paraquaternion: return "paraquaternion";
    case AlgebraKind::Octonion: return "octonion";
    case AlgebraKind::SplitOctonion: return "split_octonion";
  }
  throw std::logic_error("to_string(AlgebraKind)");
}

class CompositionAlgebra {
 public:
  static const CompositionAlgebra& get(AlgebraKind kind) {
    static const std::map<AlgebraKind, CompositionAlgebra> cache = [] {
      std::map<AlgebraKind, CompositionAlgebra> m;
      CompositionAlgebra r = make_real();
      m.emplace(AlgebraKind::Real, r);
      CompositionAlgebra c = doubled(r, -1, AlgebraKind::Complex);
      m.emplace(AlgebraKind::Complex, c);
      m.emplace(AlgebraKind::Paracomplex, doubled(r, +1, AlgebraKind::Paracomplex));
      CompositionAlgebra h = doubled(c, -1, AlgebraKind::Quaternion);
      m.emplace(AlgebraKind::Quaternion, h);
      m.emplace(AlgebraKind::Paraquaternion,
                doubled(c, +1, AlgebraKind::Paraquaternion));
      m.emplace(AlgebraKind::Octonion, doubled(h, -1, AlgebraKind::Octonion));
      m.emplace(AlgebraKind::SplitOctonion,
                doubled(h, +1, AlgebraKind::SplitOctonion));
      return m;
    }();
    return cache.at(kind);
  }

  AlgebraKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }

  // e_i * e_j = sign(i,j) * e_{index(i,j)}
  std::size_t unit_product_index(std::size_t i, std::size_t j) const {
    return idx_[i * dim_ + j];
  }
  int unit_product_sign(std::size_t i, std::size_t j) const {
    return sgn_[i * dim_ + j];
  }
  // e_i^2 = square_sign(i) * e_0 for i >= 1.
  int square_sign(std::size_t i) const { return sq_[i]; }

  std::vector<Rat> zero() const { return std::vector<Rat>(dim_, Rat(0)); }

  std::vector<Rat> unit(std::size_t i) const {
    auto v = zero();
    v.at(i) = 1;
    return v;
  }

  std::vector<Rat> multiply(const std::vector<Rat>& x,
                            const std::vector<Rat>& y) const {
    check(x);
    check(y);
    auto r = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        r[unit_product_index(i, j)] +=
            Rat(unit_product_sign(i, j)) * x[i] * y[j];
      }
    }
    return r;
  }

  std::vector<Rat> conjugate(const std::vector<Rat>& x) const {
    check(x);
    auto r = x;
    for (std::size_t i = 1; i < dim_; ++i) r[i] = -r[i];
    return r;
  }

  Rat real_part(const std::vector<Rat>& x) const {
    check(x);
    return x[0];
  }

  // N(x) = x * conj(x); diagonal in unit coordinates.
  Rat norm(const std::vector<Rat>& x) const {
    check(x);
    Rat n = x[0] * x[0];
    for (std::size_t i = 1; i < dim_; ++i)
      n -= Rat(sq_[i]) * x[i] * x[i];
    return n;
  }

  // Polar form of N: <x,y> = (N(x+y) - N(x) - N(y)) / 2 = Re(x * conj(y)).
  Rat inner(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    check(x);
    check(y);
    Rat s = x[0] * y[0];
    for (std::size_t i = 1; i < dim_; ++i)
      s -= Rat(sq_[i]) * x[i] * y[i];
    return s;
  }

  // Diagonal Gram matrix of the polar form in the unit basis.
  RatMat norm_gram() const {
    std::vector<Rat> d(dim_, Rat(1));
    for (std::size_t i = 1; i < dim_; ++i) d[i] = Rat(-sq_[i]);
    return RatMat::diagonal(d);
  }

  // Matrix of x -> u * x in the unit basis.
  RatMat left_mult(const std::vector<Rat>& u) const {
    check(u);
    RatMat l(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        l(unit_product_index(i, j), j) += Rat(unit_product_sign(i, j)) * u[i];
    }
    return l;
  }

  // Matrix of x -> x * u in the unit basis.
  RatMat right_mult(const std::vector<Rat>& u) const {
    check(u);
    RatMat r(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (u[j] == 0) continue;
      for (std::size_t i = 0; i < dim_; ++i)
        r(unit_product_index(i, j), i) += Rat(unit_product_sign(i, j)) * u[j];
    }
    return r;
  }

 private:
  CompositionAlgebra() = default;

  static CompositionAlgebra make_real() {
    CompositionAlgebra a;
    a.kind_ = AlgebraKind::Real;
    a.dim_ = 1;
    a.idx_ = {0};
    a.sgn_ = {1};
    a.sq_ = {1};
    return a;
  }

  static CompositionAlgebra doubled(const CompositionAlgebra& base, int gamma,
                                    AlgebraKind kind) {
    CompositionAlgebra a;
    a.kind_ = kind;
    const std::size_t h = base.dim_;
    a.dim_ = 2 * h;
    a.idx_.assign(a.dim_ * a.dim_, 0);
    a.sgn_.assign(a.dim_ * a.dim_, 0);
    a.sq_.assign(a.dim_, 1);
    // Units: e_i = (f_i, 0) for i < h, e_{h+i} = (0, f_i). The four cases of
    // the doubling formula, evaluated on units of the base:
    //   (f_i,0)(f_j,0) = (f_i f_j, 0)
    //   (f_i,0)(0,f_j) = (0, f_j f_i)
    //   (0,f_i)(f_j,0) = (0, f_i conj(f_j))
    //   (0,f_i)(0,f_j) = (g * conj(f_j) f_i, 0)
    auto conj_sign = [&](std::size_t i) { return i == 0 ? 1 : -1; };
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) {
        std::size_t k = base.unit_product_index(i, j);
        int s = base.unit_product_sign(i, j);
        a.set(i, j, k, s);
        std::size_t kji = base.unit_product_index(j, i);
        int sji = base.unit_product_sign(j, i);
        a.set(i, h + j, h + kji, sji);
        std::size_t kij = base.unit_product_index(i, j);
        a.set(h + i, j, h + kij, base.unit_product_sign(i, j) * conj_sign(j));
        std::size_t kji2 = base.unit_product_index(j, i);
        a.set(h + i, h + j, kji2,
              gamma * base.unit_product_sign(j, i) * conj_sign(j));
      }
    for (std::size_t i = 1; i < a.dim_; ++i) {
      if (a.idx_[i * a.dim_ + i] != 0)
        throw std::logic_error("doubled: unit square not scalar");
      a.sq_[i] = a.sgn_[i * a.dim_ + i];
    }
    return a;
  }

  void set(std::size_t i, std::size_t j, std::size_t k, int s) {
    idx_[i * dim_ + j] = k;
    sgn_[i * dim_ + j] = s;
  }

  void check(const std::vector<Rat>& x) const {
    if (x.size() != dim_)
      throw std::invalid_argument("CompositionAlgebra: wrong element size");
  }

  AlgebraKind kind_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> idx_;
  std::vector<int> sgn_;
  std::vector<int> sq_;
};

// Gram matrix of the real part of the norm's polar form on F^m, realified
// coordinate-by-coordinate (each coordinate contributes the algebra's own
// diagonal block).
inline RatMat realified_norm_gram(const CompositionAlgebra& alg,
                                  std::size_t m) {
  const std::size_t d = alg.dim();
  RatMat g(m * d, m * d);
  RatMat blockg = alg.norm_gram();
  for (std::size_t c = 0; c < m; ++c) g.set_block(c * d, c * d, blockg);
  return g;
}

}  // namespace pseudohopf

#endif
