#ifndef PSEUDOHOPF_CLIFFORD_HPP
#define PSEUDOHOPF_CLIFFORD_HPP

// Real Clifford representations by explicit signed-permutation matrices:
// systems of anticommuting "gamma" matrices with prescribed squares +1 / -1,
// their bivector (spin) algebras, and the invariant bilinear form on spinors.
//
// The construction graph:
//   * seeds: left multiplications by the imaginary units of the octonions
//     (seven negative squares on R^8) and of the split octonions (four
//     positive and three negative squares on R^8), plus trivial 1- and
//     2-dimensional seeds;
//   * doubling (p,q) -> (p+1,q+1) on twice the space:
//       {s1 (x) I, eps (x) I, s3 (x) gamma_i}
//   * swap (p,q) -> (q+2,p):
//       {s1 (x) I, s3 (x) I, eps (x) gamma_i}
// with the 2x2 blocks s1 = [[0,1],[1,0]], s3 = diag(1,-1), eps = [[0,-1],[1,0]].
// Every matrix produced is a signed permutation, which keeps all downstream
// linear algebra sparse and exact.

#include "pseudohopf/algebra.hpp"
#include "pseudohopf/liealg.hpp"
#include "pseudohopf/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudohopf {

struct GammaSystem {
  std::size_t pos = 0;  // leading gammas square to +Id
  std::size_t neg = 0;  // trailing gammas square to -Id
  std::size_t rep_dim = 1;
  std::vector<RatMat> gammas;  // positives first, then negatives

  const RatMat& positive(std::size_t i) const { return gammas.at(i); }
  const RatMat& negative(std::size_t i) const { return gammas.at(pos + i); }
};

namespace detail {

inline RatMat pauli_s1() {
  RatMat m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  return m;
}

inline RatMat pauli_s3() {
  RatMat m(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return m;
}

inline RatMat pauli_eps() {
  RatMat m(2, 2);
  m(0, 1) = -1;
  m(1, 0) = 1;
  return m;
}

inline GammaSystem octonion_seed(AlgebraKind kind) {
  const auto& alg = CompositionAlgebra::get(kind);
  GammaSystem g;
  g.rep_dim = 8;
  std::vector<RatMat> positives, negatives;
  for (std::size_t i = 1; i < 8; ++i) {
    RatMat l = alg.left_mult(alg.unit(i));
    // L_u^2 = -N(u) Id: imaginary units with square +1 have N = -1.
    if (alg.square_sign(i) > 0)
      positives.push_back(std::move(l));
    else
      negatives.push_back(std::move(l));
  }
  g.pos = positives.size();
  g.neg = negatives.size();
  g.gammas = std::move(positives);
  for (auto& m : negatives) g.gammas.push_back(std::move(m));
  return g;
}

inline GammaSystem doubled(const GammaSystem& base) {
  GammaSystem g;
  g.pos = base.pos + 1;
  g.neg = base.neg + 1;
  g.rep_dim = 2 * base.rep_dim;
  RatMat id = RatMat::identity(base.rep_dim);
  g.gammas.push_back(kron(pauli_s1(), id));
  for (std::size_t i = 0; i < base.pos; ++i)
    g.gammas.push_back(kron(pauli_s3(), base.positive(i)));
  g.gammas.push_back(kron(pauli_eps(), id));
  for (std::size_t i = 0; i < base.neg; ++i)
    g.gammas.push_back(kron(pauli_s3(), base.negative(i)));
  return g;
}

inline GammaSystem swapped(const GammaSystem& base) {
  GammaSystem g;
  g.pos = base.neg + 2;
  g.neg = base.pos;
  g.rep_dim = 2 * base.rep_dim;
  RatMat id = RatMat::identity(base.rep_dim);
  g.gammas.push_back(kron(pauli_s1(), id));
  g.gammas.push_back(kron(pauli_s3(), id));
  for (std::size_t i = 0; i < base.neg; ++i)
    g.gammas.push_back(kron(pauli_eps(), base.negative(i)));
  for (std::size_t i = 0; i < base.pos; ++i)
    g.gammas.push_back(kron(pauli_eps(), base.positive(i)));
  return g;
}

inline GammaSystem subset(const GammaSystem& base, std::size_t pos,
                          std::size_t neg) {
  GammaSystem g;
  g.pos = pos;
  g.neg = neg;
  g.rep_dim = base.rep_dim;
  for (std::size_t i = 0; i < pos; ++i) g.gammas.push_back(base.positive(i));
  for (std::size_t i = 0; i < neg; ++i) g.gammas.push_back(base.negative(i));
  return g;
}

}  // namespace detail

// A gamma system for the requested signature. Supported: everything
// reachable from the seeds by doubling, i.e. (p,q) with p - q in
// {-7,...,-1} u {0} u {1} (via the trivial seeds) u {9} and the split seed
// line p - q = 1 at (4,3); plus (p,0) for p <= 9 and (0,q) for q <= 7.
// Requests outside the graph throw.
inline GammaSystem clifford_representation(std::size_t pos, std::size_t neg) {
  using namespace detail;
  if (pos == 0 && neg == 0) {
    GammaSystem g;
    g.rep_dim = 1;
    return g;
  }
  if (pos == 1 && neg == 0) {
    GammaSystem g;
    g.pos = 1;
    g.rep_dim = 1;
    g.gammas.push_back(RatMat::identity(1));
    return g;
  }
  if (pos == 0 && neg == 1) {
    GammaSystem g;
    g.neg = 1;
    g.rep_dim = 2;
    g.gammas.push_back(pauli_eps());
    return g;
  }
  if (pos == 0 && neg == 7) return octonion_seed(AlgebraKind::Octonion);
  if (pos == 4 && neg == 3) return octonion_seed(AlgebraKind::SplitOctonion);
  if (pos == 9 && neg == 0)
    return swapped(octonion_seed(AlgebraKind::Octonion));
  if (pos == 0 && neg < 7)
    return subset(octonion_seed(AlgebraKind::Octonion), 0, neg);
  if (neg == 0 && pos < 9)
    return subset(clifford_representation(9, 0), pos, 0);
  if (pos >= 1 && neg >= 1)
    return doubled(clifford_representation(pos - 1, neg - 1));
  throw std::invalid_argument("clifford_representation: signature (" +
                              std::to_string(pos) + "," + std::to_string(neg) +
                              ") is outside the supported construction graph");
}

// The bivector algebra spanned by the products gamma_i gamma_j (i < j).
inline MatrixLieAlgebra spin_algebra(const GammaSystem& g,
                                     const std::string& name) {
  std::vector<RatMat> basis;
  const std::size_t d = g.gammas.size();
  basis.reserve(d * (d - 1) / 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      basis.push_back(g.gammas[i] * g.gammas[j]);
  return MatrixLieAlgebra(name, g.rep_dim, std::move(basis));
}

inline MatrixLieAlgebra spin_algebra(const GammaSystem& g) {
  return spin_algebra(g, "spin(" + std::to_string(g.pos) + "," +
                             std::to_string(g.neg) + ")");
}

// The symmetric bilinear form B on spinors invariant under the bivector
// algebra: X^T B + B X = 0 for every bivector X. For the representations in
// the construction graph that we use, B is unique up to scale; the result is
// normalised to integral entries with gcd 1 and positive leading entry.
// Throws if the invariant form is not one-dimensional.
inline RatMat invariant_spinor_form(const GammaSystem& g) {
  const std::size_t d = g.rep_dim;
  const std::size_t total = g.gammas.size();
  if (total < 2)
    throw std::invalid_argument("invariant_spinor_form: need >= 2 gammas");
  // Unkn: upper triangle of symmetric B. Invariance under the generators
  // gamma_0 gamma_j (j > 0) implies invariance under the whole bivector
  // algebra, since those generate it under brackets.
  const std::size_t unknowns = d * (d + 1) / 2;
  auto uidx = [d](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
  };
  std::vector<RatMat> gens;
  for (std::size_t j = 1; j < total; ++j)
    gens.push_back(g.gammas[0] * g.gammas[j]);
  RatMat sys(gens.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const RatMat& x : gens) {
    // Equation (X^T B + B X)_{ij} = 0 for i <= j:
    //   sum_k X_{ki} B_{kj} + sum_k B_{ik} X_{kj} = 0.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          if (x(k, i) != 0) sys(row, uidx(k, j)) += x(k, i);
          if (x(k, j) != 0) sys(row, uidx(i, k)) += x(k, j);
        }
        ++row;
      }
  }
  auto ns = nullspace(sys);
  if (ns.size() != 1)
    throw std::runtime_error(
        "invariant_spinor_form: invariant form space has dimension " +
        std::to_string(ns.size()) + ", expected 1");
  RatMat b(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      b(i, j) = ns[0][uidx(i, j)];
      b(j, i) = b(i, j);
    }
  // Normalise: clear denominators, divide by content, make the first nonzero
  // entry positive.
  Int lcm_den = 1, gcd_num = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (b(i, j) != 0) lcm_den = lcm(lcm_den, rat_den(b(i, j)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (b(i, j) != 0)
        gcd_num = gcd(gcd_num, Int(rat_num(b(i, j)) * (lcm_den / rat_den(b(i, j)))));
  Rat scale = Rat(lcm_den) / Rat(gcd_num);
  b *= scale;
  for (std::size_t i = 0; i < d * d; ++i) {
    const Rat& v = b(i / d, i % d);
    if (v != 0) {
      if (v < 0) b *= Rat(-1);
      break;
    }
  }
  // Defensive: verify invariance under every bivector.
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j) {
      RatMat x = g.gammas[i] * g.gammas[j];
      if (!(x.transpose() * b + b * x).is_zero())
        throw std::logic_error("invariant_spinor_form: invariance failed");
    }
  return b;
}

// For a symmetric form whose matrix is a signed permutation (entries 0, +1,
// -1; exactly one nonzero per row), produce an exact change of basis P with
//   P^T B P = diag(-1, ..., -1, +1, ..., +1)   (negatives first).
// Diagonal +/-1 entries pass through; off-diagonal pairs are hyperbolic
// planes, split rationally by the columns e_i +/- (c/2) e_j.
inline RatMat standardizing_basis(const RatMat& b) {
  const std::size_t n = b.rows();
  if (!b.is_symmetric())
    throw std::invalid_argument("standardizing_basis: not symmetric");
  std::vector<std::vector<Rat>> neg_cols, pos_cols;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t partner = n;
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) != 0) {
        if (partner != n || (b(i, j) != 1 && b(i, j) != -1))
          throw std::invalid_argument(
              "standardizing_basis: not a signed permutation form");
        partner = j;
      }
    if (partner == n)
      throw std::invalid_argument("standardizing_basis: degenerate form");
    seen[i] = true;
    if (partner == i) {
      std::vector<Rat> col(n, Rat(0));
      col[i] = 1;
      (b(i, i) > 0 ? pos_cols : neg_cols).push_back(std::move(col));
    } else {
      seen[partner] = true;
      const Rat c = b(i, partner);
      std::vector<Rat> u1(n, Rat(0)), u2(n, Rat(0));
      u1[i] = 1;
      u1[partner] = c / 2;
      u2[i] = 1;
      u2[partner] = -c / 2;
      pos_cols.push_back(std::move(u1));
      neg_cols.push_back(std::move(u2));
    }
  }
  RatMat p(n, n);
  std::size_t col = 0;
  for (const auto& c : neg_cols) {
    for (std::size_t i = 0; i < n; ++i) p(i, col) = c[i];
    ++col;
  }
  for (const auto& c : pos_cols) {
    for (std::size_t i = 0; i < n; ++i) p(i, col) = c[i];
    ++col;
  }
  return p;
}

// A spin algebra re-expressed in coordinates where the invariant spinor form
// is the standard diagonal with the requested number of leading -1 entries.
struct SpinRealization {
  MatrixLieAlgebra algebra;    // conjugated bivector algebra
  std::vector<RatMat> gammas;  // conjugated gamma matrices
  RatMat form;                 // diag(-1 x neg, +1 x pos)
  std::size_t form_neg = 0;    // number of leading -1 entries
};

// Builds the gamma system (gpos, gneg), computes the invariant spinor form,
// flips its overall sign if needed so that the negative index equals
// required_neg, and conjugates everything into standard coordinates.
inline SpinRealization spin_standard(std::size_t gpos, std::size_t gneg,
                                     std::size_t required_neg,
                                     const std::string& name) {
  GammaSystem g = clifford_representation(gpos, gneg);
  RatMat b = invariant_spinor_form(g);
  Inertia sig = inertia(b);
  if (sig.null != 0)
    throw std::logic_error("spin_standard: degenerate spinor form");
  if (sig.negative != required_neg) {
    if (sig.positive != required_neg)
      throw std::invalid_argument(
          "spin_standard: spinor form signature does not match the requested "
          "quadric signature");
    b *= Rat(-1);
  }
  RatMat p = standardizing_basis(b);
  RatMat pinv = inverse(p);
  SpinRealization out;
  out.form_neg = required_neg;
  std::vector<Rat> d(g.rep_dim, Rat(1));
  for (std::size_t i = 0; i < required_neg; ++i) d[i] = -1;
  out.form = RatMat::diagonal(d);
  for (const RatMat& gamma : g.gammas)
    out.gammas.push_back(pinv * gamma * p);
  MatrixLieAlgebra raw = spin_algebra(g, name);
  std::vector<RatMat> basis;
  basis.reserve(raw.dim());
  for (const RatMat& x : raw.basis()) basis.push_back(pinv * x * p);
  out.algebra = MatrixLieAlgebra(name, g.rep_dim, std::move(basis));
  return out;
}

}  // namespace pseudohopf

#endif
