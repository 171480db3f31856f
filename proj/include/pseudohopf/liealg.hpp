#ifndef PSEUDOHOPF_LIEALG_HPP
#define PSEUDOHOPF_LIEALG_HPP

// Matrix Lie algebras over Q: a named list of independent n x n basis
// matrices, closed under commutator. Structure constants, adjoint operators,
// Killing and trace forms, centres and derived algebras are computed exactly
// and cached. Span bookkeeping (membership, coordinates, sums,
// intersections, orthogonal complements) works on flattened matrices.

#include "pseudohopf/matrix.hpp"
#include "pseudohopf/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pseudohopf {

inline RatMat bracket(const RatMat& x, const RatMat& y) {
  return x * y - y * x;
}

struct NotClosedError : std::runtime_error {
  NotClosedError(const std::string& name, std::size_t i, std::size_t j)
      : std::runtime_error("Lie algebra '" + name +
                           "' is not closed under bracket: offending basis "
                           "pair (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")"),
        first(i),
        second(j) {}
  std::size_t first, second;
};

// Sparse coefficient vector: list of (basis index, coefficient).
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra() = default;

  MatrixLieAlgebra(std::string name, std::size_t n, std::vector<RatMat> basis)
      : name_(std::move(name)), n_(n), basis_(std::move(basis)) {
    for (const RatMat& b : basis_)
      if (b.rows() != n_ || b.cols() != n_)
        throw std::invalid_argument("MatrixLieAlgebra '" + name_ +
                                    "': basis matrix of wrong size");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(basis_.size());
    for (const RatMat& b : basis_) rows.push_back(flatten(b));
    span_ = RowSpace(rows_from_vectors(rows, n_ * n_));
    if (!span_.independent_generators())
      throw std::invalid_argument("MatrixLieAlgebra '" + name_ +
                                  "': basis is linearly dependent");
  }

  // Build from a (possibly dependent) generating set by echelonising spans.
  static MatrixLieAlgebra spanned(std::string name, std::size_t n,
                                  const std::vector<RatMat>& gens) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(gens.size());
    for (const RatMat& g : gens) {
      if (g.rows() != n || g.cols() != n)
        throw std::invalid_argument("spanned: generator of wrong size");
      rows.push_back(flatten(g));
    }
    RowSpace sp(rows_from_vectors(rows, n * n));
    std::vector<RatMat> basis;
    basis.reserve(sp.dim());
    for (std::size_t i = 0; i < sp.dim(); ++i) {
      std::vector<Rat> row(n * n);
      for (std::size_t j = 0; j < n * n; ++j) row[j] = sp.reduced()(i, j);
      basis.push_back(unflatten(row, n, n));
    }
    return MatrixLieAlgebra(std::move(name), n, std::move(basis));
  }

  const std::string& name() const { return name_; }
  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatMat>& basis() const { return basis_; }
  const RatMat& basis_at(std::size_t i) const { return basis_.at(i); }
  const RowSpace& span() const { return span_; }

  bool contains(const RatMat& x) const { return span_.contains(flatten(x)); }

  // Coordinates of x in the basis; throws if x is outside the span.
  std::vector<Rat> coords(const RatMat& x) const {
    auto c = span_.coords(flatten(x));
    if (!c)
      throw std::invalid_argument("MatrixLieAlgebra '" + name_ +
                                  "': element outside span");
    return *c;
  }

  std::optional<std::vector<Rat>> try_coords(const RatMat& x) const {
    return span_.coords(flatten(x));
  }

  RatMat element(const std::vector<Rat>& coeffs) const {
    if (coeffs.size() != dim())
      throw std::invalid_argument("element: wrong coefficient count");
    RatMat x(n_, n_);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) x += basis_[i] * coeffs[i];
    return x;
  }

  // Structure constants [e_i, e_j] = sum_k c_k e_k, stored sparsely per pair.
  // First call verifies closure and throws NotClosedError if it fails.
  const SparseVec& structure(std::size_t i, std::size_t j) const {
    ensure_structure();
    return (*struct_)[i * dim() + j];
  }

  // [x, y] in coordinates, both given in coordinates.
  std::vector<Rat> bracket_coords(const std::vector<Rat>& a,
                                  const std::vector<Rat>& b) const {
    ensure_structure();
    std::vector<Rat> r(dim(), Rat(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j] == 0) continue;
        const Rat f = a[i] * b[j];
        for (const auto& [k, c] : (*struct_)[i * dim() + j]) r[k] += f * c;
      }
    }
    return r;
  }

  // Matrix of ad(e_i) in the basis: (ad_i)_{kj} = c_{ij}^k.
  const RatMat& ad(std::size_t i) const {
    ensure_structure();
    if (!ads_) {
      std::vector<RatMat> ads;
      ads.reserve(dim());
      for (std::size_t a = 0; a < dim(); ++a) {
        RatMat m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
          for (const auto& [k, c] : (*struct_)[a * dim() + j]) m(k, j) = c;
        ads.push_back(std::move(m));
      }
      ads_ = std::move(ads);
    }
    return (*ads_)[i];
  }

  // Killing form K(i,j) = tr(ad_i ad_j).
  const RatMat& killing_form() const {
    if (!killing_) {
      RatMat k(dim(), dim());
      for (std::size_t i = 0; i < dim(); ++i) {
        const RatMat& ai = ad(i);
        for (std::size_t j = i; j < dim(); ++j) {
          const RatMat& aj = ad(j);
          Rat t(0);
          for (std::size_t p = 0; p < dim(); ++p)
            for (std::size_t q = 0; q < dim(); ++q)
              if (ai(p, q) != 0 && aj(q, p) != 0) t += ai(p, q) * aj(q, p);
          k(i, j) = t;
          k(j, i) = t;
        }
      }
      killing_ = std::move(k);
    }
    return *killing_;
  }

  // Trace form T(i,j) = tr(e_i e_j) of the defining representation.
  const RatMat& trace_form() const {
    if (!trace_) {
      RatMat t(dim(), dim());
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) {
          Rat s(0);
          const RatMat& a = basis_[i];
          const RatMat& b = basis_[j];
          for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q)
              if (a(p, q) != 0 && b(q, p) != 0) s += a(p, q) * b(q, p);
          t(i, j) = s;
          t(j, i) = s;
        }
      trace_ = std::move(t);
    }
    return *trace_;
  }

  bool is_abelian() const {
    ensure_structure();
    for (const auto& sv : *struct_)
      if (!sv.empty()) return false;
    return true;
  }

  bool is_semisimple() const { return rank(killing_form()) == dim(); }

  // Centre {x : [x, g] = 0}, as coordinate vectors.
  std::vector<std::vector<Rat>> center_coords() const {
    ensure_structure();
    // Conditions sum_i a_i c_{ij}^k = 0 for all j, k.
    RatMat m(dim() * dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, c] : (*struct_)[i * dim() + j])
          m(j * dim() + k, i) = c;
    return nullspace(m);
  }

  std::size_t center_dim() const { return center_coords().size(); }

  // Derived algebra [g, g] as a row space of flattened matrices.
  RowSpace derived_span() const {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        rows.push_back(flatten(bracket(basis_[i], basis_[j])));
    if (rows.empty()) return RowSpace(RatMat(0, n_ * n_));
    return RowSpace(rows_from_vectors(rows, n_ * n_));
  }

 private:
  void ensure_structure() const {
    if (struct_) return;
    auto table = std::make_optional<std::vector<SparseVec>>(dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j) {
        RatMat br = bracket(basis_[i], basis_[j]);
        auto c = span_.coords(flatten(br));
        if (!c) throw NotClosedError(name_, i, j);
        SparseVec sv;
        for (std::size_t k = 0; k < c->size(); ++k)
          if ((*c)[k] != 0) sv.emplace_back(k, (*c)[k]);
        SparseVec neg;
        neg.reserve(sv.size());
        for (const auto& [k, v] : sv) neg.emplace_back(k, -v);
        (*table)[i * dim() + j] = std::move(sv);
        (*table)[j * dim() + i] = std::move(neg);
      }
    struct_ = std::move(table);
  }

  std::string name_;
  std::size_t n_ = 0;
  std::vector<RatMat> basis_;
  RowSpace span_;
  mutable std::optional<std::vector<SparseVec>> struct_;
  mutable std::optional<std::vector<RatMat>> ads_;
  mutable std::optional<RatMat> killing_;
  mutable std::optional<RatMat> trace_;
};

// --- subspaces of a fixed algebra ------------------------------------------

// A subspace of a MatrixLieAlgebra, carrying both the matrices and their
// coordinates in the parent basis.
struct Subspace {
  std::vector<RatMat> basis;           // matrices
  std::vector<std::vector<Rat>> coords;  // same elements, parent coordinates

  std::size_t dim() const { return basis.size(); }

  static Subspace from_matrices(const MatrixLieAlgebra& g,
                                const std::vector<RatMat>& mats) {
    Subspace s;
    for (const RatMat& m : mats) {
      s.coords.push_back(g.coords(m));
      s.basis.push_back(m);
    }
    return s;
  }

  static Subspace from_coords(const MatrixLieAlgebra& g,
                              const std::vector<std::vector<Rat>>& coords) {
    Subspace s;
    for (const auto& c : coords) {
      s.basis.push_back(g.element(c));
      s.coords.push_back(c);
    }
    return s;
  }

  // Coordinate matrix: one row per subspace basis vector.
  RatMat coord_matrix(std::size_t parent_dim) const {
    return rows_from_vectors(coords, parent_dim);
  }
};

// Dimension of span(A) + span(B) inside the space of n x n matrices.
inline std::size_t sum_dim(const std::vector<RatMat>& a,
                           const std::vector<RatMat>& b) {
  if (a.empty() && b.empty()) return 0;
  std::size_t n = a.empty() ? b.front().rows() : a.front().rows();
  std::vector<std::vector<Rat>> rows;
  rows.reserve(a.size() + b.size());
  for (const RatMat& m : a) rows.push_back(flatten(m));
  for (const RatMat& m : b) rows.push_back(flatten(m));
  return RowSpace(rows_from_vectors(rows, n * n)).dim();
}

// Basis of the intersection of two spans of n x n matrices.
inline std::vector<RatMat> intersect_spans(const std::vector<RatMat>& a,
                                           const std::vector<RatMat>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.front().rows();
  const std::size_t cols = n * n;
  // x = sum c_i a_i = sum d_j b_j  <=>  (c, d) in the nullspace of
  // [A^T | -B^T] where rows of A, B are the flattened generators.
  RatMat m(cols, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto f = flatten(a[i]);
    for (std::size_t r = 0; r < cols; ++r) m(r, i) = f[r];
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    auto f = flatten(b[j]);
    for (std::size_t r = 0; r < cols; ++r) m(r, a.size() + j) = -f[r];
  }
  std::vector<std::vector<Rat>> rows;
  for (const auto& cd : nullspace(m)) {
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (cd[i] == 0) continue;
      auto f = flatten(a[i]);
      for (std::size_t r = 0; r < cols; ++r)
        if (f[r] != 0) x[r] += cd[i] * f[r];
    }
    rows.push_back(std::move(x));
  }
  if (rows.empty()) return {};
  RowSpace sp(rows_from_vectors(rows, cols));
  std::vector<RatMat> out;
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    std::vector<Rat> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = sp.reduced()(i, j);
    out.push_back(unflatten(row, n, n));
  }
  return out;
}

// Orthogonal complement of the subspace spanned by `sub` inside g with
// respect to a symmetric bilinear form given by its Gram matrix in g's
// basis. Throws if the form is degenerate on the subspace (the complement
// would not be well-behaved for reductive splittings).
inline Subspace orthogonal_complement(const MatrixLieAlgebra& g,
                                      const Subspace& sub, const RatMat& gram,
                                      bool require_nondegenerate = true) {
  const std::size_t d = g.dim();
  RatMat w = sub.coord_matrix(d);
  if (require_nondegenerate) {
    RatMat restricted = w * gram * w.transpose();
    if (rank(restricted) != sub.dim())
      throw std::invalid_argument(
          "orthogonal_complement: form degenerate on subspace");
  }
  RatMat cond = w * gram;  // rows: conditions on coordinates
  auto ns = nullspace(cond);
  return Subspace::from_coords(g, ns);
}

}  // namespace pseudohopf

#endif
