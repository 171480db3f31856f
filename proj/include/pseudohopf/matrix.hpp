#ifndef PSEUDOHOPF_MATRIX_HPP
#define PSEUDOHOPF_MATRIX_HPP

// Dense matrices over Q with exact linear algebra: reduced row echelon form,
// rank / nullspace / solving, inverses, Kronecker products, and the inertia
// (signature) of symmetric forms. The elimination routines skip zero entries
// aggressively; the Lie-algebra bases downstream are very sparse and this is
// what keeps the larger rank computations fast.

#include "pseudohopf/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pseudohopf {

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMat diagonal(const std::vector<Rat>& d) {
    RatMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const Rat& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Rat max_abs() const {
    Rat m(0);
    for (const Rat& x : a_) {
      Rat ax = abs_rat(x);
      if (ax > m) m = ax;
    }
    return m;
  }

  Rat trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: non-square");
    Rat t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  RatMat transpose() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMat block(std::size_t row0, std::size_t col0, std::size_t nrows,
               std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
      throw std::out_of_range("block: out of range");
    RatMat b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j)
        b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
  }

  void set_block(std::size_t row0, std::size_t col0, const RatMat& b) {
    if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_)
      throw std::out_of_range("set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        (*this)(row0 + i, col0 + j) = b(i, j);
  }

  RatMat& operator+=(const RatMat& o) {
    check_same_shape(o, "+=");
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (o.a_[k] != 0) a_[k] += o.a_[k];
    return *this;
  }

  RatMat& operator-=(const RatMat& o) {
    check_same_shape(o, "-=");
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (o.a_[k] != 0) a_[k] -= o.a_[k];
    return *this;
  }

  RatMat& operator*=(const Rat& c) {
    for (Rat& x : a_)
      if (x != 0) x *= c;
    return *this;
  }

  friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
  friend RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }
  friend RatMat operator*(RatMat a, const Rat& c) { return a *= c; }
  friend RatMat operator*(const Rat& c, RatMat a) { return a *= c; }
  friend RatMat operator-(RatMat a) { return a *= Rat(-1); }

  friend RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matmul: shape mismatch");
    RatMat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rat& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rat& bkj = b(k, j);
          if (bkj != 0) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

 private:
  void check_same_shape(const RatMat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("RatMat ") + op +
                                  ": shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

inline RatMat kron(const RatMat& a, const RatMat& b) {
  RatMat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rat& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (b(p, q) != 0) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

inline RatMat hstack(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  RatMat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

inline RatMat vstack(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
  RatMat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

inline std::vector<Rat> flatten(const RatMat& m) {
  std::vector<Rat> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

inline RatMat unflatten(const std::vector<Rat>& v, std::size_t rows,
                        std::size_t cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("unflatten: size mismatch");
  RatMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

inline RatMat rows_from_vectors(const std::vector<std::vector<Rat>>& rows,
                                std::size_t cols) {
  RatMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("rows_from_vectors: ragged input");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// --- vector helpers -------------------------------------------------------

inline std::vector<Rat> mat_vec(const RatMat& a, const std::vector<Rat>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: mismatch");
  std::vector<Rat> r(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
  return r;
}

inline Rat dot(const std::vector<Rat>& v, const std::vector<Rat>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("dot: mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && w[i] != 0) s += v[i] * w[i];
  return s;
}

// v^T S w for a (typically diagonal or sparse) symmetric form S.
inline Rat form_value(const RatMat& s, const std::vector<Rat>& v,
                      const std::vector<Rat>& w) {
  return dot(v, mat_vec(s, w));
}

inline bool vec_is_zero(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

// --- echelon form and everything built on it ------------------------------

struct Rref {
  RatMat mat;                       // the reduced matrix
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

inline Rref rref(RatMat m) {
  Rref out;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t r = pr; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = col; j < m.cols(); ++j)
        std::swap(m(sel, j), m(pr, j));
    if (m(pr, col) != 1) {
      Rat inv = Rat(1) / m(pr, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(pr, j) != 0) m(pr, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      const Rat f = m(r, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(pr, j) != 0) m(r, j) -= f * m(pr, j);
    }
    out.pivots.push_back(col);
    ++pr;
  }
  out.mat = std::move(m);
  return out;
}

inline std::size_t rank(const RatMat& m) { return rref(m).rank(); }

// Basis of the right nullspace {x : M x = 0}, one vector per free column.
inline std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.mat(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b, or nullopt if the system is inconsistent.
inline std::optional<std::vector<Rat>> solve(const RatMat& a,
                                             const std::vector<Rat>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape");
  RatMat aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  Rref r = rref(std::move(aug));
  for (std::size_t p : r.pivots)
    if (p == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.mat(i, a.cols());
  return x;
}

// Unique solution X of A X = B; requires A to have full column rank and the
// system to be consistent. Used for metric solves where A is invertible.
inline RatMat solve_multi(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_multi: shape");
  Rref r = rref(hstack(a, b));
  if (r.rank() < a.cols() ||
      (r.rank() > 0 && r.pivots[r.rank() - 1] >= a.cols()))
    throw std::invalid_argument(
        "solve_multi: singular or inconsistent system");
  RatMat x(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(i, j) = r.mat(i, a.cols() + j);
  return x;
}

inline RatMat inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square");
  return solve_multi(a, RatMat::identity(a.rows()));
}

// --- row spaces -----------------------------------------------------------

// Echelonised span of a list of row vectors, remembering the transform back
// to the original rows so coordinates in the *given* basis can be recovered.
class RowSpace {
 public:
  RowSpace() : ambient_(0) {}

  explicit RowSpace(const RatMat& rows) : ambient_(rows.cols()) {
    Rref r = rref(hstack(rows, RatMat::identity(rows.rows())));
    // Pivots landing in the identity block mean the row part has been
    // exhausted; those rows span nothing new.
    std::size_t keep = 0;
    while (keep < r.pivots.size() && r.pivots[keep] < ambient_) ++keep;
    reduced_ = RatMat(keep, ambient_);
    transform_ = RatMat(keep, rows.rows());
    for (std::size_t i = 0; i < keep; ++i) {
      for (std::size_t j = 0; j < ambient_; ++j) reduced_(i, j) = r.mat(i, j);
      for (std::size_t j = 0; j < rows.rows(); ++j)
        transform_(i, j) = r.mat(i, ambient_ + j);
      pivots_.push_back(r.pivots[i]);
    }
    original_count_ = rows.rows();
  }

  std::size_t dim() const { return reduced_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool independent_generators() const { return dim() == original_count_; }
  const RatMat& reduced() const { return reduced_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduce v against the echelon rows; the remainder is zero iff v is in the
  // span. Also returns the coefficients with respect to the echelon rows.
  bool reduce(const std::vector<Rat>& v, std::vector<Rat>* echelon_coeffs,
              std::vector<Rat>* remainder) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("RowSpace::reduce: ambient mismatch");
    std::vector<Rat> w = v;
    std::vector<Rat> c(dim(), Rat(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rat f = w[pivots_[i]];
      if (f == 0) continue;
      c[i] = f;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (reduced_(i, j) != 0) w[j] -= f * reduced_(i, j);
    }
    bool inside = vec_is_zero(w);
    if (echelon_coeffs) *echelon_coeffs = std::move(c);
    if (remainder) *remainder = std::move(w);
    return inside;
  }

  bool contains(const std::vector<Rat>& v) const {
    return reduce(v, nullptr, nullptr);
  }

  // Coordinates of v in the ORIGINAL generating rows (which must have been
  // linearly independent). Nullopt if v is outside the span.
  std::optional<std::vector<Rat>> coords(const std::vector<Rat>& v) const {
    if (!independent_generators())
      throw std::logic_error("RowSpace::coords: generators were dependent");
    std::vector<Rat> c;
    if (!reduce(v, &c, nullptr)) return std::nullopt;
    // v = c^T reduced = c^T transform * original.
    std::vector<Rat> out(original_count_, Rat(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < original_count_; ++j)
        if (transform_(i, j) != 0) out[j] += c[i] * transform_(i, j);
    }
    return out;
  }

 private:
  std::size_t ambient_ = 0;
  std::size_t original_count_ = 0;
  RatMat reduced_;    // dim x ambient, RREF rows
  RatMat transform_;  // dim x original_count, reduced = transform * original
  std::vector<std::size_t> pivots_;
};

// --- signatures of symmetric forms ----------------------------------------

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;
  bool operator==(const Inertia& o) const {
    return positive == o.positive && negative == o.negative && null == o.null;
  }
};

// Sylvester inertia of a symmetric matrix by exact congruence reduction.
inline Inertia inertia(RatMat m) {
  if (!m.is_symmetric()) throw std::invalid_argument("inertia: not symmetric");
  const std::size_t n = m.rows();
  Inertia sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Prefer a nonzero diagonal pivot.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && m(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // All remaining diagonal entries vanish; look for an off-diagonal
      // coupling and fold it onto the diagonal (congruence by a transvection:
      // row_i += row_j, col_i += col_j turns 2*m(i,j) into a diagonal entry).
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[j] && m(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      }
      if (bi == n) {
        for (std::size_t i = 0; i < n; ++i)
          if (!done[i]) ++sig.null;
        return sig;
      }
      for (std::size_t k = 0; k < n; ++k) m(bi, k) += m(bj, k);
      for (std::size_t k = 0; k < n; ++k) m(k, bi) += m(k, bj);
      piv = bi;
    }
    const Rat d = m(piv, piv);
    if (d > 0)
      ++sig.positive;
    else
      ++sig.negative;
    done[piv] = true;
    // Clear the pivot row/column on the not-yet-processed block.
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || m(r, piv) == 0) continue;
      const Rat f = m(r, piv) / d;
      for (std::size_t k = 0; k < n; ++k)
        if (m(piv, k) != 0) m(r, k) -= f * m(piv, k);
      for (std::size_t k = 0; k < n; ++k)
        if (m(k, piv) != 0) m(k, r) -= f * m(k, piv);
    }
  }
  return sig;
}

inline bool is_positive_definite(const RatMat& m) {
  Inertia s = inertia(m);
  return s.negative == 0 && s.null == 0;
}

inline bool is_negative_definite(const RatMat& m) {
  Inertia s = inertia(m);
  return s.positive == 0 && s.null == 0;
}

}  // namespace pseudohopf

#endif
