#pragma once

// Constructors for the matrix Lie algebra catalog: orthogonal algebras in the
// standard diagonal form, realified (anti-)hermitian families over the complex,
// para-complex, quaternion and para-quaternion scalars, the two exceptional
// derivation algebras, spin bivector realizations, and right-multiplication
// factors used to enlarge a family by a commuting "fibre rotation" algebra.
//
// Every realization acts on R^N equipped with the diagonal form
// diag(-1 x neg, +1 x pos) (negative axes first) and carries the distinguished
// base point x0 = e_0 with form(x0, x0) = -1.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pseudohopf/algebra.hpp"
#include "pseudohopf/clifford.hpp"
#include "pseudohopf/liealg.hpp"
#include "pseudohopf/matrix.hpp"
#include "pseudohopf/rational.hpp"

namespace pseudohopf {

// diag(-1 x neg, +1 x pos); negative axes first.
inline RatMat standard_form(std::size_t pos, std::size_t neg) {
    std::vector<Rat> d(pos + neg, Rat(1));
    for (std::size_t i = 0; i < neg; ++i) d[i] = Rat(-1);
    return RatMat::diagonal(d);
}

struct CatalogRealization {
    MatrixLieAlgebra algebra;
    RatMat form;              // ambient diagonal form, -1 entries first
    std::size_t form_neg = 0; // number of -1 entries
    RatMat x0;                // base point column vector, form(x0,x0) = -1
    // Realified right multiplications by the scalar field's imaginary units
    // (empty for so / spin / exceptional realizations). They commute with the
    // algebra's left action and span the fibre directions of the family's
    // projective quotients.
    std::vector<RatMat> fibre_right_mults;
    // Clifford generators in the standardized frame (spin realizations only).
    std::vector<RatMat> gammas;
};

namespace detail {

inline void check_realization(const CatalogRealization& c) {
    const RatMat& s = c.form;
    for (const RatMat& x : c.algebra.basis()) {
        RatMat cond = x.transpose() * s;
        cond += s * x;
        if (!cond.is_zero())
            throw std::logic_error("catalog realization " + c.algebra.name() +
                                   ": basis element does not preserve the ambient form");
    }
    RatMat q = c.x0.transpose() * s * c.x0;
    if (q(0, 0) != Rat(-1))
        throw std::logic_error("catalog realization " + c.algebra.name() +
                               ": base point is not on the quadric");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// so(pos, neg): all form-preserving matrices of diag(-1 x neg, +1 x pos).
// ---------------------------------------------------------------------------

inline CatalogRealization so_realization(std::size_t pos, std::size_t neg) {
    const std::size_t n = pos + neg;
    if (n < 2) throw std::invalid_argument("so_realization: need at least 2 axes");
    if (neg == 0) throw std::invalid_argument("so_realization: quadric needs a negative axis");
    RatMat s = standard_form(pos, neg);
    std::vector<RatMat> basis;
    basis.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RatMat x(n, n);
            x(i, j) = s(j, j);
            x(j, i) = -s(i, i);
            basis.push_back(std::move(x));
        }
    std::string name = "so(" + std::to_string(pos) + "," + std::to_string(neg) + ")";
    CatalogRealization out{MatrixLieAlgebra(name, n, std::move(basis)),
                           std::move(s), neg, RatMat::identity(n).block(0, 0, n, 1),
                           {}, {}};
    detail::check_realization(out);
    return out;
}

// ---------------------------------------------------------------------------
// Realification layout for F^m, F in {C, A, H, B}.
//
// Definite scalars (C, H): the hermitian form carries coordinate signs
// eps_c = -1 for the leading neg_coords coordinates; real axes are grouped by
// coordinate, so the ambient form is blockdiag(eps_c * I_d) = standard form.
//
// Split scalars (A, B): the hermitian form is unsigned, but the unit norms are
// mixed; real axes are regrouped with the positive-norm unit parts of all
// coordinates first and the ambient form is the NEGATIVE of the norm Gram, so
// that it is again the standard diagonal form and e_0 (the real part of the
// first coordinate) is timelike.
// ---------------------------------------------------------------------------

class Realification {
public:
    Realification(AlgebraKind kind, std::size_t coords, std::size_t neg_coords)
        : field_(&CompositionAlgebra::get(kind)), coords_(coords), neg_coords_(neg_coords) {
        if (coords_ == 0) throw std::invalid_argument("Realification: zero coordinates");
        const RatMat g = field_->norm_gram();
        split_ = false;
        for (std::size_t k = 0; k < field_->dim(); ++k)
            if (g(k, k) < 0) split_ = true;
        if (split_) {
            if (neg_coords_ != 0)
                throw std::invalid_argument("Realification: split scalars take no coordinate signs");
            for (std::size_t k = 0; k < field_->dim(); ++k)
                (g(k, k) > 0 ? plus_units_ : minus_units_).push_back(k);
            slot_.assign(field_->dim(), 0);
            for (std::size_t a = 0; a < plus_units_.size(); ++a) slot_[plus_units_[a]] = a;
            for (std::size_t a = 0; a < minus_units_.size(); ++a) slot_[minus_units_[a]] = a;
        } else if (neg_coords_ > coords_) {
            throw std::invalid_argument("Realification: more negative coordinates than coordinates");
        }
    }

    const CompositionAlgebra& field() const { return *field_; }
    std::size_t coords() const { return coords_; }
    std::size_t neg_coords() const { return neg_coords_; }
    bool split() const { return split_; }
    std::size_t real_dim() const { return coords_ * field_->dim(); }

    Rat coordinate_sign(std::size_t c) const {
        return (!split_ && c < neg_coords_) ? Rat(-1) : Rat(1);
    }

    // Real axis of unit k of coordinate c.
    std::size_t index(std::size_t c, std::size_t k) const {
        if (!split_) return c * field_->dim() + k;
        const RatMat g = field_->norm_gram();
        if (g(k, k) > 0) return c * plus_units_.size() + slot_[k];
        return coords_ * plus_units_.size() + c * minus_units_.size() + slot_[k];
    }

    RatMat ambient_form() const {
        const std::size_t n = real_dim();
        RatMat s(n, n);
        const RatMat g = field_->norm_gram();
        for (std::size_t c = 0; c < coords_; ++c)
            for (std::size_t k = 0; k < field_->dim(); ++k) {
                std::size_t a = index(c, k);
                s(a, a) = split_ ? -g(k, k) : coordinate_sign(c) * g(k, k);
            }
        return s;
    }

    std::size_t form_neg() const {
        if (split_) return coords_ * plus_units_.size();
        return neg_coords_ * field_->dim();
    }

    // Real matrix of the F-linear map z |-> M z for a sparse F-matrix M given
    // as entries (row coordinate, column coordinate, value in F).
    RatMat left_matrix(const std::vector<std::tuple<std::size_t, std::size_t, std::vector<Rat>>>& entries) const {
        const std::size_t n = real_dim();
        RatMat x(n, n);
        for (const auto& [c1, c2, u] : entries) {
            RatMat l = field_->left_mult(u);
            for (std::size_t k1 = 0; k1 < field_->dim(); ++k1)
                for (std::size_t k2 = 0; k2 < field_->dim(); ++k2)
                    if (l(k1, k2) != 0) x(index(c1, k1), index(c2, k2)) += l(k1, k2);
        }
        return x;
    }

    // Real matrix of the coordinate-wise right multiplication z |-> z u.
    RatMat right_mult(const std::vector<Rat>& u) const {
        const std::size_t n = real_dim();
        RatMat x(n, n);
        RatMat r = field_->right_mult(u);
        for (std::size_t c = 0; c < coords_; ++c)
            for (std::size_t k1 = 0; k1 < field_->dim(); ++k1)
                for (std::size_t k2 = 0; k2 < field_->dim(); ++k2)
                    if (r(k1, k2) != 0) x(index(c, k1), index(c, k2)) += r(k1, k2);
        return x;
    }

    // Column vector with value u placed in coordinate c.
    RatMat coordinate_vector(std::size_t c, const std::vector<Rat>& u) const {
        RatMat v(real_dim(), 1);
        for (std::size_t k = 0; k < field_->dim(); ++k) v(index(c, k), 0) = u[k];
        return v;
    }

private:
    const CompositionAlgebra* field_;
    std::size_t coords_;
    std::size_t neg_coords_;
    bool split_;
    std::vector<std::size_t> plus_units_, minus_units_;
    std::vector<std::size_t> slot_;
};

namespace detail {

// Basis of the anti-hermitian F-matrices, conj(X)^T eps + eps X = 0, realified.
// traceless replaces the per-coordinate diagonal imaginary units by consecutive
// differences (the "special" subalgebra).
inline std::vector<RatMat> anti_hermitian_basis(const Realification& r, bool traceless) {
    const CompositionAlgebra& f = r.field();
    const std::size_t m = r.coords(), d = f.dim();
    std::vector<RatMat> basis;
    using Entry = std::tuple<std::size_t, std::size_t, std::vector<Rat>>;
    for (std::size_t c1 = 0; c1 < m; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < m; ++c2) {
            Rat e12 = r.coordinate_sign(c1) * r.coordinate_sign(c2);
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Rat> u = f.unit(k);
                std::vector<Rat> v = f.conjugate(u);
                for (Rat& x : v) x *= -e12;
                basis.push_back(r.left_matrix({Entry{c1, c2, u}, Entry{c2, c1, v}}));
            }
        }
    for (std::size_t k = 1; k < d; ++k) {
        if (traceless) {
            for (std::size_t c = 0; c + 1 < m; ++c) {
                std::vector<Rat> u = f.unit(k);
                std::vector<Rat> v = u;
                for (Rat& x : v) x = -x;
                basis.push_back(r.left_matrix({Entry{c, c, u}, Entry{c + 1, c + 1, v}}));
            }
        } else {
            for (std::size_t c = 0; c < m; ++c)
                basis.push_back(r.left_matrix({Entry{c, c, f.unit(k)}}));
        }
    }
    return basis;
}

inline std::vector<RatMat> imaginary_right_mults(const Realification& r) {
    std::vector<RatMat> out;
    for (std::size_t k = 1; k < r.field().dim(); ++k) out.push_back(r.right_mult(r.field().unit(k)));
    return out;
}

}  // namespace detail

// u / su over C (neg-signed hermitian form), sp over H. pos/neg count the
// positive/negative F-coordinates; negative coordinates come first.
inline CatalogRealization unitary_realization(AlgebraKind kind, std::size_t pos, std::size_t neg,
                                              bool traceless, const std::string& name) {
    if (kind != AlgebraKind::Complex && kind != AlgebraKind::Quaternion)
        throw std::invalid_argument("unitary_realization: scalar field must be C or H");
    Realification r(kind, pos + neg, neg);
    std::vector<RatMat> basis = detail::anti_hermitian_basis(r, traceless);
    if (basis.empty()) throw std::invalid_argument("unitary_realization: trivial algebra " + name);
    CatalogRealization out{MatrixLieAlgebra(name, r.real_dim(), std::move(basis)),
                           r.ambient_form(), r.form_neg(),
                           r.coordinate_vector(0, r.field().unit(0)),
                           detail::imaginary_right_mults(r), {}};
    detail::check_realization(out);
    return out;
}

// u^pi / su^pi over A, sp^pi over B (unsigned hermitian form, split scalars).
inline CatalogRealization para_unitary_realization(AlgebraKind kind, std::size_t m,
                                                   bool traceless, const std::string& name) {
    if (kind != AlgebraKind::Paracomplex && kind != AlgebraKind::Paraquaternion)
        throw std::invalid_argument("para_unitary_realization: scalar field must be A or B");
    Realification r(kind, m, 0);
    std::vector<RatMat> basis = detail::anti_hermitian_basis(r, traceless);
    if (basis.empty()) throw std::invalid_argument("para_unitary_realization: trivial algebra " + name);
    CatalogRealization out{MatrixLieAlgebra(name, r.real_dim(), std::move(basis)),
                           r.ambient_form(), r.form_neg(),
                           r.coordinate_vector(0, r.field().unit(0)),
                           detail::imaginary_right_mults(r), {}};
    detail::check_realization(out);
    return out;
}

// ---------------------------------------------------------------------------
// Derivation algebras of the octonions / split octonions (the two real forms
// of the 14-dimensional exceptional algebra), acting on the 7 imaginary axes.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<RatMat> derivation_basis(const CompositionAlgebra& a) {
    const std::size_t d = a.dim();
    // Unknowns D(a_row, a_col) flattened row-major; equations state
    // D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0 componentwise.
    RatMat eqs(d * d * d, d * d);
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i) {
        RatMat li = a.left_mult(a.unit(i));
        for (std::size_t j = 0; j < d; ++j) {
            RatMat rj = a.right_mult(a.unit(j));
            std::size_t p = a.unit_product_index(i, j);
            Rat s = a.unit_product_sign(i, j);
            for (std::size_t c = 0; c < d; ++c, ++row) {
                eqs(row, c * d + p) += s;
                for (std::size_t b = 0; b < d; ++b) {
                    if (rj(c, b) != 0) eqs(row, b * d + i) -= rj(c, b);
                    if (li(c, b) != 0) eqs(row, b * d + j) -= li(c, b);
                }
            }
        }
    }
    std::vector<std::vector<Rat>> null = nullspace(eqs);
    if (null.size() != 14)
        throw std::logic_error("derivation_basis: expected a 14-dimensional derivation algebra");
    std::vector<RatMat> out;
    out.reserve(null.size());
    for (const auto& v : null) {
        RatMat full = unflatten(v, d, d);
        for (std::size_t k = 0; k < d; ++k)
            if (full(k, 0) != 0 || full(0, k) != 0)
                throw std::logic_error("derivation_basis: derivation does not annihilate the real axis");
        out.push_back(full.block(1, 1, d - 1, d - 1));
    }
    return out;
}

inline RatMat permuted_matrix(const RatMat& x, const std::vector<std::size_t>& perm) {
    RatMat y(perm.size(), perm.size());
    for (std::size_t s = 0; s < perm.size(); ++s)
        for (std::size_t t = 0; t < perm.size(); ++t) y(s, t) = x(perm[s], perm[t]);
    return y;
}

}  // namespace detail

// Compact exceptional realization on the 7 imaginary octonion axes; the
// ambient form is -I_7 (all axes timelike) and the quadric is the 6-sphere.
inline CatalogRealization g2_realization() {
    std::vector<RatMat> basis = detail::derivation_basis(CompositionAlgebra::get(AlgebraKind::Octonion));
    const std::size_t n = 7;
    CatalogRealization out{MatrixLieAlgebra("g2", n, std::move(basis)),
                           standard_form(0, n), n, RatMat::identity(n).block(0, 0, n, 1),
                           {}, {}};
    detail::check_realization(out);
    return out;
}

// Split exceptional realization on the 7 imaginary split-octonion axes.
// Two coordinate conventions are provided:
//   permuted = false: axes e1..e7 in natural order, ambient diag(-1 x 3, +1 x 4)
//                     (base point e1, a square -1 unit);
//   permuted = true:  axes reordered (e4..e7 | e1..e3), ambient
//                     diag(-1 x 4, +1 x 3) (base point e4, a square +1 unit).
inline CatalogRealization g2_star_realization(bool permuted) {
    std::vector<RatMat> basis =
        detail::derivation_basis(CompositionAlgebra::get(AlgebraKind::SplitOctonion));
    const std::size_t n = 7;
    if (!permuted) {
        CatalogRealization out{MatrixLieAlgebra("g2_star", n, std::move(basis)),
                               standard_form(4, 3), 3, RatMat::identity(n).block(0, 0, n, 1),
                               {}, {}};
        detail::check_realization(out);
        return out;
    }
    const std::vector<std::size_t> perm{3, 4, 5, 6, 0, 1, 2};
    for (RatMat& x : basis) x = detail::permuted_matrix(x, perm);
    CatalogRealization out{MatrixLieAlgebra("g2_star_perm", n, std::move(basis)),
                           standard_form(3, 4), 4, RatMat::identity(n).block(0, 0, n, 1),
                           {}, {}};
    detail::check_realization(out);
    return out;
}

// ---------------------------------------------------------------------------
// Spin realizations on the (standardized) spinor module.
// ---------------------------------------------------------------------------

inline CatalogRealization spin_realization(const std::string& name) {
    std::size_t gpos, gneg, required_neg;
    if (name == "spin(9)") {
        gpos = 9; gneg = 0; required_neg = 16;
    } else if (name == "spin(7)") {
        gpos = 0; gneg = 7; required_neg = 8;
    } else if (name == "spin(8,1)") {
        gpos = 1; gneg = 8; required_neg = 8;
    } else if (name == "spin(5,4)") {
        gpos = 5; gneg = 4; required_neg = 8;
    } else if (name == "spin(4,3)") {
        gpos = 4; gneg = 3; required_neg = 4;
    } else {
        throw std::invalid_argument("spin_realization: unknown spin catalog name " + name);
    }
    SpinRealization sr = spin_standard(gpos, gneg, required_neg, name);
    const std::size_t n = sr.algebra.matrix_size();
    CatalogRealization out{std::move(sr.algebra), std::move(sr.form), sr.form_neg,
                           RatMat::identity(n).block(0, 0, n, 1), {}, std::move(sr.gammas)};
    detail::check_realization(out);
    return out;
}

// ---------------------------------------------------------------------------
// Family grammar.
//
//   main families:  so(p,q) | u(p,q) | su(p,q) | sp(p,q) | u_pi(m) | su_pi(m)
//                   | sp_pi(m) | spin(9) | spin(7) | spin(8,1) | spin(5,4)
//                   | spin(4,3) | g2 | g2_star | g2_star_perm
//   right factors:  +sp(1) (all imaginary H units) | +sp_pi(1) (all imaginary
//                   B units) | +u(1) (the square -1 unit) | +u_pi0(1) (the
//                   square +1 para unit)
//
// A single-argument u/su/sp takes all coordinates positive. Right factors
// commute with the main family and extend its basis.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::size_t> parse_args(const std::string& token, std::size_t lparen) {
    if (token.back() != ')') throw std::invalid_argument("parse_family: malformed token " + token);
    std::vector<std::size_t> args;
    std::string inner = token.substr(lparen + 1, token.size() - lparen - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
        std::size_t comma = inner.find(',', start);
        std::string piece = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_family: malformed arguments in " + token);
        args.push_back(static_cast<std::size_t>(std::stoul(piece)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return args;
}

inline CatalogRealization parse_main_family(const std::string& token) {
    if (token == "g2") return g2_realization();
    if (token == "g2_star") return g2_star_realization(false);
    if (token == "g2_star_perm") return g2_star_realization(true);
    std::size_t lparen = token.find('(');
    if (lparen == std::string::npos)
        throw std::invalid_argument("parse_family: unknown family " + token);
    std::string kind = token.substr(0, lparen);
    if (kind == "spin") return spin_realization(token);
    std::vector<std::size_t> args = parse_args(token, lparen);
    auto two = [&]() -> std::pair<std::size_t, std::size_t> {
        if (args.size() == 1) return {args[0], 0};
        if (args.size() == 2) return {args[0], args[1]};
        throw std::invalid_argument("parse_family: wrong argument count in " + token);
    };
    if (kind == "so") {
        if (args.size() != 2) throw std::invalid_argument("parse_family: so takes (pos,neg)");
        return so_realization(args[0], args[1]);
    }
    if (kind == "u" || kind == "su") {
        auto [p, q] = two();
        return unitary_realization(AlgebraKind::Complex, p, q, kind == "su", token);
    }
    if (kind == "sp") {
        auto [p, q] = two();
        return unitary_realization(AlgebraKind::Quaternion, p, q, false, token);
    }
    if (kind == "u_pi" || kind == "su_pi") {
        if (args.size() != 1) throw std::invalid_argument("parse_family: " + kind + " takes (m)");
        return para_unitary_realization(AlgebraKind::Paracomplex, args[0], kind == "su_pi", token);
    }
    if (kind == "sp_pi") {
        if (args.size() != 1) throw std::invalid_argument("parse_family: sp_pi takes (m)");
        return para_unitary_realization(AlgebraKind::Paraquaternion, args[0], false, token);
    }
    throw std::invalid_argument("parse_family: unknown family " + token);
}

}  // namespace detail

inline CatalogRealization parse_family(const std::string& family) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= family.size()) {
        std::size_t plus = family.find('+', start);
        tokens.push_back(family.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    if (tokens.empty() || tokens[0].empty())
        throw std::invalid_argument("parse_family: empty family string");
    CatalogRealization main = detail::parse_main_family(tokens[0]);
    if (tokens.size() == 1) return main;

    std::vector<RatMat> basis = main.algebra.basis();
    const std::vector<RatMat>& rm = main.fibre_right_mults;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& factor = tokens[t];
        std::vector<std::size_t> units;
        if (factor == "sp(1)" || factor == "sp_pi(1)") {
            units = {0, 1, 2};
            if (rm.size() != 3)
                throw std::invalid_argument("parse_family: factor " + factor +
                                            " needs a quaternionic-type main family");
        } else if (factor == "u(1)") {
            units = {0};
        } else if (factor == "u_pi0(1)") {
            units = {1};
        } else {
            throw std::invalid_argument("parse_family: unknown right factor " + factor);
        }
        for (std::size_t u : units) {
            if (u >= rm.size())
                throw std::invalid_argument("parse_family: factor " + factor +
                                            " not available over this scalar field");
            basis.push_back(rm[u]);
        }
    }
    CatalogRealization out{MatrixLieAlgebra(family, main.algebra.matrix_size(), std::move(basis)),
                           std::move(main.form), main.form_neg, std::move(main.x0),
                           std::move(main.fibre_right_mults), std::move(main.gammas)};
    detail::check_realization(out);
    return out;
}

}  // namespace pseudohopf
