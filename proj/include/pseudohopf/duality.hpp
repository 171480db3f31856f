#pragma once

// Cartan involutions, eigenspace splits, compact dual algebras and dual
// metrics of reductive homogeneous spaces, and verification of the
// noncompact/compact correspondence table.
//
// The involution used throughout is theta(X) = -X^T in the catalog's standard
// diagonal-form basis.  Its +1 eigenspace g+ is the maximal compact
// subalgebra, the -1 eigenspace g- carries the noncompact directions, and the
// compact dual algebra is obtained by negating every bracket of two g-
// elements (the structure constants of g+ + i*g-).  Invariant metrics dualise
// by flipping their sign on the metric-negative part of m, which lies in g+;
// the result is positive definite and Einstein exactly when the source is.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "einstein.hpp"

namespace pseudohopf {

// --- abstract algebras given by structure constants --------------------------

// A Lie algebra presented only by its structure constants: c[i*dim+j] holds
// the coordinates of [e_i, e_j].  No matrix realization is attached.
struct StructureAlgebra {
    std::size_t dim = 0;
    std::vector<std::vector<Rat>> c;

    std::vector<Rat> bracket_coords(const std::vector<Rat>& a,
                                    const std::vector<Rat>& b) const {
        std::vector<Rat> r(dim, Rat(0));
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (b[j] == 0) continue;
                const Rat f = a[i] * b[j];
                const std::vector<Rat>& w = c[i * dim + j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (w[k] != 0) r[k] += f * w[k];
            }
        }
        return r;
    }
};

// Matrix of ad(x) for x given in coordinates: column j is [x, e_j].
inline RatMat ad_of(const StructureAlgebra& sa, const std::vector<Rat>& x) {
    RatMat m(sa.dim, sa.dim);
    for (std::size_t i = 0; i < sa.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < sa.dim; ++j) {
            const std::vector<Rat>& w = sa.c[i * sa.dim + j];
            for (std::size_t k = 0; k < sa.dim; ++k)
                if (w[k] != 0) m(k, j) += x[i] * w[k];
        }
    }
    return m;
}

inline RatMat killing_matrix(const StructureAlgebra& sa) {
    const std::size_t d = sa.dim;
    RatMat k(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Rat t(0);
            // tr(ad_i ad_j) = sum_{a,b} c_{ib}^a c_{ja}^b
            for (std::size_t b = 0; b < d; ++b) {
                const std::vector<Rat>& wi = sa.c[i * d + b];
                for (std::size_t a = 0; a < d; ++a) {
                    if (wi[a] == 0) continue;
                    const Rat& v = sa.c[j * d + a][b];
                    if (v != 0) t += wi[a] * v;
                }
            }
            k(i, j) = t;
            k(j, i) = t;
        }
    return k;
}

inline bool jacobi_holds(const StructureAlgebra& sa) {
    const std::size_t d = sa.dim;
    // [e_i, w] in coordinates, iterating only the nonzero entries of w.
    auto ad_apply = [&](std::size_t i, const std::vector<Rat>& w,
                        std::vector<Rat>& acc, const Rat& sign) {
        for (std::size_t l = 0; l < d; ++l) {
            if (w[l] == 0) continue;
            const std::vector<Rat>& u = sa.c[i * d + l];
            const Rat f = sign * w[l];
            for (std::size_t a = 0; a < d; ++a)
                if (u[a] != 0) acc[a] += f * u[a];
        }
    };
    std::vector<Rat> acc(d);
    const Rat one(1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                std::fill(acc.begin(), acc.end(), Rat(0));
                ad_apply(i, sa.c[j * d + k], acc, one);
                ad_apply(j, sa.c[k * d + i], acc, one);
                ad_apply(k, sa.c[i * d + j], acc, one);
                for (std::size_t a = 0; a < d; ++a)
                    if (acc[a] != 0) return false;
            }
    return true;
}

// Centre {x : [x, e_j] = 0 for all j}, as coordinate vectors.
inline std::vector<std::vector<Rat>> center_coords(const StructureAlgebra& sa) {
    const std::size_t d = sa.dim;
    RatMat m(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::vector<Rat>& w = sa.c[i * d + j];
            for (std::size_t k = 0; k < d; ++k)
                if (w[k] != 0) m(j * d + k, i) = w[k];
        }
    return nullspace(m);
}

// Rank of a compact reductive algebra: the centraliser of a regular element
// is a Cartan subalgebra, and an element is regular exactly when that
// centraliser is abelian.  Tries a fixed list of deterministic seed vectors
// and reports the dimension of the first abelian centraliser; nullopt if no
// seed is regular (the caller should treat that as an honest failure).
inline std::optional<std::size_t> compact_rank(const StructureAlgebra& sa) {
    const std::size_t d = sa.dim;
    if (d == 0) return std::size_t{0};
    for (unsigned power = 1; power <= 4; ++power) {
        std::vector<Rat> x(d);
        for (std::size_t i = 0; i < d; ++i) {
            Rat v(static_cast<long>(i + 1));
            Rat acc(1);
            for (unsigned e = 0; e < power; ++e) acc *= v;
            x[i] = acc;
        }
        std::vector<std::vector<Rat>> cent = nullspace(ad_of(sa, x));
        bool abelian = true;
        for (std::size_t a = 0; a < cent.size() && abelian; ++a)
            for (std::size_t b = a + 1; b < cent.size() && abelian; ++b) {
                std::vector<Rat> br = sa.bracket_coords(cent[a], cent[b]);
                for (const Rat& v : br)
                    if (v != 0) {
                        abelian = false;
                        break;
                    }
            }
        if (abelian) return cent.size();
    }
    return std::nullopt;
}

// --- Cartan involutions ------------------------------------------------------

struct DualityData {
    MatrixLieAlgebra source;
    RatMat theta;     // the involution, as a matrix in the source basis
    Subspace plus;    // +1 eigenspace (maximal compact part)
    Subspace minus;   // -1 eigenspace
    StructureAlgebra dual;  // structure constants in the basis [plus | minus]
};

namespace detail {

inline RatMat neg_transpose(const RatMat& x) {
    RatMat t = x.transpose();
    t *= Rat(-1);
    return t;
}

// +1 and -1 eigenspaces of an involution given in basis coordinates.
inline std::pair<Subspace, Subspace> involution_split(const MatrixLieAlgebra& g,
                                                      const RatMat& theta) {
    const std::size_t d = g.dim();
    RatMat fix = theta;
    RatMat id = RatMat::identity(d);
    RatMat mid = id;
    mid *= Rat(-1);
    fix += mid;  // theta - I
    RatMat anti = theta;
    anti += id;  // theta + I
    Subspace plus = Subspace::from_coords(g, nullspace(fix));
    Subspace minus = Subspace::from_coords(g, nullspace(anti));
    if (plus.dim() + minus.dim() != d)
        throw std::logic_error("involution_split: eigenspaces do not fill '" +
                               g.name() + "'");
    return {std::move(plus), std::move(minus)};
}

// Restriction of a symmetric form (given in parent coordinates) to a subspace.
inline RatMat restrict_form(const RatMat& form, const Subspace& sub,
                            std::size_t parent_dim) {
    RatMat w = sub.coord_matrix(parent_dim);
    return w * form * w.transpose();
}

}  // namespace detail

// The involution theta(X) = -X^T of a matrix algebra presented in its
// standard diagonal-form basis, returned as a matrix in that basis.
// Verifies that theta preserves the span, squares to the identity, and is a
// Lie algebra automorphism on every basis pair; for semisimple input also
// checks that the Killing form is negative definite on the +1 eigenspace and
// positive definite on the -1 eigenspace.
inline RatMat cartan_involution(const MatrixLieAlgebra& g) {
    const std::size_t d = g.dim();
    RatMat theta(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        auto c = g.try_coords(detail::neg_transpose(g.basis_at(i)));
        if (!c)
            throw std::domain_error(
                "cartan_involution: negative transpose leaves the span of '" +
                g.name() +
                "'; rebuild the realization at an involution-stable base point "
                "(conjugate the base point by a fixed catalog element)");
        for (std::size_t k = 0; k < d; ++k) theta(k, i) = (*c)[k];
    }
    RatMat sq = theta * theta;
    if (!(sq == RatMat::identity(d)))
        throw std::logic_error("cartan_involution: map does not square to the identity on '" +
                               g.name() + "'");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            RatMat lhs = detail::neg_transpose(bracket(g.basis_at(i), g.basis_at(j)));
            RatMat rhs = bracket(detail::neg_transpose(g.basis_at(i)),
                                 detail::neg_transpose(g.basis_at(j)));
            lhs *= Rat(-1);
            lhs += rhs;
            if (!lhs.is_zero())
                throw std::logic_error(
                    "cartan_involution: not an automorphism on basis pair of '" +
                    g.name() + "'");
        }
    if (g.is_semisimple()) {
        auto [plus, minus] = detail::involution_split(g, theta);
        const RatMat& kil = g.killing_form();
        if (plus.dim() > 0) {
            Inertia ip = inertia(detail::restrict_form(kil, plus, d));
            if (ip.positive != 0 || ip.null != 0)
                throw std::logic_error(
                    "cartan_involution: Killing form is not negative definite "
                    "on the fixed space of '" + g.name() + "'");
        }
        if (minus.dim() > 0) {
            Inertia im = inertia(detail::restrict_form(kil, minus, d));
            if (im.negative != 0 || im.null != 0)
                throw std::logic_error(
                    "cartan_involution: Killing form is not positive definite "
                    "on the anti-fixed space of '" + g.name() + "'");
        }
    }
    return theta;
}

// Compact dual algebra: structure constants in the adapted basis
// [plus | minus], with brackets of two minus-elements negated.  Checks the
// eigenspace bracket rules, the Jacobi identity of the result, and the
// definiteness of the dual Killing form (negative definite for semisimple
// input; negative semidefinite with radical equal to the dual centre for
// reductive non-semisimple input).
inline DualityData compact_dual(const MatrixLieAlgebra& g, const RatMat& theta) {
    const std::size_t d = g.dim();
    auto [plus, minus] = detail::involution_split(g, theta);
    const std::size_t dp = plus.dim();

    std::vector<const RatMat*> adapted;
    adapted.reserve(d);
    for (const RatMat& x : plus.basis) adapted.push_back(&x);
    for (const RatMat& x : minus.basis) adapted.push_back(&x);

    RatMat tmat(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        const std::vector<Rat>& c =
            a < dp ? plus.coords[a] : minus.coords[a - dp];
        for (std::size_t i = 0; i < d; ++i) tmat(i, a) = c[i];
    }
    RatMat tinv = inverse(tmat);

    StructureAlgebra dual;
    dual.dim = d;
    dual.c.assign(d * d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            std::vector<Rat> c = g.coords(bracket(*adapted[a], *adapted[b]));
            std::vector<Rat> w(d, Rat(0));
            for (std::size_t i = 0; i < d; ++i) {
                Rat acc(0);
                for (std::size_t j = 0; j < d; ++j)
                    if (c[j] != 0) acc += tinv(i, j) * c[j];
                w[i] = acc;
            }
            const bool a_minus = a >= dp, b_minus = b >= dp;
            // [+,+] and [-,-] land in the fixed space, [+,-] in the anti space.
            const bool target_plus = (a_minus == b_minus);
            for (std::size_t i = 0; i < d; ++i) {
                const bool in_plus = i < dp;
                if (w[i] != 0 && in_plus != target_plus)
                    throw std::logic_error(
                        "compact_dual: eigenspace bracket rule violated in '" +
                        g.name() + "'");
            }
            if (a_minus && b_minus)
                for (Rat& v : w) v = -v;
            for (std::size_t i = 0; i < d; ++i) {
                dual.c[a * d + b][i] = w[i];
                dual.c[b * d + a][i] = -w[i];
            }
        }

    if (!jacobi_holds(dual))
        throw std::logic_error("compact_dual: dual structure constants violate "
                               "the Jacobi identity for '" + g.name() + "'");

    RatMat kd = killing_matrix(dual);
    Inertia in = inertia(kd);
    if (g.is_semisimple()) {
        if (in.positive != 0 || in.null != 0)
            throw std::domain_error(
                "compact_dual: dual Killing form of semisimple '" + g.name() +
                "' is not negative definite; the involution is not a Cartan "
                "involution");
    } else {
        if (in.positive != 0)
            throw std::domain_error(
                "compact_dual: dual Killing form of '" + g.name() +
                "' has a positive direction");
        std::vector<std::vector<Rat>> radical = nullspace(kd);
        std::vector<std::vector<Rat>> centre = center_coords(dual);
        bool match = radical.size() == centre.size() && in.null == radical.size();
        if (match && !radical.empty()) {
            RowSpace rad(rows_from_vectors(radical, d));
            for (const auto& z : centre)
                if (!rad.contains(z)) {
                    match = false;
                    break;
                }
        }
        if (!match)
            throw std::domain_error(
                "compact_dual: Killing radical of the dual of '" + g.name() +
                "' differs from the dual centre");
    }

    return DualityData{g, theta, std::move(plus), std::move(minus), std::move(dual)};
}

// --- dual reductive spaces ---------------------------------------------------

// A reductive homogeneous space carried across the compact duality: the
// tensors are expressed in the adapted basis [m fixed | m anti | h fixed |
// h anti], brackets of two anti-fixed elements are negated, and the metric
// sign is flipped on the fixed (metric-negative) part of m.
struct DualSpace {
    ReductiveTensors tensors;
    std::size_t m_fixed = 0;
    std::size_t m_anti = 0;
    std::size_t h_fixed = 0;
    std::size_t h_anti = 0;
};

inline DualSpace dual_space(const ReductiveSpace& space, const RatMat& theta) {
    const MatrixLieAlgebra& g = space.algebra();
    const std::size_t d = g.dim();
    const std::size_t p = space.dim_m(), q = space.dim_h();

    // The involution acting on a subspace that it preserves, as a matrix in
    // that subspace's own index space.
    auto action_on = [&](const std::vector<RatMat>& mats, const char* what) {
        std::vector<std::vector<Rat>> rows;
        rows.reserve(mats.size());
        for (const RatMat& x : mats) rows.push_back(g.coords(x));
        RowSpace span(rows_from_vectors(rows, d));
        RatMat act(mats.size(), mats.size());
        for (std::size_t i = 0; i < mats.size(); ++i) {
            std::vector<Rat> c = g.coords(mats[i]);
            std::vector<Rat> tc(d, Rat(0));
            for (std::size_t a = 0; a < d; ++a) {
                Rat acc(0);
                for (std::size_t b = 0; b < d; ++b)
                    if (c[b] != 0) acc += theta(a, b) * c[b];
                tc[a] = acc;
            }
            auto w = span.coords(tc);
            if (!w)
                throw std::domain_error(
                    std::string("dual_space: ") + what + " of '" + space.name() +
                    "' is not involution-invariant; recompute the isotropy at "
                    "an involution-stable base point");
            for (std::size_t k = 0; k < mats.size(); ++k) act(k, i) = (*w)[k];
        }
        return act;
    };

    RatMat mact = action_on(space.m_basis(), "the complement m");
    RatMat hact = action_on(space.h_basis(), "the isotropy");

    auto split_indices = [](const RatMat& act) {
        const std::size_t n = act.rows();
        RatMat fix = act;
        RatMat id = RatMat::identity(n);
        RatMat mid = id;
        mid *= Rat(-1);
        fix += mid;
        RatMat anti = act;
        anti += id;
        auto f = nullspace(fix);
        auto a = nullspace(anti);
        if (f.size() + a.size() != n)
            throw std::logic_error("dual_space: eigenspaces do not fill the subspace");
        return std::make_pair(std::move(f), std::move(a));
    };

    auto [mf, ma] = split_indices(mact);
    auto [hf, ha] = split_indices(hact);
    const std::size_t pf = mf.size(), pa = ma.size();
    const std::size_t qf = hf.size(), qa = ha.size();

    // Adapted metric: coordinates of the new m basis in the old one.
    RatMat cmat(p, p);
    for (std::size_t a = 0; a < p; ++a) {
        const std::vector<Rat>& u = a < pf ? mf[a] : ma[a - pf];
        for (std::size_t i = 0; i < p; ++i) cmat(i, a) = u[i];
    }
    RatMat gad = cmat.transpose() * space.metric() * cmat;
    for (std::size_t i = 0; i < pf; ++i)
        for (std::size_t j = pf; j < p; ++j)
            if (gad(i, j) != 0 || gad(j, i) != 0)
                throw std::logic_error(
                    "dual_space: the two metric parts of '" + space.name() +
                    "' are not orthogonal");
    if (pf > 0) {
        Inertia fi = inertia(gad.block(0, 0, pf, pf));
        if (fi.positive != 0 || fi.null != 0)
            throw std::domain_error(
                "dual_space: metric of '" + space.name() +
                "' is not negative definite on the fixed part of m");
    }
    if (pa > 0) {
        Inertia ai = inertia(gad.block(pf, pf, pa, pa));
        if (ai.negative != 0 || ai.null != 0)
            throw std::domain_error(
                "dual_space: metric of '" + space.name() +
                "' is not positive definite on the anti-fixed part of m");
    }
    RatMat gdual = gad;
    for (std::size_t i = 0; i < pf; ++i)
        for (std::size_t j = 0; j < pf; ++j) gdual(i, j) = -gdual(i, j);
    {
        Inertia gi = inertia(gdual);
        if (gi.negative != 0 || gi.null != 0)
            throw std::logic_error("dual_space: dual metric of '" + space.name() +
                                   "' is not positive definite");
    }

    // Adapted full basis [m fixed | m anti | h fixed | h anti] as matrices.
    auto combine = [](const std::vector<RatMat>& basis,
                      const std::vector<Rat>& u) {
        RatMat acc(basis.front().rows(), basis.front().cols());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (u[i] != 0) acc += basis[i] * u[i];
        return acc;
    };
    std::vector<RatMat> full;
    std::vector<bool> is_anti;
    full.reserve(d);
    is_anti.reserve(d);
    for (std::size_t a = 0; a < pf; ++a) {
        full.push_back(combine(space.m_basis(), mf[a]));
        is_anti.push_back(false);
    }
    for (std::size_t a = 0; a < pa; ++a) {
        full.push_back(combine(space.m_basis(), ma[a]));
        is_anti.push_back(true);
    }
    for (std::size_t z = 0; z < qf; ++z) {
        full.push_back(combine(space.h_basis(), hf[z]));
        is_anti.push_back(false);
    }
    for (std::size_t z = 0; z < qa; ++z) {
        full.push_back(combine(space.h_basis(), ha[z]));
        is_anti.push_back(true);
    }

    RatMat tmat(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        std::vector<Rat> c = g.coords(full[a]);
        for (std::size_t i = 0; i < d; ++i) tmat(i, a) = c[i];
    }
    RatMat tinv = inverse(tmat);
    auto split = [&](const RatMat& x, bool negate) {
        std::vector<Rat> c = g.coords(x);
        std::vector<Rat> w(d, Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < d; ++j)
                if (c[j] != 0) acc += tinv(i, j) * c[j];
            w[i] = negate ? -acc : acc;
        }
        return w;
    };

    ReductiveTensors rt;
    rt.dim_m = p;
    rt.dim_h = q;
    rt.mm_m.assign(p * p, std::vector<Rat>(p, Rat(0)));
    rt.mm_h.assign(p * p, std::vector<Rat>(q, Rat(0)));
    rt.hm_m.assign(q * p, std::vector<Rat>(p, Rat(0)));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            std::vector<Rat> w =
                split(bracket(full[i], full[j]), is_anti[i] && is_anti[j]);
            for (std::size_t k = 0; k < p; ++k) {
                rt.mm_m[i * p + j][k] = w[k];
                rt.mm_m[j * p + i][k] = -w[k];
            }
            for (std::size_t z = 0; z < q; ++z) {
                rt.mm_h[i * p + j][z] = w[p + z];
                rt.mm_h[j * p + i][z] = -w[p + z];
            }
        }
    for (std::size_t z = 0; z < q; ++z)
        for (std::size_t i = 0; i < p; ++i) {
            std::vector<Rat> w = split(bracket(full[p + z], full[i]),
                                       is_anti[p + z] && is_anti[i]);
            for (std::size_t y = 0; y < q; ++y)
                if (w[p + y] != 0)
                    throw std::logic_error(
                        "dual_space: dual [h, m] is not contained in m for '" +
                        space.name() + "'");
            for (std::size_t k = 0; k < p; ++k) rt.hm_m[z * p + i][k] = w[k];
        }
    rt.metric = gdual;

    // Invariance of the dual metric under the dual isotropy action.
    for (std::size_t z = 0; z < q; ++z) {
        RatMat az(p, p);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t k = 0; k < p; ++k) az(k, i) = rt.hm_m[z * p + i][k];
        RatMat lhs = az.transpose() * gdual;
        RatMat rhs = gdual * az;
        lhs += rhs;
        if (!lhs.is_zero())
            throw std::logic_error(
                "dual_space: dual metric of '" + space.name() +
                "' is not invariant under the dual isotropy");
    }

    return DualSpace{std::move(rt), pf, pa, qf, qa};
}

// --- verification of the duality table ---------------------------------------

struct Table3Report {
    std::size_t row = 0;
    std::size_t a = 0;  // first parameter (n or m), 0 for fixed rows
    std::size_t b = 0;  // second parameter (r or s), 0 when unused
    std::string family;     // source algebra
    std::string space;      // source coset space tag
    std::string dual_name;  // claimed compact dual
    std::size_t dim_g = 0, dim_h = 0, dim_m = 0;
    std::size_t claimed_dim_g = 0, claimed_dim_h = 0, claimed_dim_m = 0;
    bool killing_compact = false;  // dual Killing (semi)definiteness checks
    bool dual_einstein = false;    // dual metric Einstein with flipped constant
    Rat einstein_constant;         // source Einstein constant
    std::size_t rank = 0;
    std::size_t claimed_rank = 0;
    bool rank_checked = false;
    bool pass = false;
    std::vector<std::string> failures;
};

namespace detail {

struct Table3RowSpec {
    std::string family;
    std::string space;
    std::string dual_name;
    std::string dual_isotropy;
    std::size_t dim_g = 0, dim_h = 0, dim_m = 0, rank = 0;
    // 0: canonical pseudo-hyperbolic space, 1: fibration total space,
    // 2: fibration base space.
    int kind = 0;
    std::string fib;
    std::size_t fm = 0, fs = 0;
};

inline std::string num(std::size_t v) { return std::to_string(v); }

inline Table3RowSpec table3_row_spec(std::size_t row, std::size_t a, std::size_t b) {
    auto need_fixed = [&]() {
        if (a != 0 || b != 0)
            throw std::invalid_argument("verify_table3: row " + num(row) +
                                        " takes no parameters");
    };
    auto need_m = [&]() {
        if (a < 1 || b != 0)
            throw std::invalid_argument("verify_table3: row " + num(row) +
                                        " needs one parameter m >= 1");
        return a;
    };
    auto need_ms = [&]() {
        if (a < 1 || b + 1 > a)
            throw std::invalid_argument(
                "verify_table3: row " + num(row) +
                " needs parameters m >= 1 and s <= m-1 (s = m gives a compact "
                "source, which the table excludes)");
        return std::make_pair(a, b);
    };
    Table3RowSpec rs;
    auto su_dims = [&](std::size_t m) {
        rs.dim_g = (m + 1) * (m + 1) - 1;
        rs.dim_h = m * m - 1;
        rs.rank = m;
    };
    auto u_dims = [&](std::size_t m) {
        rs.dim_g = (m + 1) * (m + 1);
        rs.dim_h = m * m;
        rs.rank = m + 1;
    };
    auto sp_dims = [&](std::size_t m, std::size_t extra) {
        rs.dim_g = (m + 1) * (2 * m + 3) + extra;
        rs.dim_h = m * (2 * m + 1) + extra;
        rs.rank = m + 1 + (extra > 0 ? 1 : 0);
    };
    switch (row) {
        case 1: {
            // Parameters (n, r): the real hyperbolic family.
            if (a < 2 || b + 1 > a)
                throw std::invalid_argument(
                    "verify_table3: row 1 needs n >= 2 and r <= n-1 (r = n "
                    "gives a compact source, which the table excludes)");
            const std::size_t n = a, r = b;
            rs.family = "so(" + num(n - r) + "," + num(r + 1) + ")";
            rs.space = "H:" + num(n) + ":" + num(r);
            rs.dual_name = "so(" + num(n + 1) + ")";
            rs.dual_isotropy = "so(" + num(n) + ")";
            rs.dim_g = (n + 1) * n / 2;
            rs.dim_h = n * (n - 1) / 2;
            rs.dim_m = n;
            rs.rank = (n + 1) / 2;
            return rs;
        }
        case 2:
        case 3: {
            need_fixed();
            rs.family = row == 2 ? "g2_star" : "g2_star_perm";
            rs.space = row == 2 ? "H:6:2" : "H:6:3";
            rs.dual_name = "g2";
            rs.dual_isotropy = "su(3)";
            rs.dim_g = 14;
            rs.dim_h = 8;
            rs.dim_m = 6;
            rs.rank = 2;
            return rs;
        }
        case 4: {
            need_fixed();
            rs.family = "spin(4,3)";
            rs.space = "H:7:3";
            rs.dual_name = "spin(7)";
            rs.dual_isotropy = "g2";
            rs.dim_g = 21;
            rs.dim_h = 14;
            rs.dim_m = 7;
            rs.rank = 3;
            return rs;
        }
        case 5:
        case 6: {
            auto [m, s] = need_ms();
            rs.family = (row == 5 ? "su(" : "u(") + num(m - s) + "," + num(s + 1) + ")";
            rs.space = "H:" + num(2 * m + 1) + ":" + num(2 * s + 1);
            rs.dual_name = (row == 5 ? "su(" : "u(") + num(m + 1) + ")";
            rs.dual_isotropy = (row == 5 ? "su(" : "u(") + num(m) + ")";
            if (row == 5)
                su_dims(m);
            else
                u_dims(m);
            rs.dim_m = 2 * m + 1;
            return rs;
        }
        case 7:
        case 8: {
            const std::size_t m = need_m();
            rs.family = (row == 7 ? "su_pi(" : "u_pi(") + num(m + 1) + ")";
            rs.space = "H:" + num(2 * m + 1) + ":" + num(m);
            rs.dual_name = (row == 7 ? "su(" : "u(") + num(m + 1) + ")";
            rs.dual_isotropy = (row == 7 ? "su(" : "u(") + num(m) + ")";
            if (row == 7)
                su_dims(m);
            else
                u_dims(m);
            rs.dim_m = 2 * m + 1;
            return rs;
        }
        case 9:
        case 10: {
            need_fixed();
            rs.family = row == 9 ? "spin(8,1)" : "spin(5,4)";
            rs.space = "H:15:7";
            rs.dual_name = "spin(9)";
            rs.dual_isotropy = "spin(7)";
            rs.dim_g = 36;
            rs.dim_h = 21;
            rs.dim_m = 15;
            rs.rank = 4;
            return rs;
        }
        case 11:
        case 12:
        case 13: {
            auto [m, s] = need_ms();
            const std::size_t extra = row == 11 ? 0 : (row == 12 ? 1 : 3);
            rs.family = "sp(" + num(m - s) + "," + num(s + 1) + ")";
            rs.dual_name = "sp(" + num(m + 1) + ")";
            rs.dual_isotropy = "sp(" + num(m) + ")";
            if (row == 12) {
                rs.family += "+u(1)";
                rs.dual_name += "+u(1)";
                rs.dual_isotropy += "+u(1)";
            } else if (row == 13) {
                rs.family += "+sp(1)";
                rs.dual_name += "+sp(1)";
                rs.dual_isotropy += "+sp(1)";
            }
            rs.space = "H:" + num(4 * m + 3) + ":" + num(4 * s + 3);
            sp_dims(m, extra);
            rs.dim_m = 4 * m + 3;
            return rs;
        }
        case 14:
        case 15:
        case 16:
        case 17: {
            const std::size_t m = need_m();
            const std::size_t extra = row == 14 ? 0 : (row == 17 ? 3 : 1);
            rs.family = "sp_pi(" + num(m + 1) + ")";
            rs.dual_name = "sp(" + num(m + 1) + ")";
            rs.dual_isotropy = "sp(" + num(m) + ")";
            if (row == 15) {
                rs.family += "+u(1)";
                rs.dual_name += "+u(1)";
                rs.dual_isotropy += "+u(1)";
            } else if (row == 16) {
                rs.family += "+u_pi0(1)";
                rs.dual_name += "+u(1)";
                rs.dual_isotropy += "+u(1)";
            } else if (row == 17) {
                rs.family += "+sp_pi(1)";
                rs.dual_name += "+sp(1)";
                rs.dual_isotropy += "+sp(1)";
            }
            rs.space = "H:" + num(4 * m + 3) + ":" + num(2 * m + 1);
            sp_dims(m, extra);
            rs.dim_m = 4 * m + 3;
            return rs;
        }
        case 18: {
            auto [m, s] = need_ms();
            rs.family = "su(" + num(m - s) + "," + num(s + 1) + ")";
            rs.space = "CH:" + num(m) + ":" + num(s);
            rs.dual_name = "su(" + num(m + 1) + ")";
            rs.dual_isotropy = "s(u(" + num(m) + ")u(1))";
            su_dims(m);
            rs.dim_h = m * m;  // su(m) plus the central isotropy circle
            rs.dim_m = 2 * m;
            rs.kind = 2;
            rs.fib = "piC";
            rs.fm = m;
            rs.fs = s;
            return rs;
        }
        case 19: {
            auto [m, s] = need_ms();
            rs.family = "sp(" + num(m - s) + "," + num(s + 1) + ")";
            rs.space = "CH:" + num(2 * m + 1) + ":" + num(2 * s + 1);
            rs.dual_name = "sp(" + num(m + 1) + ")";
            rs.dual_isotropy = "sp(" + num(m) + ")+u(1)";
            sp_dims(m, 0);
            rs.dim_h = m * (2 * m + 1) + 1;
            rs.dim_m = 4 * m + 2;
            rs.kind = 1;
            rs.fib = "piCH";
            rs.fm = m;
            rs.fs = s;
            return rs;
        }
        case 20:
        case 22: {
            const std::size_t m = need_m();
            rs.family = "sp_pi(" + num(m + 1) + ")";
            rs.space = (row == 20 ? "CH:" + num(2 * m + 1) + ":" + num(m)
                                  : "AP:" + num(2 * m + 1));
            rs.dual_name = "sp(" + num(m + 1) + ")";
            rs.dual_isotropy = "sp(" + num(m) + ")+u(1)";
            sp_dims(m, 0);
            rs.dim_h = m * (2 * m + 1) + 1;
            rs.dim_m = 4 * m + 2;
            rs.kind = 1;
            rs.fib = row == 20 ? "piCB" : "piAB";
            rs.fm = m;
            return rs;
        }
        case 21: {
            const std::size_t m = need_m();
            rs.family = "su_pi(" + num(m + 1) + ")";
            rs.space = "AP:" + num(m);
            rs.dual_name = "su(" + num(m + 1) + ")";
            rs.dual_isotropy = "s(u(" + num(m) + ")u(1))";
            su_dims(m);
            rs.dim_h = m * m;
            rs.dim_m = 2 * m;
            rs.kind = 2;
            rs.fib = "piA";
            rs.fm = m;
            return rs;
        }
        case 23: {
            auto [m, s] = need_ms();
            rs.family = "sp(" + num(m - s) + "," + num(s + 1) + ")";
            rs.space = "HH:" + num(m) + ":" + num(s);
            rs.dual_name = "sp(" + num(m + 1) + ")";
            rs.dual_isotropy = "sp(" + num(m) + ")+sp(1)";
            sp_dims(m, 0);
            rs.dim_h = m * (2 * m + 1) + 3;
            rs.dim_m = 4 * m;
            rs.kind = 2;
            rs.fib = "piH";
            rs.fm = m;
            rs.fs = s;
            return rs;
        }
        case 24: {
            const std::size_t m = need_m();
            rs.family = "sp_pi(" + num(m + 1) + ")";
            rs.space = "BP:" + num(m);
            rs.dual_name = "sp(" + num(m + 1) + ")";
            rs.dual_isotropy = "sp(" + num(m) + ")+sp(1)";
            sp_dims(m, 0);
            rs.dim_h = m * (2 * m + 1) + 3;
            rs.dim_m = 4 * m;
            rs.kind = 2;
            rs.fib = "piB";
            rs.fm = m;
            return rs;
        }
        default:
            throw std::invalid_argument("verify_table3: row must be 1..24");
    }
}

inline ReductiveSpace table3_row_space(const Table3RowSpec& rs) {
    if (rs.kind == 0)
        return canonical_space(action_instance(parse_family(rs.family)));
    HopfFibration f = build_fibration(rs.fib, rs.fm, rs.fs);
    return rs.kind == 1 ? f.total : f.base_space;
}

}  // namespace detail

constexpr std::size_t kTable3Rows = 24;

// One check of the noncompact/compact correspondence table: builds the source
// homogeneous space, forms the compact dual algebra and the dual metric, and
// compares dimensions, Killing definiteness, rank (when the claimed rank is
// at most 4), and the Einstein property of the dual.
inline Table3Report verify_table3(std::size_t row, std::size_t a = 0,
                                  std::size_t b = 0) {
    detail::Table3RowSpec rs = detail::table3_row_spec(row, a, b);
    Table3Report rep;
    rep.row = row;
    rep.a = a;
    rep.b = b;
    rep.family = rs.family;
    rep.space = rs.space;
    rep.dual_name = rs.dual_name;
    rep.claimed_dim_g = rs.dim_g;
    rep.claimed_dim_h = rs.dim_h;
    rep.claimed_dim_m = rs.dim_m;
    rep.claimed_rank = rs.rank;

    {
        CatalogRealization c = parse_family(rs.family);
        if (c.algebra.matrix_size() > 20)
            throw std::invalid_argument(
                "verify_table3: parameters exceed the supported matrix size");
    }

    auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };
    try {
        ReductiveSpace space = detail::table3_row_space(rs);
        rep.dim_g = space.algebra().dim();
        rep.dim_h = space.dim_h();
        rep.dim_m = space.dim_m();
        if (rep.dim_g != rs.dim_g)
            fail("algebra dimension " + detail::num(rep.dim_g) +
                 " != claimed " + detail::num(rs.dim_g));
        if (rep.dim_h != rs.dim_h)
            fail("isotropy dimension " + detail::num(rep.dim_h) +
                 " != claimed " + detail::num(rs.dim_h));
        if (rep.dim_m != rs.dim_m)
            fail("coset dimension " + detail::num(rep.dim_m) +
                 " != claimed " + detail::num(rs.dim_m));

        RatMat theta = cartan_involution(space.algebra());
        DualityData dd = compact_dual(space.algebra(), theta);
        rep.killing_compact = true;  // compact_dual throws otherwise

        if (rs.rank <= 4) {
            rep.rank_checked = true;
            auto rk = compact_rank(dd.dual);
            if (!rk)
                fail("no deterministic seed yielded a regular element");
            else {
                rep.rank = *rk;
                if (*rk != rs.rank)
                    fail("rank " + detail::num(*rk) + " != claimed " +
                         detail::num(rs.rank));
            }
        }

        DualSpace ds = dual_space(space, theta);
        Rat src_res = einstein_residual(space.tensors());
        Rat dual_res = einstein_residual(ds.tensors);
        RatMat src_ric = ricci(space.tensors());
        RatMat dual_ric = ricci(ds.tensors);
        Rat lam = scalar_curvature_of(space.tensors(), src_ric) /
                  Rat(static_cast<long>(space.dim_m()));
        Rat lam_dual = scalar_curvature_of(ds.tensors, dual_ric) /
                       Rat(static_cast<long>(ds.tensors.dim_m));
        rep.einstein_constant = lam;
        rep.dual_einstein = src_res == 0 && dual_res == 0 && lam_dual == -lam &&
                            lam < 0;
        if (!rep.dual_einstein)
            fail("dual Einstein transfer failed");
    } catch (const std::invalid_argument&) {
        throw;  // malformed parameters are caller errors, not row failures
    } catch (const std::exception& e) {
        fail(e.what());
    }
    rep.pass = rep.failures.empty();
    return rep;
}

// Smallest parameter choice for each row of the table.
inline std::vector<std::array<std::size_t, 3>> table3_minimal_params() {
    return {
        {1, 4, 1},  {2, 0, 0},  {3, 0, 0},  {4, 0, 0},  {5, 1, 0},  {6, 1, 0},
        {7, 1, 0},  {8, 1, 0},  {9, 0, 0},  {10, 0, 0}, {11, 1, 0}, {12, 1, 0},
        {13, 1, 0}, {14, 1, 0}, {15, 1, 0}, {16, 1, 0}, {17, 1, 0}, {18, 2, 0},
        {19, 1, 0}, {20, 1, 0}, {21, 2, 0}, {22, 1, 0}, {23, 1, 0}, {24, 1, 0}};
}

inline std::vector<Table3Report> verify_table3_all() {
    std::vector<Table3Report> out;
    for (const auto& [row, a, b] : table3_minimal_params())
        out.push_back(verify_table3(row, a, b));
    return out;
}

}  // namespace pseudohopf
