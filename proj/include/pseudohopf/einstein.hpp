#pragma once

// Reductive homogeneous geometry over the rationals: invariant metrics pulled
// back from the quadric embedding, exact Ricci curvature from adapted
// structure constants, the canonical variation of the ten catalog fibrations,
// Einstein parameters t0, and the per-space Einstein metric counts.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pseudohopf/groups.hpp"
#include "pseudohopf/liealg.hpp"
#include "pseudohopf/matrix.hpp"
#include "pseudohopf/rational.hpp"
#include "pseudohopf/transitivity.hpp"

namespace pseudohopf {

// --- adapted structure tensors ---------------------------------------------

// Bracket data of a reductive split g = h (+) m in an adapted basis, plus the
// invariant metric on m. This is everything curvature needs; the duality
// layer rebuilds the same tensors from dual structure constants.
struct ReductiveTensors {
    std::size_t dim_m = 0, dim_h = 0;
    std::vector<std::vector<Rat>> mm_m;  // [i*dim_m+j]: m-part of [X_i,X_j]
    std::vector<std::vector<Rat>> mm_h;  // [i*dim_m+j]: h-part of [X_i,X_j]
    std::vector<std::vector<Rat>> hm_m;  // [z*dim_m+i]: [Z_z,X_i] (lies in m)
    RatMat metric;
};

// Levi-Civita curvature through the Nomizu operator L(X) = (1/2)[X,.]_m + U:
// R(X,Y) = [L(X),L(Y)] - L([X,Y]_m) - ad_h([X,Y]_h) on m, and
// Ric(X,Y) = trace of Z -> R(Z,X)Y, taken directly in m-coordinates.
inline RatMat ricci(const ReductiveTensors& rt) {
    const std::size_t p = rt.dim_m, q = rt.dim_h;
    const RatMat& g = rt.metric;
    RatMat ginv = inverse(g);

    std::vector<RatMat> lam(p, RatMat(p, p));
    std::vector<Rat> v(p), u(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            // 2 <U(X_i,X_j), Z_k> = <[Z_k,X_i]_m, X_j> + <X_i, [Z_k,X_j]_m>
            for (std::size_t k = 0; k < p; ++k) {
                Rat acc(0);
                const auto& cki = rt.mm_m[k * p + i];
                const auto& ckj = rt.mm_m[k * p + j];
                for (std::size_t l = 0; l < p; ++l) {
                    if (cki[l] != 0) acc += cki[l] * g(l, j);
                    if (ckj[l] != 0) acc += g(i, l) * ckj[l];
                }
                v[k] = acc;
            }
            for (std::size_t a = 0; a < p; ++a) {
                Rat acc(0);
                for (std::size_t k = 0; k < p; ++k)
                    if (v[k] != 0) acc += ginv(a, k) * v[k];
                u[a] = acc / 2;
            }
            const auto& cij = rt.mm_m[i * p + j];
            for (std::size_t a = 0; a < p; ++a) lam[i](a, j) = cij[a] / 2 + u[a];
        }

    std::vector<RatMat> hz(q, RatMat(p, p));
    for (std::size_t z = 0; z < q; ++z)
        for (std::size_t i = 0; i < p; ++i) {
            const auto& c = rt.hm_m[z * p + i];
            for (std::size_t a = 0; a < p; ++a) hz[z](a, i) = c[a];
        }

    RatMat ric(p, p);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            Rat sum(0);
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t k = 0; k < p; ++k) {
                    if (lam[i](i, k) != 0 && lam[a](k, b) != 0)
                        sum += lam[i](i, k) * lam[a](k, b);
                    if (lam[a](i, k) != 0 && lam[i](k, b) != 0)
                        sum -= lam[a](i, k) * lam[i](k, b);
                }
                const auto& cm = rt.mm_m[i * p + a];
                for (std::size_t l = 0; l < p; ++l)
                    if (cm[l] != 0 && lam[l](i, b) != 0) sum -= cm[l] * lam[l](i, b);
                const auto& ch = rt.mm_h[i * p + a];
                for (std::size_t z = 0; z < q; ++z)
                    if (ch[z] != 0 && hz[z](i, b) != 0) sum -= ch[z] * hz[z](i, b);
            }
            ric(a, b) = sum;
        }
    if (!ric.is_symmetric()) throw std::logic_error("ricci: result not symmetric");
    return ric;
}

// --- reductive spaces -------------------------------------------------------

class ReductiveSpace {
public:
    ReductiveSpace(MatrixLieAlgebra g, std::vector<RatMat> h_basis,
                   std::vector<RatMat> m_basis, RatMat metric, std::string name = {})
        : g_(std::move(g)),
          h_(std::move(h_basis)),
          m_(std::move(m_basis)),
          name_(name.empty() ? g_.name() + " split" : std::move(name)) {
        const std::size_t p = m_.size(), q = h_.size(), d = g_.dim();
        rt_.dim_m = p;
        rt_.dim_h = q;
        if (p + q != d) throw std::invalid_argument(name_ + ": h and m do not fill g");
        if (metric.rows() != p || metric.cols() != p)
            throw std::invalid_argument(name_ + ": metric size mismatch");

        RatMat tmat(d, d);
        auto put_col = [&](std::size_t col, const RatMat& x) {
            std::vector<Rat> c = g_.coords(x);
            for (std::size_t i = 0; i < d; ++i) tmat(i, col) = c[i];
        };
        for (std::size_t i = 0; i < p; ++i) put_col(i, m_[i]);
        for (std::size_t z = 0; z < q; ++z) put_col(p + z, h_[z]);
        RatMat tinv = inverse(tmat);  // singular <=> h and m overlap

        auto split = [&](const RatMat& x) {
            std::vector<Rat> c = g_.coords(x);
            std::vector<Rat> w(d, Rat(0));
            for (std::size_t i = 0; i < d; ++i) {
                Rat acc(0);
                for (std::size_t j = 0; j < d; ++j)
                    if (c[j] != 0) acc += tinv(i, j) * c[j];
                w[i] = acc;
            }
            return w;
        };

        rt_.mm_m.assign(p * p, std::vector<Rat>(p, Rat(0)));
        rt_.mm_h.assign(p * p, std::vector<Rat>(q, Rat(0)));
        rt_.hm_m.assign(q * p, std::vector<Rat>(p, Rat(0)));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j) {
                std::vector<Rat> w = split(bracket(m_[i], m_[j]));
                for (std::size_t k = 0; k < p; ++k) {
                    rt_.mm_m[i * p + j][k] = w[k];
                    rt_.mm_m[j * p + i][k] = -w[k];
                }
                for (std::size_t z = 0; z < q; ++z) {
                    rt_.mm_h[i * p + j][z] = w[p + z];
                    rt_.mm_h[j * p + i][z] = -w[p + z];
                }
            }
        for (std::size_t z = 0; z < q; ++z)
            for (std::size_t i = 0; i < p; ++i) {
                std::vector<Rat> w = split(bracket(h_[z], m_[i]));
                for (std::size_t y = 0; y < q; ++y)
                    if (w[p + y] != 0)
                        throw std::invalid_argument(name_ + ": [h, m] is not contained in m");
                for (std::size_t k = 0; k < p; ++k) rt_.hm_m[z * p + i][k] = w[k];
            }
        for (std::size_t z = 0; z < q; ++z)
            for (std::size_t y = z + 1; y < q; ++y) {
                std::vector<Rat> w = split(bracket(h_[z], h_[y]));
                for (std::size_t k = 0; k < p; ++k)
                    if (w[k] != 0)
                        throw std::invalid_argument(name_ + ": h is not a subalgebra");
            }
        set_metric(std::move(metric));
    }

    const MatrixLieAlgebra& algebra() const { return g_; }
    const std::vector<RatMat>& h_basis() const { return h_; }
    const std::vector<RatMat>& m_basis() const { return m_; }
    const RatMat& metric() const { return rt_.metric; }
    const ReductiveTensors& tensors() const { return rt_; }
    const std::string& name() const { return name_; }
    std::size_t dim_m() const { return rt_.dim_m; }
    std::size_t dim_h() const { return rt_.dim_h; }
    const Inertia& signature() const { return sig_; }

    // Same split, different invariant metric (revalidated).
    ReductiveSpace with_metric(RatMat nm) const {
        ReductiveSpace c = *this;
        c.set_metric(std::move(nm));
        return c;
    }

private:
    void set_metric(RatMat m) {
        if (!m.is_symmetric())
            throw std::invalid_argument(name_ + ": metric not symmetric");
        sig_ = inertia(m);
        if (sig_.null != 0) throw std::invalid_argument(name_ + ": metric degenerate");
        const std::size_t p = rt_.dim_m;
        for (std::size_t z = 0; z < rt_.dim_h; ++z) {
            RatMat az(p, p);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t k = 0; k < p; ++k) az(k, i) = rt_.hm_m[z * p + i][k];
            RatMat lhs = az.transpose() * m;
            lhs += m * az;
            if (!lhs.is_zero())
                throw std::invalid_argument(name_ + ": metric is not ad(h)-invariant");
        }
        rt_.metric = std::move(m);
    }

    MatrixLieAlgebra g_;
    std::vector<RatMat> h_, m_;
    std::string name_;
    ReductiveTensors rt_;
    Inertia sig_;
};

inline RatMat ricci(const ReductiveSpace& s) { return ricci(s.tensors()); }

inline Rat scalar_curvature_of(const ReductiveTensors& rt, const RatMat& ric) {
    RatMat ginv = inverse(rt.metric);
    Rat s(0);
    for (std::size_t i = 0; i < rt.dim_m; ++i)
        for (std::size_t j = 0; j < rt.dim_m; ++j)
            if (ginv(i, j) != 0 && ric(j, i) != 0) s += ginv(i, j) * ric(j, i);
    return s;
}

inline Rat scalar_curvature(const ReductiveSpace& s) {
    return scalar_curvature_of(s.tensors(), ricci(s));
}

// Entrywise deviation from the Einstein condition in the adapted frame; the
// magnitude depends on the frame but its vanishing does not.
inline Rat einstein_residual(const ReductiveTensors& rt) {
    RatMat ric = ricci(rt);
    Rat sc = scalar_curvature_of(rt, ric);
    RatMat dev = rt.metric;
    dev *= sc / Rat(static_cast<long>(rt.dim_m));
    dev *= Rat(-1);
    dev += ric;
    return dev.max_abs();
}

inline Rat einstein_residual(const ReductiveSpace& s) { return einstein_residual(s.tensors()); }

// --- invariant metrics from the quadric embedding ---------------------------

namespace detail {

// Gram matrix <P(X x0), P(Y x0)> of the ambient form on tangent directions,
// with P projecting away the given mutually orthogonal non-null directions.
inline RatMat embedding_metric(const std::vector<RatMat>& mats, const RatMat& form,
                               const RatMat& x0, const std::vector<RatMat>& kill_dirs = {}) {
    std::vector<Rat> norms;
    for (std::size_t a = 0; a < kill_dirs.size(); ++a) {
        RatMat na = kill_dirs[a].transpose() * form * kill_dirs[a];
        if (na(0, 0) == 0)
            throw std::invalid_argument("embedding_metric: null fibre direction");
        norms.push_back(na(0, 0));
        for (std::size_t b = a + 1; b < kill_dirs.size(); ++b) {
            RatMat ab = kill_dirs[a].transpose() * form * kill_dirs[b];
            if (ab(0, 0) != 0)
                throw std::invalid_argument("embedding_metric: fibre directions not orthogonal");
        }
    }
    std::vector<RatMat> tv;
    tv.reserve(mats.size());
    for (const RatMat& x : mats) {
        RatMat v = x * x0;
        for (std::size_t a = 0; a < kill_dirs.size(); ++a) {
            RatMat c = kill_dirs[a].transpose() * form * v;
            if (c(0, 0) != 0) {
                RatMat sub = kill_dirs[a];
                sub *= c(0, 0) / norms[a];
                sub *= Rat(-1);
                v += sub;
            }
        }
        tv.push_back(std::move(v));
    }
    RatMat g(mats.size(), mats.size());
    for (std::size_t i = 0; i < tv.size(); ++i)
        for (std::size_t j = i; j < tv.size(); ++j) {
            RatMat val = tv[i].transpose() * form * tv[j];
            g(i, j) = val(0, 0);
            g(j, i) = val(0, 0);
        }
    return g;
}

// Complement of a (possibly empty) subalgebra wrt the defining trace form.
inline Subspace trace_complement(const MatrixLieAlgebra& g, const MatrixLieAlgebra& h) {
    if (h.dim() == 0) {
        std::vector<std::vector<Rat>> eye;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            std::vector<Rat> e(g.dim(), Rat(0));
            e[i] = Rat(1);
            eye.push_back(std::move(e));
        }
        return Subspace::from_coords(g, eye);
    }
    Subspace hs = Subspace::from_matrices(g, h.basis());
    return orthogonal_complement(g, hs, g.trace_form());
}

}  // namespace detail

// Constant-curvature model G/H on the quadric with the pulled-back metric.
inline ReductiveSpace canonical_space(const ActionInstance& a) {
    TransitivityReport rep = check_transitive(a);
    if (!rep.pass)
        throw std::invalid_argument("canonical_space: '" + a.label + "' is not transitive");
    MatrixLieAlgebra h = isotropy_subalgebra(a.g, a.x0, a.g.name() + " isotropy");
    Subspace ms = detail::trace_complement(a.g, h);
    RatMat metric = detail::embedding_metric(ms.basis, a.form, a.x0);
    return ReductiveSpace(a.g, h.basis(), ms.basis, std::move(metric),
                          a.label + " canonical");
}

// {X in g : [X, a] = 0}.
inline MatrixLieAlgebra centralizer_in(const MatrixLieAlgebra& g, const RatMat& a,
                                       const std::string& name) {
    const std::size_t n = g.matrix_size();
    RatMat cond(n * n, g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        std::vector<Rat> f = flatten(bracket(g.basis_at(j), a));
        for (std::size_t i = 0; i < f.size(); ++i) cond(i, j) = f[i];
    }
    std::vector<RatMat> basis;
    for (const auto& coeff : nullspace(cond)) {
        RatMat x(n, n);
        for (std::size_t j = 0; j < coeff.size(); ++j)
            if (coeff[j] != 0) {
                RatMat term = g.basis_at(j);
                term *= coeff[j];
                x += term;
            }
        basis.push_back(std::move(x));
    }
    return MatrixLieAlgebra(name, n, std::move(basis));
}

// --- fibration catalog ------------------------------------------------------

struct HopfFibration {
    std::string id;
    std::size_t m = 0, s = 0;
    std::string total_tag, base_tag;
    std::size_t fibre_dim = 0, total_dim = 0, base_dim = 0;
    CatalogRealization realization;
    MatrixLieAlgebra k, hb;
    std::size_t dim_m1 = 0;  // leading vertical block of total.m_basis()
    ReductiveSpace total, fibre_space, base_space;
};

inline const std::vector<std::string>& fibration_ids() {
    static const std::vector<std::string> ids = {"piC",  "piA",  "piH",      "piB", "piO1",
                                                 "piO2", "piOprime", "piCH", "piCB", "piAB"};
    return ids;
}

namespace detail {

struct FibSpec {
    std::string g_spec;
    bool k_projective = false;
    std::vector<std::size_t> k_units;
    std::vector<std::size_t> hb_units;  // empty: centralizer of the moment element
    std::size_t fibre_dim = 0;
    std::string total_tag, base_tag;
    bool uses_s = false, fixed = false;
};

inline FibSpec fibration_spec(const std::string& id, std::size_t m, std::size_t s) {
    auto num = [](std::size_t v) { return std::to_string(v); };
    FibSpec f;
    if (id == "piC" || id == "piH" || id == "piCH") f.uses_s = true;
    if (id == "piO1" || id == "piO2" || id == "piOprime") f.fixed = true;
    if (f.fixed) {
        if (m != 0 || s != 0)
            throw std::invalid_argument(id + ": fixed fibration takes no parameters");
    } else {
        if (m < 1) throw std::invalid_argument(id + ": need m >= 1");
        if (f.uses_s ? s > m : s != 0)
            throw std::invalid_argument(id + ": bad second parameter");
    }
    std::string ms = num(m - s), s1 = num(s + 1), m1 = num(m + 1);
    if (id == "piC") {
        f.g_spec = "su(" + ms + "," + s1 + ")";
        f.hb_units = {0};
        f.fibre_dim = 1;
        f.total_tag = "H:" + num(2 * m + 1) + ":" + num(2 * s + 1);
        f.base_tag = "CH:" + num(m) + ":" + num(s);
    } else if (id == "piA") {
        f.g_spec = "su_pi(" + m1 + ")";
        f.hb_units = {0};
        f.fibre_dim = 1;
        f.total_tag = "H:" + num(2 * m + 1) + ":" + num(m);
        f.base_tag = "AP:" + num(m);
    } else if (id == "piH") {
        f.g_spec = "sp(" + ms + "," + s1 + ")";
        f.hb_units = {0, 1, 2};
        f.fibre_dim = 3;
        f.total_tag = "H:" + num(4 * m + 3) + ":" + num(4 * s + 3);
        f.base_tag = "HH:" + num(m) + ":" + num(s);
    } else if (id == "piB") {
        f.g_spec = "sp_pi(" + m1 + ")";
        f.hb_units = {0, 1, 2};
        f.fibre_dim = 3;
        f.total_tag = "H:" + num(4 * m + 3) + ":" + num(2 * m + 1);
        f.base_tag = "BP:" + num(m);
    } else if (id == "piO1" || id == "piO2" || id == "piOprime") {
        f.g_spec = id == "piO1" ? "spin(9)" : id == "piO2" ? "spin(8,1)" : "spin(5,4)";
        f.fibre_dim = 7;
        f.total_tag = id == "piO1" ? "H:15:15" : "H:15:7";
        f.base_tag = id == "piO1" ? "H:8:8" : id == "piO2" ? "H:8:0" : "H:8:4";
    } else if (id == "piCH") {
        f.g_spec = "sp(" + ms + "," + s1 + ")";
        f.k_projective = true;
        f.k_units = {0};
        f.hb_units = {0, 1, 2};
        f.fibre_dim = 2;
        f.total_tag = "CH:" + num(2 * m + 1) + ":" + num(2 * s + 1);
        f.base_tag = "HH:" + num(m) + ":" + num(s);
    } else if (id == "piCB") {
        f.g_spec = "sp_pi(" + m1 + ")";
        f.k_projective = true;
        f.k_units = {0};
        f.hb_units = {0, 1, 2};
        f.fibre_dim = 2;
        f.total_tag = "CH:" + num(2 * m + 1) + ":" + num(m);
        f.base_tag = "BP:" + num(m);
    } else if (id == "piAB") {
        f.g_spec = "sp_pi(" + m1 + ")";
        f.k_projective = true;
        f.k_units = {1};
        f.hb_units = {0, 1, 2};
        f.fibre_dim = 2;
        f.total_tag = "AP:" + num(2 * m + 1);
        f.base_tag = "BP:" + num(m);
    } else {
        throw std::invalid_argument("unknown fibration id '" + id + "'");
    }
    return f;
}

// Moment element of the spinor embedding. The covector mu_i = <gamma_i x0, x0>
// (spinor form) is raised to a vector with the base quadratic form, whose
// diagonal is read off the Clifford relations gamma_i^2 = eps_i. The
// commutator action of the algebra on Clifford vectors is the vector
// representation, so the stabilizer of the image point is the centralizer of
// gamma(mu with raised index).
inline MatrixLieAlgebra moment_centralizer(const CatalogRealization& c) {
    if (c.gammas.empty())
        throw std::invalid_argument("moment_centralizer: realization has no gamma system");
    const std::size_t n = c.form.rows();
    RatMat gam(n, n);
    bool nonzero = false;
    for (const RatMat& gi : c.gammas) {
        RatMat sq = gi * gi;
        Rat eps = sq(0, 0);
        if (eps * eps != 1)
            throw std::logic_error("moment_centralizer: generator does not square to +-1");
        RatMat mu = (gi * c.x0).transpose() * c.form * c.x0;
        if (mu(0, 0) != 0) {
            RatMat term = gi;
            term *= eps * mu(0, 0);
            gam += term;
            nonzero = true;
        }
    }
    if (!nonzero) throw std::logic_error("moment_centralizer: moment map vanishes at x0");
    return centralizer_in(c.algebra, gam, c.algebra.name() + " moment centralizer");
}

}  // namespace detail

inline HopfFibration build_fibration(const std::string& id, std::size_t m = 0,
                                     std::size_t s = 0) {
    detail::FibSpec spec = detail::fibration_spec(id, m, s);
    CatalogRealization c = parse_family(spec.g_spec);
    ActionInstance inst = action_instance(c, id);
    if (!check_transitive(inst).pass)
        throw std::logic_error(id + ": catalog family is not transitive");

    MatrixLieAlgebra k = [&]() {
        if (!spec.k_projective) return isotropy_subalgebra(c.algebra, c.x0, id + " K");
        std::vector<RatMat> mults;
        for (std::size_t u : spec.k_units) mults.push_back(c.fibre_right_mults.at(u));
        return projective_isotropy(c.algebra, c.x0, mults, id + " K");
    }();
    MatrixLieAlgebra hb = [&]() {
        if (spec.hb_units.empty()) return detail::moment_centralizer(c);
        std::vector<RatMat> mults;
        for (std::size_t u : spec.hb_units) mults.push_back(c.fibre_right_mults.at(u));
        return projective_isotropy(c.algebra, c.x0, mults, id + " Hb");
    }();
    for (const RatMat& x : k.basis())
        if (!hb.contains(x)) throw std::logic_error(id + ": K is not contained in Hb");

    Subspace ms = detail::trace_complement(c.algebra, k);
    std::vector<RatMat> m1 = intersect_spans(ms.basis, hb.basis());
    if (m1.size() != spec.fibre_dim)
        throw std::logic_error(id + ": vertical dimension " + std::to_string(m1.size()) +
                               " differs from fibre dimension " +
                               std::to_string(spec.fibre_dim));

    std::vector<RatMat> kill;
    for (std::size_t u : spec.k_units) kill.push_back(c.fibre_right_mults.at(u) * c.x0);
    RatMat g_all = detail::embedding_metric(ms.basis, c.form, c.x0, kill);

    // Coordinates of m1 inside the m-basis, then the metric-orthogonal
    // complement m2 within m.
    const std::size_t nn = c.form.rows();
    std::vector<std::vector<Rat>> ms_rows;
    for (const RatMat& x : ms.basis) ms_rows.push_back(flatten(x));
    RowSpace ms_span(rows_from_vectors(ms_rows, nn * nn));
    RatMat c1(ms.basis.size(), m1.size());
    for (std::size_t a = 0; a < m1.size(); ++a) {
        auto sol = ms_span.coords(flatten(m1[a]));
        if (!sol) throw std::logic_error(id + ": vertical space escapes the complement");
        for (std::size_t i = 0; i < ms.basis.size(); ++i) c1(i, a) = (*sol)[i];
    }
    RatMat g_m1 = c1.transpose() * g_all * c1;
    if (rank(g_m1) != m1.size())
        throw std::logic_error(id + ": metric degenerate on the vertical space");
    RatMat cond = c1.transpose() * g_all;
    std::vector<RatMat> m2;
    for (const auto& y : nullspace(cond)) {
        RatMat x(nn, nn);
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) {
                RatMat term = ms.basis[j];
                term *= y[j];
                x += term;
            }
        m2.push_back(std::move(x));
    }

    std::vector<RatMat> m_adapted = m1;
    m_adapted.insert(m_adapted.end(), m2.begin(), m2.end());
    RatMat metric = detail::embedding_metric(m_adapted, c.form, c.x0, kill);
    const std::size_t p1 = m1.size(), pt = m_adapted.size();
    for (std::size_t i = 0; i < p1; ++i)
        for (std::size_t j = p1; j < pt; ++j)
            if (metric(i, j) != 0)
                throw std::logic_error(id + ": vertical and horizontal blocks not orthogonal");

    ReductiveSpace total(c.algebra, k.basis(), m_adapted, metric, id + " total");

    // Ad(K) must preserve the block split, and the fibres must be totally
    // geodesic: [m1,m1] stays inside h (+) m1.
    const ReductiveTensors& rt = total.tensors();
    for (std::size_t z = 0; z < rt.dim_h; ++z)
        for (std::size_t i = 0; i < pt; ++i)
            for (std::size_t kk = 0; kk < pt; ++kk)
                if ((i < p1) != (kk < p1) && rt.hm_m[z * pt + i][kk] != 0)
                    throw std::logic_error(id + ": isotropy does not preserve the split");
    for (std::size_t i = 0; i < p1; ++i)
        for (std::size_t j = 0; j < p1; ++j)
            for (std::size_t kk = p1; kk < pt; ++kk)
                if (rt.mm_m[i * pt + j][kk] != 0)
                    throw std::logic_error(id + ": fibres are not totally geodesic");

    ReductiveSpace fibre(hb, k.basis(), m1, metric.block(0, 0, p1, p1), id + " fibre");
    ReductiveSpace base(c.algebra, hb.basis(), m2,
                        metric.block(p1, p1, pt - p1, pt - p1), id + " base");

    HopfFibration out{id, m, s, spec.total_tag, spec.base_tag, p1, pt, pt - p1,
                      std::move(c), std::move(k), std::move(hb), p1,
                      std::move(total), std::move(fibre), std::move(base)};
    return out;
}

// Canonical variation: vertical block scaled by t.
inline ReductiveSpace variation(const HopfFibration& f, const Rat& t) {
    if (t == 0) throw std::invalid_argument("variation: t must be nonzero");
    RatMat g = f.total.metric();
    for (std::size_t i = 0; i < f.dim_m1; ++i)
        for (std::size_t j = 0; j < f.dim_m1; ++j) g(i, j) *= t;
    return f.total.with_metric(std::move(g));
}

// Einstein constants of base and fibre: (lambda' = s'/dim B, lambda^ = s^/p).
inline std::pair<Rat, Rat> lambda_values(const HopfFibration& f) {
    if (einstein_residual(f.fibre_space) != 0)
        throw std::logic_error(f.id + ": fibre space is not Einstein");
    if (einstein_residual(f.base_space) != 0)
        throw std::logic_error(f.id + ": base space is not Einstein");
    Rat lam_hat = scalar_curvature(f.fibre_space) / Rat(static_cast<long>(f.fibre_dim));
    Rat lam_prime = scalar_curvature(f.base_space) / Rat(static_cast<long>(f.base_dim));
    return {lam_prime, lam_hat};
}

// The non-canonical Einstein parameter, when it exists.
inline std::optional<Rat> t_zero(const HopfFibration& f) {
    auto [lam_prime, lam_hat] = lambda_values(f);
    if (lam_hat == 0 || Rat(2) * lam_hat == lam_prime) return std::nullopt;
    const ReductiveTensors& rt = f.total.tensors();
    const std::size_t p = rt.dim_m, p1 = f.dim_m1;
    bool a_tensor_zero = true;
    for (std::size_t i = p1; i < p && a_tensor_zero; ++i)
        for (std::size_t j = p1; j < p && a_tensor_zero; ++j)
            for (std::size_t k = 0; k < p1; ++k)
                if (rt.mm_m[i * p + j][k] != 0) {
                    a_tensor_zero = false;
                    break;
                }
    if (a_tensor_zero) return std::nullopt;
    return lam_hat / (lam_prime - lam_hat);
}

namespace detail {

inline Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& t) {
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

// Candidate rational roots of a nonzero polynomial (0 never included).
inline std::vector<Rat> rational_root_candidates(const std::vector<Rat>& coeffs) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0) --deg;
    if (deg == 0) throw std::invalid_argument("root candidates of the zero polynomial");
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low;
    Int den(1);
    for (std::size_t i = low; i < deg; ++i) {
        Int d = rat_den(coeffs[i]);
        den = den / gcd(den, d) * d;
    }
    std::vector<Int> ic;
    for (std::size_t i = low; i < deg; ++i)
        ic.push_back(rat_num(coeffs[i] * Rat(den)));
    Int content(0);
    for (const Int& v : ic) content = gcd(content, v);
    for (Int& v : ic) v /= content;
    Int lead = ic.back() < 0 ? Int(-ic.back()) : ic.back();
    Int tail = ic.front() < 0 ? Int(-ic.front()) : ic.front();
    std::vector<Rat> out;
    if (ic.size() == 1) return out;  // constant: no roots beyond t = 0 factors
    for (const Int& pnum : divisors_of(tail))
        for (const Int& qden : divisors_of(lead)) {
            Rat r = Rat(pnum) / Rat(qden);
            out.push_back(r);
            out.push_back(-r);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// The exact set {t != 0 : g_t is Einstein}, reconstructed by interpolating the
// polynomial t * (Ric_t - (s_t / dim m) g_t) entrywise and solving for its
// common rational roots. The degree bound doubles once if verification
// points disagree with the interpolant.
inline std::vector<Rat> einstein_scan(const HopfFibration& f, std::size_t degree_bound = 4) {
    const std::size_t p = f.total.dim_m();
    auto deviation = [&](const Rat& t) {
        ReductiveSpace vs = variation(f, t);
        RatMat ric = ricci(vs);
        Rat sc = scalar_curvature_of(vs.tensors(), ric);
        RatMat dev = vs.metric();
        dev *= sc / Rat(static_cast<long>(p));
        dev *= Rat(-1);
        dev += ric;
        dev *= t;
        return dev;
    };

    for (std::size_t d : {degree_bound, 2 * degree_bound}) {
        std::vector<RatMat> samples;
        for (std::size_t r = 1; r <= d + 1; ++r) samples.push_back(deviation(Rat((long)r)));
        RatMat vand(d + 1, d + 1);
        for (std::size_t r = 0; r <= d; ++r) {
            Rat t((long)(r + 1)), pw(1);
            for (std::size_t cc = 0; cc <= d; ++cc) {
                vand(r, cc) = pw;
                pw *= t;
            }
        }
        RatMat rhs(d + 1, p * p);
        for (std::size_t r = 0; r <= d; ++r)
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < p; ++b)
                    rhs(r, a * p + b) = samples[r](a, b);
        RatMat coeff = solve_multi(vand, rhs);  // column e: coefficients of entry e

        bool verified = true;
        for (std::size_t extra = 0; extra < 2 && verified; ++extra) {
            Rat t((long)(d + 2 + extra));
            RatMat exact = deviation(t);
            for (std::size_t a = 0; a < p && verified; ++a)
                for (std::size_t b = 0; b < p; ++b) {
                    Rat acc(0), pw(1);
                    for (std::size_t cc = 0; cc <= d; ++cc) {
                        acc += coeff(cc, a * p + b) * pw;
                        pw *= t;
                    }
                    if (acc != exact(a, b)) {
                        verified = false;
                        break;
                    }
                }
        }
        if (!verified) {
            if (d == degree_bound) continue;  // escalate the degree once
            throw std::logic_error(f.id + ": deviation is not polynomial at degree " +
                                   std::to_string(d));
        }

        std::vector<std::vector<Rat>> polys;
        for (std::size_t e = 0; e < p * p; ++e) {
            std::vector<Rat> cs(d + 1);
            bool nonzero = false;
            for (std::size_t cc = 0; cc <= d; ++cc) {
                cs[cc] = coeff(cc, e);
                nonzero = nonzero || cs[cc] != 0;
            }
            if (nonzero) polys.push_back(std::move(cs));
        }
        if (polys.empty())
            throw std::logic_error(f.id + ": deviation vanishes identically in t");

        std::vector<Rat> roots;
        for (const Rat& cand : detail::rational_root_candidates(polys.front())) {
            if (cand == 0) continue;
            bool all = true;
            for (const auto& poly : polys)
                if (detail::eval_poly(poly, cand) != 0) {
                    all = false;
                    break;
                }
            if (!all) continue;
            if (einstein_residual(variation(f, cand)) != 0)
                throw std::logic_error(f.id + ": interpolated root fails exact verification");
            roots.push_back(cand);
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    throw std::logic_error("einstein_scan: unreachable");
}

// --- Einstein metric enumeration per space ----------------------------------

struct MetricDescriptor {
    std::string kind;       // "canonical" or "variation"
    std::string fibration;  // fibration id when kind == "variation"
    std::size_t m = 0, s = 0;
    Rat t{1};
};

namespace detail {

struct ParsedTag {
    std::string kind;
    std::vector<std::size_t> nums;
};

inline ParsedTag parse_space_tag(const std::string& tag) {
    ParsedTag out;
    std::size_t pos = tag.find(':');
    if (pos == std::string::npos) throw std::invalid_argument("bad space tag '" + tag + "'");
    out.kind = tag.substr(0, pos);
    std::size_t start = pos + 1;
    while (start <= tag.size()) {
        std::size_t next = tag.find(':', start);
        std::string piece = tag.substr(start, next == std::string::npos ? next : next - start);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad space tag '" + tag + "'");
        out.nums.push_back(static_cast<std::size_t>(std::stoul(piece)));
        if (next == std::string::npos) break;
        start = next + 1;
    }
    std::size_t want = out.kind == "AP" || out.kind == "BP" ? 1
                     : out.kind == "H" || out.kind == "CH" || out.kind == "HH" ? 2
                                                                               : 0;
    if (want == 0 || out.nums.size() != want)
        throw std::invalid_argument("bad space tag '" + tag + "'");
    return out;
}

}  // namespace detail

// All homogeneous Einstein metrics the catalog provides on the given space:
// the canonical metric plus one variation per fibration with total space
// matching the tag and an existing Einstein parameter. Fibrations with
// one-dimensional fibres never contribute (their fibre Ricci vanishes, so
// lambda^ = 0); the scan tests confirm this on buildable instances.
inline std::vector<MetricDescriptor> enumerate_einstein_metrics(const std::string& tag) {
    detail::ParsedTag pt = detail::parse_space_tag(tag);
    const std::size_t desk_n = 23;
    if (pt.nums[0] > desk_n)
        throw std::invalid_argument("space tag beyond desk scale: " + tag);
    if (pt.nums.size() == 2 && pt.nums[1] > pt.nums[0])
        throw std::invalid_argument("space tag index exceeds dimension: " + tag);

    std::vector<MetricDescriptor> out;
    out.push_back({"canonical", "", 0, 0, Rat(1)});

    struct Cand {
        std::string id;
        std::size_t m = 0, s = 0;
        bool unit_fibre = false;
    };
    std::vector<Cand> cands;
    auto odd = [](std::size_t v) { return v % 2 == 1; };
    if (pt.kind == "H") {
        std::size_t n = pt.nums[0], r = pt.nums[1];
        if (odd(n) && odd(r) && (r - 1) / 2 <= (n - 1) / 2 && n >= 3)
            cands.push_back({"piC", (n - 1) / 2, (r - 1) / 2, true});
        if (odd(n) && r == (n - 1) / 2 && n >= 3)
            cands.push_back({"piA", (n - 1) / 2, 0, true});
        if (n % 4 == 3 && r % 4 == 3 && n >= 7 && (r - 3) / 4 <= (n - 3) / 4)
            cands.push_back({"piH", (n - 3) / 4, (r - 3) / 4, false});
        if (n % 4 == 3 && n >= 7 && r == 2 * ((n - 3) / 4) + 1)
            cands.push_back({"piB", (n - 3) / 4, 0, false});
        if (n == 15 && r == 15) cands.push_back({"piO1", 0, 0, false});
        if (n == 15 && r == 7) {
            cands.push_back({"piO2", 0, 0, false});
            cands.push_back({"piOprime", 0, 0, false});
        }
    } else if (pt.kind == "CH") {
        std::size_t a = pt.nums[0], b = pt.nums[1];
        if (odd(a) && a >= 3 && odd(b) && (b - 1) / 2 <= (a - 1) / 2)
            cands.push_back({"piCH", (a - 1) / 2, (b - 1) / 2, false});
        if (odd(a) && a >= 3 && b == (a - 1) / 2)
            cands.push_back({"piCB", (a - 1) / 2, 0, false});
    } else if (pt.kind == "AP") {
        std::size_t a = pt.nums[0];
        if (odd(a) && a >= 3) cands.push_back({"piAB", (a - 1) / 2, 0, false});
    }
    // HH and BP tags: bases only, no catalog fibration has them as total space.

    for (const Cand& cand : cands) {
        if (cand.unit_fibre) continue;  // lambda^ = 0, no Einstein parameter
        HopfFibration fib = build_fibration(cand.id, cand.m, cand.s);
        std::optional<Rat> t0 = t_zero(fib);
        if (t0) out.push_back({"variation", cand.id, cand.m, cand.s, *t0});
    }
    return out;
}

}  // namespace pseudohopf
