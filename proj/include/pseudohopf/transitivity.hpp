#pragma once

// Verification of the transitive-action tables: point and bundle (projective)
// isotropy subalgebras, the linear-span transitivity criterion
// dim(g + stab(x0)) = dim so(n-r, r+1), row-by-row table checks with claimed
// dimensions, deliberately failing control subalgebras, and the Witt basis
// that exhibits the isotropic-pair normal form of the ambient quadric.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pseudohopf/groups.hpp"
#include "pseudohopf/liealg.hpp"
#include "pseudohopf/matrix.hpp"
#include "pseudohopf/rational.hpp"

namespace pseudohopf {

// A subalgebra of so(n-r, r+1) acting on the quadric H^n_r = {<x,x> = -1}.
struct ActionInstance {
    std::size_t n = 0, r = 0;
    MatrixLieAlgebra g;
    RatMat form;
    RatMat x0;
    std::string label;
};

inline ActionInstance action_instance(const CatalogRealization& c, std::string label = {}) {
    if (c.form_neg == 0) throw std::invalid_argument("action_instance: form has no negative axis");
    ActionInstance a{c.form.rows() - 1, c.form_neg - 1, c.algebra, c.form, c.x0,
                     label.empty() ? c.algebra.name() : std::move(label)};
    return a;
}

// {X in g : X x0 = 0}.
inline MatrixLieAlgebra isotropy_subalgebra(const MatrixLieAlgebra& g, const RatMat& x0,
                                            const std::string& name) {
    const std::size_t nrows = g.matrix_size();
    RatMat cond(nrows, g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        RatMat v = g.basis_at(j) * x0;
        for (std::size_t i = 0; i < nrows; ++i) cond(i, j) = v(i, 0);
    }
    std::vector<std::vector<Rat>> null = nullspace(cond);
    std::vector<RatMat> basis;
    basis.reserve(null.size());
    for (const auto& coeff : null) {
        RatMat x(nrows, nrows);
        for (std::size_t j = 0; j < coeff.size(); ++j)
            if (coeff[j] != 0) {
                RatMat term = g.basis_at(j);
                term *= coeff[j];
                x += term;
            }
        basis.push_back(std::move(x));
    }
    return MatrixLieAlgebra(name, nrows, std::move(basis));
}

inline MatrixLieAlgebra isotropy_subalgebra(const ActionInstance& a) {
    return isotropy_subalgebra(a.g, a.x0, a.g.name() + " isotropy");
}

// {X in g : X x0 lies in the span of the fibre directions R_u x0}. The fibre
// right multiplications must move x0 to independent directions.
inline MatrixLieAlgebra projective_isotropy(const MatrixLieAlgebra& g, const RatMat& x0,
                                            const std::vector<RatMat>& fibre_mults,
                                            const std::string& name) {
    const std::size_t nrows = g.matrix_size();
    const std::size_t f = fibre_mults.size();
    if (f == 0) throw std::invalid_argument("projective_isotropy: no fibre directions");
    RatMat dirs(nrows, f);
    for (std::size_t t = 0; t < f; ++t) {
        RatMat v = fibre_mults[t] * x0;
        for (std::size_t i = 0; i < nrows; ++i) dirs(i, t) = v(i, 0);
    }
    if (rank(dirs) != f)
        throw std::invalid_argument("projective_isotropy: dependent fibre directions");
    RatMat cond(nrows, g.dim() + f);
    for (std::size_t j = 0; j < g.dim(); ++j) {
        RatMat v = g.basis_at(j) * x0;
        for (std::size_t i = 0; i < nrows; ++i) cond(i, j) = v(i, 0);
    }
    for (std::size_t t = 0; t < f; ++t)
        for (std::size_t i = 0; i < nrows; ++i) cond(i, g.dim() + t) = -dirs(i, t);
    std::vector<std::vector<Rat>> null = nullspace(cond);
    std::vector<RatMat> basis;
    basis.reserve(null.size());
    for (const auto& coeff : null) {
        RatMat x(nrows, nrows);
        bool nonzero = false;
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (coeff[j] != 0) {
                RatMat term = g.basis_at(j);
                term *= coeff[j];
                x += term;
                nonzero = true;
            }
        if (!nonzero)
            throw std::logic_error("projective_isotropy: fibre directions lie in a degenerate span");
        basis.push_back(std::move(x));
    }
    return MatrixLieAlgebra(name, nrows, std::move(basis));
}

struct TransitivityReport {
    std::size_t dim_ambient = 0;  // dim so(n-r, r+1)
    std::size_t dim_g = 0;
    std::size_t dim_h = 0;        // point isotropy of g at x0
    std::size_t dim_sum = 0;      // dim(g + stab_ambient(x0))
    bool pass = false;
};

// Sum criterion: g acts transitively near x0 iff g + stab(x0) is all of the
// ambient orthogonal algebra. Since g is contained in the ambient algebra,
// g intersect stab(x0) is exactly the point isotropy of g, so the sum
// dimension is dim g + dim stab - dim h.
inline TransitivityReport check_transitive(const ActionInstance& a) {
    CatalogRealization ambient = so_realization(a.n - a.r, a.r + 1);
    MatrixLieAlgebra stab = isotropy_subalgebra(ambient.algebra, a.x0, "ambient stabilizer");
    MatrixLieAlgebra h = isotropy_subalgebra(a.g, a.x0, "isotropy");
    TransitivityReport rep;
    rep.dim_ambient = ambient.algebra.dim();
    rep.dim_g = a.g.dim();
    rep.dim_h = h.dim();
    rep.dim_sum = a.g.dim() + stab.dim() - h.dim();
    rep.pass = rep.dim_sum == rep.dim_ambient;
    return rep;
}

// ---------------------------------------------------------------------------
// Table catalogs. Table 1 lists subalgebras transitive on the quadric H^n_r
// itself (the claimed isotropy is the point stabilizer); Table 2 lists the
// same families acting on quotient spaces of the quadric by a fibre of right
// multiplications (the claimed isotropy is the bundle stabilizer).
// ---------------------------------------------------------------------------

struct RowReport {
    int table = 0;
    int row = 0;
    std::vector<std::size_t> params;
    std::string family;
    std::string space;
    TransitivityReport dims;   // dims.dim_h: point isotropy (Table 1 claimed H)
    std::size_t claimed_h = 0; // claimed isotropy dim (bundle isotropy for Table 2)
    std::size_t coset_dim = 0; // dim g - claimed_h
    std::size_t space_dim = 0; // dimension of the claimed homogeneous space
    bool pass = false;
    std::vector<std::string> failures;
};

namespace detail {

struct RowSpec {
    std::string family;
    std::size_t n = 0, r = 0;  // total-space quadric H^n_r
    std::size_t claimed_h = 0;
    std::vector<std::size_t> fibre_units;  // Table 2: indices into fibre_right_mults
    std::size_t space_dim = 0;             // dim of the claimed space (n for Table 1)
    std::string space_tag;
    std::vector<std::size_t> params;
};

inline std::string tag_h(std::size_t n, std::size_t r) {
    return "H:" + std::to_string(n) + ":" + std::to_string(r);
}

inline RowSpec table1_spec(int row, std::size_t a, std::size_t b) {
    if (row < 1 || row > 20)
        throw std::invalid_argument("table 1: row out of range (1..20)");
    RowSpec s;
    auto fixed = [&](const char* fam, std::size_t n, std::size_t r, std::size_t h) {
        s.family = fam;
        s.n = n;
        s.r = r;
        s.claimed_h = h;
    };
    switch (row) {
        case 1: {
            std::size_t n = a, r = b;
            if (n < 2 || r > n) throw std::invalid_argument("table 1 row 1: need 2 <= n, r <= n");
            s.family = "so(" + std::to_string(n - r) + "," + std::to_string(r + 1) + ")";
            s.n = n;
            s.r = r;
            s.claimed_h = n * (n - 1) / 2;
            s.params = {n, r};
            break;
        }
        case 2: fixed("spin(9)", 15, 15, 21); break;
        case 3: fixed("spin(7)", 7, 7, 14); break;
        case 4: fixed("g2", 6, 6, 8); break;
        case 5: fixed("spin(8,1)", 15, 7, 21); break;
        case 6: fixed("spin(5,4)", 15, 7, 21); break;
        case 7: fixed("spin(4,3)", 7, 3, 14); break;
        case 8: fixed("g2_star", 6, 2, 8); break;
        case 9: fixed("g2_star_perm", 6, 3, 8); break;
        default: {
            std::size_t m = a, ss = b;
            if (m < 1) throw std::invalid_argument("table 1: need m >= 1");
            bool uses_s = row == 10 || row == 11 || row == 12 || row == 16 || row == 17;
            if (uses_s && ss > m) throw std::invalid_argument("table 1: need s <= m");
            std::string ms = std::to_string(m - (uses_s ? ss : 0));
            std::string s1 = std::to_string((uses_s ? ss : 0) + 1);
            std::string m1 = std::to_string(m + 1);
            switch (row) {
                case 10:
                    s.family = "su(" + ms + "," + s1 + ")";
                    s.n = 2 * m + 1; s.r = 2 * ss + 1;
                    s.claimed_h = m * m - 1;
                    break;
                case 11:
                    s.family = "sp(" + ms + "," + s1 + ")";
                    s.n = 4 * m + 3; s.r = 4 * ss + 3;
                    s.claimed_h = m * (2 * m + 1);
                    break;
                case 12:
                    s.family = "sp(" + ms + "," + s1 + ")+sp(1)";
                    s.n = 4 * m + 3; s.r = 4 * ss + 3;
                    s.claimed_h = m * (2 * m + 1) + 3;
                    break;
                case 13:
                    s.family = "su_pi(" + m1 + ")";
                    s.n = 2 * m + 1; s.r = m;
                    s.claimed_h = m * m - 1;
                    break;
                case 14:
                    s.family = "sp_pi(" + m1 + ")";
                    s.n = 4 * m + 3; s.r = 2 * m + 1;
                    s.claimed_h = m * (2 * m + 1);
                    break;
                case 15:
                    s.family = "sp_pi(" + m1 + ")+sp_pi(1)";
                    s.n = 4 * m + 3; s.r = 2 * m + 1;
                    s.claimed_h = m * (2 * m + 1) + 3;
                    break;
                case 16:
                    s.family = "u(" + ms + "," + s1 + ")";
                    s.n = 2 * m + 1; s.r = 2 * ss + 1;
                    s.claimed_h = m * m;
                    break;
                case 17:
                    s.family = "sp(" + ms + "," + s1 + ")+u(1)";
                    s.n = 4 * m + 3; s.r = 4 * ss + 3;
                    s.claimed_h = m * (2 * m + 1) + 1;
                    break;
                case 18:
                    s.family = "u_pi(" + m1 + ")";
                    s.n = 2 * m + 1; s.r = m;
                    s.claimed_h = m * m;
                    break;
                case 19:
                    s.family = "sp_pi(" + m1 + ")+u_pi0(1)";
                    s.n = 4 * m + 3; s.r = 2 * m + 1;
                    s.claimed_h = m * (2 * m + 1) + 1;
                    break;
                case 20:
                    s.family = "sp_pi(" + m1 + ")+u(1)";
                    s.n = 4 * m + 3; s.r = 2 * m + 1;
                    s.claimed_h = m * (2 * m + 1) + 1;
                    break;
                default:
                    throw std::invalid_argument("table 1: unknown row " + std::to_string(row));
            }
            s.params = uses_s ? std::vector<std::size_t>{m, ss} : std::vector<std::size_t>{m};
        }
    }
    s.space_dim = s.n;
    s.space_tag = tag_h(s.n, s.r);
    return s;
}

inline RowSpec table2_spec(int row, std::size_t m, std::size_t ss) {
    if (row < 1 || row > 7)
        throw std::invalid_argument("table 2: row out of range (1..7)");
    if (m < 1) throw std::invalid_argument("table 2: need m >= 1");
    bool uses_s = row == 1 || row == 2 || row == 6;
    if (uses_s && ss > m) throw std::invalid_argument("table 2: need s <= m");
    RowSpec s;
    std::string ms = std::to_string(m - (uses_s ? ss : 0));
    std::string s1 = std::to_string((uses_s ? ss : 0) + 1);
    std::string m1 = std::to_string(m + 1);
    switch (row) {
        case 1:
            s.family = "su(" + ms + "," + s1 + ")";
            s.n = 2 * m + 1; s.r = 2 * ss + 1;
            s.fibre_units = {0};
            s.claimed_h = m * m;
            s.space_dim = 2 * m;
            s.space_tag = "CH:" + std::to_string(m) + ":" + std::to_string(ss);
            break;
        case 2:
            s.family = "sp(" + ms + "," + s1 + ")";
            s.n = 4 * m + 3; s.r = 4 * ss + 3;
            s.fibre_units = {0};
            s.claimed_h = m * (2 * m + 1) + 1;
            s.space_dim = 4 * m + 2;
            s.space_tag = "CH:" + std::to_string(2 * m + 1) + ":" + std::to_string(2 * ss + 1);
            break;
        case 3:
            s.family = "sp_pi(" + m1 + ")";
            s.n = 4 * m + 3; s.r = 2 * m + 1;
            s.fibre_units = {0};
            s.claimed_h = m * (2 * m + 1) + 1;
            s.space_dim = 4 * m + 2;
            s.space_tag = "CH:" + std::to_string(2 * m + 1) + ":" + std::to_string(m);
            break;
        case 4:
            s.family = "su_pi(" + m1 + ")";
            s.n = 2 * m + 1; s.r = m;
            s.fibre_units = {0};
            s.claimed_h = m * m;
            s.space_dim = 2 * m;
            s.space_tag = "AP:" + std::to_string(m);
            break;
        case 5:
            s.family = "sp_pi(" + m1 + ")";
            s.n = 4 * m + 3; s.r = 2 * m + 1;
            s.fibre_units = {1};
            s.claimed_h = m * (2 * m + 1) + 1;
            s.space_dim = 4 * m + 2;
            s.space_tag = "AP:" + std::to_string(2 * m + 1);
            break;
        case 6:
            s.family = "sp(" + ms + "," + s1 + ")";
            s.n = 4 * m + 3; s.r = 4 * ss + 3;
            s.fibre_units = {0, 1, 2};
            s.claimed_h = m * (2 * m + 1) + 3;
            s.space_dim = 4 * m;
            s.space_tag = "HH:" + std::to_string(m) + ":" + std::to_string(ss);
            break;
        case 7:
            s.family = "sp_pi(" + m1 + ")";
            s.n = 4 * m + 3; s.r = 2 * m + 1;
            s.fibre_units = {0, 1, 2};
            s.claimed_h = m * (2 * m + 1) + 3;
            s.space_dim = 4 * m;
            s.space_tag = "BP:" + std::to_string(m);
            break;
        default:
            throw std::invalid_argument("table 2: unknown row " + std::to_string(row));
    }
    s.params = uses_s ? std::vector<std::size_t>{m, ss} : std::vector<std::size_t>{m};
    return s;
}

constexpr std::size_t kMaxAmbient = 20;

}  // namespace detail

inline RowReport verify_table_row(int table, int row, std::size_t a = 0, std::size_t b = 0) {
    detail::RowSpec spec =
        table == 1 ? detail::table1_spec(row, a, b)
      : table == 2 ? detail::table2_spec(row, a, b)
                   : throw std::invalid_argument("verify_table_row: table must be 1 or 2");
    if (spec.n + 1 > detail::kMaxAmbient)
        throw std::invalid_argument("verify_table_row: ambient dimension exceeds desk scale");

    RowReport rep;
    rep.table = table;
    rep.row = row;
    rep.params = spec.params;
    rep.family = spec.family;
    rep.space = spec.space_tag;
    rep.claimed_h = spec.claimed_h;
    rep.space_dim = spec.space_dim;

    CatalogRealization c = parse_family(spec.family);
    if (c.form.rows() != spec.n + 1 || c.form_neg != spec.r + 1)
        rep.failures.push_back("ambient form does not match the claimed space");

    ActionInstance inst = action_instance(c);
    rep.dims = check_transitive(inst);
    if (!rep.dims.pass) rep.failures.push_back("transitivity sum criterion fails");

    MatrixLieAlgebra h = [&]() {
        if (table == 1) return isotropy_subalgebra(inst);
        std::vector<RatMat> mults;
        for (std::size_t u : spec.fibre_units) mults.push_back(c.fibre_right_mults.at(u));
        return projective_isotropy(c.algebra, c.x0, mults, spec.family + " bundle isotropy");
    }();
    if (h.dim() != spec.claimed_h)
        rep.failures.push_back("isotropy dimension " + std::to_string(h.dim()) +
                               " differs from claimed " + std::to_string(spec.claimed_h));
    if (table == 1 && h.dim() != rep.dims.dim_h)
        rep.failures.push_back("isotropy disagrees with the transitivity report");
    if (h.dim() > 1) {
        try {
            h.structure(0, 1);  // forces the full closure check
        } catch (const NotClosedError&) {
            rep.failures.push_back("isotropy is not bracket-closed");
        }
    }
    rep.coset_dim = c.algebra.dim() - h.dim();
    if (rep.coset_dim != spec.space_dim)
        rep.failures.push_back("coset dimension " + std::to_string(rep.coset_dim) +
                               " differs from the space dimension " +
                               std::to_string(spec.space_dim));
    rep.pass = rep.failures.empty();
    return rep;
}

// All (table, row, params) tuples within the desk-scale ambient bound.
inline std::vector<std::array<std::size_t, 4>> table_parameter_sweep() {
    std::vector<std::array<std::size_t, 4>> out;
    for (std::size_t n = 2; n + 1 <= detail::kMaxAmbient; ++n)
        for (std::size_t r = 0; r <= n; ++r) out.push_back({1, 1, n, r});
    for (int row = 2; row <= 9; ++row) out.push_back({1, static_cast<std::size_t>(row), 0, 0});
    auto sweep_ms = [&](std::size_t table, std::size_t row, std::size_t coord_size,
                        bool uses_s) {
        for (std::size_t m = 1;; ++m) {
            std::size_t total = coord_size * (m + 1);  // ambient N = (m+1) coordinates
            if (total > detail::kMaxAmbient) break;
            if (uses_s)
                for (std::size_t s = 0; s <= m; ++s) out.push_back({table, row, m, s});
            else
                out.push_back({table, row, m, 0});
        }
    };
    sweep_ms(1, 10, 2, true);
    sweep_ms(1, 11, 4, true);
    sweep_ms(1, 12, 4, true);
    sweep_ms(1, 13, 2, false);
    sweep_ms(1, 14, 4, false);
    sweep_ms(1, 15, 4, false);
    sweep_ms(1, 16, 2, true);
    sweep_ms(1, 17, 4, true);
    sweep_ms(1, 18, 2, false);
    sweep_ms(1, 19, 4, false);
    sweep_ms(1, 20, 4, false);
    sweep_ms(2, 1, 2, true);
    sweep_ms(2, 2, 4, true);
    sweep_ms(2, 3, 4, false);
    sweep_ms(2, 4, 2, false);
    sweep_ms(2, 5, 4, false);
    sweep_ms(2, 6, 4, true);
    sweep_ms(2, 7, 4, false);
    return out;
}

// The minimal-parameter instance of every Table 1 row.
inline std::vector<std::array<std::size_t, 4>> table1_minimal_params() {
    return {
        {1, 1, 4, 1},   // so(3,2) on H^4_1
        {1, 2, 0, 0},  {1, 3, 0, 0},  {1, 4, 0, 0},  {1, 5, 0, 0},
        {1, 6, 0, 0},  {1, 7, 0, 0},  {1, 8, 0, 0},  {1, 9, 0, 0},
        {1, 10, 2, 1},  // su(1,2) on H^5_3
        {1, 11, 1, 0},  // sp(1,1) on H^7_3
        {1, 12, 1, 0}, {1, 13, 2, 0}, {1, 14, 1, 0}, {1, 15, 1, 0},
        {1, 16, 1, 0}, {1, 17, 1, 0}, {1, 18, 1, 0}, {1, 19, 1, 0}, {1, 20, 1, 0},
    };
}

// ---------------------------------------------------------------------------
// Control subalgebras that must FAIL the transitivity criterion.
// ---------------------------------------------------------------------------

namespace detail {

inline MatrixLieAlgebra so_block(const RatMat& form, const std::vector<std::size_t>& coords,
                                 const std::string& name) {
    const std::size_t nrows = form.rows();
    std::vector<RatMat> basis;
    for (std::size_t a = 0; a < coords.size(); ++a)
        for (std::size_t b = a + 1; b < coords.size(); ++b) {
            std::size_t i = coords[a], j = coords[b];
            RatMat x(nrows, nrows);
            x(i, j) = form(j, j);
            x(j, i) = -form(i, i);
            basis.push_back(std::move(x));
        }
    return MatrixLieAlgebra(name, nrows, std::move(basis));
}

}  // namespace detail

// Named subalgebra/space pairs on which the sum criterion must fail.
inline std::vector<ActionInstance> negative_controls() {
    std::vector<ActionInstance> out;
    auto add = [&](MatrixLieAlgebra g, std::size_t pos, std::size_t neg, std::string label) {
        RatMat form = standard_form(pos, neg);
        const std::size_t nrows = pos + neg;
        RatMat x0(nrows, 1);
        x0(0, 0) = Rat(1);
        out.push_back(ActionInstance{nrows - 1, neg - 1, std::move(g), std::move(form),
                                     std::move(x0), std::move(label)});
    };

    // Compact block stabilizing the base point of H^4_0.
    add(detail::so_block(standard_form(4, 1), {1, 2, 3, 4}, "so(4) block"), 4, 1,
        "so(4) block on H^4_0");
    // Compact block of so(3,2) fixing the timelike plane of H^4_1.
    add(detail::so_block(standard_form(3, 2), {2, 3, 4}, "so(3) block"), 3, 2,
        "so(3) block on H^4_1");
    // Small indefinite block of so(4,2) on H^5_1.
    add(detail::so_block(standard_form(4, 2), {1, 2, 3}, "so(2,1) block"), 4, 2,
        "so(2,1) block on H^5_1");
    // Lorentz block of so(4,1) through the base point of H^4_0; moves x0 but
    // spans too little together with the stabilizer.
    add(detail::so_block(standard_form(4, 1), {0, 1, 2, 3}, "so(3,1) block"), 4, 1,
        "so(3,1) block on H^4_0");

    // Special unitary block on the two positive complex coordinates of H^5_1.
    {
        Realification re(AlgebraKind::Complex, 3, 1);
        const CompositionAlgebra& f = re.field();
        using Entry = std::tuple<std::size_t, std::size_t, std::vector<Rat>>;
        std::vector<Rat> one = f.unit(0), im = f.unit(1);
        std::vector<Rat> neg_one = one, neg_im = im;
        for (Rat& x : neg_one) x = -x;
        for (Rat& x : neg_im) x = -x;
        std::vector<RatMat> basis{
            re.left_matrix({Entry{1, 2, one}, Entry{2, 1, neg_one}}),
            re.left_matrix({Entry{1, 2, im}, Entry{2, 1, im}}),
            re.left_matrix({Entry{1, 1, im}, Entry{2, 2, neg_im}}),
        };
        add(MatrixLieAlgebra("su(2) block", 6, std::move(basis)), 4, 2,
            "su(2) block on H^5_1");
    }

    // Imaginary quaternion block on the second coordinate of H^7_3.
    {
        Realification re(AlgebraKind::Quaternion, 2, 1);
        using Entry = std::tuple<std::size_t, std::size_t, std::vector<Rat>>;
        std::vector<RatMat> basis;
        for (std::size_t k = 1; k < 4; ++k)
            basis.push_back(re.left_matrix({Entry{1, 1, re.field().unit(k)}}));
        add(MatrixLieAlgebra("sp(1) diagonal block", 8, std::move(basis)), 4, 4,
            "sp(1) diagonal block on H^7_3");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Witt basis: columns w_1..w_{n+1} splitting R^{n+1} into two totally
// isotropic blocks W1, W2 of dimension r+1 paired to the normal form
// z_1 z_{r+2} + ... + z_{r+1} z_{2r+2}, plus a definite block U.
// ---------------------------------------------------------------------------

struct WittBasis {
    std::size_t n = 0, r = 0;
    RatMat w;  // (n+1) x (n+1); W1 = columns 0..r, W2 = r+1..2r+1, U = rest
};

inline WittBasis witt_basis(std::size_t n, std::size_t r) {
    if (2 * r + 1 > n) throw std::invalid_argument("witt_basis: need 2r+1 <= n");
    const std::size_t nrows = n + 1;
    RatMat w(nrows, nrows);
    for (std::size_t i = 0; i <= r; ++i) {
        w(i + r + 1, i) = rat(1, 2);
        w(i, i) = rat(-1, 2);
        w(i, i + r + 1) = rat(1, 2);
        w(i + r + 1, i + r + 1) = rat(1, 2);
    }
    for (std::size_t k = 2 * r + 2; k <= n; ++k) w(k, k) = Rat(1);
    return {n, r, std::move(w)};
}

// Gram matrix of the ambient form in the Witt basis.
inline RatMat witt_gram(const WittBasis& wb) {
    RatMat s = standard_form(wb.n - wb.r, wb.r + 1);
    return wb.w.transpose() * s * wb.w;
}

// The expected normal form: isotropic pairing blocks at value 1/2 and the
// identity on the definite block.
inline RatMat expected_witt_gram(std::size_t n, std::size_t r) {
    RatMat g(n + 1, n + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        g(i, i + r + 1) = rat(1, 2);
        g(i + r + 1, i) = rat(1, 2);
    }
    for (std::size_t k = 2 * r + 2; k <= n; ++k) g(k, k) = Rat(1);
    return g;
}

// Ambient point Sum z_i w_i - Sum (z_i / R) w_{i+r+1} with R = Sum z_i^2;
// lies on the quadric {<x,x> = -1} whenever z is nonzero.
inline RatMat witt_point(const WittBasis& wb, const std::vector<Rat>& z) {
    if (z.size() != wb.r + 1)
        throw std::invalid_argument("witt_point: need r+1 isotropic coordinates");
    Rat big_r(0);
    for (const Rat& zi : z) big_r += zi * zi;
    if (big_r == 0) throw std::invalid_argument("witt_point: zero coordinate vector");
    RatMat p(wb.n + 1, 1);
    for (std::size_t i = 0; i <= wb.r; ++i) {
        RatMat col = wb.w.block(0, i, wb.n + 1, 1);
        col *= z[i];
        p += col;
        RatMat col2 = wb.w.block(0, i + wb.r + 1, wb.n + 1, 1);
        col2 *= -z[i] / big_r;
        p += col2;
    }
    return p;
}

}  // namespace pseudohopf
