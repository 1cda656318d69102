#pragma once

#include "toric/fan.hpp"
#include "toric/poly.hpp"

namespace toric {

/// Function on the support of a complete fan given by one polynomial per
/// maximal cone, indexed by position in fan.maximal_cones().
using PiecewisePoly = std::vector<Poly>;

namespace detail {

/// Substitution matrix restricting a polynomial on Q^d to the span of the
/// given lattice (rows): x_j -> sum_i basis[i][j] * s_i.
inline QMat restriction_substitution(const Mat& span_basis, std::size_t rank) {
    QMat m(rank, QVec(span_basis.size(), Rat(0)));
    for (std::size_t i = 0; i < span_basis.size(); ++i)
        for (std::size_t j = 0; j < rank; ++j) m[j][i] = Rat(span_basis[i][j]);
    return m;
}

}  // namespace detail

/// Restriction of a polynomial on Q^rank to the span of a cone, expressed in
/// coordinates dual to a lattice basis of (span ∩ Z^rank).
inline Poly restrict_to_span(const Poly& p, const Mat& span_basis, std::size_t rank) {
    return p.substitute_linear(detail::restriction_substitution(span_basis, rank),
                               span_basis.size());
}

/// Continuity across every wall: the two adjacent polynomials agree on the
/// wall's span.
inline bool piecewise_continuous(const Fan& f, const PiecewisePoly& pp) {
    if (pp.size() != f.maximal_cones().size())
        throw std::invalid_argument("piecewise polynomial has wrong number of pieces");
    std::size_t d = f.rank();
    std::map<std::size_t, std::size_t> pos;  // cone id -> piece index
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) pos[f.maximal_cones()[i]] = i;
    for (std::size_t w : f.cones_of_dim(d - 1)) {
        auto cof = f.maximal_cofaces(w);
        if (cof.size() < 2) continue;
        Mat basis = saturation_basis(f.cone_geometry(w).rays(), d);
        Poly first = restrict_to_span(pp[pos[cof[0]]], basis, d);
        for (std::size_t i = 1; i < cof.size(); ++i)
            if (!(restrict_to_span(pp[pos[cof[i]]], basis, d) == first)) return false;
    }
    return true;
}

struct CourantData {
    std::vector<PiecewisePoly> xi;   // per ray index: the Courant function
    std::vector<PiecewisePoly> phi;  // per cone id: mult * product of Courants
};

/// Courant functions and their products on a complete simplicial fan. The
/// Courant function of a ray restricts on each maximal cone containing it to
/// the dual-basis covector of that ray, and to 0 elsewhere.
inline CourantData courant_and_phi(const Fan& f) {
    if (!f.is_complete() || !f.is_simplicial())
        throw std::invalid_argument("Courant functions require a complete simplicial fan");
    std::size_t d = f.rank();
    const auto& maximal = f.maximal_cones();
    CourantData out;
    out.xi.assign(f.rays().size(), PiecewisePoly(maximal.size(), Poly::zero(d)));
    for (std::size_t mi = 0; mi < maximal.size(); ++mi) {
        const FanCone& fc = f.cones()[maximal[mi]];
        Mat ray_matrix;
        for (std::size_t r : fc.ray_ids) ray_matrix.push_back(f.rays()[r]);
        QMat inv = inverse(ray_matrix);
        for (std::size_t k = 0; k < fc.ray_ids.size(); ++k) {
            QVec covector(d);
            for (std::size_t j = 0; j < d; ++j) covector[j] = inv[j][k];
            out.xi[fc.ray_ids[k]][mi] = Poly::linear_form(covector);
        }
    }
    out.phi.assign(f.cones().size(), PiecewisePoly(maximal.size(), Poly::zero(d)));
    for (std::size_t c = 0; c < f.cones().size(); ++c) {
        Rat mult(multiplicity(f.cone_geometry(c)));
        for (std::size_t mi = 0; mi < maximal.size(); ++mi) {
            Poly prod = Poly::constant(mult, d);
            for (std::size_t r : f.cones()[c].ray_ids) prod = prod * out.xi[r][mi];
            out.phi[c][mi] = prod;
        }
    }
    return out;
}

/// Dimension over Q of continuous piecewise polynomials of homogeneous degree
/// k on a complete fan, by exact linear algebra on wall constraints.
inline std::size_t piecewise_poly_dims(const Fan& f, int k) {
    if (!f.is_complete())
        throw std::invalid_argument("piecewise polynomial dimensions require a complete fan");
    std::size_t d = f.rank();
    auto monos = monomials_of_degree(d, k);
    std::size_t per_cone = monos.size();
    std::size_t ncols = per_cone * f.maximal_cones().size();
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) pos[f.maximal_cones()[i]] = i;

    QMat rows;
    auto wall_monos = monomials_of_degree(d - 1, k);
    for (std::size_t w : f.cones_of_dim(d - 1)) {
        auto cof = f.maximal_cofaces(w);
        if (cof.size() != 2) continue;
        Mat basis = saturation_basis(f.cone_geometry(w).rays(), d);
        QMat subst = detail::restriction_substitution(basis, d);
        // restriction of each source monomial, expanded over wall monomials
        for (std::size_t wm = 0; wm < wall_monos.size(); ++wm) rows.push_back(QVec(ncols, Rat(0)));
        std::size_t base_row = rows.size() - wall_monos.size();
        for (std::size_t mi = 0; mi < monos.size(); ++mi) {
            Poly mono(d);
            mono.add_term(monos[mi], Rat(1));
            Poly restricted = mono.substitute_linear(subst, d - 1);
            for (std::size_t wm = 0; wm < wall_monos.size(); ++wm) {
                Rat c = restricted.coefficient(wall_monos[wm]);
                if (c == 0) continue;
                rows[base_row + wm][pos[cof[0]] * per_cone + mi] += c;
                rows[base_row + wm][pos[cof[1]] * per_cone + mi] -= c;
            }
        }
    }
    std::size_t rank = rows.empty() ? 0 : row_reduce(rows);
    return ncols - rank;
}

}  // namespace toric
