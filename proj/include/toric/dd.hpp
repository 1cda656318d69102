#pragma once

#include <algorithm>
#include <set>

#include "toric/linalg.hpp"

namespace toric {

/// V-description of a polyhedral cone: a lineality space plus extreme rays
/// modulo the lineality. Rays are primitive; the lineality basis is in HNF.
struct GeneratorDescription {
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
};

namespace detail {

struct DDRay {
    Vec v;
    std::vector<bool> tight;  // per processed inequality
};

/// Reduce v modulo the lattice spanned by the (HNF) lineality basis rows so
/// that ray representatives are reproducible.
inline Vec reduce_mod_lineality(Vec v, const Mat& lin) {
    for (const Vec& l : lin) {
        // pivot = first nonzero entry of l (HNF rows)
        std::size_t p = 0;
        while (p < l.size() && l[p] == 0) ++p;
        if (p == l.size()) continue;
        Int q = v[p] / l[p];
        if (v[p] - q * l[p] < 0) q -= 1;
        if (q != 0) v = sub(v, scale(q, l));
    }
    return v;
}

}  // namespace detail

/// Incremental double description: computes
///   {x in Q^rank : <a, x> >= 0 for a in inequalities, <b, x> = 0 for b in equations}
/// as lineality + extreme rays, all exact.
inline GeneratorDescription dual_description(std::size_t rank,
                                             const std::vector<Vec>& inequalities,
                                             const std::vector<Vec>& equations = {}) {
    using detail::DDRay;
    // equations are handled as inequality pairs; the second member simply
    // discards the ray that the first one spawned from the lineality space
    std::vector<Vec> cons;
    cons.reserve(inequalities.size() + 2 * equations.size());
    for (const Vec& b : equations) {
        if (is_zero(b)) continue;
        cons.push_back(b);
        cons.push_back(neg(b));
    }
    for (const Vec& a : inequalities)
        if (!is_zero(a)) cons.push_back(a);

    Mat lin = identity_mat(rank);
    std::vector<DDRay> rays;
    std::size_t n_ineq = 0;  // processed so far

    for (const Vec& a : cons) {
        // 1. constraint active on the lineality space: split one direction off
        std::size_t hit = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                hit = i;
                break;
            }
        if (hit != lin.size()) {
            Vec l0 = lin[hit];
            Int d0 = dot(a, l0);
            Mat new_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == hit) continue;
                Int di = dot(a, lin[i]);
                Vec l = (di == 0) ? lin[i] : sub(scale(d0, lin[i]), scale(di, l0));
                new_lin.push_back(primitive_vector(l));
            }
            for (DDRay& r : rays) {
                Int dr = dot(a, r.v);
                if (dr != 0) {
                    Vec w = sub(scale(abs_int(d0), r.v), scale(Int(sign(d0)) * dr, l0));
                    r.v = primitive_vector(w);
                }
                r.tight.push_back(true);
            }
            DDRay born;
            born.v = d0 > 0 ? l0 : neg(l0);
            born.tight.assign(n_ineq, true);  // lineality directions were tight on everything
            born.tight.push_back(false);
            rays.push_back(std::move(born));
            lin = std::move(new_lin);
            ++n_ineq;
            continue;
        }
        // 2. ordinary step: partition rays by sign, combine adjacent +/- pairs
        std::vector<Int> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i].v);
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] >= 0) {
                DDRay r = rays[i];
                r.tight.push_back(val[i] == 0);
                next.push_back(std::move(r));
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (val[j] >= 0) continue;
                // adjacency: no third ray is tight on everything both are tight on
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == i || k == j) continue;
                    bool covers = true;
                    for (std::size_t c = 0; c < n_ineq; ++c)
                        if (rays[i].tight[c] && rays[j].tight[c] && !rays[k].tight[c]) {
                            covers = false;
                            break;
                        }
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                DDRay w;
                w.v = primitive_vector(sub(scale(val[i], rays[j].v), scale(val[j], rays[i].v)));
                w.tight.resize(n_ineq);
                for (std::size_t c = 0; c < n_ineq; ++c)
                    w.tight[c] = rays[i].tight[c] && rays[j].tight[c];
                w.tight.push_back(true);
                next.push_back(std::move(w));
            }
        }
        rays = std::move(next);
        ++n_ineq;
    }

    GeneratorDescription out;
    out.lineality = hnf(lin);
    std::set<Vec> seen;
    for (DDRay& r : rays) {
        Vec v = detail::reduce_mod_lineality(r.v, out.lineality);
        if (is_zero(v)) continue;
        v = primitive_vector(v);
        if (seen.insert(v).second) out.rays.push_back(std::move(v));
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

/// Extreme rays of the cone generated by `gens` (+ optional lineality
/// generators), with the cone's lineality space separated out.
inline GeneratorDescription minimal_generators(std::size_t rank, const std::vector<Vec>& gens,
                                               const std::vector<Vec>& lineality_gens = {}) {
    GeneratorDescription out;
    std::vector<Vec> nonzero;
    for (const Vec& g : gens)
        if (!is_zero(g)) nonzero.push_back(primitive_vector(g));
    if (nonzero.empty() && lineality_gens.empty()) return out;

    // H-representation of cone(gens): dual rays are the supporting normals,
    // dual lineality ports back as span equations.
    GeneratorDescription dual = dual_description(rank, nonzero, lineality_gens);

    // lineality of the primal cone = vectors orthogonal to every dual generator
    Mat all_normals = dual.rays;
    for (const Vec& l : dual.lineality) all_normals.push_back(l);
    out.lineality = integer_kernel_basis(all_normals, rank);

    std::size_t lin_dim = out.lineality.size();
    std::set<Vec> seen;
    for (const Vec& g : nonzero) {
        Vec v = detail::reduce_mod_lineality(g, out.lineality);
        if (is_zero(v)) continue;  // generator inside the lineality space
        v = primitive_vector(v);
        if (seen.count(v)) continue;
        // g lies on an extreme ray iff its tight normals (span equations
        // included) cut it down to one dimension modulo the lineality space
        Mat tight;
        for (const Vec& n : dual.rays)
            if (dot(n, g) == 0) tight.push_back(n);
        for (const Vec& l : dual.lineality) tight.push_back(l);
        if (rank_of(tight) == rank - lin_dim - 1) {
            seen.insert(v);
            out.rays.push_back(v);
        }
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

}  // namespace toric
