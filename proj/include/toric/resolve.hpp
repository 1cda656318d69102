#pragma once

#include "toric/fan.hpp"
#include "toric/halfopen.hpp"

namespace toric {

/// Hilbert basis of a two-dimensional pointed cone, ordered along the bounded
/// boundary chain of conv(cone ∩ N \ {0}) from the lex-first ray to the other.
/// Consecutive members span unimodular cones; the interior members are the
/// rays of the minimal resolution.
inline std::vector<Vec> hilbert_basis_2d(const Cone& c) {
    if (c.dim() != 2 || !c.is_simplicial())
        throw std::invalid_argument("hilbert_basis_2d expects a 2-dimensional pointed cone");
    const Vec u = c.rays()[0];
    const Vec v = c.rays()[1];
    std::size_t rank = c.ambient_rank();
    // candidates: lattice points of the closed parallelogram spanned by u, v
    long bound = 0;
    for (const Vec& r : {u, v})
        for (const Int& x : r) bound += static_cast<long>(abs_int(x).convert_to<long long>());
    std::vector<Vec> cand;
    Vec cur(rank, Int(-bound));
    while (true) {
        if (!is_zero(cur)) {
            QVec q(cur.begin(), cur.end());
            auto lam = solve_left(Mat{u, v}, q);
            if (lam) {
                QVec recon(rank, Rat(0));
                for (std::size_t j = 0; j < rank; ++j)
                    recon[j] = (*lam)[0] * Rat(u[j]) + (*lam)[1] * Rat(v[j]);
                bool in_span = true;
                for (std::size_t j = 0; j < rank; ++j)
                    if (recon[j] != Rat(cur[j])) in_span = false;
                if (in_span && (*lam)[0] >= 0 && (*lam)[0] <= 1 && (*lam)[1] >= 0 && (*lam)[1] <= 1)
                    cand.push_back(cur);
            }
        }
        std::size_t pos = 0;
        while (pos < rank) {
            cur[pos] += 1;
            if (cur[pos] <= bound) break;
            cur[pos] = -bound;
            ++pos;
        }
        if (pos == rank) break;
    }
    // irreducible = not the sum of two candidates
    std::set<Vec> cset(cand.begin(), cand.end());
    std::vector<Vec> basis;
    for (const Vec& w : cand) {
        bool reducible = false;
        for (const Vec& a : cand) {
            Vec rest = sub(w, a);
            if (!is_zero(rest) && cset.count(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(w);
    }
    // order along the chain: by the v-barycentric coordinate, ascending
    std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
        auto la = solve_left(Mat{u, v}, QVec(a.begin(), a.end()));
        auto lb = solve_left(Mat{u, v}, QVec(b.begin(), b.end()));
        return (*la)[1] < (*lb)[1];
    });
    return basis;
}

struct Resolution {
    Fan fan;            // smooth refinement
    RefinementMap map;  // resolution fan -> input fan
    std::size_t steps = 0;
};

/// Resolves a fan to a smooth one by subdivision: Hirzebruch-Jung chain
/// insertion in rank 2, otherwise placing-style simplicialization followed by
/// stellar subdivision at a shortest fundamental-parallelepiped witness of a
/// minimal-dimension singular cone. Guaranteed for ambient rank <= 3.
inline Resolution resolve_to_smooth(const Fan& f, std::size_t max_steps = 10000) {
    Resolution res{f, identity_refinement(f), 0};
    if (f.is_smooth()) return res;
    if (f.rank() > 3)
        throw std::invalid_argument("resolution not guaranteed; use manual subdivisions");

    auto apply = [&](const Vec& ray) {
        RefinementMap step = stellar_subdivision(res.fan, ray);
        res.map = compose(step, res.map);
        res.fan = step.source;
        if (++res.steps > max_steps)
            throw std::runtime_error("resolution: subdivision cap exceeded");
    };

    while (true) {
        // make the fan simplicial first
        bool subdivided = false;
        for (std::size_t m : res.fan.maximal_cones()) {
            const Cone& geo = res.fan.cone_geometry(m);
            if (!geo.is_simplicial()) {
                apply(geo.rays().front());
                subdivided = true;
                break;
            }
        }
        if (subdivided) continue;

        if (res.fan.rank() == 2) {
            bool found = false;
            for (std::size_t m : res.fan.maximal_cones()) {
                const Cone& geo = res.fan.cone_geometry(m);
                if (geo.dim() == 2 && multiplicity(geo) != 1) {
                    std::vector<Vec> chain = hilbert_basis_2d(geo);
                    apply(chain.at(1));  // neighbor of the first ray on the chain
                    found = true;
                    break;
                }
            }
            if (!found) break;
            continue;
        }

        // minimal-dimension singular cone; its nonzero box points are interior
        std::size_t witness_cone = SIZE_MAX;
        for (std::size_t dim = 2; dim <= res.fan.rank() && witness_cone == SIZE_MAX; ++dim)
            for (std::size_t c : res.fan.cones_of_dim(dim)) {
                const Cone& geo = res.fan.cone_geometry(c);
                if (geo.is_simplicial() && multiplicity(geo) != 1) {
                    witness_cone = c;
                    break;
                }
            }
        if (witness_cone == SIZE_MAX) break;
        const Cone& geo = res.fan.cone_geometry(witness_cone);
        HalfOpenSimplicialCone box{geo.ambient_rank(), geo.rays(),
                                   std::vector<bool>(geo.rays().size(), false)};
        Vec best;
        Int best_norm = -1;
        for (const Vec& p : parallelepiped_points(box)) {
            if (is_zero(p)) continue;
            Int n = dot(p, p);
            if (best_norm < 0 || n < best_norm || (n == best_norm && lex_less(p, best))) {
                best = p;
                best_norm = n;
            }
        }
        if (best_norm < 0) throw std::logic_error("singular cone with empty box");
        apply(primitive_vector(best));
    }
    return res;
}

}  // namespace toric
