#pragma once

#include "toric/fan.hpp"

namespace toric {

/// Full-dimensional lattice polytope in M, stored by its vertices (extreme
/// points only, lex-sorted). Facet data comes from the homogenization cone
/// over the point set.
class LatticePolytope {
  public:
    /// Builds the convex hull of the given lattice points; non-extreme points
    /// are discarded.
    static LatticePolytope from_points(std::size_t rank, const std::vector<Vec>& points) {
        if (points.empty()) throw std::invalid_argument("polytope: no points given");
        LatticePolytope p;
        p.rank_ = rank;
        std::vector<Vec> homog;
        for (const Vec& v : points) {
            if (v.size() != rank) throw std::invalid_argument("polytope: point has wrong rank");
            Vec h = v;
            h.push_back(1);
            homog.push_back(h);
        }
        // extreme rays of the cone over the points at height one are exactly
        // the vertices (heights stay 1: a lattice point with last coord 1 is
        // primitive)
        GeneratorDescription mg = minimal_generators(rank + 1, homog);
        if (!mg.lineality.empty()) throw std::logic_error("polytope hull: unexpected lineality");
        for (const Vec& h : mg.rays) {
            if (h.back() != 1) throw std::logic_error("polytope hull: non-vertex extreme ray");
            p.vertices_.push_back(Vec(h.begin(), h.end() - 1));
        }
        std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less);
        GeneratorDescription facets = dual_description(rank + 1, homog);
        p.dim_ = rank + 1 - facets.lineality.size() - 1;
        for (const Vec& n : facets.rays) p.facets_.push_back(n);  // (a, b): <a,x> + b >= 0
        p.span_equations_ = facets.lineality;
        return p;
    }

    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return dim_; }
    bool is_full_dimensional() const { return dim_ == rank_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    /// Facet inequalities as homogenized rows (a_1..a_d, b): <a,x> + b >= 0.
    const std::vector<Vec>& facets() const { return facets_; }

    bool contains(const Vec& x) const {
        Vec h = x;
        h.push_back(1);
        for (const Vec& eq : span_equations_)
            if (dot(eq, h) != 0) return false;
        for (const Vec& fct : facets_)
            if (dot(fct, h) < 0) return false;
        return true;
    }

    /// Componentwise bounding box [lo, hi] of the vertex set.
    std::pair<Vec, Vec> bounding_box() const {
        Vec lo = vertices_.front(), hi = vertices_.front();
        for (const Vec& v : vertices_)
            for (std::size_t j = 0; j < rank_; ++j) {
                lo[j] = std::min(lo[j], v[j]);
                hi[j] = std::max(hi[j], v[j]);
            }
        return {lo, hi};
    }

    /// Tangent cone at a vertex: generated by the edge directions w - v.
    Cone tangent_cone(std::size_t vertex_index) const {
        const Vec& v = vertices_.at(vertex_index);
        std::vector<Vec> gens;
        for (const Vec& w : vertices_)
            if (w != v) gens.push_back(sub(w, v));
        return Cone::from_generators(rank_, gens, Side::M);
    }

  private:
    std::size_t rank_ = 0;
    std::size_t dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Vec> facets_;
    std::vector<Vec> span_equations_;
};

struct NormalFan {
    Fan fan;
    std::vector<std::size_t> cone_of_vertex;  // maximal cone id per vertex
};

/// Inner normal fan of a full-dimensional lattice polytope: the maximal cone
/// at a vertex is the dual of its tangent cone, so the fan is complete and
/// vertices correspond to maximal cones.
inline NormalFan normal_fan(const LatticePolytope& p) {
    if (!p.is_full_dimensional())
        throw std::invalid_argument("normal_fan requires a full-dimensional polytope");
    std::size_t rank = p.rank();
    std::vector<Vec> rays;
    std::vector<std::vector<std::size_t>> max_cones;
    for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
        Cone normal = p.tangent_cone(vi).dual();  // N-side, pointed, full-dim
        std::vector<std::size_t> ids;
        for (const Vec& r : normal.rays()) {
            auto it = std::find(rays.begin(), rays.end(), r);
            std::size_t id = static_cast<std::size_t>(it - rays.begin());
            if (it == rays.end()) rays.push_back(r);
            ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        max_cones.push_back(ids);
    }
    NormalFan nf;
    nf.fan = Fan::from_maximal_cones(rank, rays, max_cones);
    for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
        Cone normal = p.tangent_cone(vi).dual();
        std::vector<std::size_t> ids;
        for (const Vec& r : normal.rays()) {
            auto it = std::find(nf.fan.rays().begin(), nf.fan.rays().end(), r);
            ids.push_back(static_cast<std::size_t>(it - nf.fan.rays().begin()));
        }
        std::sort(ids.begin(), ids.end());
        nf.cone_of_vertex.push_back(nf.fan.cone_id(ids));
    }
    return nf;
}

}  // namespace toric
