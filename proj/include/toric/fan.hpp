#pragma once

#include <map>
#include <string>

#include "toric/cone.hpp"

namespace toric {

/// One cone of a fan, identified by the sorted tuple of global ray indices.
struct FanCone {
    std::vector<std::size_t> ray_ids;
    std::size_t dim = 0;
    bool maximal = false;
};

struct FanValidation {
    bool well_formed = true;
    bool complete = false;
    bool simplicial = false;
    bool smooth = false;
    std::vector<std::size_t> sigma_counts;  // cones per dimension 0..d
    std::vector<std::string> violations;
};

/// A fan: primitive rays plus cones closed under faces, with all pairwise
/// intersections being common faces. Built from its maximal cones; faces are
/// derived. Instances are immutable values with canonical ordering (rays
/// lex-sorted, cones sorted by ray-id tuple).
class Fan {
  public:
    Fan() = default;

    /// Builds a fan from maximal cones given as ray index sets. Structural
    /// defects that make the face lattice meaningless (bad indices,
    /// non-pointed or non-extreme generators, nested cones) throw; overlap
    /// violations are detected later by validate() so they can be reported.
    static Fan from_maximal_cones(std::size_t rank, const std::vector<Vec>& rays,
                                  const std::vector<std::vector<std::size_t>>& max_cones) {
        if (rank == 0) throw std::invalid_argument("fan: ambient rank must be positive");
        Fan f;
        f.rank_ = rank;
        for (const Vec& r : rays) {
            if (r.size() != rank) throw std::invalid_argument("fan: ray has wrong ambient rank");
            if (is_zero(r)) throw std::invalid_argument("fan: zero vector listed as a ray");
            if (!is_primitive(r))
                throw std::invalid_argument("fan: ray " + to_string(r) + " is not primitive");
        }
        // canonical ray order; keep only rays used by some cone
        std::vector<bool> used(rays.size(), max_cones.empty());
        for (const auto& mc : max_cones)
            for (std::size_t i : mc) {
                if (i >= rays.size()) throw std::invalid_argument("fan: ray index out of range");
                used[i] = true;
            }
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (used[i]) order.push_back(i);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return lex_less(rays[a], rays[b]); });
        std::vector<std::size_t> new_id(rays.size(), SIZE_MAX);
        for (std::size_t k = 0; k < order.size(); ++k) {
            f.rays_.push_back(rays[order[k]]);
            new_id[order[k]] = k;
        }
        for (std::size_t k = 0; k + 1 < f.rays_.size(); ++k)
            if (f.rays_[k] == f.rays_[k + 1])
                throw std::invalid_argument("fan: duplicate ray " + to_string(f.rays_[k]));

        // build maximal cones, check generators are exactly the extreme rays
        std::vector<std::vector<std::size_t>> maximal_sets;
        for (const auto& mc : max_cones) {
            std::vector<std::size_t> ids;
            for (std::size_t i : mc) ids.push_back(new_id[i]);
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            maximal_sets.push_back(ids);
        }
        std::sort(maximal_sets.begin(), maximal_sets.end());
        maximal_sets.erase(std::unique(maximal_sets.begin(), maximal_sets.end()),
                           maximal_sets.end());
        std::vector<Cone> max_geo;
        for (const auto& ids : maximal_sets) {
            std::vector<Vec> gens;
            for (std::size_t i : ids) gens.push_back(f.rays_[i]);
            Cone c = Cone::from_generators(rank, gens);
            if (!c.is_pointed())
                throw std::invalid_argument("fan: cone " + id_string(ids) + " is not strongly convex");
            if (c.rays().size() != ids.size())
                throw std::invalid_argument("fan: cone " + id_string(ids) +
                                            " lists a non-extreme generator");
            max_geo.push_back(std::move(c));
        }
        for (std::size_t i = 0; i < maximal_sets.size(); ++i)
            for (std::size_t j = 0; j < maximal_sets.size(); ++j) {
                if (i == j) continue;
                if (std::includes(maximal_sets[j].begin(), maximal_sets[j].end(),
                                  maximal_sets[i].begin(), maximal_sets[i].end()))
                    throw std::invalid_argument("fan: cone " + id_string(maximal_sets[i]) +
                                                " is contained in cone " +
                                                id_string(maximal_sets[j]) +
                                                "; list only maximal cones");
            }

        // derive all faces
        std::map<std::vector<std::size_t>, bool> face_set;  // ids -> maximal?
        if (maximal_sets.empty()) face_set[{}] = true;      // the fan {0}
        for (std::size_t m = 0; m < maximal_sets.size(); ++m) {
            auto local_faces = face_ray_sets(max_geo[m]);
            for (const auto& lf : local_faces) {
                std::vector<std::size_t> ids;
                for (std::size_t li : lf) ids.push_back(maximal_sets[m][li]);
                std::sort(ids.begin(), ids.end());
                bool is_max = ids == maximal_sets[m];
                auto [it, inserted] = face_set.emplace(ids, is_max);
                if (!inserted) it->second = it->second || is_max;
            }
        }
        for (auto& [ids, is_max] : face_set) {
            FanCone fc;
            fc.ray_ids = ids;
            fc.maximal = is_max;
            f.cones_.push_back(fc);
        }
        for (std::size_t c = 0; c < f.cones_.size(); ++c) {
            f.cone_geo_.push_back(f.build_cone(f.cones_[c].ray_ids));
            f.cones_[c].dim = f.cone_geo_.back().dim();
            f.index_[f.cones_[c].ray_ids] = c;
            if (f.cones_[c].maximal) f.maximal_.push_back(c);
        }
        f.validation_ = f.run_validation();
        return f;
    }

    std::size_t rank() const { return rank_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<FanCone>& cones() const { return cones_; }
    const Cone& cone_geometry(std::size_t id) const { return cone_geo_[id]; }
    const std::vector<std::size_t>& maximal_cones() const { return maximal_; }
    const FanValidation& validation() const { return validation_; }

    bool is_complete() const { return validation_.complete; }
    bool is_simplicial() const { return validation_.simplicial; }
    bool is_smooth() const { return validation_.smooth; }
    bool is_well_formed() const { return validation_.well_formed; }

    std::size_t cone_id(const std::vector<std::size_t>& ray_ids) const {
        auto it = index_.find(ray_ids);
        if (it == index_.end())
            throw std::invalid_argument("fan: no cone with id " + id_string(ray_ids));
        return it->second;
    }

    bool has_cone(const std::vector<std::size_t>& ray_ids) const {
        return index_.count(ray_ids) > 0;
    }

    std::vector<std::size_t> cones_of_dim(std::size_t k) const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < cones_.size(); ++c)
            if (cones_[c].dim == k) out.push_back(c);
        return out;
    }

    /// Cones having `id` as a facet (dimension one higher, containing it).
    std::vector<std::size_t> cofacets(std::size_t id) const {
        std::vector<std::size_t> out;
        const auto& s = cones_[id].ray_ids;
        for (std::size_t c = 0; c < cones_.size(); ++c) {
            if (cones_[c].dim != cones_[id].dim + 1) continue;
            if (std::includes(cones_[c].ray_ids.begin(), cones_[c].ray_ids.end(), s.begin(),
                              s.end()))
                out.push_back(c);
        }
        return out;
    }

    /// Maximal cones containing the given cone.
    std::vector<std::size_t> maximal_cofaces(std::size_t id) const {
        std::vector<std::size_t> out;
        const auto& s = cones_[id].ray_ids;
        for (std::size_t m : maximal_)
            if (std::includes(cones_[m].ray_ids.begin(), cones_[m].ray_ids.end(), s.begin(),
                              s.end()))
                out.push_back(m);
        return out;
    }

    bool support_contains(const Vec& v) const {
        for (std::size_t m : maximal_)
            if (cone_geo_[m].contains(v)) return true;
        return false;
    }

    static std::string id_string(const std::vector<std::size_t>& ids) {
        std::string s = "[";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ids[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Fan& a, const Fan& b) {
        if (a.rank_ != b.rank_ || a.rays_ != b.rays_ || a.cones_.size() != b.cones_.size())
            return false;
        for (std::size_t i = 0; i < a.cones_.size(); ++i) {
            if (a.cones_[i].ray_ids != b.cones_[i].ray_ids ||
                a.cones_[i].maximal != b.cones_[i].maximal)
                return false;
        }
        return true;
    }

  private:
    Cone build_cone(const std::vector<std::size_t>& ids) const {
        std::vector<Vec> gens;
        for (std::size_t i : ids) gens.push_back(rays_[i]);
        return Cone::from_generators(rank_, gens);
    }

    FanValidation run_validation() const {
        FanValidation v;
        v.sigma_counts.assign(rank_ + 1, 0);
        for (const FanCone& c : cones_) v.sigma_counts[c.dim]++;

        // pairwise intersections of maximal cones must be common faces
        for (std::size_t a = 0; a < maximal_.size() && v.violations.size() < 16; ++a)
            for (std::size_t b = a + 1; b < maximal_.size(); ++b) {
                const Cone& ca = cone_geo_[maximal_[a]];
                const Cone& cb = cone_geo_[maximal_[b]];
                std::vector<Vec> ineq = ca.facet_normals();
                for (const Vec& n : cb.facet_normals()) ineq.push_back(n);
                std::vector<Vec> eq = ca.span_equations();
                for (const Vec& n : cb.span_equations()) eq.push_back(n);
                GeneratorDescription meet = dual_description(rank_, ineq, eq);
                bool ok = meet.lineality.empty();
                std::vector<std::size_t> ids;
                if (ok) {
                    for (const Vec& r : meet.rays) {
                        auto it = std::find(rays_.begin(), rays_.end(), r);
                        if (it == rays_.end()) {
                            ok = false;
                            break;
                        }
                        ids.push_back(static_cast<std::size_t>(it - rays_.begin()));
                    }
                }
                if (ok) {
                    std::sort(ids.begin(), ids.end());
                    const auto& ida = cones_[maximal_[a]].ray_ids;
                    const auto& idb = cones_[maximal_[b]].ray_ids;
                    ok = index_.count(ids) > 0 &&
                         std::includes(ida.begin(), ida.end(), ids.begin(), ids.end()) &&
                         std::includes(idb.begin(), idb.end(), ids.begin(), ids.end());
                }
                if (!ok) {
                    v.well_formed = false;
                    v.violations.push_back(
                        "cones " + id_string(cones_[maximal_[a]].ray_ids) + " and " +
                        id_string(cones_[maximal_[b]].ray_ids) + " intersect in a non-face");
                }
            }

        // completeness: the wall criterion plus connectivity of the dual graph
        bool complete = !maximal_.empty();
        for (std::size_t m : maximal_)
            if (cones_[m].dim != rank_) complete = false;
        std::map<std::size_t, std::vector<std::size_t>> wall_cofaces;
        if (complete && v.well_formed) {
            for (std::size_t c : cones_of_dim(rank_ - 1)) wall_cofaces[c] = maximal_cofaces(c);
            for (const auto& [w, mc] : wall_cofaces)
                if (mc.size() != 2) complete = false;
            if (complete && maximal_.size() > 1) {
                std::map<std::size_t, std::vector<std::size_t>> adj;
                for (const auto& [w, mc] : wall_cofaces) {
                    adj[mc[0]].push_back(mc[1]);
                    adj[mc[1]].push_back(mc[0]);
                }
                std::set<std::size_t> seen{maximal_.front()};
                std::vector<std::size_t> stack{maximal_.front()};
                while (!stack.empty()) {
                    std::size_t cur = stack.back();
                    stack.pop_back();
                    for (std::size_t nb : adj[cur])
                        if (seen.insert(nb).second) stack.push_back(nb);
                }
                if (seen.size() != maximal_.size()) complete = false;
            }
        } else {
            complete = false;
        }
        v.complete = complete;

        v.simplicial = true;
        v.smooth = true;
        for (std::size_t m : maximal_) {
            if (!cone_geo_[m].is_simplicial()) {
                v.simplicial = false;
                v.smooth = false;
            } else if (multiplicity(cone_geo_[m]) != 1) {
                v.smooth = false;
            }
        }
        return v;
    }

    std::size_t rank_ = 0;
    std::vector<Vec> rays_;
    std::vector<FanCone> cones_;      // sorted by ray-id tuple
    std::vector<Cone> cone_geo_;      // parallel to cones_
    std::map<std::vector<std::size_t>, std::size_t> index_;
    std::vector<std::size_t> maximal_;
    FanValidation validation_;
};

/// Cone-to-cone refinement data: for every cone of the (finer) source fan,
/// the smallest cone of the target fan containing it.
struct RefinementMap {
    Fan source;
    Fan target;
    std::vector<std::size_t> target_of;  // indexed by source cone id
};

inline RefinementMap identity_refinement(const Fan& f) {
    RefinementMap m;
    m.source = f;
    m.target = f;
    m.target_of.resize(f.cones().size());
    for (std::size_t i = 0; i < f.cones().size(); ++i) m.target_of[i] = i;
    return m;
}

/// Smallest cone of `coarse` containing the given cone of `fine`.
inline std::size_t smallest_containing_cone(const Fan& coarse, const Cone& c) {
    std::size_t best = SIZE_MAX;
    for (std::size_t id = 0; id < coarse.cones().size(); ++id) {
        const Cone& cand = coarse.cone_geometry(id);
        if (cand.dim() < c.dim()) continue;
        if (best != SIZE_MAX && coarse.cones()[best].dim <= cand.dim()) continue;
        if (cand.contains(c)) best = id;
    }
    if (best == SIZE_MAX)
        throw std::invalid_argument("refinement: cone not contained in the target fan");
    return best;
}

inline RefinementMap refinement_between(const Fan& fine, const Fan& coarse) {
    RefinementMap m;
    m.source = fine;
    m.target = coarse;
    m.target_of.resize(fine.cones().size());
    for (std::size_t i = 0; i < fine.cones().size(); ++i)
        m.target_of[i] = smallest_containing_cone(coarse, fine.cone_geometry(i));
    return m;
}

inline RefinementMap compose(const RefinementMap& fine_to_mid, const RefinementMap& mid_to_coarse) {
    if (!(fine_to_mid.target == mid_to_coarse.source))
        throw std::invalid_argument("refinement composition: fans do not match");
    RefinementMap m;
    m.source = fine_to_mid.source;
    m.target = mid_to_coarse.target;
    m.target_of.resize(m.source.cones().size());
    for (std::size_t i = 0; i < m.target_of.size(); ++i)
        m.target_of[i] = mid_to_coarse.target_of[fine_to_mid.target_of[i]];
    return m;
}

/// Stellar subdivision at a primitive ray r inside the support: every cone
/// containing r is replaced by the joins of r with its faces not containing r.
/// Returns the refined fan together with the refinement map back to f.
inline RefinementMap stellar_subdivision(const Fan& f, const Vec& r) {
    if (r.size() != f.rank()) throw std::invalid_argument("stellar subdivision: rank mismatch");
    if (is_zero(r) || !is_primitive(r))
        throw std::invalid_argument("stellar subdivision: ray must be primitive");
    if (!f.support_contains(r))
        throw std::invalid_argument("stellar subdivision: ray " + to_string(r) +
                                    " lies outside the support of the fan");
    std::vector<Vec> rays = f.rays();
    std::size_t rid = rays.size();
    auto it = std::find(rays.begin(), rays.end(), r);
    if (it != rays.end())
        rid = static_cast<std::size_t>(it - rays.begin());
    else
        rays.push_back(r);

    std::vector<std::vector<std::size_t>> new_max;
    for (std::size_t m : f.maximal_cones()) {
        const Cone& geo = f.cone_geometry(m);
        const auto& ids = f.cones()[m].ray_ids;
        if (!geo.contains(r)) {
            new_max.push_back(ids);
            continue;
        }
        // facets of the cone not containing r, joined with r
        for (const auto& lf : face_ray_sets(geo)) {
            std::vector<Vec> gens;
            for (std::size_t li : lf) gens.push_back(geo.rays()[li]);
            Cone face = Cone::from_generators(f.rank(), gens);
            if (face.dim() + 1 != geo.dim() || face.contains(r)) continue;
            std::vector<std::size_t> cone_ids{rid};
            for (std::size_t li : lf) {
                auto pos = std::find(rays.begin(), rays.end(), geo.rays()[li]);
                cone_ids.push_back(static_cast<std::size_t>(pos - rays.begin()));
            }
            std::sort(cone_ids.begin(), cone_ids.end());
            new_max.push_back(cone_ids);
        }
    }
    Fan refined = Fan::from_maximal_cones(f.rank(), rays, new_max);
    return refinement_between(refined, f);
}

}  // namespace toric
