#pragma once

#include <set>

#include "toric/dd.hpp"

namespace toric {

/// Which lattice a vector or cone lives in: N (cocharacters) or its dual M
/// (characters). Purely informational; pairings are plain integer dots.
enum class Side { N, M };

inline Side flip(Side s) { return s == Side::N ? Side::M : Side::N; }

/// A rational polyhedral cone, stored by its extreme rays (primitive,
/// lex-sorted) plus an explicit lineality basis when it is not pointed.
/// The supporting description (facet normals + span equations) is computed
/// once at construction; instances are immutable values.
class Cone {
  public:
    Cone() = default;

    static Cone from_generators(std::size_t rank, const std::vector<Vec>& gens, Side side = Side::N,
                                const std::vector<Vec>& lineality_gens = {}) {
        for (const Vec& g : gens)
            if (g.size() != rank) throw std::invalid_argument("generator has wrong ambient rank");
        for (const Vec& l : lineality_gens)
            if (l.size() != rank) throw std::invalid_argument("lineality vector has wrong ambient rank");
        Cone c;
        c.rank_ = rank;
        c.side_ = side;
        GeneratorDescription mg = minimal_generators(rank, gens, lineality_gens);
        c.rays_ = std::move(mg.rays);
        c.lineality_ = std::move(mg.lineality);
        GeneratorDescription dual = dual_description(rank, c.rays_, c.lineality_);
        c.facet_normals_ = std::move(dual.rays);
        c.span_equations_ = std::move(dual.lineality);
        c.dim_ = rank - c.span_equations_.size();
        return c;
    }

    std::size_t ambient_rank() const { return rank_; }
    Side side() const { return side_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Vec>& lineality() const { return lineality_; }
    /// Supporting inequalities: <n, x> >= 0 on the cone.
    const std::vector<Vec>& facet_normals() const { return facet_normals_; }
    /// Equations cutting out the linear span.
    const std::vector<Vec>& span_equations() const { return span_equations_; }

    bool is_pointed() const { return lineality_.empty(); }
    bool is_full_dimensional() const { return dim_ == rank_; }
    bool is_simplicial() const { return is_pointed() && rays_.size() == dim_; }
    bool is_zero() const { return dim_ == 0; }

    bool contains(const Vec& v) const {
        for (const Vec& b : span_equations_)
            if (dot(b, v) != 0) return false;
        for (const Vec& n : facet_normals_)
            if (dot(n, v) < 0) return false;
        return true;
    }

    bool contains(const Cone& other) const {
        for (const Vec& r : other.rays())
            if (!contains(r)) return false;
        for (const Vec& l : other.lineality())
            if (!contains(l) || !contains(neg(l))) return false;
        return true;
    }

    /// The dual cone {u : <u, v> >= 0 for all v in the cone}, on the other side.
    Cone dual() const {
        return from_generators(rank_, facet_normals_, flip(side_), span_equations_);
    }

    /// Generator view including lineality directions both ways (for display).
    std::vector<Vec> generators_with_lineality() const {
        std::vector<Vec> g = rays_;
        for (const Vec& l : lineality_) {
            g.push_back(l);
            g.push_back(neg(l));
        }
        return g;
    }

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
    }

  private:
    std::size_t rank_ = 0;
    Side side_ = Side::N;
    std::size_t dim_ = 0;
    std::vector<Vec> rays_;
    std::vector<Vec> lineality_;
    std::vector<Vec> facet_normals_;
    std::vector<Vec> span_equations_;
};

inline Cone dual_cone(const Cone& c) { return c.dual(); }

/// All faces of a pointed cone as sorted subsets of ray indices (the cone
/// itself and the zero face included). Faces are exactly the intersections of
/// facet tight-sets.
inline std::vector<std::vector<std::size_t>> face_ray_sets(const Cone& c) {
    if (!c.is_pointed()) throw std::invalid_argument("face enumeration requires a pointed cone");
    std::set<std::vector<std::size_t>> faces;
    std::vector<std::size_t> all(c.rays().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    faces.insert(all);
    std::vector<std::vector<std::size_t>> tight_sets;
    for (const Vec& n : c.facet_normals()) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < c.rays().size(); ++i)
            if (dot(n, c.rays()[i]) == 0) t.push_back(i);
        tight_sets.push_back(t);
        faces.insert(t);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::size_t>> cur(faces.begin(), faces.end());
        for (const auto& f : cur)
            for (const auto& t : tight_sets) {
                std::vector<std::size_t> meet;
                std::set_intersection(f.begin(), f.end(), t.begin(), t.end(), std::back_inserter(meet));
                if (faces.insert(meet).second) grew = true;
            }
    }
    if (c.dim() > 0) faces.insert({});  // the zero face
    return {faces.begin(), faces.end()};
}

/// Index of the sublattice spanned by the rays inside the lattice of the span.
/// Equals 1 exactly for smooth cones.
inline Int multiplicity(const Cone& c) {
    if (!c.is_simplicial()) throw std::invalid_argument("multiplicity requires simplicial cone");
    if (c.dim() == 0) return 1;
    return elementary_divisor_product(c.rays());
}

inline bool is_smooth_cone(const Cone& c) { return c.is_simplicial() && multiplicity(c) == 1; }

/// True when `sub` is a face of `super` (spanned by a subset of its rays and
/// cut out by a supporting hyperplane).
inline bool is_face_of(const Cone& sub, const Cone& super) {
    if (!sub.is_pointed() || !super.is_pointed()) return false;
    if (sub.ambient_rank() != super.ambient_rank()) return false;
    std::vector<std::size_t> idx;
    for (const Vec& r : sub.rays()) {
        auto it = std::find(super.rays().begin(), super.rays().end(), r);
        if (it == super.rays().end()) return false;
        idx.push_back(static_cast<std::size_t>(it - super.rays().begin()));
    }
    std::sort(idx.begin(), idx.end());
    auto faces = face_ray_sets(super);
    return std::find(faces.begin(), faces.end(), idx) != faces.end();
}

/// Lattice vector representing the generator of the rank-one quotient
/// semigroup (tau ∩ N)/(sigma ∩ N) when sigma is a facet of tau. The
/// representative is the canonical lift with its span(sigma) component reduced
/// into the Hermite fundamental domain; pairings with sigma-perp covectors do
/// not depend on the lift.
inline Vec cofacet_generator(const Cone& sigma, const Cone& tau) {
    if (sigma.ambient_rank() != tau.ambient_rank())
        throw std::invalid_argument("cofacet_generator: ambient rank mismatch");
    if (sigma.dim() + 1 != tau.dim() || !is_face_of(sigma, tau))
        throw std::invalid_argument("cofacet_generator: sigma is not a facet of tau");
    std::size_t rank = tau.ambient_rank();
    Mat lsig = saturation_basis(sigma.rays(), rank);
    Mat ltau = saturation_basis(tau.rays(), rank);
    std::size_t k = lsig.size();
    // coordinates of the sigma-lattice basis inside the tau-lattice basis
    Mat coords;
    for (const Vec& b : lsig) {
        auto c = lattice_coordinates(ltau, b);
        if (!c) throw std::logic_error("cofacet_generator: saturation inclusion failed");
        coords.push_back(*c);
    }
    SmithResult s = coords.empty() ? SmithResult{Mat{}, identity_mat(k + 1), Mat{}, 0} : smith(coords);
    const Mat& v = s.v;  // (k+1) x (k+1)
    auto quotient_class = [&](const Vec& x) -> Int {
        auto c = lattice_coordinates(ltau, x);
        if (!c) throw std::logic_error("cofacet_generator: vector outside tau lattice");
        Int cls = 0;
        for (std::size_t i = 0; i <= k; ++i) cls += (*c)[i] * v[i][k];
        return cls;
    };
    int orient = 0;
    for (const Vec& r : tau.rays()) {
        Int cls = quotient_class(r);
        if (cls != 0) {
            orient = sign(cls);
            break;
        }
    }
    if (orient == 0) throw std::logic_error("cofacet_generator: degenerate quotient");
    // solve for a lattice vector with quotient class +1
    Mat vinv = to_integer(inverse(v));
    Vec gen_coords(k + 1);
    for (std::size_t j = 0; j <= k; ++j) gen_coords[j] = Int(orient) * vinv[k][j];
    Vec w = zero_vec(rank);
    for (std::size_t i = 0; i <= k; ++i) w = add(w, scale(gen_coords[i], ltau[i]));
    return detail::reduce_mod_lineality(w, lsig);
}

}  // namespace toric
