#pragma once

#include "toric/cone.hpp"

namespace toric {

/// Simplicial cone with per-ray openness: lattice points are sums
/// sum(lambda_i * ray_i) with lambda_i >= 0, and lambda_i > 0 where
/// open_flags[i] is set (the facet opposite ray i is excluded).
struct HalfOpenSimplicialCone {
    std::size_t rank = 0;
    std::vector<Vec> rays;         // linearly independent, primitive
    std::vector<bool> open_flags;  // same length as rays

    /// Exact membership test (rational barycentric coordinates).
    bool contains(const Vec& v) const {
        if (rays.empty()) return is_zero(v);
        QVec b(v.begin(), v.end());
        auto lam = solve_left(Mat(rays), b);
        if (!lam) return false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if ((*lam)[i] < 0) return false;
            if (open_flags[i] && (*lam)[i] == 0) return false;
        }
        // solve_left gives a particular solution; rays are independent, but v
        // must also lie in their span
        QVec recon(rank, Rat(0));
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t j = 0; j < rank; ++j) recon[j] += (*lam)[i] * Rat(rays[i][j]);
        for (std::size_t j = 0; j < rank; ++j)
            if (recon[j] != Rat(v[j])) return false;
        return true;
    }
};

/// Lattice points of the half-open fundamental parallelepiped, enumerated via
/// the Smith normal form of the ray matrix. Count equals the multiplicity of
/// the closed cone; 0 is included exactly when no flag is open.
inline std::vector<Vec> parallelepiped_points(const HalfOpenSimplicialCone& c,
                                              const Int& cap = Int(1000000)) {
    std::size_t k = c.rays.size();
    if (k == 0) return {zero_vec(c.rank)};
    Mat r(c.rays);
    if (rank_of(r) != k) throw std::invalid_argument("parallelepiped_points: dependent rays");
    SmithResult s = smith(r);
    Int count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= s.d[i][i];
    if (count > cap)
        throw std::runtime_error("parallelepiped enumeration cap exceeded: " + count.str() +
                                 " points > cap " + cap.str());
    std::vector<Vec> points;
    std::vector<Int> tuple(k, Int(0));
    QMat uq = to_rational(s.u);
    while (true) {
        // lambda = mu * U with mu_i = tuple_i / d_i, then reduced to the
        // half-open box coordinatewise
        QVec lambda(k, Rat(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i) lambda[j] += Rat(tuple[i], s.d[i][i]) * uq[i][j];
        for (std::size_t i = 0; i < k; ++i) {
            Rat f = lambda[i];
            Int fl = numerator(f) / denominator(f);
            if (f - Rat(fl) < 0) fl -= 1;
            f -= Rat(fl);
            if (c.open_flags[i] && f == 0) f = 1;
            lambda[i] = f;
        }
        QVec acc(c.rank, Rat(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < c.rank; ++j) acc[j] += lambda[i] * Rat(c.rays[i][j]);
        Vec x(c.rank);
        for (std::size_t j = 0; j < c.rank; ++j) {
            if (denominator(acc[j]) != 1)
                throw std::logic_error("parallelepiped point not integral");
            x[j] = numerator(acc[j]);
        }
        points.push_back(std::move(x));
        // advance tuple
        std::size_t pos = 0;
        while (pos < k) {
            tuple[pos] += 1;
            if (tuple[pos] < s.d[pos][pos]) break;
            tuple[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    std::sort(points.begin(), points.end(), lex_less);
    return points;
}

namespace detail {

/// Barycentric coordinates of q in the basis given by the simplex rays
/// (solved inside the span; q must lie in the span).
inline QVec barycentric(const std::vector<Vec>& rays, const QVec& q) {
    auto lam = solve_left(to_rational(Mat(rays)), q);
    if (!lam) throw std::logic_error("barycentric: point outside span");
    return *lam;
}

}  // namespace detail

/// Exact half-open triangulation of a pointed cone: a placing triangulation of
/// the extreme rays (lex order) whose pieces are made half-open against a
/// generic interior point of the first simplex, so the pieces partition the
/// lattice points of the cone with no overlap.
inline std::vector<HalfOpenSimplicialCone> half_open_triangulation(const Cone& c) {
    if (!c.is_pointed()) throw std::invalid_argument("triangulate requires pointed cone");
    std::size_t rank = c.ambient_rank();
    if (c.dim() == 0) {
        return {HalfOpenSimplicialCone{rank, {}, {}}};
    }
    const std::vector<Vec>& rays = c.rays();
    std::vector<std::vector<std::size_t>> simplices;  // maximal, by ray index
    std::vector<std::size_t> placed;
    std::size_t cur_dim = 0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (placed.empty()) {
            simplices.push_back({i});
            placed.push_back(i);
            cur_dim = 1;
            continue;
        }
        Mat span_rows;
        for (std::size_t p : placed) span_rows.push_back(rays[p]);
        Mat with_new = span_rows;
        with_new.push_back(rays[i]);
        if (rank_of(with_new) > cur_dim) {
            // dimension raising: join the new ray with every simplex
            for (auto& s : simplices) s.push_back(i);
            ++cur_dim;
        } else {
            // same span: cone over the visible part of the boundary
            std::vector<Vec> placed_vecs;
            for (std::size_t p : placed) placed_vecs.push_back(rays[p]);
            Cone partial = Cone::from_generators(rank, placed_vecs);
            std::set<std::vector<std::size_t>> fresh;
            for (const Vec& a : partial.facet_normals()) {
                if (dot(a, rays[i]) >= 0) continue;  // not visible
                for (const auto& s : simplices) {
                    std::vector<std::size_t> tight;
                    for (std::size_t idx : s)
                        if (dot(a, rays[idx]) == 0) tight.push_back(idx);
                    if (tight.size() == cur_dim - 1) {
                        tight.push_back(i);
                        std::sort(tight.begin(), tight.end());
                        fresh.insert(tight);
                    }
                }
            }
            for (const auto& s : fresh) simplices.push_back(s);
        }
        placed.push_back(i);
    }

    // generic interior point: weighted sum of the first simplex's rays, with
    // deterministic weight escalation until no facet hyperplane contains it
    std::vector<HalfOpenSimplicialCone> out;
    for (Int base = 1;; base += 1) {
        QVec q(rank, Rat(0));
        Int w = 1;
        for (std::size_t idx : simplices.front()) {
            for (std::size_t j = 0; j < rank; ++j) q[j] += Rat(w * rays[idx][j]);
            w *= (base + 1);
        }
        bool generic = true;
        std::vector<std::vector<bool>> flags(simplices.size());
        for (std::size_t si = 0; si < simplices.size() && generic; ++si) {
            std::vector<Vec> srays;
            for (std::size_t idx : simplices[si]) srays.push_back(rays[idx]);
            QVec lam = detail::barycentric(srays, q);
            flags[si].resize(srays.size());
            for (std::size_t j = 0; j < lam.size(); ++j) {
                if (lam[j] == 0) {
                    generic = false;
                    break;
                }
                flags[si][j] = lam[j] < 0;  // q strictly outside: exclude that facet
            }
        }
        if (!generic) continue;
        for (std::size_t si = 0; si < simplices.size(); ++si) {
            HalfOpenSimplicialCone ho;
            ho.rank = rank;
            for (std::size_t idx : simplices[si]) ho.rays.push_back(rays[idx]);
            ho.open_flags = flags[si];
            out.push_back(std::move(ho));
        }
        break;
    }
    return out;
}

}  // namespace toric
