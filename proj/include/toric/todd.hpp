#pragma once

#include "toric/equivariant.hpp"
#include "toric/polytope.hpp"
#include "toric/resolve.hpp"

namespace toric {

/// The summed character of the dual-cone monoid of a full-dimensional pointed
/// cone: numerator from the fundamental parallelepipeds of a half-open
/// triangulation of the dual, denominators from its rays.
inline RationalGenFun a_sigma(const Cone& sigma, const Int& cap = Int(1000000)) {
    if (!sigma.is_full_dimensional() || !sigma.is_pointed())
        throw std::invalid_argument(
            "a_sigma requires a full-dimensional pointed cone (its dual must be pointed)");
    return cone_generating_function(sigma.dual(), cap);
}

/// The localized equivariant Todd class of a complete fan: one generating
/// function per maximal cone, the coefficient of that orbit closure.
struct ToddClass {
    Fan fan;
    std::map<std::size_t, RationalGenFun> coeff;

    HomologyClass<RationalGenFun> as_homology_class() const {
        HomologyClass<RationalGenFun> c;
        c.coeff = coeff;
        return c;
    }
};

inline ToddClass equivariant_todd(const Fan& f, const Int& cap = Int(1000000)) {
    if (!f.is_complete())
        throw std::invalid_argument("the equivariant Todd class requires a complete fan");
    ToddClass t;
    t.fan = f;
    for (std::size_t m : f.maximal_cones()) t.coeff.emplace(m, a_sigma(f.cone_geometry(m), cap));
    return t;
}

/// Sum of all coefficients equals the constant 1 (the equivariant Euler
/// characteristic of the structure sheaf); exposed for checks and reports.
inline bool todd_unit_identity(const ToddClass& t) {
    RationalGenFun sum = RationalGenFun::zero(t.fan.rank());
    for (const auto& [id, c] : t.coeff) sum = gf_add(sum, c);
    return gf_equals(sum, RationalGenFun::constant(Rat(1), t.fan.rank()));
}

/// Vertex-cone decomposition of the lattice-point series of a polytope:
/// sum over vertices of e^v times the tangent-cone series. Equal, as a
/// rational function, to the finite sum of e^m over the lattice points.
inline RationalGenFun brion_character(const LatticePolytope& p, const Int& cap = Int(1000000)) {
    NormalFan nf = normal_fan(p);
    RationalGenFun sum = RationalGenFun::zero(p.rank());
    for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
        const Cone& normal = nf.fan.cone_geometry(nf.cone_of_vertex[vi]);
        sum = gf_add(sum, gf_scale_by_monomial(a_sigma(normal, cap), p.vertices()[vi]));
    }
    return sum;
}

struct CountOptions {
    int order = -1;            // truncation order; default rank + 2
    std::size_t xi_skip = 0;   // take a later hit of the generic-direction search
    Int cap = Int(1000000);    // parallelepiped enumeration cap
};

/// Lattice-point count of a full-dimensional polytope: the constant term of
/// the specialized vertex-cone decomposition. The per-vertex series have poles
/// that must cancel in the sum; anything but a non-negative integer constant
/// term signals an arithmetic bug.
inline Int count_lattice_points(const LatticePolytope& p, const CountOptions& opt = {}) {
    NormalFan nf = normal_fan(p);
    int order = opt.order >= 0 ? opt.order : static_cast<int>(p.rank()) + 2;
    std::vector<RationalGenFun> terms;
    std::vector<Vec> dens;
    for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
        const Cone& normal = nf.fan.cone_geometry(nf.cone_of_vertex[vi]);
        terms.push_back(gf_scale_by_monomial(a_sigma(normal, opt.cap), p.vertices()[vi]));
        for (const Vec& w : terms.back().denominator()) dens.push_back(w);
    }
    Vec xi = generic_direction(dens, p.rank(), opt.xi_skip);
    TruncatedSeries total;
    total.lead = 0;
    total.order = order;
    total.coeff.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    for (const RationalGenFun& t : terms) total = total + specialize(t, xi, order);
    if (!total.pole_free())
        throw std::runtime_error("count_lattice_points: pole parts did not cancel");
    Rat c0 = total.at(0);
    if (denominator(c0) != 1 || c0 < 0)
        throw std::runtime_error("count_lattice_points: constant term " + to_string(c0) +
                                 " is not a non-negative integer");
    return numerator(c0);
}

struct CrosscheckReport {
    bool passed = true;
    std::vector<std::string> lines;
};

/// Per-cone comparison of the expanded Poincare-dual restriction of the Todd
/// class against the product of dual-basis Todd factors, degree by degree.
inline CrosscheckReport smooth_crosscheck(const Fan& f, int order = -1,
                                          const Int& cap = Int(1000000)) {
    if (!f.is_complete() || !f.is_smooth())
        throw std::invalid_argument("smooth cross-check requires a complete smooth fan");
    int K = order >= 0 ? order : static_cast<int>(f.rank()) + 2;
    ToddClass todd = equivariant_todd(f, cap);
    auto pd = localized_pd_restrict(f, todd.as_homology_class());
    CrosscheckReport rep;
    for (std::size_t m : f.maximal_cones()) {
        Poly lhs = expand_pd_restriction(pd.at(m), K);
        Poly rhs = smooth_todd_series(f, m, K);
        int mismatch = -1;
        for (int k = 0; k <= K && mismatch < 0; ++k)
            if (!(lhs.homogeneous_component(k) == rhs.homogeneous_component(k))) mismatch = k;
        std::string id = Fan::id_string(f.cones()[m].ray_ids);
        if (mismatch < 0) {
            rep.lines.push_back("cone " + id + ": equal through degree " + std::to_string(K));
        } else {
            rep.passed = false;
            rep.lines.push_back("cone " + id + ": first mismatch in degree " +
                                std::to_string(mismatch));
        }
    }
    return rep;
}

/// Proof-route comparison: resolve, assemble the Todd class upstairs, push it
/// forward along the refinement, and compare coefficientwise with the direct
/// formula downstairs.
inline CrosscheckReport subdivision_crosscheck(const Fan& f, const Int& cap = Int(1000000)) {
    if (!f.is_complete())
        throw std::invalid_argument("subdivision cross-check requires a complete fan");
    Resolution res = resolve_to_smooth(f);
    ToddClass fine = equivariant_todd(res.fan, cap);
    HomologyClass<RationalGenFun> pushed = pushforward_subdivision(res.map, fine.as_homology_class());
    ToddClass direct = equivariant_todd(f, cap);
    CrosscheckReport rep;
    for (std::size_t m : f.maximal_cones()) {
        auto it = pushed.coeff.find(m);
        RationalGenFun p =
            it == pushed.coeff.end() ? RationalGenFun::zero(f.rank()) : it->second;
        bool ok = gf_equals(p, direct.coeff.at(m));
        std::string id = Fan::id_string(f.cones()[m].ray_ids);
        rep.lines.push_back("cone " + id + ": pushforward " +
                            (ok ? "matches" : "DIFFERS FROM") + " the direct coefficient");
        if (!ok) rep.passed = false;
    }
    for (const auto& [id, value] : pushed.coeff)
        if (!f.cones()[id].maximal && !value.is_zero()) {
            rep.passed = false;
            rep.lines.push_back("cone " + Fan::id_string(f.cones()[id].ray_ids) +
                                ": unexpected pushforward support");
        }
    return rep;
}

}  // namespace toric
