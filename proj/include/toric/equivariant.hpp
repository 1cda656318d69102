#pragma once

#include "toric/genfun.hpp"
#include "toric/piecewise.hpp"

namespace toric {

/// Formal sum over the cones of a fan: keys are cone ids, values live either
/// in S(M) (polynomial flavor) or in the localized coefficient ring of
/// rational generating functions.
template <class Coeff>
struct HomologyClass {
    std::map<std::size_t, Coeff> coeff;
};

/// One relation of the orbit-closure presentation: pairing a sigma-perp
/// covector against the cofacet generators of sigma.
struct PresentationRelation {
    std::size_t sigma;                                  // cone id
    Vec covector;                                       // l in sigma-perp ∩ M
    std::vector<std::pair<std::size_t, Int>> terms;     // (cofacet id, <l, n>)
};

struct HomologyPresentation {
    std::vector<std::size_t> generators;  // all cone ids
    std::vector<PresentationRelation> relations;
};

/// Generators-and-relations presentation over H^*(BT): one generator per cone
/// and, for every cone, one relation per Hermite-basis covector of its
/// perpendicular lattice.
inline HomologyPresentation homology_presentation(const Fan& f) {
    HomologyPresentation out;
    std::size_t d = f.rank();
    for (std::size_t c = 0; c < f.cones().size(); ++c) out.generators.push_back(c);
    for (std::size_t c = 0; c < f.cones().size(); ++c) {
        const Cone& sigma = f.cone_geometry(c);
        Mat perp = integer_kernel_basis(sigma.rays(), d);
        if (perp.empty()) continue;
        std::vector<std::size_t> cofs = f.cofacets(c);
        for (const Vec& l : perp) {
            PresentationRelation rel;
            rel.sigma = c;
            rel.covector = l;
            for (std::size_t tau : cofs) {
                Int pairing = dot(l, cofacet_generator(sigma, f.cone_geometry(tau)));
                if (pairing != 0) rel.terms.emplace_back(tau, pairing);
            }
            out.relations.push_back(std::move(rel));
        }
    }
    return out;
}

/// Ranks of the presentation after killing the H^*(BT) action: for each k,
/// the free space on cones of dimension d-k modulo the degree-matched
/// relations coming from cones of dimension d-k-1. A desk check of the module
/// structure, not a statement from the source material.
inline std::vector<std::size_t> nonequivariant_ranks(const Fan& f) {
    std::size_t d = f.rank();
    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<std::size_t> gens = f.cones_of_dim(d - k);
        std::map<std::size_t, std::size_t> col;
        for (std::size_t i = 0; i < gens.size(); ++i) col[gens[i]] = i;
        QMat rows;
        if (k + 1 <= d) {
            for (std::size_t c : f.cones_of_dim(d - k - 1)) {
                const Cone& sigma = f.cone_geometry(c);
                Mat perp = integer_kernel_basis(sigma.rays(), d);
                std::vector<std::size_t> cofs = f.cofacets(c);
                for (const Vec& l : perp) {
                    QVec row(gens.size(), Rat(0));
                    bool nonzero = false;
                    for (std::size_t tau : cofs) {
                        Int pairing = dot(l, cofacet_generator(sigma, f.cone_geometry(tau)));
                        if (pairing != 0) {
                            row[col[tau]] += Rat(pairing);
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
        std::size_t r = rows.empty() ? 0 : row_reduce(rows);
        ranks.push_back(gens.size() - r);
    }
    return ranks;
}

/// Pushforward along a subdivision: coefficients of equal-dimensional pieces
/// add up on the coarse cone. Coeff must support operator+ (or gf_add via the
/// specialization below).
template <class Coeff, class Add>
HomologyClass<Coeff> pushforward_subdivision(const RefinementMap& m,
                                             const HomologyClass<Coeff>& c, Add add_fn) {
    HomologyClass<Coeff> out;
    for (const auto& [src, value] : c.coeff) {
        if (src >= m.source.cones().size())
            throw std::invalid_argument("pushforward: coefficient on unknown cone");
        std::size_t tgt = m.target_of[src];
        if (m.source.cones()[src].dim != m.target.cones()[tgt].dim) continue;
        auto it = out.coeff.find(tgt);
        if (it == out.coeff.end())
            out.coeff.emplace(tgt, value);
        else
            it->second = add_fn(it->second, value);
    }
    return out;
}

inline HomologyClass<RationalGenFun> pushforward_subdivision(
    const RefinementMap& m, const HomologyClass<RationalGenFun>& c) {
    return pushforward_subdivision(m, c, [](const RationalGenFun& a, const RationalGenFun& b) {
        return gf_add(a, b);
    });
}

inline HomologyClass<Poly> pushforward_subdivision(const RefinementMap& m,
                                                   const HomologyClass<Poly>& c) {
    return pushforward_subdivision(m, c, [](const Poly& a, const Poly& b) { return a + b; });
}

/// Per-cone restriction of the Poincare-dual piecewise function of a
/// localized class supported on maximal cones. The genfun part carries the
/// argument twist v -> -v (exponent negation); the polynomial factor is the
/// restriction of phi_sigma to its own cone and is multiplied in only during
/// series expansion, since the product leaves the genfun ring.
struct PDRestriction {
    RationalGenFun series_part;
    Poly poly_factor;
};

inline std::map<std::size_t, PDRestriction> localized_pd_restrict(
    const Fan& f, const HomologyClass<RationalGenFun>& c) {
    if (!f.is_complete() || !f.is_simplicial())
        throw std::invalid_argument("PD restriction requires a complete simplicial fan");
    for (const auto& [id, value] : c.coeff)
        if (!f.cones()[id].maximal)
            throw std::invalid_argument("PD restriction: coefficient on a non-maximal cone");
    CourantData courant = courant_and_phi(f);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) pos[f.maximal_cones()[i]] = i;
    std::map<std::size_t, PDRestriction> out;
    for (std::size_t m : f.maximal_cones()) {
        PDRestriction r;
        auto it = c.coeff.find(m);
        if (it == c.coeff.end()) {
            r.series_part = RationalGenFun::zero(f.rank());
            r.poly_factor = Poly::zero(f.rank());
        } else {
            r.series_part = gf_exponent_negated(it->second);
            r.poly_factor = courant.phi[m][pos[m]];
        }
        out.emplace(m, std::move(r));
    }
    return out;
}

/// Expands a PD restriction as a truncated polynomial: possible because the
/// polynomial factor carries one exact linear-form divisor per denominator
/// factor of the genfun part.
inline Poly expand_pd_restriction(const PDRestriction& r, int K) {
    std::size_t d = r.poly_factor.nvars();
    if (r.series_part.is_zero()) return Poly::zero(d);
    Poly q = r.poly_factor;
    Poly acc = Poly::constant(Rat(1), d);
    int sign_flips = 0;
    for (const Vec& w : r.series_part.denominator()) {
        Poly l = Poly::linear_form(w);
        auto divided = q.divided_by_linear(l);
        if (!divided)
            throw std::invalid_argument(
                "PD expansion: polynomial factor is not divisible by a denominator form");
        q = std::move(*divided);
        acc = poly_mul_trunc(acc, poly_inverse_unit(poly_expm1_over_linear(l, K), K), K);
        ++sign_flips;
    }
    Poly numerator = Poly::zero(d);
    for (const auto& [m, cf] : r.series_part.numerator().terms()) {
        QVec coeffs(m.begin(), m.end());
        numerator = numerator + poly_exp_linear(Poly::linear_form(coeffs), K).scaled(cf);
    }
    Poly result = poly_mul_trunc(poly_mul_trunc(numerator, q, K), acc, K);
    if (sign_flips % 2) result = result.scaled(Rat(-1));
    return result;
}

/// Truncation of the product of dual-basis Todd factors on a smooth maximal
/// cone; the constant term is always 1.
inline Poly smooth_todd_series(const Fan& f, std::size_t cone_id, int K) {
    const Cone& sigma = f.cone_geometry(cone_id);
    if (!sigma.is_full_dimensional() || !sigma.is_simplicial() || multiplicity(sigma) != 1)
        throw std::invalid_argument("smooth_todd_series requires a smooth maximal cone");
    std::size_t d = f.rank();
    Mat rays;
    for (const Vec& r : sigma.rays()) rays.push_back(r);
    QMat inv = inverse(rays);
    Poly result = Poly::constant(Rat(1), d);
    for (std::size_t k = 0; k < d; ++k) {
        QVec covector(d);
        for (std::size_t j = 0; j < d; ++j) covector[j] = inv[j][k];
        result = poly_mul_trunc(result, poly_todd_linear(Poly::linear_form(covector), K), K);
    }
    return result;
}

}  // namespace toric
