#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "toric/cech.hpp"
#include "toric/equivariant.hpp"
#include "toric/resolve.hpp"

using namespace toric;

namespace {
Vec v2(long a, long b) { return Vec{Int(a), Int(b)}; }

Fan p1_fan() { return Fan::from_maximal_cones(1, {{Int(1)}, {Int(-1)}}, {{0}, {1}}); }

Fan p2_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, -1)}, {{0, 1}, {1, 2}, {0, 2}});
}

Fan p1xp1_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)},
                                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan p112_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, -2)}, {{0, 1}, {1, 2}, {0, 2}});
}

/// Independent recomputation of <l, n_sigma_tau>: enumerate small lattice
/// points of tau on the positive side of sigma's supporting facet normal,
/// take one with the minimal positive pairing (a class-one point), and pair
/// it with l directly.
Int cofacet_pairing_oracle(const Fan& f, std::size_t sigma_id, std::size_t tau_id, const Vec& l) {
    const Cone& sigma = f.cone_geometry(sigma_id);
    const Cone& tau = f.cone_geometry(tau_id);
    // supporting normal of sigma inside tau
    Vec a;
    for (const Vec& n : tau.facet_normals()) {
        bool on_sigma = true;
        for (const Vec& r : sigma.rays())
            if (dot(n, r) != 0) on_sigma = false;
        if (on_sigma) {
            a = n;
            break;
        }
    }
    REQUIRE_FALSE(a.empty());
    Int best_cls = 0;
    Int best_pair = 0;
    for (const Vec& p : oracle::box_points(f.rank(), 6)) {
        if (!tau.contains(p)) continue;
        Int cls = dot(a, p);
        if (cls <= 0) continue;
        if (best_cls == 0 || cls < best_cls) {
            best_cls = cls;
            best_pair = dot(l, p);
        }
    }
    REQUIRE(best_cls > 0);
    return best_pair;
}
}  // namespace

TEST_CASE("homology presentation of the projective line") {
    Fan f = p1_fan();
    HomologyPresentation pres = homology_presentation(f);
    CHECK(pres.generators.size() == 3);  // {0}, two rays
    REQUIRE(pres.relations.size() == 1);
    const PresentationRelation& rel = pres.relations.front();
    CHECK(f.cones()[rel.sigma].ray_ids.empty());
    CHECK(rel.covector == Vec{Int(1)});
    REQUIRE(rel.terms.size() == 2);
    // rays sorted lex: id 0 = -e1, id 1 = +e1
    std::map<std::size_t, Int> by_cone;
    for (const auto& [tau, k] : rel.terms) by_cone[f.cones()[tau].ray_ids.front()] = k;
    CHECK(by_cone[0] == -1);
    CHECK(by_cone[1] == 1);
}

TEST_CASE("maximal cones contribute no relations") {
    Fan f = p2_fan();
    for (const auto& rel : homology_presentation(f).relations)
        CHECK(f.cones()[rel.sigma].dim < 2);
}

TEST_CASE("presentation integers match the small-point oracle") {
    for (const Fan& f : {p1_fan(), p2_fan(), p112_fan(), p1xp1_fan()}) {
        HomologyPresentation pres = homology_presentation(f);
        for (const auto& rel : pres.relations) {
            for (const auto& [tau, k] : rel.terms)
                CHECK(k == cofacet_pairing_oracle(f, rel.sigma, tau, rel.covector));
        }
    }
}

TEST_CASE("presentation of the projective plane at a ray") {
    Fan f = p2_fan();
    // sigma = cone(e1): ray id of (1,0) is 2 (rays sorted lex)
    std::size_t sigma = f.cone_id({2});
    HomologyPresentation pres = homology_presentation(f);
    for (const auto& rel : pres.relations) {
        if (rel.sigma != sigma) continue;
        CHECK(rel.covector == v2(0, 1));
        std::map<std::size_t, Int> terms(rel.terms.begin(), rel.terms.end());
        CHECK(terms[f.cone_id({1, 2})] == 1);   // cone(e1, e2)
        CHECK(terms[f.cone_id({0, 2})] == -1);  // cone(e1, -e1-e2)
    }
}

TEST_CASE("nonequivariant ranks of the standard examples") {
    CHECK(nonequivariant_ranks(p2_fan()) == std::vector<std::size_t>{1, 1, 1});
    CHECK(nonequivariant_ranks(p1xp1_fan()) == std::vector<std::size_t>{1, 2, 1});
    CHECK(nonequivariant_ranks(p112_fan()) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("pushforward along the identity and a split cone") {
    Fan f = Fan::from_maximal_cones(2, {v2(1, 0), v2(1, 2)}, {{0, 1}});
    RefinementMap id = identity_refinement(f);
    HomologyClass<Poly> c;
    c.coeff[f.cone_id({0, 1})] = Poly::constant(Rat(3), 2);
    auto pushed = pushforward_subdivision(id, c);
    CHECK(pushed.coeff.at(f.cone_id({0, 1})) == Poly::constant(Rat(3), 2));

    RefinementMap split = stellar_subdivision(f, v2(1, 1));
    HomologyClass<Poly> ones;
    for (std::size_t m : split.source.maximal_cones())
        ones.coeff[m] = Poly::constant(Rat(1), 2);
    auto down = pushforward_subdivision(split, ones);
    CHECK(down.coeff.at(f.cone_id({0, 1})) == Poly::constant(Rat(2), 2));
}

TEST_CASE("pushforward of localized coefficients obeys subdivision additivity") {
    Fan f = Fan::from_maximal_cones(2, {v2(1, 0), v2(1, 2)}, {{0, 1}});
    RefinementMap split = stellar_subdivision(f, v2(1, 1));
    HomologyClass<RationalGenFun> c;
    for (std::size_t m : split.source.maximal_cones())
        c.coeff[m] = cone_generating_function(split.source.cone_geometry(m).dual());
    auto down = pushforward_subdivision(split, c);
    RationalGenFun expect = cone_generating_function(f.cone_geometry(f.cone_id({0, 1})).dual());
    CHECK(gf_equals(down.coeff.at(f.cone_id({0, 1})), expect));
}

TEST_CASE("pushforward commutes with the module action of M") {
    std::mt19937 rng(131);
    Fan f = p112_fan();
    Resolution res = resolve_to_smooth(f);
    for (int trial = 0; trial < 5; ++trial) {
        HomologyClass<Poly> c;
        for (std::size_t id = 0; id < res.fan.cones().size(); ++id) {
            std::uniform_int_distribution<int> coin(0, 2);
            if (coin(rng)) c.coeff[id] = Poly::constant(Rat(coin(rng)), 2);
        }
        Vec m = oracle::random_vec(rng, 2, -3, 3);
        Poly lin = Poly::linear_form(m);
        HomologyClass<Poly> scaled;
        for (const auto& [id, p] : c.coeff) scaled.coeff[id] = p * lin;
        auto a = pushforward_subdivision(res.map, scaled);
        auto b = pushforward_subdivision(res.map, c);
        for (auto& [id, p] : b.coeff) p = p * lin;
        CHECK(a.coeff.size() == b.coeff.size());
        for (const auto& [id, p] : a.coeff) CHECK(p == b.coeff.at(id));
    }
}

TEST_CASE("Courant functions of the projective plane") {
    Fan f = p2_fan();
    CourantData cd = courant_and_phi(f);
    // xi for ray e1 (ray id 2): e1* on cone(e1,e2), e1*-e2* on cone(e1,-e1-e2), 0 elsewhere
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) pos[f.maximal_cones()[i]] = i;
    const PiecewisePoly& xi = cd.xi[2];
    Poly x = Poly::variable(0, 2), y = Poly::variable(1, 2);
    CHECK(xi[pos[f.cone_id({1, 2})]] == x);
    CHECK(xi[pos[f.cone_id({0, 2})]] == x - y);
    CHECK(xi[pos[f.cone_id({0, 1})]].is_zero());
    for (const auto& pp : cd.xi) CHECK(piecewise_continuous(f, pp));
    for (const auto& pp : cd.phi) CHECK(piecewise_continuous(f, pp));
    // phi of cone(e1,e2) restricted to itself is x*y; zero on the others
    std::size_t c12 = f.cone_id({1, 2});
    CHECK(cd.phi[c12][pos[c12]] == x * y);
    CHECK(cd.phi[c12][pos[f.cone_id({0, 1})]].is_zero());
    CHECK(cd.phi[c12][pos[f.cone_id({0, 2})]].is_zero());
}

TEST_CASE("phi of the singular cone carries the multiplicity factor") {
    Fan f = p112_fan();
    CourantData cd = courant_and_phi(f);
    std::size_t sing = SIZE_MAX;
    for (std::size_t m : f.maximal_cones())
        if (multiplicity(f.cone_geometry(m)) == 2) sing = m;
    REQUIRE(sing != SIZE_MAX);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) pos[f.maximal_cones()[i]] = i;
    // product of the two dual-basis covectors on the cone itself, times 2
    const Cone& geo = f.cone_geometry(sing);
    QMat inv = inverse(Mat(geo.rays()));
    QVec u0(2), u1(2);
    for (std::size_t j = 0; j < 2; ++j) {
        u0[j] = inv[j][0];
        u1[j] = inv[j][1];
    }
    Poly expect = (Poly::linear_form(u0) * Poly::linear_form(u1)).scaled(Rat(2));
    CHECK(cd.phi[sing][pos[sing]] == expect);
    // phi support invariant
    for (std::size_t other : f.maximal_cones())
        if (other != sing) CHECK(cd.phi[sing][pos[other]].is_zero());
}

TEST_CASE("courant_and_phi rejects unsuitable fans") {
    Fan incomplete = Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1)}, {{0, 1}});
    CHECK_THROWS_AS(courant_and_phi(incomplete), std::invalid_argument);
}

TEST_CASE("piecewise polynomial dimensions") {
    Fan p2 = p2_fan();
    CHECK(piecewise_poly_dims(p2, 0) == 1);
    CHECK(piecewise_poly_dims(p2, 1) == 3);
    CHECK(piecewise_poly_dims(p2, 2) == 6);
    Fan p1 = p1_fan();
    CHECK(piecewise_poly_dims(p1, 0) == 1);
    CHECK(piecewise_poly_dims(p1, 1) == 2);
    CHECK(piecewise_poly_dims(p1, 2) == 2);
}

TEST_CASE("cohomology dimensions of the point fan") {
    Fan pt = Fan::from_maximal_cones(3, {}, {});
    auto dims = cech_cohomology_dims(pt, 4);
    CHECK(dims == std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("cohomology dimensions of the projective line") {
    auto dims = cech_cohomology_dims(p1_fan(), 6);
    CHECK(dims == std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 2});
}

TEST_CASE("cohomology dimensions of the projective plane") {
    auto dims = cech_cohomology_dims(p2_fan(), 4);
    CHECK(dims == std::vector<std::size_t>{1, 0, 3, 0, 6});
}

TEST_CASE("cohomology agrees with piecewise polynomials on simplicial fans") {
    for (const Fan& f : {p1_fan(), p2_fan(), p1xp1_fan(), p112_fan()}) {
        int n_max = 2 * static_cast<int>(f.rank());
        auto dims = cech_cohomology_dims(f, n_max);
        for (int n = 0; n <= n_max; ++n) {
            if (n % 2) {
                CHECK(dims[static_cast<std::size_t>(n)] == 0);
            } else {
                CHECK(dims[static_cast<std::size_t>(n)] == piecewise_poly_dims(f, n / 2));
            }
        }
    }
}

TEST_CASE("localized PD restriction of a single orbit-closure class") {
    Fan f = p2_fan();
    std::size_t m = f.maximal_cones().front();
    HomologyClass<RationalGenFun> c;
    c.coeff[m] = RationalGenFun::constant(Rat(1), 2);
    auto pd = localized_pd_restrict(f, c);
    CourantData cd = courant_and_phi(f);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) pos[f.maximal_cones()[i]] = i;
    // expansion reproduces (+/-) phi restricted to its own cone
    Poly expanded = expand_pd_restriction(pd.at(m), 4);
    CHECK(expanded == cd.phi[m][pos[m]]);
    // other cones carry the zero function
    for (std::size_t other : f.maximal_cones())
        if (other != m) CHECK(expand_pd_restriction(pd.at(other), 4).is_zero());
    // zero class maps to zero
    HomologyClass<RationalGenFun> zero;
    for (auto& [id, r] : localized_pd_restrict(f, zero))
        CHECK(expand_pd_restriction(r, 4).is_zero());
    // classes on non-maximal cones are rejected
    HomologyClass<RationalGenFun> bad;
    bad.coeff[f.cone_id({0})] = RationalGenFun::constant(Rat(1), 2);
    CHECK_THROWS_AS(localized_pd_restrict(f, bad), std::invalid_argument);
}

TEST_CASE("smooth Todd series in one and two variables") {
    Fan p1 = p1_fan();
    std::size_t cpos = p1.cone_id({1});  // cone(e1)
    Poly s = smooth_todd_series(p1, cpos, 4);
    Poly x = Poly::variable(0, 1);
    Poly expect = Poly::constant(Rat(1), 1) + x.scaled(Rat(1, 2)) + (x * x).scaled(Rat(1, 12)) +
                  (x * x * x * x).scaled(Rat(-1, 720));
    CHECK(s == expect);

    Fan p2 = p2_fan();
    std::size_t c12 = p2.cone_id({1, 2});  // cone(e1, e2)
    Poly s2 = smooth_todd_series(p2, c12, 2);
    Poly xx = Poly::variable(0, 2), yy = Poly::variable(1, 2);
    Poly expect2 = Poly::constant(Rat(1), 2) + (xx + yy).scaled(Rat(1, 2)) +
                   (xx * xx + yy * yy).scaled(Rat(1, 12)) + (xx * yy).scaled(Rat(1, 4));
    CHECK(s2 == expect2);
    // constant term is 1 for every smooth cone
    for (std::size_t m : p2.maximal_cones())
        CHECK(smooth_todd_series(p2, m, 3).coefficient(Poly::Exp(2, 0)) == Rat(1));
    // singular cones are rejected
    Fan p112 = p112_fan();
    for (std::size_t m : p112.maximal_cones())
        if (multiplicity(p112.cone_geometry(m)) != 1)
            CHECK_THROWS_AS(smooth_todd_series(p112, m, 2), std::invalid_argument);
}
