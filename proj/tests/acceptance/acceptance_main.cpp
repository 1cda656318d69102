// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact identities and oracle equality throughout) and prints one PASS/FAIL
// line per criterion. Exits nonzero when any criterion fails.
//
// Usage: toric_acceptance --data <corpus dir> --cli <path to the CLI binary>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "toric/cech.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

Vec v1(long a) { return Vec{Int(a)}; }
Vec v2(long a, long b) { return Vec{Int(a), Int(b)}; }

Fan p1_fan() { return Fan::from_maximal_cones(1, {{Int(1)}, {Int(-1)}}, {{0}, {1}}); }
Fan p2_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, -1)}, {{0, 1}, {1, 2}, {0, 2}});
}
Fan p1xp1_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)},
                                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}
Fan f2_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, 2), v2(0, -1)},
                                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}
Fan p112_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, -2)}, {{0, 1}, {1, 2}, {0, 2}});
}
Fan p123_fan() {
    return Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-2, -3)}, {{0, 1}, {1, 2}, {0, 2}});
}

Vec random_vec(std::mt19937& rng, std::size_t rank, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Vec v(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = d(rng);
    return v;
}

Fan random_complete_fan2(std::mt19937& rng) {
    std::set<Vec, bool (*)(const Vec&, const Vec&)> dirs(lex_less);
    std::uniform_int_distribution<int> cnt(1, 4);
    int n = cnt(rng);
    for (int i = 0; i < n; ++i) {
        Vec v = random_vec(rng, 2, -4, 4);
        if (is_zero(v)) continue;
        v = primitive_vector(v);
        dirs.insert(v);
        dirs.insert(neg(v));
    }
    dirs.insert(v2(1, 0));
    dirs.insert(v2(-1, 0));
    dirs.insert(v2(0, 1));
    dirs.insert(v2(0, -1));
    std::vector<Vec> rays(dirs.begin(), dirs.end());
    auto half = [](const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    std::sort(rays.begin(), rays.end(), [&](const Vec& a, const Vec& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return a[0] * b[1] - a[1] * b[0] > 0;
    });
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back({i, (i + 1) % rays.size()});
    return Fan::from_maximal_cones(2, rays, cones);
}

/// Brute-force lattice-point data of a polytope over its bounding box.
struct BruteForce {
    Int count = 0;
    RationalGenFun sum;
};

BruteForce brute_force_points(const LatticePolytope& p) {
    BruteForce out;
    LaurentPoly sum;
    auto [lo, hi] = p.bounding_box();
    Vec cur = lo;
    while (true) {
        if (p.contains(cur)) {
            out.count += 1;
            sum.add_term(cur, Rat(1));
        }
        std::size_t pos = 0;
        while (pos < cur.size()) {
            cur[pos] += 1;
            if (cur[pos] <= hi[pos]) break;
            cur[pos] = lo[pos];
            ++pos;
        }
        if (pos == cur.size()) break;
    }
    out.sum = RationalGenFun(sum, {});
    return out;
}

struct Criterion {
    int number;
    std::string title;
    bool passed;
    std::string detail;
};

std::vector<LatticePolytope> acceptance_polytopes(std::mt19937& rng) {
    std::vector<LatticePolytope> ps;
    for (long n = 1; n <= 10; ++n)
        ps.push_back(LatticePolytope::from_points(1, {v1(0), v1(n)}));
    for (long n = 1; n <= 5; ++n)
        ps.push_back(LatticePolytope::from_points(2, {v2(0, 0), v2(n, 0), v2(0, n)}));
    for (long n = 1; n <= 4; ++n)
        ps.push_back(
            LatticePolytope::from_points(2, {v2(0, 0), v2(n, 0), v2(0, n), v2(n, n)}));
    ps.push_back(LatticePolytope::from_points(2, {v2(0, 0), v2(2, 0), v2(0, 2)}));
    std::vector<Vec> cube;
    for (long x = 0; x <= 2; x += 2)
        for (long y = 0; y <= 2; y += 2)
            for (long z = 0; z <= 2; z += 2) cube.push_back(Vec{Int(x), Int(y), Int(z)});
    ps.push_back(LatticePolytope::from_points(3, cube));
    int made = 0;
    while (made < 25) {
        std::vector<Vec> pts;
        std::uniform_int_distribution<int> npts(3, 8);
        int k = npts(rng);
        for (int i = 0; i < k; ++i) pts.push_back(random_vec(rng, 2, -4, 4));
        LatticePolytope p = LatticePolytope::from_points(2, pts);
        if (!p.is_full_dimensional()) continue;
        ps.push_back(p);
        ++made;
    }
    return ps;
}

std::string run_cli(const std::string& cli, const std::string& args,
                    const std::filesystem::path& outfile) {
    std::string cmd = cli + " " + args + " > " + outfile.string() + " 2>/dev/null";
    std::system(cmd.c_str());
    std::ifstream in(outfile, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string data_dir = "data";
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        std::string a = argv[i];
        if (a == "--data") data_dir = argv[i + 1];
        if (a == "--cli") cli = argv[i + 1];
    }

    std::vector<Criterion> results;
    std::mt19937 rng(20260810);

    // 1. lattice-point counts against brute force, exact integer equality
    {
        auto polys = acceptance_polytopes(rng);
        int bad = 0;
        std::vector<Int> expected;
        for (const auto& p : polys) {
            BruteForce bf = brute_force_points(p);
            expected.push_back(bf.count);
            if (count_lattice_points(p) != bf.count) ++bad;
        }
        // pinned closed forms for the named families
        bool pinned = expected[0] == 2 && expected[9] == 11        // segments
                      && expected[10] == 3 && expected[14] == 21   // n-simplices C(n+2,2)
                      && expected[15] == 4 && expected[18] == 25   // squares (n+1)^2
                      && expected[19] == 6 && expected[20] == 27;  // triangle, cube
        results.push_back({1, "lattice-point counts equal brute-force enumeration",
                           bad == 0 && pinned,
                           std::to_string(polys.size()) + " polytopes, " + std::to_string(bad) +
                               " mismatches"});
    }

    // 2. character identity on every polytope above with <= 200 points
    {
        std::mt19937 rng2(20260810);
        auto polys = acceptance_polytopes(rng2);
        int used = 0, bad = 0;
        for (const auto& p : polys) {
            BruteForce bf = brute_force_points(p);
            if (bf.count > 200) continue;
            ++used;
            if (!gf_equals(brion_character(p), bf.sum)) ++bad;
        }
        results.push_back({2, "vertex-cone character equals the lattice-point polynomial",
                           bad == 0, std::to_string(used) + " polytopes, " +
                                         std::to_string(bad) + " mismatches"});
    }

    // 3. line rule for 20 random primitive directions in ranks 1..3
    {
        int bad = 0, made = 0;
        while (made < 20) {
            std::size_t rank = 1 + (made % 3);
            Vec m = random_vec(rng, rank, -5, 5);
            if (is_zero(m)) continue;
            m = primitive_vector(m);
            RationalGenFun s = gf_sub(
                gf_add(cone_generating_function(Cone::from_generators(rank, {m}, Side::M)),
                       cone_generating_function(Cone::from_generators(rank, {neg(m)}, Side::M))),
                RationalGenFun::constant(Rat(1), rank));
            if (!gf_equals(s, RationalGenFun::zero(rank))) ++bad;
            ++made;
        }
        results.push_back({3, "line rule: S(ray m) + S(ray -m) - 1 = 0", bad == 0,
                           "20 directions, " + std::to_string(bad) + " failures"});
    }

    // 4. subdivision additivity on random cones with random stellar subdivisions
    {
        int bad = 0;
        auto check = [&](const Cone& sigma, const Vec& ray) {
            std::vector<std::size_t> all;
            for (std::size_t i = 0; i < sigma.rays().size(); ++i) all.push_back(i);
            Fan mini = Fan::from_maximal_cones(sigma.ambient_rank(), sigma.rays(), {all});
            RefinementMap m = stellar_subdivision(mini, ray);
            RationalGenFun sum = RationalGenFun::zero(sigma.ambient_rank());
            for (std::size_t mc : m.source.maximal_cones())
                sum = gf_add(sum, cone_generating_function(m.source.cone_geometry(mc).dual()));
            if (!gf_equals(sum, cone_generating_function(sigma.dual()))) ++bad;
        };
        int made = 0;
        while (made < 50) {
            std::vector<Vec> gens;
            for (int i = 0; i < 3; ++i) gens.push_back(random_vec(rng, 2, -5, 5));
            std::vector<Vec> nz;
            for (const Vec& g : gens)
                if (!is_zero(g)) nz.push_back(g);
            if (nz.empty()) continue;
            Cone c = Cone::from_generators(2, nz);
            if (!c.is_pointed() || c.dim() != 2) continue;
            std::uniform_int_distribution<int> wt(0, 3);
            Vec r = zero_vec(2);
            for (const Vec& ray : c.rays()) r = add(r, scale(Int(wt(rng)), ray));
            if (is_zero(r)) r = add(c.rays().front(), c.rays().back());
            check(c, primitive_vector(r));
            ++made;
        }
        made = 0;
        while (made < 20) {
            std::vector<Vec> gens;
            for (int i = 0; i < 3; ++i) gens.push_back(random_vec(rng, 3, -2, 2));
            bool zero = false;
            for (const Vec& g : gens) zero |= is_zero(g);
            if (zero || rank_of(Mat(gens)) != 3) continue;
            Cone c = Cone::from_generators(3, gens);
            if (!c.is_pointed()) continue;
            std::uniform_int_distribution<int> wt(0, 2);
            Vec r = zero_vec(3);
            for (const Vec& ray : c.rays()) r = add(r, scale(Int(wt(rng)), ray));
            if (is_zero(r)) r = add(c.rays().front(), c.rays().back());
            check(c, primitive_vector(r));
            ++made;
        }
        results.push_back({4, "subdivision additivity of summed dual-monoid series", bad == 0,
                           "70 subdivisions, " + std::to_string(bad) + " failures"});
    }

    // 5. unit identity: sum of Todd coefficients is 1
    {
        std::vector<Fan> fans{p1_fan(), p2_fan(), p1xp1_fan(), f2_fan(), p112_fan(), p123_fan()};
        for (int i = 0; i < 10; ++i) fans.push_back(random_complete_fan2(rng));
        int bad = 0;
        for (const Fan& f : fans)
            if (!todd_unit_identity(equivariant_todd(f))) ++bad;
        results.push_back({5, "Todd coefficients sum to 1 on complete fans", bad == 0,
                           std::to_string(fans.size()) + " fans, " + std::to_string(bad) +
                               " failures"});
    }

    // 6. smooth cross-check through degree d+2
    {
        int bad = 0;
        for (const Fan& f : {p1_fan(), p2_fan(), p1xp1_fan(), f2_fan()})
            if (!smooth_crosscheck(f).passed) ++bad;
        results.push_back({6, "smooth fans: PD restriction matches the Todd factor product",
                           bad == 0, "4 fans, " + std::to_string(bad) + " failures"});
    }

    // 7. proof-route cross-check: resolve, push forward, compare
    {
        std::vector<Fan> fans{p112_fan(), p123_fan()};
        for (int i = 0; i < 10; ++i) fans.push_back(random_complete_fan2(rng));
        int bad = 0;
        for (const Fan& f : fans)
            if (!subdivision_crosscheck(f).passed) ++bad;
        results.push_back({7, "pushforward of the resolved Todd class equals the direct one",
                           bad == 0, std::to_string(fans.size()) + " fans, " +
                                         std::to_string(bad) + " failures"});
    }

    // 8. covering-complex dimensions equal piecewise-polynomial dimensions
    {
        int bad = 0;
        for (const Fan& f : {p1_fan(), p2_fan(), p1xp1_fan(), p112_fan()}) {
            int n_max = 2 * static_cast<int>(f.rank());
            auto dims = cech_cohomology_dims(f, n_max);
            for (int n = 0; n <= n_max; ++n) {
                std::size_t expect = (n % 2) ? 0 : piecewise_poly_dims(f, n / 2);
                if (dims[static_cast<std::size_t>(n)] != expect) ++bad;
            }
        }
        auto p2dims = cech_cohomology_dims(p2_fan(), 4);
        bool spot = p2dims[0] == 1 && p2dims[2] == 3 && p2dims[4] == 6;
        results.push_back({8, "cohomology dimensions match piecewise polynomials",
                           bad == 0 && spot,
                           std::string("4 fans, spot values (1,3,6) ") +
                               (spot ? "verified" : "WRONG")});
    }

    // 9. nonequivariant ranks of the named examples
    {
        bool ok = nonequivariant_ranks(p2_fan()) == std::vector<std::size_t>{1, 1, 1} &&
                  nonequivariant_ranks(p1xp1_fan()) == std::vector<std::size_t>{1, 2, 1} &&
                  nonequivariant_ranks(p112_fan()) == std::vector<std::size_t>{1, 1, 1};
        results.push_back({9, "presentation ranks (1,1,1), (1,2,1), (1,1,1)", ok, ""});
    }

    // 10. byte-identical machine output across two runs of every subcommand
    {
        bool ok = true;
        std::string detail;
        if (cli.empty()) {
            ok = false;
            detail = "no --cli given";
        } else {
            auto tmp = std::filesystem::temp_directory_path();
            std::vector<std::string> fan_files{"p1.fan",  "p2.fan",   "p1xp1.fan",
                                               "f2.fan",  "p112.fan", "p123.fan",
                                               "p2.json", "bad_overlap.fan"};
            std::vector<std::string> poly_files{"seg05.poly",     "unitsquare.poly",
                                                "square2.poly",   "triangle2.poly",
                                                "simplex3.poly",  "cube2.poly"};
            std::vector<std::string> fan_cmds{"validate",   "todd",    "homology",
                                              "cohomology", "resolve", "crosscheck"};
            std::vector<std::string> poly_cmds{"count", "character"};
            int pairs = 0;
            auto check_pair = [&](const std::string& cmd, const std::string& file) {
                std::string args = cmd + " --input " + data_dir + "/" + file;
                std::string a = run_cli(cli, args, tmp / "toric_accept_a.out");
                std::string b = run_cli(cli, args, tmp / "toric_accept_b.out");
                if (a != b) {
                    ok = false;
                    detail += cmd + " on " + file + " differs; ";
                }
                ++pairs;
            };
            for (const auto& file : fan_files)
                for (const auto& cmd : fan_cmds) check_pair(cmd, file);
            for (const auto& file : poly_files)
                for (const auto& cmd : poly_cmds) check_pair(cmd, file);
            if (detail.empty())
                detail = std::to_string(pairs) + " command/input pairs run twice";
        }
        results.push_back({10, "byte-identical machine output across repeated runs", ok, detail});
    }

    int failures = 0;
    for (const Criterion& c : results) {
        if (!c.passed) ++failures;
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << "criterion " << c.number << ": "
                  << c.title;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (failures ? "ACCEPTANCE FAILED: " : "ACCEPTANCE PASSED: ")
              << (results.size() - failures) << "/" << results.size() << " criteria passed\n";
    return failures ? 1 : 0;
}
