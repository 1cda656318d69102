// Command-line front end: parse a fan or polytope file, run one subcommand,
// and emit a machine-readable (JSON) or human-readable document on stdout.
// Exit codes: 0 success, 1 validation/semantic failure, 2 input errors.

#include <iostream>

#include <CLI11.hpp>

#include "toric/cech.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

struct Options {
    std::string input;
    int order = -1;    // series truncation; default rank + 2
    int cutoff = -1;   // cohomology degree cutoff; default 2 * rank
    long long cap = 1000000;
    std::string format = "machine";
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input, "input fan or polytope file")->required();
    cmd->add_option("--order", opt.order, "series truncation order (default rank+2)");
    cmd->add_option("--cutoff", opt.cutoff, "cohomology degree cutoff (default 2*rank)");
    cmd->add_option("--cap", opt.cap, "parallelepiped enumeration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"machine", "pretty"}));
}

const Fan& need_fan(const InputObject& in) {
    if (!std::holds_alternative<Fan>(in))
        throw ParseError("this subcommand needs a fan input (rays + cones)");
    return std::get<Fan>(in);
}

const LatticePolytope& need_polytope(const InputObject& in) {
    if (!std::holds_alternative<LatticePolytope>(in))
        throw ParseError("this subcommand needs a polytope input (vertices)");
    return std::get<LatticePolytope>(in);
}

void emit(const Json& machine, const std::string& pretty, const Options& opt) {
    if (opt.format == "machine")
        std::cout << machine.dump() << "\n";
    else
        std::cout << pretty;
}

int run_validate(const InputObject& in, const Options& opt) {
    const Fan& f = need_fan(in);
    const FanValidation& v = f.validation();
    Json j;
    j["command"] = "validate";
    j["well_formed"] = v.well_formed;
    j["complete"] = v.complete;
    j["simplicial"] = v.simplicial;
    j["smooth"] = v.smooth;
    j["sigma_counts"] = v.sigma_counts;
    j["violations"] = v.violations;
    std::string pretty;
    pretty += std::string("well-formed: ") + (v.well_formed ? "yes" : "NO") + "\n";
    pretty += std::string("complete:    ") + (v.complete ? "yes" : "no") + "\n";
    pretty += std::string("simplicial:  ") + (v.simplicial ? "yes" : "no") + "\n";
    pretty += std::string("smooth:      ") + (v.smooth ? "yes" : "no") + "\n";
    for (std::size_t i = 0; i < v.sigma_counts.size(); ++i)
        pretty += "cones of dimension " + std::to_string(i) + ": " +
                  std::to_string(v.sigma_counts[i]) + "\n";
    for (const std::string& viol : v.violations) pretty += "violation: " + viol + "\n";
    emit(j, pretty, opt);
    return v.well_formed ? 0 : 1;
}

int run_todd(const InputObject& in, const Options& opt) {
    const Fan& f = need_fan(in);
    ToddClass t = equivariant_todd(f, Int(opt.cap));
    bool unit = todd_unit_identity(t);
    Json j;
    j["command"] = "todd";
    j["fan"] = fan_to_json(f);
    Json coeffs = Json::array();
    std::string pretty = "localized equivariant Todd class:\n";
    for (const auto& [id, value] : t.coeff) {
        Json entry;
        entry["cone"] = cone_key(f, id);
        entry["value"] = to_json(value);
        coeffs.push_back(entry);
        pretty += "  cone " + Fan::id_string(f.cones()[id].ray_ids) + ": " +
                  pretty_genfun(value) + "\n";
    }
    j["coefficients"] = coeffs;
    j["unit_identity"] = unit;
    pretty += std::string("coefficient sum equals 1: ") + (unit ? "yes" : "NO") + "\n";
    emit(j, pretty, opt);
    return unit ? 0 : 1;
}

int run_count(const InputObject& in, const Options& opt) {
    const LatticePolytope& p = need_polytope(in);
    CountOptions co;
    co.order = opt.order;
    co.cap = Int(opt.cap);
    Int n = count_lattice_points(p, co);
    Json j;
    j["command"] = "count";
    j["count"] = to_json(n);
    emit(j, "lattice points: " + n.str() + "\n", opt);
    return 0;
}

int run_character(const InputObject& in, const Options& opt) {
    const LatticePolytope& p = need_polytope(in);
    RationalGenFun chi = brion_character(p, Int(opt.cap));
    Json j;
    j["command"] = "character";
    j["value"] = to_json(chi);
    emit(j, "lattice-point series: " + pretty_genfun(chi) + "\n", opt);
    return 0;
}

int run_homology(const InputObject& in, const Options& opt) {
    const Fan& f = need_fan(in);
    HomologyPresentation pres = homology_presentation(f);
    std::vector<std::size_t> ranks = nonequivariant_ranks(f);
    Json j;
    j["command"] = "homology";
    Json gens = Json::array();
    for (std::size_t g : pres.generators) gens.push_back(cone_key(f, g));
    j["generators"] = gens;
    Json rels = Json::array();
    std::string pretty = "generators: one class per cone (" +
                         std::to_string(pres.generators.size()) + " cones)\nrelations:\n";
    for (const auto& rel : pres.relations) {
        Json r;
        r["sigma"] = cone_key(f, rel.sigma);
        r["covector"] = to_json(rel.covector);
        Json terms = Json::array();
        for (const auto& [tau, k] : rel.terms) {
            Json t;
            t["cone"] = cone_key(f, tau);
            t["coefficient"] = to_json(k);
            terms.push_back(t);
        }
        r["terms"] = terms;
        rels.push_back(r);
        pretty += "  " + to_string(rel.covector) + " * [O" +
                  Fan::id_string(f.cones()[rel.sigma].ray_ids) + "] =";
        if (rel.terms.empty()) pretty += " 0";
        for (const auto& [tau, k] : rel.terms)
            pretty += " + " + k.str() + "*[O" + Fan::id_string(f.cones()[tau].ray_ids) + "]";
        pretty += "\n";
    }
    j["relations"] = rels;
    j["nonequivariant_ranks"] = ranks;
    pretty += "ranks after killing the polynomial action:";
    for (std::size_t r : ranks) pretty += " " + std::to_string(r);
    pretty += "\n";
    emit(j, pretty, opt);
    return 0;
}

int run_cohomology(const InputObject& in, const Options& opt) {
    const Fan& f = need_fan(in);
    int cutoff = opt.cutoff >= 0 ? opt.cutoff : 2 * static_cast<int>(f.rank());
    auto dims = cech_cohomology_dims(f, cutoff);
    Json j;
    j["command"] = "cohomology";
    j["cutoff"] = cutoff;
    j["dims"] = dims;
    std::string pretty = "equivariant cohomology dimensions (degree: dim):\n";
    for (int n = 0; n <= cutoff; ++n)
        pretty += "  " + std::to_string(n) + ": " +
                  std::to_string(dims[static_cast<std::size_t>(n)]) + "\n";
    emit(j, pretty, opt);
    return 0;
}

int run_resolve(const InputObject& in, const Options& opt) {
    const Fan& f = need_fan(in);
    Resolution res = resolve_to_smooth(f);
    Json j;
    j["command"] = "resolve";
    j["fan"] = fan_to_json(res.fan);
    j["steps"] = res.steps;
    Json refinement = Json::array();
    for (std::size_t c = 0; c < res.fan.cones().size(); ++c) {
        Json entry;
        entry["source"] = cone_key(res.fan, c);
        entry["target"] = cone_key(res.map.target, res.map.target_of[c]);
        refinement.push_back(entry);
    }
    j["refinement"] = refinement;
    std::string pretty = "smooth refinement (" + std::to_string(res.steps) + " subdivisions):\n" +
                         fan_to_text(res.fan);
    emit(j, pretty, opt);
    return 0;
}

int run_crosscheck(const InputObject& in, const Options& opt) {
    const Fan& f = need_fan(in);
    Json j;
    j["command"] = "crosscheck";
    std::string pretty;
    bool failed = false;
    Json smooth;
    smooth["applicable"] = f.is_smooth() && f.is_complete();
    if (f.is_smooth() && f.is_complete()) {
        CrosscheckReport rep = smooth_crosscheck(f, opt.order, Int(opt.cap));
        smooth["passed"] = rep.passed;
        smooth["lines"] = rep.lines;
        failed |= !rep.passed;
        pretty += std::string("smooth cross-check: ") + (rep.passed ? "PASS" : "FAIL") + "\n";
        for (const auto& l : rep.lines) pretty += "  " + l + "\n";
    } else {
        pretty += "smooth cross-check: not applicable (fan is not smooth and complete)\n";
    }
    j["smooth"] = smooth;
    Json subdivision;
    bool sub_ok = f.is_complete() && f.rank() <= 3;
    subdivision["applicable"] = sub_ok;
    if (sub_ok) {
        CrosscheckReport rep = subdivision_crosscheck(f, Int(opt.cap));
        subdivision["passed"] = rep.passed;
        subdivision["lines"] = rep.lines;
        failed |= !rep.passed;
        pretty += std::string("subdivision cross-check: ") + (rep.passed ? "PASS" : "FAIL") + "\n";
        for (const auto& l : rep.lines) pretty += "  " + l + "\n";
    } else {
        pretty += "subdivision cross-check: not applicable\n";
    }
    j["subdivision"] = subdivision;
    emit(j, pretty, opt);
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Todd-class and lattice-point engine for complete toric varieties"};
    app.require_subcommand(1);
    Options opt;
    std::map<std::string, int (*)(const InputObject&, const Options&)> handlers{
        {"validate", run_validate},   {"todd", run_todd},
        {"count", run_count},         {"character", run_character},
        {"homology", run_homology},   {"cohomology", run_cohomology},
        {"resolve", run_resolve},     {"crosscheck", run_crosscheck},
    };
    std::map<std::string, std::string> described{
        {"validate", "structural and completeness report for a fan"},
        {"todd", "localized equivariant Todd class of a complete fan"},
        {"count", "lattice-point count of a polytope"},
        {"character", "lattice-point generating function of a polytope"},
        {"homology", "orbit-closure presentation and nonequivariant ranks"},
        {"cohomology", "graded dimensions of equivariant cohomology"},
        {"resolve", "smooth subdivision with its refinement map"},
        {"crosscheck", "smooth and subdivision consistency checks"},
    };
    for (auto& [name, fn] : handlers) add_common(app.add_subcommand(name, described[name]), opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    InputObject input = Fan{};
    try {
        input = parse_input_file(opt.input);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        return handlers.at(sub)(input, opt);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
