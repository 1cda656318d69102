#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "toric/todd.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

/// Input problem with a source-position-annotated message.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using InputObject = std::variant<Fan, LatticePolytope>;

namespace io_detail {

inline Int json_to_int(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError(where + ": expected an integer");
}

inline Vec json_to_vec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
    Vec v;
    for (const Json& x : j) v.push_back(json_to_int(x, where));
    return v;
}

inline InputObject parse_json_input(const std::string& text, const std::string& name) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(name + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(name + ": top level must be an object");
    if (!j.contains("rank")) throw ParseError(name + ": missing 'rank'");
    long long rank = json_to_int(j["rank"], name + ": rank").convert_to<long long>();
    if (rank < 1) throw ParseError(name + ": rank must be positive");
    bool has_vertices = j.contains("vertices");
    bool has_rays = j.contains("rays") || j.contains("cones");
    if (has_vertices == has_rays)
        throw ParseError(name + ": expected either rays+cones (fan) or vertices (polytope)");
    if (has_vertices) {
        std::vector<Vec> pts;
        for (const Json& row : j["vertices"])
            pts.push_back(json_to_vec(row, name + ": vertices"));
        for (const Vec& p : pts)
            if (p.size() != static_cast<std::size_t>(rank))
                throw ParseError(name + ": vertex has wrong length");
        return LatticePolytope::from_points(static_cast<std::size_t>(rank), pts);
    }
    if (!j.contains("rays") || !j.contains("cones"))
        throw ParseError(name + ": fan input needs both 'rays' and 'cones'");
    std::vector<Vec> rays;
    for (const Json& row : j["rays"]) rays.push_back(json_to_vec(row, name + ": rays"));
    std::vector<std::vector<std::size_t>> cones;
    for (const Json& row : j["cones"]) {
        std::vector<std::size_t> ids;
        for (const Json& x : row) {
            Int v = json_to_int(x, name + ": cones");
            if (v < 0) throw ParseError(name + ": negative ray index");
            ids.push_back(v.convert_to<std::size_t>());
        }
        cones.push_back(ids);
    }
    return Fan::from_maximal_cones(static_cast<std::size_t>(rank), rays, cones);
}

inline InputObject parse_text_input(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    long rank = -1;
    enum class Section { None, Rays, Cones, Vertices } section = Section::None;
    std::vector<Vec> rays, vertices;
    std::vector<std::vector<std::size_t>> cones;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "rank") {
            if (!(ls >> rank) || rank < 1) fail("rank must be a positive integer");
            continue;
        }
        if (first == "rays") {
            section = Section::Rays;
            continue;
        }
        if (first == "cones") {
            section = Section::Cones;
            continue;
        }
        if (first == "vertices") {
            section = Section::Vertices;
            continue;
        }
        // a data row; first token already consumed
        if (rank < 1) fail("rank must be declared before data rows");
        if (section == Section::None) fail("data row outside of a section");
        std::vector<std::string> tokens{first};
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (section == Section::Cones) {
            std::vector<std::size_t> ids;
            for (const std::string& t : tokens) {
                try {
                    Int v(t);
                    if (v < 0) fail("negative ray index");
                    ids.push_back(v.convert_to<std::size_t>());
                } catch (const std::exception&) {
                    fail("expected a ray index, got '" + t + "'");
                }
            }
            cones.push_back(ids);
        } else {
            Vec v;
            for (const std::string& t : tokens) {
                try {
                    v.push_back(Int(t));
                } catch (const std::exception&) {
                    fail("expected an integer, got '" + t + "'");
                }
            }
            if (v.size() != static_cast<std::size_t>(rank))
                fail("row has " + std::to_string(v.size()) + " entries, rank is " +
                     std::to_string(rank));
            (section == Section::Rays ? rays : vertices).push_back(v);
        }
    }
    lineno = 0;
    if (rank < 1) throw ParseError(name + ": missing 'rank' declaration");
    bool is_fan = !rays.empty() || !cones.empty();
    bool is_polytope = !vertices.empty();
    if (is_fan == is_polytope)
        throw ParseError(name + ": expected either rays+cones (fan) or vertices (polytope)");
    if (is_polytope) return LatticePolytope::from_points(static_cast<std::size_t>(rank), vertices);
    return Fan::from_maximal_cones(static_cast<std::size_t>(rank), rays, cones);
}

}  // namespace io_detail

/// Parses a fan or polytope file: line-oriented key/value text, or the same
/// structure as a JSON object when the file starts with '{'.
inline InputObject parse_input(const std::string& text, const std::string& name) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return io_detail::parse_json_input(text, name);
        break;
    }
    return io_detail::parse_text_input(text, name);
}

inline InputObject parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str(), path);
}

// ---------------------------------------------------------------------------
// serialization

inline Json to_json(const Int& x) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (x >= lo && x <= hi) return x.convert_to<long long>();
    return x.str();
}

inline Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const Rat& x) { return to_string(x); }

inline Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = to_json(e);
        t["coeff"] = to_json(c);
        terms.push_back(t);
    }
    return terms;
}

inline Json to_json(const RationalGenFun& f) {
    Json j;
    j["numerator"] = to_json(f.numerator());
    Json den = Json::array();
    for (const Vec& w : f.denominator()) den.push_back(to_json(w));
    j["denominator"] = den;
    return j;
}

inline Json cone_key(const Fan& f, std::size_t id) {
    Json a = Json::array();
    for (std::size_t r : f.cones()[id].ray_ids) a.push_back(r);
    return a;
}

inline Json fan_to_json(const Fan& f) {
    Json j;
    j["rank"] = f.rank();
    Json rays = Json::array();
    for (const Vec& r : f.rays()) rays.push_back(to_json(r));
    j["rays"] = rays;
    Json cones = Json::array();
    for (std::size_t m : f.maximal_cones()) cones.push_back(cone_key(f, m));
    j["cones"] = cones;
    return j;
}

/// Canonical line-format serialization of a fan (maximal cones only).
inline std::string fan_to_text(const Fan& f) {
    std::string out = "rank " + std::to_string(f.rank()) + "\nrays\n";
    for (const Vec& r : f.rays()) {
        for (std::size_t j = 0; j < r.size(); ++j) out += (j ? " " : "") + r[j].str();
        out += "\n";
    }
    out += "cones\n";
    for (std::size_t m : f.maximal_cones()) {
        const auto& ids = f.cones()[m].ray_ids;
        for (std::size_t j = 0; j < ids.size(); ++j)
            out += (j ? " " : "") + std::to_string(ids[j]);
        out += "\n";
    }
    return out;
}

inline std::string pretty_genfun(const RationalGenFun& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : f.numerator().terms()) {
        std::string cs = to_string(c);
        if (!first) s += c >= 0 ? " + " : " - ";
        if (first && c < 0) s += "-";
        std::string mag = to_string(c < 0 ? Rat(-c) : c);
        if (mag != "1" || toric::is_zero(e)) s += mag;
        if (!toric::is_zero(e)) {
            if (mag != "1") s += "*";
            s += "e^" + to_string(e);
        }
        first = false;
    }
    if (!f.denominator().empty()) {
        s = "(" + s + ") / (";
        for (std::size_t i = 0; i < f.denominator().size(); ++i) {
            if (i) s += " ";
            s += "(1-e^" + to_string(f.denominator()[i]) + ")";
        }
        s += ")";
    }
    return s;
}

}  // namespace toric
