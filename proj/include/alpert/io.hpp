#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "alpert/basis.hpp"
#include "alpert/dyadic.hpp"
#include "alpert/groebner.hpp"
#include "alpert/measure.hpp"
#include "alpert/polynomial.hpp"
#include "alpert/spaces.hpp"

namespace alpert {

// File and CLI input problems; the CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io {

using nlohmann::json;

inline json cube_to_json(const DyadicCube& q) {
    return json{{"level", q.level}, {"coords", q.coords}};
}

inline DyadicCube cube_from_json(const json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("coords"))
        throw InputError("cube literal must be {\"level\": m, \"coords\": [...]}");
    try {
        return DyadicCube(j.at("level").get<int>(),
                          j.at("coords").get<std::vector<std::int64_t>>());
    } catch (const std::exception& e) {
        throw InputError(std::string("bad cube literal: ") + e.what());
    }
}

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw InputError("rational literals must be strings like \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

inline json measure_to_json(const Measure& mu) {
    json j;
    j["nvars"] = mu.nvars();
    if (mu.kind() == MeasureKind::atomic) {
        j["kind"] = "atomic";
        json atoms = json::array();
        for (const auto& a : mu.atoms()) {
            json pt = json::array();
            for (const auto& x : a.point) pt.push_back(format_rational(x));
            atoms.push_back(json{{"point", pt}, {"weight", format_rational(a.weight)}});
        }
        j["atoms"] = atoms;
    } else {
        j["kind"] = "uniform_boxes";
        json boxes = json::array();
        for (const auto& b : mu.boxes())
            boxes.push_back(json{{"cube", cube_to_json(b.cube)},
                                 {"density", format_rational(b.density)}});
        j["boxes"] = boxes;
    }
    return j;
}

inline Measure measure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("kind"))
        throw InputError("measure file needs \"nvars\" and \"kind\"");
    int nvars = j.at("nvars").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "atomic") {
            std::vector<Atom> atoms;
            for (const auto& aj : j.value("atoms", json::array())) {
                Atom a;
                for (const auto& xj : aj.at("point")) a.point.push_back(rational_from_json(xj));
                a.weight = rational_from_json(aj.at("weight"));
                atoms.push_back(std::move(a));
            }
            return Measure::atomic(nvars, std::move(atoms));
        }
        if (kind == "uniform_boxes") {
            std::vector<WeightedBox> boxes;
            for (const auto& bj : j.value("boxes", json::array()))
                boxes.push_back(WeightedBox{cube_from_json(bj.at("cube")),
                                            rational_from_json(bj.at("density"))});
            return Measure::uniform_boxes(nvars, std::move(boxes));
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("bad measure file: ") + e.what());
    }
    throw InputError("measure kind must be \"atomic\" or \"uniform_boxes\"");
}

// Ideal files: {"nvars": n, "order": "grevlex", "generators": ["...", ...]}
struct IdealFile {
    int nvars = 1;
    MonomialOrder order;
    std::vector<Polynomial> generators;
};

inline IdealFile ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nvars"))
        throw InputError("ideal file needs \"nvars\", \"order\", \"generators\"");
    IdealFile f;
    try {
        f.nvars = j.at("nvars").get<int>();
        f.order = MonomialOrder(parse_order_kind(j.value("order", "grevlex")), f.nvars);
        for (const auto& gj : j.value("generators", json::array()))
            f.generators.push_back(parse_polynomial(gj.get<std::string>(), f.nvars));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("bad ideal file: ") + e.what());
    }
    return f;
}

inline json ideal_to_json(const GroebnerBasis& gb) {
    json j;
    j["nvars"] = gb.nvars();
    j["order"] = order_name(gb.order.kind);
    json gens = json::array();
    for (const auto& g : gb.generators) gens.push_back(g.to_string(gb.order));
    j["generators"] = gens;
    return j;
}

inline json monomials_to_json(const std::vector<Monomial>& ms, int nvars,
                              const MonomialOrder& order) {
    json arr = json::array();
    for (const auto& m : ms)
        arr.push_back(Polynomial::term(nvars, m, Rational(1)).to_string(order));
    return arr;
}

// Window config: {"min_level", "max_level", "roots": [cube...]}
inline GridWindow window_from_json(const json& j) {
    if (!j.is_object() || !j.contains("min_level") || !j.contains("max_level") ||
        !j.contains("roots"))
        throw InputError("window needs \"min_level\", \"max_level\", \"roots\"");
    std::vector<DyadicCube> roots;
    for (const auto& rj : j.at("roots")) roots.push_back(cube_from_json(rj));
    try {
        return GridWindow(j.at("min_level").get<int>(), j.at("max_level").get<int>(),
                          std::move(roots));
    } catch (const std::exception& e) {
        throw InputError(std::string("bad window: ") + e.what());
    }
}

inline json window_to_json(const GridWindow& w) {
    json roots = json::array();
    for (const auto& r : w.roots) roots.push_back(cube_to_json(r));
    return json{{"min_level", w.min_level}, {"max_level", w.max_level}, {"roots", roots}};
}

// Build config, measure given as a path relative to the config file.
struct BuildConfig {
    std::string measure_path;
    GridWindow window;
    MonomialOrder order;
    FamilyAssignment assignment;
};

inline BuildConfig config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("measure") || !j.contains("window") ||
        !j.contains("families"))
        throw InputError("config needs \"measure\", \"window\", \"families\"");
    BuildConfig cfg;
    try {
        cfg.measure_path = j.at("measure").get<std::string>();
        cfg.window = window_from_json(j.at("window"));
        int nvars = cfg.window.dim();
        cfg.order = MonomialOrder(parse_order_kind(j.value("order", "grevlex")), nvars);
        const json& fam = j.at("families");
        int default_degree = fam.at("default_degree").get<int>();
        std::vector<FamilyOverride> overrides;
        for (const auto& oj : fam.value("overrides", json::array())) {
            FamilyOverride o;
            if (oj.contains("below_level")) o.below_level = oj.at("below_level").get<int>();
            if (oj.contains("subtree")) o.subtree = cube_from_json(oj.at("subtree"));
            o.degree = oj.at("degree").get<int>();
            overrides.push_back(std::move(o));
        }
        cfg.assignment = FamilyAssignment(nvars, cfg.order, default_degree, std::move(overrides));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("bad config file: ") + e.what());
    }
    return cfg;
}

inline json config_to_json(const BuildConfig& cfg) {
    json fam;
    fam["default_degree"] = cfg.assignment.default_degree();
    json overrides = json::array();
    for (const auto& o : cfg.assignment.overrides()) {
        json oj;
        if (o.below_level) oj["below_level"] = *o.below_level;
        if (o.subtree) oj["subtree"] = cube_to_json(*o.subtree);
        oj["degree"] = o.degree;
        overrides.push_back(oj);
    }
    if (!overrides.empty()) fam["overrides"] = overrides;
    return json{{"measure", cfg.measure_path},
                {"window", window_to_json(cfg.window)},
                {"order", order_name(cfg.order.kind)},
                {"families", fam}};
}

inline json pieces_to_json(const PiecewisePoly& f, const MonomialOrder& order) {
    json arr = json::array();
    for (const auto& [cube, poly] : f.pieces())
        arr.push_back(json{{"cube", cube_to_json(cube)}, {"poly", poly.to_string(order)}});
    return arr;
}

inline json pieces_to_json(const PiecewisePolyD& f, const MonomialOrder& order) {
    json arr = json::array();
    for (const auto& [cube, poly] : f.pieces())
        arr.push_back(json{{"cube", cube_to_json(cube)}, {"poly", poly.to_string(order)}});
    return arr;
}

// Bundle file: one flat record per basis function, in coefficient order.
inline json bundle_to_json(const BasisBundle& bundle) {
    const MonomialOrder& order = bundle.assignment.order();
    json records = json::array();
    for (const auto& e : bundle.entries) {
        for (std::size_t i = 0; i < e.basis.size(); ++i) {
            json rec;
            rec["cube"] = cube_to_json(e.cube);
            rec["kind"] = entry_kind_name(e.kind);
            rec["pieces"] = pieces_to_json(e.basis.functions[i], order);
            rec["norm"] = e.basis.norms[i];
            rec["exact_pre_normalized"] =
                pieces_to_json(e.basis.exact_pre_normalized[i], order);
            records.push_back(std::move(rec));
        }
    }
    json meta;
    meta["window"] = window_to_json(bundle.window);
    meta["order"] = order_name(order.kind);
    meta["nvars"] = bundle.assignment.nvars();
    json fams = json::array();
    for (const auto& e : bundle.entries) {
        json fj;
        fj["cube"] = cube_to_json(e.cube);
        fj["kind"] = entry_kind_name(e.kind);
        json members = json::array();
        for (const auto& p : e.family.members) members.push_back(p.to_string(order));
        fj["family"] = members;
        fj["count"] = e.basis.size();
        fams.push_back(std::move(fj));
    }
    meta["entries"] = fams;
    return json{{"metadata", meta}, {"basis", records}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw InputError("failed writing file: " + path);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// FNV-1a 64-bit content hash for run reports.
inline std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace io
} // namespace alpert
