// Command line front end: exact Alpert-space dimension tables, Groebner and
// vanishing-ideal reports, basis construction and verification.
//
// Exit codes: 0 success, 2 input error, 3 verification failure.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "alpert/alpert.hpp"

namespace {

using alpert::io::json;

constexpr int kExitInputError = 2;
constexpr int kExitVerifyFailure = 3;

constexpr double kCompletenessTol = 1e-9;
constexpr double kOrthogonalityTol = 1e-10;
constexpr double kTelescopingTol = 1e-9;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

json input_record(const std::string& path) {
    return json{{"path", path}, {"fnv1a64", alpert::io::content_hash(alpert::io::read_text_file(path))}};
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        alpert::io::write_text_file(out_path, text);
}

std::string resolve_relative(const std::string& base_file, const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(base_file).parent_path() / p).string();
}

alpert::DyadicCube parse_cube_arg(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw alpert::InputError(std::string("--cube is not valid JSON: ") + e.what());
    }
    return alpert::io::cube_from_json(j);
}

int cmd_groebner(const std::string& ideal_path, int kmax, const std::string& out_path) {
    Timer timer;
    alpert::io::IdealFile file = alpert::io::ideal_from_json(alpert::io::read_json_file(ideal_path));
    alpert::GroebnerBasis gb = alpert::buchberger(file.generators, file.order);

    json j;
    j["command"] = "groebner";
    j["inputs"] = json::array({input_record(ideal_path)});
    j["reduced_basis"] = alpert::io::ideal_to_json(gb);
    j["leading_terms"] =
        alpert::io::monomials_to_json(gb.leading_terms(), gb.nvars(), gb.order);
    j["hilbert_dimension"] = alpert::hilbert_dimension(gb);
    auto part = alpert::gdep_gind(gb, gb.nvars(), kmax);
    j["k"] = kmax;
    j["gind"] = alpert::io::monomials_to_json(part.gind, gb.nvars(), gb.order);
    j["gdep"] = alpert::io::monomials_to_json(part.gdep, gb.nvars(), gb.order);
    json counts = json::array();
    for (int k = 1; k <= kmax; ++k)
        counts.push_back(json{{"k", k}, {"staircase_count", alpert::staircase_count(gb, k)}});
    j["staircase_counts"] = counts;
    j["wall_time_s"] = timer.seconds();
    emit(j, out_path);
    return 0;
}

int cmd_vanishing(const std::string& measure_path, const std::string& cube_text,
                  const std::string& order_name, const std::string& out_path) {
    Timer timer;
    alpert::Measure mu =
        alpert::io::measure_from_json(alpert::io::read_json_file(measure_path));
    alpert::DyadicCube q = parse_cube_arg(cube_text);
    alpert::MonomialOrder order(alpert::parse_order_kind(order_name), mu.nvars());

    alpert::SupportDescriptor desc = alpert::support(mu, q);
    json j;
    j["command"] = "vanishing";
    j["inputs"] = json::array({input_record(measure_path)});
    j["cube"] = alpert::io::cube_to_json(q);
    if (desc.kind == alpert::SupportDescriptor::Kind::full_box) {
        alpert::GroebnerBasis gb = alpert::vanishing_ideal(desc, order);
        j["support"] = "full_box";
        j["note"] = "support has positive volume; I_Q = {0}";
        j["ideal"] = alpert::io::ideal_to_json(gb);
        j["staircase"] = "all monomials";
    } else {
        auto bm = alpert::buchberger_moeller(desc.points, order);
        j["support"] = "finite_points";
        j["point_count"] = desc.points.size();
        j["ideal"] = alpert::io::ideal_to_json(bm.basis);
        j["staircase"] = alpert::io::monomials_to_json(bm.staircase, mu.nvars(), order);
    }
    j["wall_time_s"] = timer.seconds();
    emit(j, out_path);
    return 0;
}

int cmd_dims(const std::string& measure_path, const std::string& cube_text, int kmax,
             const std::string& order_name, const std::string& out_path) {
    Timer timer;
    alpert::Measure mu =
        alpert::io::measure_from_json(alpert::io::read_json_file(measure_path));
    alpert::DyadicCube q = parse_cube_arg(cube_text);
    alpert::MonomialOrder order(alpert::parse_order_kind(order_name), mu.nvars());
    const int n = mu.nvars();

    alpert::SupportDescriptor desc = alpert::support(mu, q);
    alpert::GroebnerBasis gb = alpert::vanishing_ideal(desc, order);
    bool atomic = mu.kind() == alpert::MeasureKind::atomic;

    json rows = json::array();
    bool agree = true;
    for (int k = 1; k <= kmax; ++k) {
        alpert::FunctionFamily fam = alpert::FunctionFamily::monomials_below_degree(n, k, order);
        int gram_dim = alpert::component_dimension(mu, q, fam);
        long ambient = 0;
        for (const auto& child : q.children())
            ambient += alpert::component_dimension(mu, child, fam);
        json row;
        row["k"] = k;
        row["monomial_count"] = fam.size();
        row["component_dim_gram"] = gram_dim;
        if (atomic) {
            long stair = alpert::staircase_count(gb, k);
            row["component_dim_staircase"] = stair;
            if (stair != gram_dim) agree = false;
        } else {
            row["component_dim_staircase"] = nullptr;
            row["note"] = "I_Q = {0}";
        }
        row["alpert_dim"] = ambient - gram_dim;
        rows.push_back(std::move(row));
    }

    json j;
    j["command"] = "dims";
    j["inputs"] = json::array({input_record(measure_path)});
    j["cube"] = alpert::io::cube_to_json(q);
    j["order"] = order_name;
    j["hilbert_dimension"] = alpert::hilbert_dimension(gb);
    j["table"] = rows;
    j["columns_agree"] = agree;
    j["wall_time_s"] = timer.seconds();
    emit(j, out_path);
    return agree ? 0 : kExitVerifyFailure;
}

struct LoadedConfig {
    alpert::io::BuildConfig cfg;
    alpert::Measure mu;
    std::string measure_path;
};

LoadedConfig load_config(const std::string& config_path) {
    alpert::io::BuildConfig cfg =
        alpert::io::config_from_json(alpert::io::read_json_file(config_path));
    std::string measure_path = resolve_relative(config_path, cfg.measure_path);
    alpert::Measure mu =
        alpert::io::measure_from_json(alpert::io::read_json_file(measure_path));
    return LoadedConfig{std::move(cfg), std::move(mu), std::move(measure_path)};
}

int cmd_build(const std::string& config_path, const std::string& out_path) {
    Timer timer;
    LoadedConfig lc = load_config(config_path);
    alpert::BasisBundle bundle = alpert::build(lc.mu, lc.cfg.window, lc.cfg.assignment);
    std::string bundle_text = alpert::io::bundle_to_json(bundle).dump(2) + "\n";
    if (!out_path.empty()) alpert::io::write_text_file(out_path, bundle_text);

    json j;
    j["command"] = "build";
    j["inputs"] =
        json::array({input_record(config_path), input_record(lc.measure_path)});
    j["outputs"] = out_path.empty() ? json::array() : json::array({out_path});
    j["bundle_hash"] = alpert::io::content_hash(bundle_text);
    j["basis_size"] = bundle.total_size();
    json dims = json::array();
    for (const auto& e : bundle.entries)
        dims.push_back(json{{"cube", alpert::io::cube_to_json(e.cube)},
                            {"kind", alpert::entry_kind_name(e.kind)},
                            {"dim", e.basis.size()}});
    j["dimension_table"] = dims;
    j["wall_time_s"] = timer.seconds();
    if (out_path.empty()) {
        j["bundle"] = alpert::io::bundle_to_json(bundle);
    }
    emit(j, "");
    return 0;
}

int cmd_verify(const std::string& config_path, int trials, std::uint64_t seed,
               const std::string& out_path) {
    Timer timer;
    LoadedConfig lc = load_config(config_path);
    alpert::BasisBundle bundle = alpert::build(lc.mu, lc.cfg.window, lc.cfg.assignment);

    alpert::CompletenessReport comp = alpert::verify_complete(lc.mu, bundle, trials, seed);
    alpert::OrthogonalityReport ortho = alpert::verify_orthogonality(lc.mu, bundle);

    // telescoping over every valid nested pair in the window
    double worst_tele = 0.0;
    int tele_pairs = 0;
    std::vector<alpert::DyadicCube> all = bundle.window.all_cubes();
    for (const auto& q : all) {
        for (const auto& r : all) {
            if (q == r || !r.contains(q)) continue;
            if (!bundle.assignment.family_for(q).same_set(bundle.assignment.family_for(r)))
                continue;
            ++tele_pairs;
            worst_tele = std::max(
                worst_tele, alpert::verify_telescoping(lc.mu, bundle, q, r, 3, seed + tele_pairs));
        }
    }

    bool pass = comp.max_rel_residual <= kCompletenessTol &&
                comp.max_parseval_violation <= kCompletenessTol &&
                ortho.max_violation <= kOrthogonalityTol && ortho.exact_pairwise_zero &&
                ortho.exact_family_zero && worst_tele <= kTelescopingTol;

    json j;
    j["command"] = "verify";
    j["inputs"] =
        json::array({input_record(config_path), input_record(lc.measure_path)});
    j["seed"] = seed;
    j["trials"] = trials;
    j["basis_size"] = bundle.total_size();
    j["completeness"] = json{{"max_rel_residual", comp.max_rel_residual},
                             {"max_parseval_violation", comp.max_parseval_violation},
                             {"trials", comp.trials},
                             {"skipped_zero_draws", comp.skipped},
                             {"threshold", kCompletenessTol}};
    j["orthogonality"] = json{{"max_violation", ortho.max_violation},
                              {"exact_pairwise_zero", ortho.exact_pairwise_zero},
                              {"exact_family_zero", ortho.exact_family_zero},
                              {"threshold", kOrthogonalityTol}};
    j["telescoping"] = json{{"max_discrepancy", worst_tele},
                            {"pairs_checked", tele_pairs},
                            {"threshold", kTelescopingTol}};
    j["pass"] = pass;
    j["wall_time_s"] = timer.seconds();
    emit(j, out_path);
    return pass ? 0 : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Alpert wavelet bases over atomic and box measures"};
    app.require_subcommand(1);

    std::string measure_path, config_path, ideal_path, cube_text, out_path;
    std::string order_name = "grevlex";
    int kmax = 5;
    int trials = 20;
    std::uint64_t seed = 12345;

    CLI::App* dims = app.add_subcommand("dims", "Exact dimension table for a cube");
    dims->add_option("--measure", measure_path, "measure JSON file")->required();
    dims->add_option("--cube", cube_text, "cube literal JSON")->required();
    dims->add_option("--kmax", kmax, "largest degree bound k");
    dims->add_option("--order", order_name, "grevlex or grlex");
    dims->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* groeb = app.add_subcommand("groebner", "Reduced Groebner basis report");
    groeb->add_option("--ideal", ideal_path, "ideal JSON file")->required();
    groeb->add_option("--kmax", kmax, "degree bound for the staircase partition");
    groeb->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* vanish = app.add_subcommand("vanishing", "Vanishing ideal of a cube's support");
    vanish->add_option("--measure", measure_path, "measure JSON file")->required();
    vanish->add_option("--cube", cube_text, "cube literal JSON")->required();
    vanish->add_option("--order", order_name, "grevlex or grlex");
    vanish->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* build = app.add_subcommand("build", "Construct a basis bundle");
    build->add_option("--config", config_path, "build config JSON file")->required();
    build->add_option("--out", out_path, "bundle output file");

    CLI::App* verify = app.add_subcommand("verify", "Build and verify a basis bundle");
    verify->add_option("--config", config_path, "build config JSON file")->required();
    verify->add_option("--trials", trials, "random test functions per check");
    verify->add_option("--seed", seed, "RNG seed recorded in the report");
    verify->add_option("--out", out_path, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dims->parsed()) return cmd_dims(measure_path, cube_text, kmax, order_name, out_path);
        if (groeb->parsed()) return cmd_groebner(ideal_path, kmax, out_path);
        if (vanish->parsed()) return cmd_vanishing(measure_path, cube_text, order_name, out_path);
        if (build->parsed()) return cmd_build(config_path, out_path);
        if (verify->parsed()) return cmd_verify(config_path, trials, seed, out_path);
    } catch (const alpert::InputError& e) {
        std::cout << json{{"error", {{"type", "input"}, {"message", e.what()}}}}.dump(2)
                  << std::endl;
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump(2)
                  << std::endl;
        return kExitInputError;
    }
    return 0;
}
