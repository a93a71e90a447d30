#pragma once

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "anofol/involution.hpp"
#include "anofol/lift.hpp"
#include "anofol/perturbation.hpp"
#include "anofol/shadowing.hpp"
#include "anofol/vec.hpp"

namespace anofol {

// Invalid configuration input; the message starts with the path of the
// offending field.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct sample_counts {
    long points = 1000;
    long pairs = 200;
    long nearby_pairs = 500;
    long c_independence = 500;
    long descent = 500;
};

struct leaf_query {
    leaf_kind kind = leaf_kind::stable;
    double coord = 0.0;
    int depth = 3;
    int resolution = 256;
};

// Everything a run needs, with defaults describing the reference instance:
// the matrix [[2,1],[1,1]] perturbed by (0.05 sin 2 pi x2, 0.03 sin 2 pi x1).
struct run_config {
    std::int64_t matrix[2][2] = {{2, 1}, {1, 1}};
    std::vector<fourier_term> terms = {fourier_term{{0, 1}, 0.0, 0.05, 0.0, 0.0},
                                       fourier_term{{1, 0}, 0.0, 0.0, 0.0, 0.03}};
    double margin = 0.1;
    double theta_tol = 1e-8;
    double inverse_tol = 1e-12;
    int inverse_max_iterations = 10000;
    int max_orbit_depth = 200;
    int grid_resolution = 512;
    int orbit_depth = 40;
    int nest_depth = 30;
    std::uint64_t seed = 42;
    // Scales the chosen shadow constant; values below 1 deliberately break
    // the selection inequality for negative-control runs.
    double shadow_scale = 1.0;
    bool branched_cover = false;
    rect window;
    leaf_query leaf;
    sample_counts samples;
};

namespace detail {

using json = nlohmann::json;

inline void reject_unknown_keys(const json& obj, const std::string& path,
                                const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            throw config_error(path.empty() ? "unknown field \"" + it.key() + "\""
                                            : path + ": unknown field \"" + it.key() + "\"");
    }
}

inline double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw config_error(path + ": expected a number");
    return j.get<double>();
}

inline std::int64_t as_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw config_error(path + ": expected an integer");
    return j.get<std::int64_t>();
}

inline bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw config_error(path + ": expected a boolean");
    return j.get<bool>();
}

}  // namespace detail

inline run_config parse_config(const nlohmann::json& root) {
    using detail::as_bool;
    using detail::as_integer;
    using detail::as_number;

    if (!root.is_object()) throw config_error("config root must be a JSON object");
    detail::reject_unknown_keys(
        root, "",
        {"matrix", "perturbation", "margin", "theta_tol", "inverse_tol",
         "inverse_max_iterations", "max_orbit_depth", "grid_resolution", "orbit_depth",
         "nest_depth", "seed", "shadow_scale", "branched_cover", "window", "leaf", "samples"});

    run_config cfg;

    if (root.contains("matrix")) {
        const auto& m = root["matrix"];
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
            m[0].size() != 2 || m[1].size() != 2)
            throw config_error("matrix: expected a 2x2 integer array");
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                cfg.matrix[r][c] = as_integer(m[r][c], "matrix[" + std::to_string(r) + "][" +
                                                           std::to_string(c) + "]");
    }

    if (root.contains("perturbation")) {
        const auto& terms = root["perturbation"];
        if (!terms.is_array()) throw config_error("perturbation: expected an array of terms");
        cfg.terms.clear();
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string path = "perturbation[" + std::to_string(i) + "]";
            const auto& t = terms[i];
            if (!t.is_object()) throw config_error(path + ": expected an object");
            detail::reject_unknown_keys(t, path, {"k", "cx", "sx", "cy", "sy"});
            if (!t.contains("k") || !t["k"].is_array() || t["k"].size() != 2)
                throw config_error(path + ".k: expected an integer pair");
            fourier_term term;
            term.k.x = as_integer(t["k"][0], path + ".k[0]");
            term.k.y = as_integer(t["k"][1], path + ".k[1]");
            if (term.k.x == 0 && term.k.y == 0)
                throw config_error(path + ".k: frequency vector must be nonzero");
            if (t.contains("cx")) term.cx = as_number(t["cx"], path + ".cx");
            if (t.contains("sx")) term.sx = as_number(t["sx"], path + ".sx");
            if (t.contains("cy")) term.cy = as_number(t["cy"], path + ".cy");
            if (t.contains("sy")) term.sy = as_number(t["sy"], path + ".sy");
            cfg.terms.push_back(term);
        }
    }

    if (root.contains("margin")) cfg.margin = as_number(root["margin"], "margin");
    if (cfg.margin <= 0.0) throw config_error("margin: must be positive");

    if (root.contains("theta_tol")) cfg.theta_tol = as_number(root["theta_tol"], "theta_tol");
    if (cfg.theta_tol <= 0.0) throw config_error("theta_tol: must be positive");

    if (root.contains("inverse_tol"))
        cfg.inverse_tol = as_number(root["inverse_tol"], "inverse_tol");
    if (cfg.inverse_tol <= 0.0) throw config_error("inverse_tol: must be positive");

    if (root.contains("inverse_max_iterations"))
        cfg.inverse_max_iterations = static_cast<int>(
            as_integer(root["inverse_max_iterations"], "inverse_max_iterations"));
    if (cfg.inverse_max_iterations < 1)
        throw config_error("inverse_max_iterations: must be >= 1");

    if (root.contains("max_orbit_depth"))
        cfg.max_orbit_depth =
            static_cast<int>(as_integer(root["max_orbit_depth"], "max_orbit_depth"));
    if (cfg.max_orbit_depth < 1) throw config_error("max_orbit_depth: must be >= 1");

    if (root.contains("grid_resolution"))
        cfg.grid_resolution =
            static_cast<int>(as_integer(root["grid_resolution"], "grid_resolution"));
    if (cfg.grid_resolution < 2) throw config_error("grid_resolution: must be >= 2");

    if (root.contains("orbit_depth"))
        cfg.orbit_depth = static_cast<int>(as_integer(root["orbit_depth"], "orbit_depth"));
    if (cfg.orbit_depth < 1 || cfg.orbit_depth > cfg.max_orbit_depth)
        throw config_error("orbit_depth: must lie in [1, max_orbit_depth]");

    if (root.contains("nest_depth"))
        cfg.nest_depth = static_cast<int>(as_integer(root["nest_depth"], "nest_depth"));
    if (cfg.nest_depth < 1 || cfg.nest_depth > cfg.max_orbit_depth)
        throw config_error("nest_depth: must lie in [1, max_orbit_depth]");

    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer())
            throw config_error("seed: expected an unsigned integer");
        cfg.seed = root["seed"].get<std::uint64_t>();
    }

    if (root.contains("shadow_scale"))
        cfg.shadow_scale = as_number(root["shadow_scale"], "shadow_scale");
    if (cfg.shadow_scale <= 0.0) throw config_error("shadow_scale: must be positive");

    if (root.contains("branched_cover"))
        cfg.branched_cover = as_bool(root["branched_cover"], "branched_cover");

    if (root.contains("window")) {
        const auto& w = root["window"];
        if (!w.is_object()) throw config_error("window: expected an object");
        detail::reject_unknown_keys(w, "window", {"x_min", "x_max", "y_min", "y_max"});
        if (w.contains("x_min")) cfg.window.x_min = as_number(w["x_min"], "window.x_min");
        if (w.contains("x_max")) cfg.window.x_max = as_number(w["x_max"], "window.x_max");
        if (w.contains("y_min")) cfg.window.y_min = as_number(w["y_min"], "window.y_min");
        if (w.contains("y_max")) cfg.window.y_max = as_number(w["y_max"], "window.y_max");
        if (!cfg.window.valid()) throw config_error("window: must have positive extent");
    }

    if (root.contains("leaf")) {
        const auto& l = root["leaf"];
        if (!l.is_object()) throw config_error("leaf: expected an object");
        detail::reject_unknown_keys(l, "leaf", {"kind", "coord", "depth", "resolution"});
        if (l.contains("kind")) {
            const std::string kind = l["kind"].is_string() ? l["kind"].get<std::string>() : "";
            if (kind == "stable")
                cfg.leaf.kind = leaf_kind::stable;
            else if (kind == "unstable")
                cfg.leaf.kind = leaf_kind::unstable;
            else
                throw config_error("leaf.kind: expected \"stable\" or \"unstable\"");
        }
        if (l.contains("coord")) cfg.leaf.coord = as_number(l["coord"], "leaf.coord");
        if (l.contains("depth"))
            cfg.leaf.depth = static_cast<int>(as_integer(l["depth"], "leaf.depth"));
        if (cfg.leaf.depth < 0) throw config_error("leaf.depth: must be >= 0");
        if (l.contains("resolution"))
            cfg.leaf.resolution =
                static_cast<int>(as_integer(l["resolution"], "leaf.resolution"));
        if (cfg.leaf.resolution < 2) throw config_error("leaf.resolution: must be >= 2");
    }

    if (root.contains("samples")) {
        const auto& s = root["samples"];
        if (!s.is_object()) throw config_error("samples: expected an object");
        detail::reject_unknown_keys(
            s, "samples", {"points", "pairs", "nearby_pairs", "c_independence", "descent"});
        auto read = [&](const char* key, long& out) {
            if (s.contains(key)) out = as_integer(s[key], std::string("samples.") + key);
            if (out < 1) throw config_error(std::string("samples.") + key + ": must be >= 1");
        };
        read("points", cfg.samples.points);
        read("pairs", cfg.samples.pairs);
        read("nearby_pairs", cfg.samples.nearby_pairs);
        read("c_independence", cfg.samples.c_independence);
        read("descent", cfg.samples.descent);
    }

    // Module-level preconditions are validated here, at load time: the
    // matrix must be hyperbolic and the perturbation must respect the
    // invertibility margin.
    try {
        make_hyperbolic_matrix(cfg.matrix[0][0], cfg.matrix[0][1], cfg.matrix[1][0],
                               cfg.matrix[1][1]);
    } catch (const not_hyperbolic& e) {
        throw config_error(std::string("matrix: ") + e.what());
    }
    try {
        perturbed_lift probe(make_hyperbolic_matrix(cfg.matrix[0][0], cfg.matrix[0][1],
                                                    cfg.matrix[1][0], cfg.matrix[1][1]),
                             perturbation(cfg.terms), cfg.inverse_tol,
                             cfg.inverse_max_iterations, cfg.max_orbit_depth);
    } catch (const margin_violation& e) {
        throw config_error(std::string("perturbation: ") + e.what());
    }
    return cfg;
}

inline run_config parse_config_text(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(root);
}

inline run_config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

inline perturbed_lift make_lift(const run_config& cfg) {
    return perturbed_lift(make_hyperbolic_matrix(cfg.matrix[0][0], cfg.matrix[0][1],
                                                 cfg.matrix[1][0], cfg.matrix[1][1]),
                          perturbation(cfg.terms), cfg.inverse_tol, cfg.inverse_max_iterations,
                          cfg.max_orbit_depth);
}

// Shadow constant for a configured run. shadow_scale = 1 is the proper
// choice; other values bypass the selection inequality on purpose.
inline shadow_constant make_shadow_constant(const run_config& cfg, const perturbed_lift& lift) {
    const certified_value c0 = shadowing_constant(lift, cfg.grid_resolution);
    shadow_constant sc = choose_shadow_constant(c0, lift.frame().lambda, cfg.margin);
    sc.value *= cfg.shadow_scale;
    return sc;
}

}  // namespace anofol
