// Command-line front end: constants | theta | leaf | divergence | verify |
// quotient-check. Exit codes: 0 success (all checks passed), 1 verification
// failure, 2 invalid input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anofol/anofol.hpp"

namespace {

using anofol::config_error;

std::vector<std::vector<double>> parse_points_file(const std::string& path,
                                                   std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open points file " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    long line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed;
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r') trimmed += ch;
        if (trimmed.empty() || trimmed[0] == '#') continue;

        std::vector<double> row;
        std::stringstream ss(trimmed);
        std::string field;
        bool parse_ok = true;
        while (std::getline(ss, field, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(field, &used));
                if (used != field.size()) parse_ok = false;
            } catch (...) {
                parse_ok = false;
            }
            if (!parse_ok) break;
        }
        if (!parse_ok && first_content) {
            first_content = false;  // header row
            continue;
        }
        first_content = false;
        if (!parse_ok)
            throw config_error("points file " + path + " line " + std::to_string(line_no) +
                               ": cannot parse numeric fields");
        if (row.size() != columns)
            throw config_error("points file " + path + " line " + std::to_string(line_no) +
                               ": expected " + std::to_string(columns) + " fields, got " +
                               std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot open output file " + out_path);
    out << payload;
    if (!out) throw config_error("failed writing output file " + out_path);
}

std::string constants_json(const anofol::run_config& cfg) {
    using anofol::format_number;
    const anofol::perturbed_lift lift = anofol::make_lift(cfg);
    const anofol::certified_value c0 = anofol::shadowing_constant(lift, cfg.grid_resolution);
    const anofol::shadow_constant sc = anofol::make_shadow_constant(cfg, lift);
    const anofol::eigen_frame& f = lift.frame();
    std::string out = "{";
    out += "\"mu\":" + format_number(f.mu);
    out += ",\"lambda\":" + format_number(f.lambda);
    out += ",\"sigma_min\":" + format_number(lift.smallest_singular());
    out += ",\"matrix_norm\":" + format_number(lift.model_norm());
    out += ",\"lipschitz_bound\":" + format_number(lift.lipschitz_bound());
    out += ",\"lipschitz_margin\":" +
           format_number(lift.smallest_singular() - lift.lipschitz_bound());
    out += ",\"inverse_contraction\":" + format_number(lift.inverse_contraction());
    out += ",\"c0\":{\"value\":" + format_number(c0.value);
    out += ",\"error_radius\":" + format_number(c0.error_radius);
    out += ",\"upper_bound\":" + format_number(c0.upper_bound()) + "}";
    out += ",\"margin\":" + format_number(cfg.margin);
    out += ",\"shadow_scale\":" + format_number(cfg.shadow_scale);
    out += ",\"shadow_constant\":" + format_number(sc.value);
    out += "}\n";
    return out;
}

std::string theta_csv(const anofol::run_config& cfg, const std::string& points_path) {
    using anofol::format_number;
    const auto rows = parse_points_file(points_path, 2);
    const anofol::perturbed_lift lift = anofol::make_lift(cfg);
    const anofol::shadow_constant sc = anofol::make_shadow_constant(cfg, lift);
    std::string out = "x1,x2,theta_s,err_s,theta_u,err_u,status\n";
    for (const auto& row : rows) {
        const anofol::vec2 x{row[0], row[1]};
        out += format_number(x.x) + "," + format_number(x.y) + ",";
        try {
            const auto pair = anofol::semiconjugacy(lift, sc, x, cfg.theta_tol);
            out += format_number(pair.first.value) + "," + format_number(pair.first.error_radius) +
                   "," + format_number(pair.second.value) + "," +
                   format_number(pair.second.error_radius) + ",ok\n";
        } catch (const anofol::depth_overflow&) {
            out += ",,,,depth_overflow\n";
        }
    }
    return out;
}

std::string leaf_csv(const anofol::run_config& cfg) {
    using anofol::format_number;
    const anofol::perturbed_lift lift = anofol::make_lift(cfg);
    const anofol::shadow_constant sc = anofol::make_shadow_constant(cfg, lift);
    const anofol::leaf_coord leaf{cfg.leaf.kind, cfg.leaf.coord};
    const auto points =
        anofol::leaf_sample(lift, sc, leaf, cfg.window, cfg.leaf.resolution, cfg.leaf.depth);
    std::string out = "x1,x2,depth\n";
    for (const anofol::vec2& x : points)
        out += format_number(x.x) + "," + format_number(x.y) + "," +
               std::to_string(cfg.leaf.depth) + "\n";
    return out;
}

std::string divergence_csv(const anofol::run_config& cfg, const std::string& points_path) {
    using anofol::format_number;
    const auto rows = parse_points_file(points_path, 4);
    const anofol::perturbed_lift lift = anofol::make_lift(cfg);
    std::string out = "pair,n,dist_u,dist_s,dist\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const anofol::vec2 x{rows[i][0], rows[i][1]};
        const anofol::vec2 y{rows[i][2], rows[i][3]};
        const auto track = anofol::orbit_divergence(lift, x, y, cfg.orbit_depth);
        for (const anofol::divergence_sample& s : track)
            out += std::to_string(i) + "," + std::to_string(s.n) + "," + format_number(s.du) +
                   "," + format_number(s.ds) + "," + format_number(s.d) + "\n";
    }
    return out;
}

std::string quotient_report_json(const anofol::run_config& cfg, bool& pass) {
    const anofol::perturbed_lift lift = anofol::make_lift(cfg);
    const anofol::shadow_constant sc = anofol::make_shadow_constant(cfg, lift);
    const anofol::involution_model model{lift};
    anofol::verification_report report;
    anofol::property_record r;
    r.id = "cover.descent";
    r.ref = "T2-descent";
    r.samples = cfg.samples.descent;
    r.threshold = 2.0 * cfg.theta_tol;
    try {
        const auto res =
            anofol::check_descent(model, sc, cfg.samples.descent, cfg.theta_tol, cfg.seed);
        r.worst_residual = std::max(res.worst_stable, res.worst_unstable);
        r.pass = true;
    } catch (const anofol::equivariance_violation& e) {
        r.worst_residual = e.worst_residual;
        r.pass = false;
    }
    report.properties.push_back(r);
    pass = report.pass();
    return report.to_json();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for generalized foliations of perturbed torus maps"};
    app.require_subcommand(1);

    std::string config_path, out_path, points_path;
    std::optional<std::uint64_t> seed_override;

    auto add_common = [&](CLI::App* cmd, bool with_points, bool with_seed) {
        cmd->add_option("--config", config_path, "JSON run configuration")->required();
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        if (with_points)
            cmd->add_option("--points", points_path, "CSV input points")->required();
        if (with_seed) cmd->add_option("--seed", seed_override, "override the configured seed");
    };

    CLI::App* cmd_constants =
        app.add_subcommand("constants", "print the certified run constants as JSON");
    add_common(cmd_constants, false, false);
    CLI::App* cmd_theta = app.add_subcommand(
        "theta", "generalized leaf coordinates for a list of points, as CSV");
    add_common(cmd_theta, true, false);
    CLI::App* cmd_leaf =
        app.add_subcommand("leaf", "sample a generalized leaf band over the window, as CSV");
    add_common(cmd_leaf, false, false);
    CLI::App* cmd_divergence = app.add_subcommand(
        "divergence", "pseudo-distance tracks along forward orbit pairs, as CSV");
    add_common(cmd_divergence, true, false);
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the property suite and emit a JSON report");
    add_common(cmd_verify, false, true);
    CLI::App* cmd_quotient = app.add_subcommand(
        "quotient-check", "verify descent of the partition through the involution quotient");
    add_common(cmd_quotient, false, true);

    CLI11_PARSE(app, argc, argv);

    try {
        anofol::run_config cfg = anofol::load_config_file(config_path);
        if (seed_override) cfg.seed = *seed_override;

        if (cmd_constants->parsed()) {
            emit(out_path, constants_json(cfg));
            return 0;
        }
        if (cmd_theta->parsed()) {
            emit(out_path, theta_csv(cfg, points_path));
            return 0;
        }
        if (cmd_leaf->parsed()) {
            emit(out_path, leaf_csv(cfg));
            return 0;
        }
        if (cmd_divergence->parsed()) {
            emit(out_path, divergence_csv(cfg, points_path));
            return 0;
        }
        if (cmd_verify->parsed()) {
            const anofol::verification_report report = anofol::run_verification(cfg);
            emit(out_path, report.to_json());
            return report.pass() ? 0 : 1;
        }
        if (cmd_quotient->parsed()) {
            bool pass = false;
            const std::string payload = quotient_report_json(cfg, pass);
            emit(out_path, payload);
            return pass ? 0 : 1;
        }
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
