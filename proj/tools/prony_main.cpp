// prony: command-line front-end for the moment-inversion library.
// Subcommands: solve, leaf-sample, classify2, error-set, scaling.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "prony/inversion.hpp"
#include "prony/io.hpp"
#include "prony/leaves.hpp"
#include "prony/signal.hpp"

using nlohmann::json;
using namespace prony;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;      // I/O or validation failure
constexpr int kExitDegenerate = 2; // mathematically degenerate outcome

struct Options {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    std::size_t budget = 1024;
    std::string format = "json";
    int q = -1;
    int d = 0;
    std::string h_list;
    double eps_c = 1e-8;
    double eps_exp = 0.0;
    double box = 3.0;
    int grid = 0;
    double radius = 0.5;
    double tol = -1.0;
    bool dump_config = false;

    // which flags were given on the command line (flags > input file > defaults)
    CLI::App* cmd = nullptr;
    bool given(const std::string& flag) const { return cmd->count(flag) > 0; }
};

json load_input(const Options& opt) {
    if (opt.input.empty()) return json::object();
    json j = json::parse(io::read_text_file(opt.input));
    if (!j.is_object()) throw std::invalid_argument("input: top-level JSON object expected");
    return j;
}

template <class T>
T pick(const Options& opt, const std::string& flag, const T& flag_value, const json& in,
       const std::string& field, const T& fallback) {
    if (opt.given(flag)) return flag_value;
    if (in.contains(field)) return in[field].get<T>();
    return fallback;
}

void emit(const std::string& output, const std::string& content) {
    if (output.empty())
        std::fputs(content.c_str(), stdout);
    else
        io::write_text_file(output, content);
}

std::string summary_path(const std::string& output) { return output + ".summary.json"; }

std::vector<double> parse_h_list(const std::string& text) {
    std::vector<double> values;
    std::string cell;
    std::istringstream in(text);
    while (std::getline(in, cell, ',')) {
        if (!cell.empty()) values.push_back(io::parse_double(cell));
    }
    return values;
}

int cmd_solve(const Options& opt) {
    const json in = load_input(opt);
    if (!in.contains("mu")) throw std::invalid_argument("input: missing field 'mu'");
    if (!in.contains("d") && !opt.given("--d"))
        throw std::invalid_argument("input: missing field 'd'");
    MomentVector mu;
    for (const auto& v : in["mu"]) mu.values.push_back(v.get<double>());
    const int d = opt.given("--d") ? opt.d : in["d"].get<int>();
    if (d < 1) throw std::invalid_argument("field 'd': must be a positive integer");

    SolveOptions solve_opts;
    if (opt.tol > 0.0) solve_opts.gap_tol = opt.tol;

    if (opt.dump_config) {
        const json cfg{{"command", "solve"}, {"mu", in["mu"]}, {"d", d},
                       {"gap_tol", solve_opts.gap_tol}, {"rank_tol", solve_opts.rank_tol},
                       {"output", opt.output}};
        std::puts(cfg.dump(2).c_str());
        return kExitOk;
    }

    const InversionResult result = prony_solve(mu, d, solve_opts);
    emit(opt.output, io::to_json(result).dump(2) + "\n");
    return result.status == SolveStatus::Unique ? kExitOk : kExitDegenerate;
}

int cmd_classify2(const Options& opt) {
    const json in = load_input(opt);
    if (!in.contains("mu")) throw std::invalid_argument("input: missing field 'mu'");
    MomentVector mu;
    for (const auto& v : in["mu"]) mu.values.push_back(v.get<double>());
    const double tol = opt.tol > 0.0 ? opt.tol : in.value("tol", 1e-12);

    if (opt.dump_config) {
        const json cfg{{"command", "classify2"}, {"mu", in["mu"]}, {"tol", tol},
                       {"output", opt.output}};
        std::puts(cfg.dump(2).c_str());
        return kExitOk;
    }

    const TwoNodeCurveClass cls = classify_two_node_curve(mu, tol);
    emit(opt.output, io::to_json(cls).dump(2) + "\n");
    return kExitOk;
}

int cmd_leaf_sample(const Options& opt) {
    const json in = load_input(opt);
    if (!in.contains("mu")) throw std::invalid_argument("input: missing field 'mu'");
    if (!in.contains("d") && !opt.given("--d"))
        throw std::invalid_argument("input: missing field 'd'");
    if (!in.contains("q") && !opt.given("--q"))
        throw std::invalid_argument("input: missing field 'q'");

    LeafSpec spec;
    for (const auto& v : in["mu"]) spec.mu.values.push_back(v.get<double>());
    spec.d = opt.given("--d") ? opt.d : in["d"].get<int>();
    spec.q = opt.given("--q") ? opt.q : in["q"].get<int>();
    validate(spec);

    const double gap_tol = opt.tol > 0.0 ? opt.tol : in.value("gap_tol", kDefaultGapTol);
    const double box = pick(opt, "--box", opt.box, in, "box", 3.0);
    const int grid = pick(opt, "--grid", opt.grid, in, "grid", 0);
    const std::size_t budget = pick(opt, "--budget", opt.budget, in, "budget", std::size_t{512});
    const std::uint64_t seed = pick(opt, "--seed", opt.seed, in, "seed", std::uint64_t{0});

    if (opt.dump_config) {
        const json cfg{{"command", "leaf-sample"}, {"mu", in["mu"]}, {"d", spec.d},
                       {"q", spec.q},   {"box", box},      {"grid", grid},
                       {"budget", budget}, {"seed", seed}, {"gap_tol", gap_tol},
                       {"output", opt.output}};
        std::puts(cfg.dump(2).c_str());
        return kExitOk;
    }

    LeafPointCloud cloud;
    int param_count = 0;
    bool empty_leaf = false;
    if (spec.q >= spec.d) {
        const LeafProjection proj = leaf_projection_high_q(spec);
        if (proj.set.empty()) {
            empty_leaf = true;
            cloud.q = spec.q;
        } else {
            LeafSamplerConfig cfg;
            cfg.box = box;
            cfg.grid = grid > 0 ? grid : (proj.set.dimension() <= 1 ? 61 : 0);
            cfg.budget = static_cast<int>(budget);
            cfg.seed = seed;
            cfg.gap_tol = gap_tol;
            cloud = sample_leaf_projection(proj, cfg);
            param_count = proj.set.dimension();
        }
    } else {
        LowQSampleConfig cfg;
        cfg.node_grid = {in.value("node_lo", -box), in.value("node_hi", box),
                         grid > 0 ? grid : in.value("node_grid", 9)};
        cfg.amp_grid = {in.value("amp_lo", -1.0), in.value("amp_hi", 1.0),
                        in.value("amp_grid", 3)};
        cfg.min_gap = in.value("min_gap", 1e-3);
        cloud = sample_leaf_low_q(spec, cfg);
        param_count = 2 * spec.d - spec.q - 1;
    }

    if (in.contains("section_c")) {
        if (!in.contains("section_reference"))
            throw std::invalid_argument("input: 'section_c' requires 'section_reference'");
        const Signal reference = io::signal_from_json(in["section_reference"]);
        cloud = leaf_section_filter(cloud, reference, in["section_c"].get<double>());
    }

    emit(opt.output, io::to_csv(io::leaf_cloud_table(cloud, spec.d, param_count)));

    json summary{{"status", empty_leaf ? "EMPTY" : "OK"},
                 {"points", cloud.points.size()},
                 {"skipped", cloud.skipped},
                 {"parameter_dimension", param_count}};
    if (spec.d == 2 && spec.q == 2)
        summary["classification"] = io::to_json(classify_two_node_curve(spec.mu));
    if (!opt.output.empty()) io::write_text_file(summary_path(opt.output), summary.dump(2) + "\n");
    std::fprintf(stdout, "%s\n", ("status: " + summary["status"].get<std::string>() +
                                  ", points: " + std::to_string(cloud.points.size()))
                                     .c_str());
    if (summary.contains("classification"))
        std::fprintf(stdout, "classification: %s\n",
                     summary["classification"]["kind"].get<std::string>().c_str());
    return empty_leaf ? kExitDegenerate : kExitOk;
}

int cmd_error_set(const Options& opt) {
    const json in = load_input(opt);
    if (!in.contains("signal")) throw std::invalid_argument("input: missing field 'signal'");
    const Signal f = io::signal_from_json(in["signal"]);
    const double eps = pick(opt, "--eps-c", opt.eps_c, in, "eps", 0.1);
    const std::size_t budget = pick(opt, "--budget", opt.budget, in, "budget", std::size_t{1024});
    const std::uint64_t seed = pick(opt, "--seed", opt.seed, in, "seed", std::uint64_t{0});

    if (opt.dump_config) {
        const json cfg{{"command", "error-set"}, {"signal", io::to_json(f)}, {"eps", eps},
                       {"budget", budget},       {"seed", seed},             {"format", opt.format},
                       {"output", opt.output}};
        std::puts(cfg.dump(2).c_str());
        return kExitOk;
    }

    ErrorSetSample sample;
    try {
        sample = sample_error_set(f, eps, budget, seed);
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    }

    if (opt.format == "csv") {
        emit(opt.output, io::to_csv(io::signal_table(sample.accepted, static_cast<int>(f.size()))));
    } else {
        json j{{"attempts", sample.attempts},
               {"failures", sample.failures},
               {"acceptance_ratio", sample.acceptance_ratio}};
        json accepted = json::array();
        for (const Signal& s : sample.accepted) accepted.push_back(io::to_json(s));
        j["accepted"] = accepted;
        emit(opt.output, j.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_scaling(const Options& opt) {
    const json in = load_input(opt);
    if (!in.contains("signal")) throw std::invalid_argument("input: missing field 'signal'");
    const Signal g = io::signal_from_json(in["signal"]);
    const int d = static_cast<int>(g.size());

    RegularityParams reg{};
    reg.eta = in.value("eta", 0.5);
    reg.m = in.value("m", 0.05);
    reg.M = in.value("M", 20.0);

    SweepConfig cfg;
    if (opt.given("--h"))
        cfg.h_values = parse_h_list(opt.h_list);
    else if (in.contains("h"))
        for (const auto& v : in["h"]) cfg.h_values.push_back(v.get<double>());
    cfg.eps_c = pick(opt, "--eps-c", opt.eps_c, in, "eps_c", 1e-8);
    cfg.eps_exp = pick(opt, "--eps-exp", opt.eps_exp, in, "eps_exp", 0.0);
    cfg.kappa = in.value("kappa", 0.0);
    cfg.budget = pick(opt, "--budget", opt.budget, in, "budget", std::size_t{1024});
    cfg.seed = pick(opt, "--seed", opt.seed, in, "seed", std::uint64_t{0});
    cfg.radius = pick(opt, "--radius", opt.radius, in, "radius", 0.5);
    cfg.leaf.box = pick(opt, "--box", opt.box, in, "box", 3.0);
    const int grid = pick(opt, "--grid", opt.grid, in, "grid", 0);
    if (grid > 0) cfg.leaf.cloud_size = static_cast<std::size_t>(grid);
    if (opt.tol > 0.0) cfg.leaf.gap_tol = opt.tol;

    if (opt.given("--q")) {
        cfg.mode = SweepMode::Leaf;
        cfg.q = opt.q;
    } else if (in.contains("q") && in["q"].is_number_integer()) {
        cfg.mode = SweepMode::Leaf;
        cfg.q = in["q"].get<int>();
    } else {
        cfg.mode = SweepMode::Full;
    }

    if (opt.dump_config) {
        json hs = json::array();
        for (double h : cfg.h_values) hs.push_back(h);
        const json dump{{"command", "scaling"},
                        {"signal", io::to_json(g)},
                        {"eta", reg.eta},
                        {"m", reg.m},
                        {"M", reg.M},
                        {"h", hs},
                        {"eps_c", cfg.eps_c},
                        {"eps_exp", cfg.eps_exp},
                        {"kappa", cfg.kappa},
                        {"mode", cfg.mode == SweepMode::Full ? "full" : "leaf"},
                        {"q", cfg.q},
                        {"budget", cfg.budget},
                        {"seed", cfg.seed},
                        {"radius", cfg.radius},
                        {"box", cfg.leaf.box},
                        {"cloud_size", cfg.leaf.cloud_size},
                        {"output", opt.output}};
        std::puts(dump.dump(2).c_str());
        return kExitOk;
    }

    if (opt.output.empty())
        throw std::invalid_argument("scaling: --output is required (CSV plus summary JSON)");
    if (cfg.h_values.empty()) throw std::invalid_argument("scaling: missing 'h' list");

    const auto [records, summary] = scaling_sweep(g, cfg, reg);
    io::write_text_file(opt.output, io::to_csv(io::sweep_table(records, d)));

    json js;
    js["mode"] = cfg.mode == SweepMode::Full ? "full" : "leaf";
    js["q"] = cfg.mode == SweepMode::Leaf ? json(cfg.q) : json(nullptr);
    json slopes;
    slopes["rho"] = summary.slope_rho ? io::to_json(*summary.slope_rho) : json(nullptr);
    slopes["rho_A"] = summary.slope_rho_A ? io::to_json(*summary.slope_rho_A) : json(nullptr);
    slopes["rho_X"] = summary.slope_rho_X ? io::to_json(*summary.slope_rho_X) : json(nullptr);
    slopes["rho_Sq"] = summary.slope_rho_Sq ? io::to_json(*summary.slope_rho_Sq) : json(nullptr);
    js["slopes"] = slopes;
    json recs = json::array();
    for (const ErrorSweepRecord& rec : records) {
        json r{{"h", rec.h},
               {"eps", rec.eps},
               {"eps_lower", rec.eps_lower},
               {"eps_upper", rec.eps_upper},
               {"samples", rec.samples},
               {"failures", rec.failures}};
        if (cfg.mode == SweepMode::Leaf) {
            r["dist_to_leaf"] = rec.dist_to_leaf;
            r["section_dev"] = rec.section_dev;
            r["fill_radius"] = rec.fill_radius;
            r["rho_Sq"] = rec.rho_Sq[static_cast<std::size_t>(cfg.q)];
        } else {
            r["rho"] = rec.rho;
            r["rho_A"] = rec.rho_A;
            r["rho_X"] = rec.rho_X;
        }
        recs.push_back(r);
    }
    js["records"] = recs;
    json warnings = json::array();
    for (const std::string& w : summary.warnings) warnings.push_back(w);
    js["warnings"] = warnings;
    io::write_text_file(summary_path(opt.output), js.dump(2) + "\n");

    for (const std::string& w : summary.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prony-system solver, leaf sampler and error-amplification experiments"};
    app.require_subcommand(1);

    app.set_help_flag("--help", "print help"); // --h is taken by the h list

    Options opt;
    auto add_common = [&opt](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--input", opt.input, "input JSON path");
        cmd->add_option("--output", opt.output, "output path (stdout when omitted)");
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--budget", opt.budget, "sample budget");
        cmd->add_option("--format", opt.format, "output format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--q", opt.q, "leaf order q");
        cmd->add_option("--d", opt.d, "number of nodes d");
        cmd->add_option("--h", opt.h_list, "comma-separated cluster sizes");
        cmd->add_option("--eps-c", opt.eps_c, "noise level constant C (eps = C h^p)");
        cmd->add_option("--eps-exp", opt.eps_exp, "noise level exponent p");
        cmd->add_option("--box", opt.box, "parameter box half-width");
        cmd->add_option("--grid", opt.grid, "grid points per axis / cloud size");
        cmd->add_option("--radius", opt.radius, "ball radius around the model signal");
        cmd->add_option("--tol", opt.tol, "tolerance override (gap/zero tolerance)");
        cmd->add_flag("--dump-config", opt.dump_config, "print the effective config and exit");
        return cmd;
    };

    CLI::App* solve = add_common(app.add_subcommand("solve", "invert a full moment vector"));
    CLI::App* leaf =
        add_common(app.add_subcommand("leaf-sample", "sample a Prony leaf into CSV"));
    CLI::App* classify =
        add_common(app.add_subcommand("classify2", "classify the two-node leaf curve"));
    CLI::App* error_set =
        add_common(app.add_subcommand("error-set", "sample the error set of a signal"));
    CLI::App* scaling =
        add_common(app.add_subcommand("scaling", "error-amplification sweep over cluster sizes"));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            opt.cmd = solve;
            return cmd_solve(opt);
        }
        if (leaf->parsed()) {
            opt.cmd = leaf;
            return cmd_leaf_sample(opt);
        }
        if (classify->parsed()) {
            opt.cmd = classify;
            return cmd_classify2(opt);
        }
        if (error_set->parsed()) {
            opt.cmd = error_set;
            return cmd_error_set(opt);
        }
        if (scaling->parsed()) {
            opt.cmd = scaling;
            return cmd_scaling(opt);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
