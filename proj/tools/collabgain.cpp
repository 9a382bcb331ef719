// collabgain: collaboration gains and relay selection from the command line.
//
// Exit status: 0 ok, 1 verify found a failing invariant, 2 validation error,
// 3 solver error (dead link, infeasible demand, no convergence), 4 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "collabgain/cli/commands.hpp"
#include "collabgain/cli/scenario.hpp"
#include "collabgain/cli/verify.hpp"
#include "collabgain/error.hpp"
#include "collabgain/sweep.hpp"

namespace {

using namespace collabgain;

enum Exit { kOk = 0, kCheckFailed = 1, kValidation = 2, kSolver = 3, kIo = 4 };

struct Options {
    std::string scenario;
    std::string format = "text";
    std::string mode;
    bool exhaustive = false;

    std::string kind;
    std::string out;
    SweepConfig sweep;
    double rate = 0.0;

    std::string suite = "all";
};

void emit(const cli::Report& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << '\n';
    } else {
        cli::render_text(std::cout, report);
    }
}

int run_report(const Options& o, cli::Report (*command)(const cli::Scenario&)) {
    const cli::Scenario s = cli::load_scenario(o.scenario);
    emit(command(s), o.format);
    return kOk;
}

int run_select(const Options& o) {
    const cli::Scenario s = cli::load_scenario(o.scenario);
    std::optional<SelectionMode> mode;
    if (o.mode == "rate") mode = SelectionMode::Rate;
    if (o.mode == "resource") mode = SelectionMode::Resource;
    emit(cli::select_report(s, mode, o.exhaustive), o.format);
    return kOk;
}

int run_sweep(Options o) {
    const auto kind = parse_sweep_kind(o.kind);
    if (!kind) throw ValidationError("unknown sweep kind \"" + o.kind + "\"");
    o.sweep.kind = *kind;
    if (o.rate > 0.0) o.sweep.rate = o.rate;
    const SweepResult result = sweep(o.sweep);

    // Everything is computed before the output file is touched.
    std::ostringstream csv;
    write_csv(csv, result);
    if (o.out.empty() || o.out == "-") {
        std::cout << csv.str();
        return kOk;
    }
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw cli::IoError("cannot write " + o.out);
    file << csv.str();
    file.flush();
    if (!file) throw cli::IoError("failed writing " + o.out);
    return kOk;
}

int run_verify(const Options& o) {
    const auto results = cli::run_suite(o.suite);
    bool ok = true;
    for (const auto& r : results) {
        const char* status = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
        std::cout << status << "  [" << r.suite << "] " << r.name << " -- " << r.detail << '\n';
        ok = ok && (r.informational || r.passed);
    }
    return ok ? kOk : kCheckFailed;
}

void add_scenario_options(CLI::App* sub, Options& o) {
    sub->add_option("--scenario", o.scenario, "Scenario JSON file")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_axis(CLI::App* sub, GridAxis& axis, const std::string& name, const std::string& unit) {
    sub->add_option("--" + name + "-min", axis.lo, "Lower end of the " + unit + " grid");
    sub->add_option("--" + name + "-max", axis.hi, "Upper end of the " + unit + " grid");
    sub->add_option("--" + name + "-step", axis.step, "Step of the " + unit + " grid");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collaboration gain, energy/resource duals and relay selection for two-user "
                 "decode-and-forward networks"};
    app.require_subcommand(1);
    Options o;

    auto* gain = app.add_subcommand("gain", "Optimal allocations of both protocols and the rate gain");
    add_scenario_options(gain, o);
    auto* energy = app.add_subcommand("energy", "Minimal TERN of both protocols for a demanded rate");
    add_scenario_options(energy, o);
    auto* resource = app.add_subcommand("resource", "Feasibility and resource usage for a demanded rate");
    add_scenario_options(resource, o);
    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and asymptotic gain limits");
    add_scenario_options(bounds, o);
    auto* placement = app.add_subcommand("placement", "Gains from node positions and optimal relay location");
    add_scenario_options(placement, o);

    auto* select = app.add_subcommand("select", "Relay selection for candidates or a set of flows");
    add_scenario_options(select, o);
    select->add_option("--mode", o.mode, "Selection criterion")->check(CLI::IsMember({"rate", "resource"}));
    select->add_flag("--exhaustive", o.exhaustive, "Confirm every candidate with the exact gain");

    auto* sw = app.add_subcommand("sweep", "Parameter sweep written as CSV");
    sw->add_option("--kind", o.kind, "plane_gain | collinear_gain | rate_ratio | resource_ratio | energy_ratio")
        ->required();
    sw->add_option("--out", o.out, "Output CSV path (default stdout)");
    sw->add_option("--epsilon", o.sweep.epsilon, "TERN of user 1");
    sw->add_option("--eta", o.sweep.eta, "Path-loss exponent");
    sw->add_option("--k", o.sweep.k, "Rate ratio");
    sw->add_option("--rate", o.rate, "Demanded base rate (resource_ratio, energy_ratio)");
    sw->add_option("--d", o.sweep.d_fixed, "Relay position for rate_ratio");
    sw->add_option("--threads", o.sweep.threads, "Worker threads, 0 for all cores");
    add_axis(sw, o.sweep.x, "x", "relay x");
    add_axis(sw, o.sweep.y, "y", "relay y");
    add_axis(sw, o.sweep.d, "d", "relay position");
    add_axis(sw, o.sweep.k_axis, "log10-k", "log10(k)");

    auto* verify = app.add_subcommand("verify", "Run invariant suites and print a pass/fail table");
    verify->add_option("--suite", o.suite, "sandwich | duality | limits | placement | selection | oracle | "
                                           "inequality | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kValidation;
    }

    try {
        if (*gain) return run_report(o, cli::gain_report);
        if (*energy) return run_report(o, cli::energy_report);
        if (*resource) return run_report(o, cli::resource_report);
        if (*bounds) return run_report(o, cli::bounds_report);
        if (*placement) return run_report(o, cli::placement_report);
        if (*select) return run_select(o);
        if (*sw) return run_sweep(o);
        if (*verify) return run_verify(o);
    } catch (const cli::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSolver;
    }
    return kValidation;
}
