// covert_cli: parameter files in, CSV out.
//
//   covert_cli config-template > params.txt
//   covert_cli fig2 --config params.txt --out fig2.csv --mc-blocks 1000000
//   covert_cli sweep --param d_ar --from 2 --to 18 --points 17
//   covert_cli validate --config params.txt
//
// Exit codes: 0 success, 1 validation failure, 2 usage or parse error.

#include "covert/config.hpp"
#include "covert/experiments.hpp"
#include "covert/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct Flags {
    std::string config;
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t mc_blocks = 1'000'000;
    std::string scheme;
    std::string fraction;
    double eta1 = covert::kFig2Eta1;
    bool inject_fault = false;
    covert::SweepSpec sweep;
};

covert::ExperimentConfig build_config(const Flags& f) {
    covert::ExperimentConfig cfg;
    if (!f.config.empty()) cfg = covert::load_config(f.config);
    if (f.scheme == "both")
        cfg.scheme.reset();
    else if (!f.scheme.empty())
        cfg.scheme = covert::parse_scheme(f.scheme);
    if (f.fraction == "auto") {
        cfg.fraction.reset();
    } else if (!f.fraction.empty()) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(f.fraction, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != f.fraction.size() || !(v > 0.0 && v < 1.0))
            throw covert::ConfigError("--fraction must be 'auto' or a number in (0, 1)", 0);
        cfg.fraction = v;
    }
    return cfg;
}

void emit(const Flags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(f.out, std::ios::binary);
    if (!os) throw covert::ConfigError("cannot open '" + f.out + "' for writing", 0);
    os << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covert communication over an energy-harvesting AF relay"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("--config", f.config, "parameter file (see config-template)");
    app.add_option("--out", f.out, "output file (default: stdout)");
    app.add_option("--seed", f.seed, "master RNG seed");
    app.add_option("--mc-blocks", f.mc_blocks, "Monte Carlo blocks per hypothesis")
        ->check(CLI::PositiveNumber);
    app.add_option("--scheme", f.scheme, "ts, ps or both")->check(CLI::IsMember({"ts", "ps", "both"}));
    app.add_option("--fraction", f.fraction, "harvesting fraction in (0,1), or auto");

    auto* tmpl = app.add_subcommand("config-template", "print a commented parameter file");
    auto* fig2 = app.add_subcommand("fig2", "detection error against threshold");
    fig2->add_option("--eta1", f.eta1, "conversion efficiency under H1");
    auto* fig3 = app.add_subcommand("fig3", "max effective covert rate against Pa");
    auto* fig4 = app.add_subcommand("fig4", "max effective covert rate against eta0");
    auto* fig5 = app.add_subcommand("fig5", "overhead ratio eta0/eta1* against eta0");
    auto* fig6 = app.add_subcommand("fig6", "max effective covert rate against d_ar");
    auto* sweep = app.add_subcommand("sweep", "max effective covert rate over one parameter");
    sweep->add_option("--param", f.sweep.key, "parameter name, in file units")->required();
    sweep->add_option("--from", f.sweep.from, "first value")->required();
    sweep->add_option("--to", f.sweep.to, "last value")->required();
    sweep->add_option("--points", f.sweep.points, "grid size")->check(CLI::PositiveNumber);
    sweep->add_flag("--log", f.sweep.log_spaced, "log-spaced grid");
    auto* validate = app.add_subcommand("validate", "run the self-check suite");
    validate->add_flag("--inject-fault", f.inject_fault, "perturb a closed form (harness self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (tmpl->parsed()) {
            emit(f, covert::config_template());
            return 0;
        }
        const covert::ExperimentConfig cfg = build_config(f);
        const covert::RunOptions run{f.seed, f.mc_blocks};

        if (validate->parsed()) {
            const auto checks = covert::run_validate(cfg, {run, f.inject_fault});
            std::ostringstream report;
            covert::print_report(report, checks);
            emit(f, report.str());
            return covert::all_passed(checks) ? 0 : kExitValidation;
        }

        covert::Table table;
        if (fig2->parsed())
            table = covert::run_fig2(cfg, run, f.eta1);
        else if (fig3->parsed())
            table = covert::run_fig3(cfg, run);
        else if (fig4->parsed())
            table = covert::run_fig4(cfg, run);
        else if (fig5->parsed())
            table = covert::run_fig5(cfg, run);
        else if (fig6->parsed())
            table = covert::run_fig6(cfg, run);
        else if (sweep->parsed())
            table = covert::run_sweep(cfg, run, f.sweep);
        emit(f, table.to_csv());
        return 0;
    } catch (const covert::ConfigError& e) {
        std::cerr << "error: " << (f.config.empty() ? "" : f.config + ": ") << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
