// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-covert_cli>

#include "covert/covert_rate.hpp"
#include "covert/detection.hpp"
#include "covert/experiments.hpp"
#include "covert/montecarlo.hpp"
#include "covert/relaying.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <vector>

using namespace covert;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_s <= 0.0 || secs <= limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %2d  %-34s %s  [%.1fs%s]\n", pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), secs,
                limit_s > 0.0 ? (in_time ? "" : " over limit") : "");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

// Random parameter set for the stochastic criteria.
SystemParams random_params(Rng& rng) {
    SystemParams p = SystemParams::defaults();
    p.Pa = dbm_to_watts(-10.0 + 40.0 * rng.uniform());
    p.d_ar = 2.0 + 16.0 * rng.uniform();
    p.d_rb = 2.0 + 16.0 * rng.uniform();
    p.lambda_ar = 0.5 + 1.5 * rng.uniform();
    p.lambda_rb = 0.5 + 1.5 * rng.uniform();
    p.eta0 = 0.1 + 0.5 * rng.uniform();
    p.eta_u = p.eta0 + (0.95 - p.eta0) * (0.2 + 0.8 * rng.uniform());
    return p;
}

SchemeConfig random_scheme(Rng& rng, Scheme v) { return SchemeConfig{v, 0.1 + 0.8 * rng.uniform()}; }

// Grid minimum of the closed-form xi(tau) over 10^6 log-spaced thresholds in
// [sigma_a^2 (1 + 1e-9), sigma_a^2 + 1e3 (tau* - sigma_a^2)].
double grid_min_xi(const AliceObservation& obs, double eta1) {
    const double lo = 1e-9 * obs.noise;
    const double hi = 1e3 * (optimal_threshold(obs, eta1) - obs.noise);
    constexpr int kPoints = 1'000'000;
    const double ratio = std::pow(hi / lo, 1.0 / (kPoints - 1));
    double best = 1.0, off = lo;
    for (int i = 0; i < kPoints; ++i, off *= ratio)
        best = std::min(best, detection_error(obs, eta1, obs.noise + off).xi);
    return best;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const SystemParams defaults = SystemParams::defaults();

    run(1, "xi* vs threshold-scan oracle", 60.0, [&] {
        Rng rng(substream_seed(1, 1));
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double phi = 0.05 + 0.9 * rng.uniform();
            const double eta1 = 0.9;
            for (Scheme v : {Scheme::TimeSwitching, Scheme::PowerSplitting}) {
                AliceObservation obs = make_observation(defaults, random_scheme(rng, v));
                obs.eta0 = phi * eta1;
                worst = std::max(worst, std::abs(min_detection_error(phi) - grid_min_xi(obs, eta1)));
            }
        }
        return Outcome{worst <= 1e-6, fmt("max|xi*-grid min|=%.2e (tol 1e-6)", worst)};
    });

    run(2, "fig2 reproduction", 30.0, [&] {
        const Table t = run_fig2(ExperimentConfig{}, {2, 1'000'000});
        std::vector<double> minima, mc;
        double worst_curve = 0.0;
        for (std::size_t i = 0; i < t.rows(); ++i) {
            worst_curve = std::max(worst_curve, std::abs(t.number(i, "xi_mc") - t.number(i, "xi")));
            if (t.text(i, "kind") == "optimum") {
                minima.push_back(t.number(i, "xi"));
                mc.push_back(t.number(i, "xi_mc"));
            }
        }
        const double xi_star = minima.at(0);
        const double mc_err = std::max(std::abs(mc.at(0) - xi_star), std::abs(mc.at(1) - xi_star));
        const double split = std::abs(minima.at(0) - minima.at(1));
        const bool ok = std::abs(xi_star - 0.8974) <= 5e-5 && mc_err <= 0.005 && split <= 1e-10 &&
                        worst_curve <= 0.005;
        return Outcome{ok, fmt("xi*=%.5f (0.8974) |mc-xi*|=%.4f (0.005) |ts-ps|=%.1e (1e-10) curve=%.4f",
                               xi_star, mc_err, split, worst_curve)};
    });

    run(3, "alpha/beta vs closed forms", 60.0, [&] {
        Rng rng(substream_seed(3, 3));
        constexpr std::uint64_t n = 100000;
        double worst = 0.0, sum_z2 = 0.0;
        for (int i = 0; i < 20; ++i) {
            const SystemParams p = random_params(rng);
            const SchemeConfig s = random_scheme(rng, i % 2 ? Scheme::PowerSplitting : Scheme::TimeSwitching);
            const double eta1 = p.eta0 + (p.eta_u - p.eta0) * (0.1 + 0.9 * rng.uniform());
            const double tau_star = optimal_threshold(p, s, eta1);
            const double tau = p.sigma2_a + (tau_star - p.sigma2_a) * std::pow(10.0, -1.5 + 3.0 * rng.uniform());
            const SimulationReport r = simulate_detection(p, s, eta1, tau, n, substream_seed(3, i));
            const double a = false_alarm(p, s, tau);
            const double b = miss_detection(p, s, eta1, tau);
            const double za = (r.alpha_hat - a) / std::sqrt(a * (1 - a) / n);
            const double zb = (r.beta_hat - b) / std::sqrt(b * (1 - b) / n);
            worst = std::max({worst, std::abs(za), std::abs(zb)});
            sum_z2 += za * za + zb * zb;
        }
        return Outcome{worst <= 3.0, fmt("max |z|=%.2f over 40 estimates (tol 3), mean z^2=%.2f",
                                         worst, sum_z2 / 40.0)};
    });

    run(4, "power-allocation invariants", 10.0, [&] {
        Rng rng(substream_seed(4, 4));
        double eq = 0.0, energy = 0.0;
        for (Scheme v : {Scheme::TimeSwitching, Scheme::PowerSplitting}) {
            for (int i = 0; i < 10000; ++i) {
                const SystemParams p = random_params(rng);
                const SchemeConfig s = random_scheme(rng, v);
                const ChannelDraw d = sample_draw(rng, p);
                const double eta1 = p.eta0 + (p.eta_u - p.eta0) * rng.uniform();
                const PowerAllocation a = allocate_powers(p, s, eta1, d);
                const double g0 = snr_h0(p, s, d);
                if (g0 > 0.0) eq = std::max(eq, rel(sinr_h1(p, s, eta1, d), g0));
                const double total = harvested_power_total(p, s, eta1, d.g_ar);
                if (total > 0.0) energy = std::max(energy, rel(a.pr1 + a.prc, total));
            }
        }
        return Outcome{eq <= 1e-10 && energy <= 1e-12,
                       fmt("gamma rel=%.1e (1e-10) energy rel=%.1e (1e-12)", eq, energy)};
    });

    run(5, "rate quadrature vs Monte Carlo", 120.0, [&] {
        Rng rng(substream_seed(5, 5));
        double worst = 0.0;
        for (Scheme v : {Scheme::TimeSwitching, Scheme::PowerSplitting}) {
            for (int i = 0; i < 10; ++i) {
                const SystemParams p = random_params(rng);
                const SchemeConfig s = random_scheme(rng, v);
                const double eta1 = p.eta0 + (p.eta_u - p.eta0) * (0.1 + 0.9 * rng.uniform());
                const double quad = average_covert_rate(p, s, eta1).c_avg;
                const double mc = simulate_covert_rate(p, s, eta1, 1'000'000, substream_seed(5, i + 16 * static_cast<int>(v))).c_hat;
                worst = std::max(worst, rel(mc, quad));
            }
        }
        return Outcome{worst <= 0.02, fmt("max |C_quad-C_mc|/C_quad=%.4f (tol 0.02)", worst)};
    });

    run(6, "eta1* case split", 0.0, [&] {
        SystemParams p = defaults;
        p.epsilon = 0.1;
        const auto ts1 = max_effective_covert_rate(p, SchemeConfig::ts(0.5));
        const auto ps1 = max_effective_covert_rate(p, SchemeConfig::ps(0.5));
        p.epsilon = 0.2;
        const auto ts2 = max_effective_covert_rate(p, SchemeConfig::ts(0.5));
        const auto ps2 = max_effective_covert_rate(p, SchemeConfig::ps(0.5));
        const bool ok = std::abs(ts1.eta1_star - 0.690) <= 5e-4 && ts1.binding == Binding::Covertness &&
                        ts2.eta1_star == 0.8 && ts2.binding == Binding::HarvesterCap &&
                        std::abs(ts1.eta1_star - ps1.eta1_star) <= 1e-12 &&
                        std::abs(ts2.eta1_star - ps2.eta1_star) <= 1e-12 && ps2.binding == Binding::HarvesterCap;
        return Outcome{ok, fmt("eps=0.1: eta1*=%.5f (0.690); eps=0.2: eta1*=%.3f (0.8);", ts1.eta1_star, ts2.eta1_star) +
                               " bindings " + std::string(binding_label(ts1.binding)) + "/" +
                               std::string(binding_label(ts2.binding))};
    });

    run(7, "fig4 kink and limits", 0.0, [&] {
        const ExperimentConfig cfg;
        const Table t = run_fig4(cfg, {});
        const double step = cfg.params.eta_u / 201.0;
        bool kink_ok = true;
        double worst_kink = 0.0, worst_plateau = 0.0;
        std::map<std::pair<std::string, double>, double> eps01, eps02;
        std::map<std::pair<std::string, double>, std::vector<std::pair<double, std::string>>> series;
        for (std::size_t i = 0; i < t.rows(); ++i) {
            const std::string s = t.text(i, "scheme");
            const double eps = t.number(i, "epsilon");
            series[{s, eps}].push_back({t.number(i, "eta0"), t.text(i, "binding")});
            if (t.text(i, "binding") == "harvester-cap") {
                if (eps == 0.1) eps01[{s, t.number(i, "eta0")}] = t.number(i, "psi_star");
                if (eps == 0.2) eps02[{s, t.number(i, "eta0")}] = t.number(i, "psi_star");
            }
        }
        for (const auto& [key, pts] : series) {
            const double dagger = solve_phi_epsilon(key.second) * cfg.params.eta_u;
            double last_cov = 0.0, first_cap = -1.0;
            for (const auto& [eta0, binding] : pts) {
                if (binding == "covertness") last_cov = eta0;
                if (binding == "harvester-cap" && first_cap < 0.0) first_cap = eta0;
            }
            if (first_cap < 0.0) first_cap = cfg.params.eta_u;
            const double err = std::max(std::abs(first_cap - dagger), std::abs(last_cov - dagger));
            worst_kink = std::max(worst_kink, err);
            kink_ok = kink_ok && last_cov < first_cap && err <= step;
        }
        for (const auto& [key, v] : eps01)
            if (eps02.count(key)) worst_plateau = std::max(worst_plateau, std::abs(v - eps02[key]));

        double limit = 0.0;
        for (Scheme v : {Scheme::TimeSwitching, Scheme::PowerSplitting}) {
            for (double eta0 : {1e-9, cfg.params.eta_u * (1.0 - 1e-9)}) {
                SystemParams p = cfg.params;
                p.eta0 = eta0;
                const SchemeConfig s{v, optimize_harvest_fraction(p, v)};
                limit = std::max(limit, max_effective_covert_rate(p, s).psi_star);
            }
        }
        const bool ok = kink_ok && limit <= 1e-6 && worst_plateau <= 1e-9 && !eps01.empty();
        return Outcome{ok, fmt("kink err=%.4f (step %.4f) psi*(limits)=%.1e (1e-6) plateau=%.1e (1e-9)",
                               worst_kink, step, limit, worst_plateau)};
    });

    run(8, "fig3 / fig6 shapes", 0.0, [&] {
        const Table f3 = run_fig3(ExperimentConfig{}, {});
        std::map<std::pair<std::string, double>, std::vector<double>> psi3;
        std::map<double, std::map<std::string, double>> at20;
        for (std::size_t i = 0; i < f3.rows(); ++i) {
            const std::string s = f3.text(i, "scheme");
            psi3[{s, f3.number(i, "eta0")}].push_back(f3.number(i, "psi_star"));
            if (f3.number(i, "Pa") == 20.0) at20[f3.number(i, "eta0")][s] = f3.number(i, "psi_star");
        }
        bool monotone = true;
        for (const auto& [key, v] : psi3) {
            monotone = monotone && v.size() == 15;
            for (std::size_t i = 1; i < v.size(); ++i) monotone = monotone && v[i] >= v[i - 1];
        }
        bool ps_wins = !at20.empty();
        double margin = 1e300;
        for (auto& [eta0, m] : at20) {
            ps_wins = ps_wins && m["ps"] >= m["ts"];
            margin = std::min(margin, m["ps"] - m["ts"]);
        }

        const Table f6 = run_fig6(ExperimentConfig{}, {});
        std::map<std::pair<std::string, double>, std::vector<double>> psi6;
        for (std::size_t i = 0; i < f6.rows(); ++i)
            psi6[{f6.text(i, "scheme"), f6.number(i, "Pa")}].push_back(f6.number(i, "psi_star"));
        bool interior = true;
        for (const auto& [key, v] : psi6) {
            const auto it = std::min_element(v.begin(), v.end());
            interior = interior && it != v.begin() && it + 1 != v.end();
        }
        const bool ok = monotone && ps_wins && interior;
        return Outcome{ok, std::string("fig3 monotone=") + (monotone ? "yes" : "no") +
                               " ps>=ts@20dBm=" + (ps_wins ? "yes" : "no") +
                               fmt(" (min margin %.2e)", margin) +
                               " fig6 interior min=" + (interior ? "yes" : "no")};
    });

    run(9, "monotonicity suites", 0.0, [&] {
        int xi_viol = 0;
        double prev = -1.0;
        for (int i = 0; i < 1000; ++i) {
            const double v = min_detection_error(0.01 + 0.98 * i / 999.0);
            if (!(v > prev)) ++xi_viol;
            prev = v;
        }
        Rng rng(substream_seed(9, 9));
        int psi_viol = 0;
        for (Scheme v : {Scheme::TimeSwitching, Scheme::PowerSplitting}) {
            for (int k = 0; k < 5; ++k) {
                const SystemParams p = random_params(rng);
                const SchemeConfig s = random_scheme(rng, v);
                double last = -1.0;
                for (int i = 0; i < 20; ++i) {
                    const double psi = effective_covert_rate(p, s, p.eta0 + (p.eta_u - p.eta0) * i / 19.0).psi;
                    if (!(psi > last)) ++psi_viol;
                    last = psi;
                }
            }
        }
        return Outcome{xi_viol == 0 && psi_viol == 0,
                       fmt("xi* violations=%.0f/1000, psi violations=%.0f/200", xi_viol, psi_viol)};
    });

    run(10, "CLI determinism", 0.0, [&] {
        if (cli.empty()) return Outcome{false, "no CLI path given"};
        const auto dir = std::filesystem::temp_directory_path() / "covert_acceptance";
        std::filesystem::create_directories(dir);
        const std::vector<std::string> recipes{
            "fig2 --mc-blocks 200000", "fig3", "fig4", "fig5", "fig6",
            "sweep --param d_ar --from 2 --to 18 --points 9", "fig2 --scheme ps --fraction 0.3 --seed 9"};
        int identical = 0;
        for (std::size_t i = 0; i < recipes.size(); ++i) {
            std::string runs[2];
            for (int r = 0; r < 2; ++r) {
                const auto out = dir / ("run" + std::to_string(i) + "_" + std::to_string(r) + ".csv");
                const std::string cmd = "\"" + cli + "\" " + recipes[i] + " --out \"" + out.string() + "\"";
                if (std::system(cmd.c_str()) != 0) return Outcome{false, "command failed: " + cmd};
                runs[r] = read_file(out.string());
            }
            if (!runs[0].empty() && runs[0] == runs[1]) ++identical;
        }
        std::filesystem::remove_all(dir);
        return Outcome{identical == static_cast<int>(recipes.size()),
                       fmt("%.0f/%.0f recipes byte-identical on rerun", identical, recipes.size())};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
