#include "covert/validation.hpp"

#include "covert/covert_rate.hpp"
#include "covert/detection.hpp"
#include "covert/montecarlo.hpp"
#include "covert/relaying.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>

namespace covert {

namespace {

constexpr std::uint64_t kReferenceBlocks = 1'000'000;

double rel_diff(double x, double ref) {
    if (x == ref) return 0.0;
    return std::abs(x - ref) / std::max(std::abs(ref), std::numeric_limits<double>::min());
}

// Monte Carlo tolerances are pinned at 10^6 blocks and widen as 1/sqrt(n) for
// smaller runs.
double mc_scale(std::uint64_t n) {
    return std::max(1.0, std::sqrt(static_cast<double>(kReferenceBlocks) / static_cast<double>(n)));
}

// Kolmogorov-Smirnov distance of sorted samples against a CDF.
double ks_distance(std::vector<double> x, const std::function<double(double)>& cdf) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

double log_uniform(Rng& rng, double lo, double hi) {
    return lo * std::pow(hi / lo, rng.uniform());
}

class Suite {
public:
    void check(std::string name, double measured, double tolerance) {
        checks_.push_back({std::move(name), measured, tolerance, measured <= tolerance});
    }
    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    std::vector<CheckResult> checks_;
};

}  // namespace

std::vector<CheckResult> run_validate(const ExperimentConfig& cfg, const ValidationOptions& opt) {
    const SystemParams& p = cfg.params;
    p.validate();
    const std::uint64_t n = std::max<std::uint64_t>(opt.run.mc_blocks, 1);
    const std::uint64_t seed = opt.run.seed;
    auto xi_star_of = [&](double phi) {
        return min_detection_error(phi) + (opt.inject_fault ? 1e-3 : 0.0);
    };

    const Eta1Choice choice = optimal_eta1(p);
    const double eta1 = choice.eta1_star > p.eta0 ? choice.eta1_star : p.eta_u;
    const bool distinct = eta1 > p.eta0;

    std::vector<SchemeConfig> schemes;
    for (Scheme v : selected_schemes(cfg)) schemes.push_back(resolve_scheme(cfg, p, v));

    Suite suite;

    // xi* against a brute-force threshold scan of the closed-form xi(tau).
    {
        const AliceObservation obs = make_observation(p, schemes.front());
        double worst = 0.0;
        for (double phi : {0.1, 0.3, 0.5, 4.0 / 7.0, 0.9}) {
            const double e1 = 0.9;
            const AliceObservation o{obs.noise, obs.lambda_ar, obs.gain, e1 * phi};
            const double off = optimal_threshold(o, e1) - o.noise;
            double best = 1.0;
            constexpr int kGrid = 100000;
            for (int i = 0; i < kGrid; ++i) {
                const double tau = o.noise + off * std::pow(10.0, -3.0 + 6.0 * i / (kGrid - 1.0));
                best = std::min(best, detection_error(o, e1, tau).xi);
            }
            worst = std::max(worst, std::abs(xi_star_of(phi) - best));
        }
        suite.check("xi_star_vs_threshold_scan", worst, 1e-6);
    }

    {
        int violations = 0;
        double prev = -1.0;
        for (int i = 0; i < 1000; ++i) {
            const double v = min_detection_error(0.01 + 0.98 * i / 999.0);
            if (!(v > prev)) ++violations;
            prev = v;
        }
        suite.check("xi_star_strictly_increasing", violations, 0);
    }

    suite.check("switch_epsilon_consistency",
                std::abs(covertness_switch_epsilon(p.eta0, p.eta_u) -
                         (1.0 - min_detection_error(p.eta0 / p.eta_u))),
                1e-12);

    if (distinct) {
        std::vector<double> minima;
        for (const auto& s : schemes) {
            const std::string tag = std::string(scheme_label(s.variant));
            const double tau_star = optimal_threshold(p, s, eta1);
            const double xi_closed = detection_error(p, s, eta1, tau_star).xi;
            minima.push_back(xi_closed);
            suite.check(tag + "_xi_at_tau_star_vs_xi_star",
                        std::abs(xi_closed - xi_star_of(p.eta0 / eta1)), 1e-10);

            const SimulationReport r = simulate_detection(p, s, eta1, tau_star, n, seed);
            suite.check(tag + "_mc_xi_at_tau_star", std::abs(r.xi_hat - xi_star_of(p.eta0 / eta1)),
                        0.005 * mc_scale(n));

            // alpha/beta against the closed forms on 20 thresholds, in standard errors.
            Rng rng(substream_seed(seed, 101));
            std::vector<double> taus;
            for (int i = 0; i < 20; ++i)
                taus.push_back(p.sigma2_a + (tau_star - p.sigma2_a) * log_uniform(rng, 1e-2, 1e2));
            constexpr std::uint64_t kBlocks = 100000;
            const auto mc = simulate_detection_curve(p, s, eta1, taus, kBlocks, seed);
            double worst_z = 0.0;
            for (std::size_t i = 0; i < taus.size(); ++i) {
                const DetectionPoint d = detection_error(p, s, eta1, taus[i]);
                for (auto [hat, exact] : {std::pair{mc[i].alpha_hat, d.alpha},
                                          std::pair{mc[i].beta_hat, d.beta}}) {
                    const double se = std::sqrt(exact * (1.0 - exact) / kBlocks);
                    const double z = se > 0.0 ? std::abs(hat - exact) / se
                                              : (hat == exact ? 0.0 : HUGE_VAL);
                    worst_z = std::max(worst_z, z);
                }
            }
            suite.check(tag + "_alpha_beta_std_errors", worst_z, 3.0);

            suite.check(tag + "_threshold_grid_optimality",
                        validate_threshold_optimality(p, s, eta1, 1000, seed) ? 0.0 : 1.0, 0.0);

            const AliceObservation obs = make_observation(p, s);
            Rng g(substream_seed(seed, 102));
            std::vector<double> t0(std::min<std::uint64_t>(n, kReferenceBlocks));
            for (double& t : t0) t = sufficient_statistic(p, s, p.eta0, sample_channel(g, p.lambda_ar));
            suite.check(tag + "_statistic_ks",
                        ks_distance(std::move(t0), [&](double t) { return 1.0 - false_alarm(obs, t); }),
                        0.003 * mc_scale(n));
        }
        if (minima.size() == 2)
            suite.check("xi_star_ts_equals_ps", std::abs(minima[0] - minima[1]), 1e-10);
    }

    // Relay algebra on random links.
    for (Scheme v : {Scheme::TimeSwitching, Scheme::PowerSplitting}) {
        const std::string tag = std::string(scheme_label(v));
        Rng rng(substream_seed(seed, 200 + static_cast<int>(v)));
        double eq = 0.0, energy = 0.0, qform = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const SchemeConfig s{v, 0.01 + 0.98 * rng.uniform()};
            RelayLink link;
            link.scheme = s;
            link.eta0 = 0.05 + 0.9 * rng.uniform();
            link.gains = {log_uniform(rng, 1e-12, 1e-3), log_uniform(rng, 1e-8, 1e-2)};
            link.sigma2_r = log_uniform(rng, 1e-13, 1e-9);
            link.sigma2_b = log_uniform(rng, 1e-13, 1e-9);
            const double e1 = link.eta0 + (0.99 - link.eta0) * rng.uniform();
            const PowerAllocation a = allocate_powers(link, e1);
            eq = std::max(eq, rel_diff(sinr_h1(link, e1), snr_h0(link)));
            energy = std::max(energy, rel_diff(a.pr1 + a.prc, harvested_power_total(s, e1, link.gains.a)));
            qform = std::max(qform, rel_diff(covert_snr_qform(link, e1), covert_snr(link, e1)));
        }
        suite.check(tag + "_sinr_h1_equals_snr_h0", eq, 1e-10);
        suite.check(tag + "_energy_conservation", energy, 1e-12);
        suite.check(tag + "_covert_snr_qform", qform, 1e-12);
    }

    {
        Rng rng(substream_seed(seed, 300));
        std::vector<double> g(std::min<std::uint64_t>(n, kReferenceBlocks));
        for (double& x : g) x = sample_channel(rng, p.lambda_ar);
        suite.check("channel_ks",
                    ks_distance(std::move(g), [&](double x) { return -std::expm1(-x / p.lambda_ar); }),
                    0.002 * mc_scale(n));
    }

    for (const auto& s : schemes) {
        const std::string tag = std::string(scheme_label(s.variant));
        int violations = 0;
        double prev = -1.0;
        for (int i = 0; i < 20; ++i) {
            const double e1 = p.eta0 + (p.eta_u - p.eta0) * i / 19.0;
            const double psi = effective_covert_rate(p, s, e1).psi;
            if (i > 0 && !(psi > prev)) ++violations;
            prev = psi;
        }
        if (p.eta_u > p.eta0) suite.check(tag + "_psi_strictly_increasing_in_eta1", violations, 0);

        if (distinct) {
            const RateResult q = average_covert_rate(p, s, eta1);
            const SimulationReport r = simulate_covert_rate(p, s, eta1, n, seed);
            suite.check(tag + "_rate_quadrature_vs_mc", rel_diff(r.c_hat, q.c_avg), 0.02 * mc_scale(n));
            suite.check(tag + "_rate_quadrature_error", q.quad_error, kQuadTolerance);
        }
    }

    return suite.take();
}

void print_report(std::ostream& out, const std::vector<CheckResult>& checks) {
    std::size_t failed = 0;
    char buf[256];
    for (const auto& c : checks) {
        std::snprintf(buf, sizeof buf, "%-4s %-40s measured=%-12.4g tolerance=%.4g\n",
                      c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance);
        out << buf;
        if (!c.passed) ++failed;
    }
    out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace covert
