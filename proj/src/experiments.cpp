#include "covert/experiments.hpp"

#include "covert/covert_rate.hpp"
#include "covert/detection.hpp"
#include "covert/montecarlo.hpp"
#include "covert/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace covert {

namespace {

const std::vector<double> kFig3Eta0{0.2, 0.4, 0.6};
const std::vector<double> kFig45Epsilon{0.05, 0.1, 0.2};
const std::vector<double> kFig6PaDbm{10.0, 20.0, 30.0};
constexpr double kFig6TotalDistance = 20.0;

std::vector<std::string> with_params(std::initializer_list<std::string> tail) {
    std::vector<std::string> h = param_keys();
    h.insert(h.end(), tail);
    return h;
}

std::vector<Cell> param_cells(const SystemParams& p) {
    std::vector<Cell> row;
    for (const auto& key : param_keys()) row.emplace_back(param_in_file_units(p, key));
    return row;
}

std::vector<std::string> rate_header() {
    return with_params({"scheme", "fraction", "eta1_star", "phi", "phi_eps", "psi_star", "binding",
                        "c_avg", "quad_error", "converged"});
}

std::vector<Cell> rate_row(const SystemParams& p, const SchemeConfig& s) {
    const OptimizationOutcome o = max_effective_covert_rate(p, s);
    std::vector<Cell> row = param_cells(p);
    row.emplace_back(std::string(scheme_label(s.variant)));
    row.emplace_back(s.fraction);
    row.emplace_back(o.eta1_star);
    row.emplace_back(p.eta0 / o.eta1_star);
    row.emplace_back(o.phi_epsilon);
    row.emplace_back(o.psi_star);
    row.emplace_back(std::string(binding_label(o.binding)));
    row.emplace_back(o.rate.c_avg);
    row.emplace_back(o.rate.quad_error);
    row.emplace_back(std::int64_t{o.rate.converged ? 1 : 0});
    return row;
}

Table collect(std::vector<std::string> header, const std::vector<std::vector<Cell>>& rows) {
    Table t(std::move(header));
    for (const auto& r : rows) t.add_row(r);
    return t;
}

void set_pa_dbm(SystemParams& p, double dbm) { p.Pa = dbm_to_watts(dbm); }

}  // namespace

std::vector<Scheme> selected_schemes(const ExperimentConfig& cfg) {
    if (cfg.scheme) return {*cfg.scheme};
    return {Scheme::TimeSwitching, Scheme::PowerSplitting};
}

SchemeConfig resolve_scheme(const ExperimentConfig& cfg, const SystemParams& params, Scheme variant) {
    SchemeConfig s{variant, cfg.fraction ? *cfg.fraction : optimize_harvest_fraction(params, variant)};
    s.validate();
    return s;
}

Table run_fig2(const ExperimentConfig& cfg, const RunOptions& opt, double eta1) {
    const SystemParams& p = cfg.params;
    p.validate();
    if (!(eta1 > p.eta0 && eta1 <= p.eta_u)) throw DomainError("fig2 needs eta0 < eta1 <= eta_u");

    std::vector<SchemeConfig> schemes;
    std::vector<double> offsets;  // tau* - sigma_a^2 per scheme
    for (Scheme v : selected_schemes(cfg)) {
        schemes.push_back(resolve_scheme(cfg, p, v));
        offsets.push_back(optimal_threshold(p, schemes.back(), eta1) - p.sigma2_a);
    }
    const double lo = *std::min_element(offsets.begin(), offsets.end()) * 1e-4;
    const double hi = *std::max_element(offsets.begin(), offsets.end()) * 1e4;

    constexpr std::size_t kPoints = 161;
    std::vector<double> taus{0.5 * p.sigma2_a};
    for (std::size_t i = 0; i < kPoints; ++i)
        taus.push_back(p.sigma2_a + lo * std::pow(hi / lo, static_cast<double>(i) / (kPoints - 1)));

    Table t(with_params({"scheme", "fraction", "eta1", "kind", "tau", "alpha", "beta", "xi",
                         "alpha_mc", "beta_mc", "xi_mc", "xi_mc_ci", "xi_star"}));
    const double xi_star = min_detection_error(p.eta0 / eta1);
    for (std::size_t s = 0; s < schemes.size(); ++s) {
        std::vector<double> grid = taus;
        grid.push_back(p.sigma2_a + offsets[s]);
        const auto mc = simulate_detection_curve(p, schemes[s], eta1, grid, opt.mc_blocks, opt.seed);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const DetectionPoint d = detection_error(p, schemes[s], eta1, grid[i]);
            std::vector<Cell> row = param_cells(p);
            row.emplace_back(std::string(scheme_label(schemes[s].variant)));
            row.emplace_back(schemes[s].fraction);
            row.emplace_back(eta1);
            row.emplace_back(std::string(i + 1 == grid.size() ? "optimum" : "curve"));
            for (double v : {d.tau, d.alpha, d.beta, d.xi, mc[i].alpha_hat, mc[i].beta_hat,
                             mc[i].xi_hat, mc[i].ci.xi, xi_star})
                row.emplace_back(v);
            t.add_row(std::move(row));
        }
    }
    return t;
}

Table run_fig3(const ExperimentConfig& cfg, const RunOptions&) {
    cfg.params.validate();
    struct Point {
        Scheme scheme;
        double eta0;
        double pa_dbm;
    };
    std::vector<Point> grid;
    for (Scheme v : selected_schemes(cfg))
        for (double eta0 : kFig3Eta0)
            for (int k = 0; k < 15; ++k) grid.push_back({v, eta0, -30.0 + 5.0 * k});

    const auto rows = parallel_map(grid.size(), [&](std::size_t i) {
        SystemParams p = cfg.params;
        p.eta0 = grid[i].eta0;
        set_pa_dbm(p, grid[i].pa_dbm);
        p.validate();
        return rate_row(p, resolve_scheme(cfg, p, grid[i].scheme));
    });
    return collect(rate_header(), rows);
}

std::vector<double> fig4_eta0_grid(double eta_u) {
    std::vector<double> g;
    for (int k = 1; k <= 200; ++k) g.push_back(eta_u * k / 201.0);
    return g;
}

Table run_fig4(const ExperimentConfig& cfg, const RunOptions&) {
    cfg.params.validate();
    const std::vector<double> etas = fig4_eta0_grid(cfg.params.eta_u);
    const std::vector<Scheme> schemes = selected_schemes(cfg);

    // The fraction depends on eta0 but not on epsilon.
    const auto fractions = parallel_map(schemes.size() * etas.size(), [&](std::size_t i) {
        SystemParams p = cfg.params;
        p.eta0 = etas[i % etas.size()];
        return resolve_scheme(cfg, p, schemes[i / etas.size()]);
    });

    const std::size_t per_scheme = kFig45Epsilon.size() * etas.size();
    const auto rows = parallel_map(schemes.size() * per_scheme, [&](std::size_t i) {
        const std::size_t s = i / per_scheme;
        const std::size_t e = (i % per_scheme) / etas.size();
        const std::size_t k = i % etas.size();
        SystemParams p = cfg.params;
        p.eta0 = etas[k];
        p.epsilon = kFig45Epsilon[e];
        return rate_row(p, fractions[s * etas.size() + k]);
    });
    return collect(rate_header(), rows);
}

Table run_fig5(const ExperimentConfig& cfg, const RunOptions&) {
    cfg.params.validate();
    Table t(with_params({"scheme", "eta1_star", "phi", "phi_eps", "eta0_dagger", "binding"}));
    for (double eps : kFig45Epsilon) {
        for (double eta0 : fig4_eta0_grid(cfg.params.eta_u)) {
            SystemParams p = cfg.params;
            p.eta0 = eta0;
            p.epsilon = eps;
            const Eta1Choice c = optimal_eta1(p);
            std::vector<Cell> row = param_cells(p);
            row.emplace_back(std::string("both"));
            row.emplace_back(c.eta1_star);
            row.emplace_back(eta0 / c.eta1_star);
            row.emplace_back(c.phi_epsilon);
            row.emplace_back(c.phi_epsilon * p.eta_u);
            row.emplace_back(std::string(binding_label(c.binding)));
            t.add_row(std::move(row));
        }
    }
    return t;
}

Table run_fig6(const ExperimentConfig& cfg, const RunOptions&) {
    cfg.params.validate();
    struct Point {
        Scheme scheme;
        double pa_dbm;
        double d_ar;
    };
    std::vector<Point> grid;
    for (Scheme v : selected_schemes(cfg))
        for (double pa : kFig6PaDbm)
            for (int d = 2; d <= 18; ++d) grid.push_back({v, pa, static_cast<double>(d)});

    const auto rows = parallel_map(grid.size(), [&](std::size_t i) {
        SystemParams p = cfg.params;
        set_pa_dbm(p, grid[i].pa_dbm);
        p.d_ar = grid[i].d_ar;
        p.d_rb = kFig6TotalDistance - grid[i].d_ar;
        p.validate();
        return rate_row(p, resolve_scheme(cfg, p, grid[i].scheme));
    });
    return collect(rate_header(), rows);
}

Table run_sweep(const ExperimentConfig& cfg, const RunOptions&, const SweepSpec& spec) {
    if (spec.points < 1) throw DomainError("sweep needs at least one point");
    if (spec.log_spaced && !(spec.from > 0.0 && spec.to > 0.0))
        throw DomainError("log-spaced sweep needs positive bounds");
    {
        SystemParams probe = cfg.params;
        set_param_from_file_units(probe, spec.key, spec.from);  // rejects unknown keys early
    }

    std::vector<double> values;
    for (std::size_t i = 0; i < spec.points; ++i) {
        const double u = spec.points == 1 ? 0.0 : static_cast<double>(i) / (spec.points - 1);
        values.push_back(spec.log_spaced ? spec.from * std::pow(spec.to / spec.from, u)
                                         : spec.from + (spec.to - spec.from) * u);
    }
    const std::vector<Scheme> schemes = selected_schemes(cfg);
    const auto rows = parallel_map(schemes.size() * values.size(), [&](std::size_t i) {
        SystemParams p = cfg.params;
        set_param_from_file_units(p, spec.key, values[i % values.size()]);
        p.validate();
        return rate_row(p, resolve_scheme(cfg, p, schemes[i / values.size()]));
    });
    return collect(rate_header(), rows);
}

}  // namespace covert
