#pragma once

// Experiment recipes. Each returns one table row per grid point, in grid
// order; every row carries the full parameter set in file units, the scheme
// label and the harvesting fraction that was used.
//
// Column mapping for plotting:
//   fig2  x = tau, y = xi (closed form) and xi_mc, series = scheme; rows with
//         kind = optimum mark (tau*, xi*).
//   fig3  x = Pa, y = psi_star, series = (scheme, eta0).
//   fig4  x = eta0, y = psi_star, series = (scheme, epsilon).
//   fig5  x = eta0, y = phi, series = epsilon.
//   fig6  x = d_ar, y = psi_star, series = (scheme, Pa).

#include "covert/config.hpp"
#include "covert/csv.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covert {

struct RunOptions {
    std::uint64_t seed = 1;
    std::uint64_t mc_blocks = 1'000'000;
};

/// Schemes selected by the config (both when unset).
std::vector<Scheme> selected_schemes(const ExperimentConfig& cfg);

/// Pinned fraction from the config, or optimize_harvest_fraction for params.
SchemeConfig resolve_scheme(const ExperimentConfig& cfg, const SystemParams& params, Scheme variant);

inline constexpr double kFig2Eta1 = 0.7;

/// xi(tau), closed form and Monte Carlo on common draws, for eta1 (default
/// 0.7) over a log-spaced grid around both schemes' tau*.
Table run_fig2(const ExperimentConfig& cfg, const RunOptions& opt, double eta1 = kFig2Eta1);

/// psi* against Pa from -30 to 40 dBm in 5 dB steps, eta0 in {0.2, 0.4, 0.6}.
Table run_fig3(const ExperimentConfig& cfg, const RunOptions& opt);

/// Grid eta0_k = eta_u k / 201, k = 1..200.
std::vector<double> fig4_eta0_grid(double eta_u);

/// psi* against eta0 for epsilon in {0.05, 0.1, 0.2}.
Table run_fig4(const ExperimentConfig& cfg, const RunOptions& opt);

/// phi = eta0 / eta1* against eta0, same grid and epsilon set as fig4.
Table run_fig5(const ExperimentConfig& cfg, const RunOptions& opt);

/// psi* against d_ar in 2..18 m with d_rb = 20 - d_ar, Pa in {10, 20, 30} dBm.
Table run_fig6(const ExperimentConfig& cfg, const RunOptions& opt);

struct SweepSpec {
    std::string key;  // a SystemParams field, in file units
    double from = 0.0;
    double to = 0.0;
    std::size_t points = 11;
    bool log_spaced = false;
};

/// Rate-optimization rows over a grid of one parameter.
Table run_sweep(const ExperimentConfig& cfg, const RunOptions& opt, const SweepSpec& spec);

}  // namespace covert
