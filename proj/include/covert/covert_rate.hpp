#pragma once

// Average and effective covert rate over Rayleigh fading, the covertness-
// constrained choice of eta1, and the harvesting-fraction convention.

#include "covert/core_params.hpp"

#include <string_view>

namespace covert {

inline constexpr std::size_t kQuadNodes = 64;
inline constexpr std::size_t kQuadRefineNodes = 128;
inline constexpr double kQuadTolerance = 1e-6;

struct RateResult {
    double c_avg = 0.0;       // E[log2(1 + gamma_c)], bits per channel use
    double psi = 0.0;         // time-fraction-weighted rate
    double quad_error = 0.0;  // |C_64 - C_128| / C_128
    bool converged = true;    // quad_error <= kQuadTolerance
};

/// Share of the block used for relay -> Bob transmission:
/// (1 - phi) / 2 for TS, 1/2 for PS.
double transmission_prefactor(const SchemeConfig& scheme);

/// C by 128-point tensor Gauss-Laguerre, error estimated against 64 points.
/// Requires eta0 <= eta1 <= eta_u.
RateResult average_covert_rate(const SystemParams& params, const SchemeConfig& scheme,
                               double eta1);

/// average_covert_rate with psi filled in.
RateResult effective_covert_rate(const SystemParams& params, const SchemeConfig& scheme,
                                 double eta1);

enum class Binding { Covertness, HarvesterCap };
std::string_view binding_label(Binding b);

struct Eta1Choice {
    double eta1_star = 0.0;
    double phi_epsilon = 1.0;
    double threshold = 0.0;  // epsilon at which the binding constraint switches
    Binding binding = Binding::HarvesterCap;
};

/// Smallest eta1 maximizing psi subject to xi* >= 1 - epsilon. Depends only on
/// (eta0, eta_u, epsilon), so TS and PS share it.
Eta1Choice optimal_eta1(const SystemParams& params);

/// 1 - xi*(eta0 / eta_u): covertness binds iff epsilon <= this value.
double covertness_switch_epsilon(double eta0, double eta_u);

struct OptimizationOutcome {
    double eta1_star = 0.0;
    double psi_star = 0.0;
    double phi_epsilon = 1.0;
    Binding binding = Binding::HarvesterCap;
    RateResult rate;
};

/// psi at eta1*. psi grows with eta1, so no further search is needed.
OptimizationOutcome max_effective_covert_rate(const SystemParams& params,
                                              const SchemeConfig& scheme);

/// prefactor * E[log2(1 + gamma_b0)]: the forwarded-signal rate under H0.
double forwarding_rate(const SystemParams& params, const SchemeConfig& scheme);

/// Fraction maximizing forwarding_rate: 99-point pre-scan over (0, 1), then
/// golden-section search to 1e-4 around the best scan point.
double optimize_harvest_fraction(const SystemParams& params, Scheme variant);

}  // namespace covert
