#pragma once

// Monte Carlo oracle for the detection and rate closed forms.
//
// Alice's statistic is the infinite-blocklength received power
// T = P_total(eta) * L_ar * |h_ar|^2 + sigma_a^2 (reciprocal channel), so each
// fading block yields one sample of T per hypothesis.
//
// Seeding: block chunk k of stream s uses substream_seed(seed, s << 32 | k),
// so results do not depend on how chunks are spread over workers. H0 and H1
// use disjoint streams unless eta1 == eta0.

#include "covert/core_params.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace covert {

inline constexpr std::size_t kMcChunk = 1 << 16;

struct CiHalfwidths {
    double alpha = 0.0;
    double beta = 0.0;
    double xi = 0.0;
    double c = 0.0;
};

struct SimulationReport {
    std::uint64_t n_blocks = 0;
    double tau = 0.0;
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double xi_hat = 0.0;
    double c_hat = 0.0;
    CiHalfwidths ci;  // 95% half-widths
    std::uint64_t seed = 0;
};

/// Wilson-score 95% half-width of a binomial proportion; positive for n >= 1.
double proportion_halfwidth(std::uint64_t successes, std::uint64_t n);

double sufficient_statistic(const SystemParams& params, const SchemeConfig& scheme, double eta,
                            double g_ar);

/// Detection over n_blocks draws per hypothesis: alpha_hat counts T >= tau
/// under H0, beta_hat counts T < tau under H1.
SimulationReport simulate_detection(const SystemParams& params, const SchemeConfig& scheme,
                                    double eta1, double tau, std::uint64_t n_blocks,
                                    std::uint64_t seed);

/// Same draws evaluated at every threshold (common random numbers). Entry i
/// equals simulate_detection(..., taus[i], n_blocks, seed).
std::vector<SimulationReport> simulate_detection_curve(const SystemParams& params,
                                                       const SchemeConfig& scheme, double eta1,
                                                       std::span<const double> taus,
                                                       std::uint64_t n_blocks, std::uint64_t seed);

/// c_hat = mean of log2(1 + gamma_c) over i.i.d. fading blocks.
SimulationReport simulate_covert_rate(const SystemParams& params, const SchemeConfig& scheme,
                                      double eta1, std::uint64_t n_blocks, std::uint64_t seed);

/// Checks tau* against a log-spaced grid of grid_size thresholds, both in
/// closed form and empirically (within 3 half-widths). Uses 10^5 blocks.
bool validate_threshold_optimality(const SystemParams& params, const SchemeConfig& scheme,
                                   double eta1, std::size_t grid_size, std::uint64_t seed);

}  // namespace covert
