#include "covert/montecarlo.hpp"

#include "covert/detection.hpp"
#include "covert/parallel.hpp"
#include "covert/relaying.hpp"

#include <algorithm>
#include <cmath>

namespace covert {

namespace {

constexpr double kZ95 = 1.959963984540054;

enum Stream : std::uint64_t { kStreamH0 = 0, kStreamH1 = 1, kStreamRate = 2 };

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
    return substream_seed(seed, (stream << 32) | chunk);
}

std::size_t chunk_count(std::uint64_t n) { return static_cast<std::size_t>((n + kMcChunk - 1) / kMcChunk); }

std::size_t chunk_size(std::uint64_t n, std::size_t k) {
    const std::uint64_t start = static_cast<std::uint64_t>(k) * kMcChunk;
    return static_cast<std::size_t>(std::min<std::uint64_t>(kMcChunk, n - start));
}

// Pairwise summation: fixed association order, O(log n) error growth.
double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// All n samples of Alice's statistic for one hypothesis, sorted ascending.
std::vector<double> sorted_statistics(const AliceObservation& obs, double eta, std::uint64_t n,
                                      std::uint64_t seed, std::uint64_t stream) {
    const double scale = obs.scale(eta);
    auto chunks = parallel_map(chunk_count(n), [&](std::size_t k) {
        Rng rng(chunk_seed(seed, stream, k));
        std::vector<double> t(chunk_size(n, k));
        for (double& v : t) {
            const double g = sample_channel(rng, obs.lambda_ar);
            v = scale * g * g + obs.noise;
        }
        return t;
    });
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(n));
    for (const auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return all;
}

void require_blocks(std::uint64_t n) {
    if (n < 1) throw DomainError("n_blocks must be >= 1");
}

}  // namespace

double proportion_halfwidth(std::uint64_t successes, std::uint64_t n) {
    if (n == 0) return 1.0;
    const double dn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / dn;
    const double z2 = kZ95 * kZ95;
    return kZ95 / (1.0 + z2 / dn) * std::sqrt(p * (1.0 - p) / dn + z2 / (4.0 * dn * dn));
}

double sufficient_statistic(const SystemParams& params, const SchemeConfig& scheme, double eta,
                            double g_ar) {
    if (!(g_ar >= 0.0)) throw DomainError("sufficient_statistic: g_ar must be >= 0");
    const AliceObservation obs = make_observation(params, scheme);
    return obs.scale(eta) * g_ar * g_ar + obs.noise;
}

std::vector<SimulationReport> simulate_detection_curve(const SystemParams& params,
                                                       const SchemeConfig& scheme, double eta1,
                                                       std::span<const double> taus,
                                                       std::uint64_t n_blocks,
                                                       std::uint64_t seed) {
    require_blocks(n_blocks);
    if (eta1 < params.eta0) throw DomainError("eta1 < eta0");
    const AliceObservation obs = make_observation(params, scheme);
    const std::vector<double> t0 = sorted_statistics(obs, params.eta0, n_blocks, seed, kStreamH0);
    // Identical hypotheses share one draw set, so alpha_hat + beta_hat == 1 exactly.
    const std::vector<double> t1 = eta1 == params.eta0
                                       ? t0
                                       : sorted_statistics(obs, eta1, n_blocks, seed, kStreamH1);
    const double dn = static_cast<double>(n_blocks);

    std::vector<SimulationReport> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        const auto below0 = static_cast<std::uint64_t>(
            std::lower_bound(t0.begin(), t0.end(), tau) - t0.begin());
        const auto below1 = static_cast<std::uint64_t>(
            std::lower_bound(t1.begin(), t1.end(), tau) - t1.begin());
        const std::uint64_t false_alarms = n_blocks - below0;  // T >= tau under H0
        const std::uint64_t misses = below1;                   // T < tau under H1

        SimulationReport r;
        r.n_blocks = n_blocks;
        r.seed = seed;
        r.tau = tau;
        r.alpha_hat = static_cast<double>(false_alarms) / dn;
        r.beta_hat = static_cast<double>(misses) / dn;
        r.xi_hat = r.alpha_hat + r.beta_hat;
        r.ci.alpha = proportion_halfwidth(false_alarms, n_blocks);
        r.ci.beta = proportion_halfwidth(misses, n_blocks);
        r.ci.xi = std::hypot(r.ci.alpha, r.ci.beta);  // independent draw sets
        out.push_back(r);
    }
    return out;
}

SimulationReport simulate_detection(const SystemParams& params, const SchemeConfig& scheme,
                                    double eta1, double tau, std::uint64_t n_blocks,
                                    std::uint64_t seed) {
    const double taus[] = {tau};
    return simulate_detection_curve(params, scheme, eta1, taus, n_blocks, seed).front();
}

SimulationReport simulate_covert_rate(const SystemParams& params, const SchemeConfig& scheme,
                                      double eta1, std::uint64_t n_blocks, std::uint64_t seed) {
    require_blocks(n_blocks);
    if (!(eta1 >= params.eta0 && eta1 <= params.eta_u))
        throw DomainError("eta1 must lie in [eta0, eta_u]");

    struct Moments {
        double sum = 0.0;
        double sum_sq = 0.0;
    };
    auto chunks = parallel_map(chunk_count(n_blocks), [&](std::size_t k) {
        Rng rng(chunk_seed(seed, kStreamRate, k));
        std::vector<double> rate(chunk_size(n_blocks, k));
        for (double& v : rate) {
            const ChannelDraw draw = sample_draw(rng, params);
            v = std::log2(1.0 + covert_snr(make_link(params, scheme, draw), eta1));
        }
        Moments m;
        m.sum = pairwise_sum(rate);
        for (double& v : rate) v *= v;
        m.sum_sq = pairwise_sum(rate);
        return m;
    });

    std::vector<double> sums, sq;
    for (const auto& m : chunks) {
        sums.push_back(m.sum);
        sq.push_back(m.sum_sq);
    }
    const double dn = static_cast<double>(n_blocks);
    SimulationReport r;
    r.n_blocks = n_blocks;
    r.seed = seed;
    r.c_hat = pairwise_sum(sums) / dn;
    if (n_blocks > 1) {
        const double var = std::max(0.0, (pairwise_sum(sq) - dn * r.c_hat * r.c_hat) / (dn - 1.0));
        r.ci.c = kZ95 * std::sqrt(var / dn);
    }
    return r;
}

bool validate_threshold_optimality(const SystemParams& params, const SchemeConfig& scheme,
                                   double eta1, std::size_t grid_size, std::uint64_t seed) {
    if (grid_size < 100) throw DomainError("grid_size must be >= 100");
    const AliceObservation obs = make_observation(params, scheme);
    const double tau_star = optimal_threshold(obs, eta1);
    const double offset = tau_star - obs.noise;

    // Offsets from sigma_a^2 spanning three decades either side of tau*.
    std::vector<double> taus{tau_star};
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double u = -3.0 + 6.0 * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        taus.push_back(obs.noise + offset * std::pow(10.0, u));
    }

    const double xi_star = detection_error(obs, eta1, tau_star).xi;
    for (std::size_t i = 1; i < taus.size(); ++i)
        if (xi_star > detection_error(obs, eta1, taus[i]).xi + 1e-12) return false;

    const auto mc = simulate_detection_curve(params, scheme, eta1, taus, 100000, seed);
    for (std::size_t i = 1; i < mc.size(); ++i)
        if (mc[0].xi_hat > mc[i].xi_hat + 3.0 * mc[i].ci.xi) return false;
    return true;
}

}  // namespace covert
