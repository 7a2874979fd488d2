#include "covert/core_params.hpp"

#include <cmath>
#include <numbers>

namespace covert {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

double dbm_to_watts(double p_dbm) {
    require(std::isfinite(p_dbm), "dbm_to_watts: non-finite input");
    return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

double watts_to_dbm(double p_watts) {
    require(positive(p_watts), "watts_to_dbm: power must be positive");
    return 10.0 * std::log10(p_watts) + 30.0;
}

double path_loss(double d, double m, double fc) {
    require(positive(d), "path_loss: distance must be positive");
    require(positive(fc), "path_loss: carrier frequency must be positive");
    const double nu_root = kSpeedOfLight / (4.0 * std::numbers::pi * fc);
    return nu_root * nu_root * std::pow(d, -m);
}

std::string_view scheme_label(Scheme s) {
    return s == Scheme::TimeSwitching ? "ts" : "ps";
}

Scheme parse_scheme(std::string_view label) {
    if (label == "ts" || label == "TS") return Scheme::TimeSwitching;
    if (label == "ps" || label == "PS") return Scheme::PowerSplitting;
    throw DomainError("unknown scheme '" + std::string(label) + "' (expected ts|ps)");
}

SchemeConfig SchemeConfig::ts(double phi) {
    SchemeConfig s{Scheme::TimeSwitching, phi};
    s.validate();
    return s;
}

SchemeConfig SchemeConfig::ps(double rho) {
    SchemeConfig s{Scheme::PowerSplitting, rho};
    s.validate();
    return s;
}

void SchemeConfig::validate() const {
    require(std::isfinite(fraction) && fraction > 0.0 && fraction < 1.0,
            "scheme fraction must lie in (0, 1)");
}

SystemParams SystemParams::defaults() { return SystemParams{}; }

void SystemParams::validate() const {
    require(positive(Pa), "Pa must be positive");
    require(positive(fc), "fc must be positive");
    require(std::isfinite(m) && m >= 0.0, "path-loss exponent m must be >= 0");
    require(positive(d_ar) && positive(d_rb), "distances must be positive");
    require(positive(lambda_ar) && positive(lambda_rb), "fading means must be positive");
    require(positive(sigma2_ra) && positive(sigma2_rc), "relay noise variances must be positive");
    require(positive(sigma2_ba) && positive(sigma2_bc), "Bob noise variances must be positive");
    require(positive(sigma2_a), "Alice noise variance must be positive");
    require(eta0 > 0.0 && eta0 <= eta_u && eta_u < 1.0, "need 0 < eta0 <= eta_u < 1");
    require(epsilon >= 0.0 && epsilon <= 1.0, "epsilon must lie in [0, 1]");
    require(positive(T_block), "T_block must be positive");
}

double relay_noise_power(const SchemeConfig& scheme, double sigma2_ra, double sigma2_rc) {
    if (scheme.is_ts()) return sigma2_ra + sigma2_rc;
    return (1.0 - scheme.fraction) * sigma2_ra + sigma2_rc;
}

double relay_noise_power(const SystemParams& params, const SchemeConfig& scheme) {
    return relay_noise_power(scheme, params.sigma2_ra, params.sigma2_rc);
}

double Rng::exponential(double mean) {
    // 1 - u lies in (0, 1], so the log is finite.
    return -mean * std::log1p(-uniform());
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t k) {
    return splitmix64(splitmix64(master) ^ k);
}

double sample_channel(Rng& rng, double lambda) {
    require(positive(lambda), "sample_channel: lambda must be positive");
    return rng.exponential(lambda);
}

ChannelDraw sample_draw(Rng& rng, const SystemParams& params) {
    ChannelDraw d;
    d.g_ar = sample_channel(rng, params.lambda_ar);
    d.g_rb = sample_channel(rng, params.lambda_rb);
    return d;
}

}  // namespace covert
