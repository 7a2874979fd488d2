#pragma once

// System parameters, units, path loss and Rayleigh-fading channel sampling.
//
// Everything in here is in SI units (watts, hertz, meters, seconds). The
// engineering units used by parameter files (dBm, MHz) are converted at load
// time, see config.hpp.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace covert {

/// Thrown when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr double kSpeedOfLight = 3.0e8;  // m/s

double dbm_to_watts(double p_dbm);
double watts_to_dbm(double p_watts);

/// Free-space style path loss L = (c / (4 pi fc))^2 * d^-m.
double path_loss(double d, double m, double fc);

enum class Scheme { TimeSwitching, PowerSplitting };

std::string_view scheme_label(Scheme s);  // "ts" / "ps"
Scheme parse_scheme(std::string_view label);

/// Energy-harvesting scheme and its harvesting fraction (phi for TS, rho for
/// PS). The fraction is the same under both hypotheses.
struct SchemeConfig {
    Scheme variant = Scheme::TimeSwitching;
    double fraction = 0.5;

    static SchemeConfig ts(double phi);
    static SchemeConfig ps(double rho);

    bool is_ts() const { return variant == Scheme::TimeSwitching; }
    void validate() const;
};

struct SystemParams {
    double Pa = 0.1;            // Alice transmit power, W
    double fc = 900e6;          // carrier frequency, Hz
    double m = 2.0;             // path-loss exponent
    double d_ar = 10.0;         // Alice -> relay distance, m
    double d_rb = 10.0;         // relay -> Bob distance, m
    double lambda_ar = 1.0;     // E|h_ar|^2
    double lambda_rb = 1.0;     // E|h_rb|^2
    double sigma2_ra = 1e-11;   // relay antenna noise, W
    double sigma2_rc = 1e-11;   // relay conversion noise, W
    double sigma2_ba = 1e-11;   // Bob antenna noise, W
    double sigma2_bc = 1e-11;   // Bob conversion noise, W
    double sigma2_a = 1e-11;    // Alice receiver noise, W
    double eta0 = 0.4;          // public baseline conversion efficiency
    double eta_u = 0.8;         // conversion efficiency cap
    double epsilon = 0.1;       // covertness requirement xi* >= 1 - epsilon
    double T_block = 1.0;       // block duration, s

    /// Numerical-results defaults: 20 dBm, 900 MHz, 10 m hops, -80 dBm noise.
    static SystemParams defaults();

    void validate() const;

    double L_ar() const { return path_loss(d_ar, m, fc); }
    double L_rb() const { return path_loss(d_rb, m, fc); }
    double sigma2_b() const { return sigma2_ba + sigma2_bc; }
};

/// sigma_r^2: TS sees both noises in full, PS only (1 - rho) of the antenna
/// noise.
double relay_noise_power(const SchemeConfig& scheme, double sigma2_ra, double sigma2_rc);
double relay_noise_power(const SystemParams& params, const SchemeConfig& scheme);

/// One quasi-static fading block. Reciprocity: h_ra == h_ar.
struct ChannelDraw {
    double g_ar = 0.0;  // |h_ar|^2
    double g_rb = 0.0;  // |h_rb|^2
};

/// 64-bit Mersenne Twister with portable uniform/exponential transforms, so
/// draws are bit-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Exponential with the given mean, by inversion.
    double exponential(double mean);

private:
    std::mt19937_64 engine_;
};

/// Seed of substream `k` of a master seed:
/// splitmix64(splitmix64(master) ^ k).
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t k);
std::uint64_t splitmix64(std::uint64_t x);

/// |h|^2 for a zero-mean circular Gaussian h with E|h|^2 = lambda, i.e. an
/// Exponential draw with mean lambda.
double sample_channel(Rng& rng, double lambda);
ChannelDraw sample_draw(Rng& rng, const SystemParams& params);

}  // namespace covert
