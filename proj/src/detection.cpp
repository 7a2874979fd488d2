#include "covert/detection.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace covert {

namespace {

// exp(-sqrt((tau - noise) / scale) / lambda): probability that T exceeds tau
// when T = scale * g^2 + noise with g exponential of mean lambda.
double exceedance(const AliceObservation& obs, double eta, double tau) {
    return std::exp(-std::sqrt((tau - obs.noise) / obs.scale(eta)) / obs.lambda_ar);
}

void check_eta1(const AliceObservation& obs, double eta1) {
    if (!(eta1 > 0.0 && eta1 < 1.0)) throw DomainError("eta1 must lie in (0, 1)");
    if (eta1 < obs.eta0) throw DomainError("eta1 < eta0");
}

}  // namespace

AliceObservation make_observation(const SystemParams& params, const SchemeConfig& scheme) {
    scheme.validate();
    const double l = params.L_ar();
    const double f = scheme.fraction;
    AliceObservation obs;
    obs.noise = params.sigma2_a;
    obs.lambda_ar = params.lambda_ar;
    obs.eta0 = params.eta0;
    obs.gain = scheme.is_ts() ? 2.0 * f * params.Pa * l * l / (1.0 - f) : f * params.Pa * l * l;
    return obs;
}

double false_alarm(const AliceObservation& obs, double tau) {
    if (tau <= obs.noise) return 1.0;
    return exceedance(obs, obs.eta0, tau);
}

double false_alarm(const SystemParams& params, const SchemeConfig& scheme, double tau) {
    return false_alarm(make_observation(params, scheme), tau);
}

double miss_detection(const AliceObservation& obs, double eta1, double tau) {
    check_eta1(obs, eta1);
    if (tau <= obs.noise) return 0.0;
    return -std::expm1(-std::sqrt((tau - obs.noise) / obs.scale(eta1)) / obs.lambda_ar);
}

double miss_detection(const SystemParams& params, const SchemeConfig& scheme, double eta1,
                      double tau) {
    return miss_detection(make_observation(params, scheme), eta1, tau);
}

DetectionPoint detection_error(const AliceObservation& obs, double eta1, double tau) {
    check_eta1(obs, eta1);
    DetectionPoint p;
    p.tau = tau;
    if (tau <= obs.noise) return p;  // alpha = 1, beta = 0, xi = 1
    const double survive0 = exceedance(obs, obs.eta0, tau);
    const double survive1 = exceedance(obs, eta1, tau);
    p.alpha = survive0;
    p.beta = miss_detection(obs, eta1, tau);
    // 1 + alpha - (1 - beta), exact when the hypotheses coincide.
    p.xi = 1.0 + (survive0 - survive1);
    return p;
}

DetectionPoint detection_error(const SystemParams& params, const SchemeConfig& scheme,
                               double eta1, double tau) {
    return detection_error(make_observation(params, scheme), eta1, tau);
}

double optimal_threshold(const AliceObservation& obs, double eta1) {
    check_eta1(obs, eta1);
    if (!(eta1 > obs.eta0))
        throw DomainError("optimal threshold undefined for eta1 == eta0 (identical hypotheses)");
    const double e0 = obs.eta0;
    const double root = obs.lambda_ar * std::sqrt(obs.gain * e0 * eta1) * std::log(eta1 / e0) /
                        (2.0 * (std::sqrt(eta1) - std::sqrt(e0)));
    return obs.noise + root * root;
}

double optimal_threshold(const SystemParams& params, const SchemeConfig& scheme, double eta1) {
    return optimal_threshold(make_observation(params, scheme), eta1);
}

double min_detection_error(double phi) {
    if (!(phi > 0.0 && phi <= 1.0)) throw DomainError("min_detection_error: phi must lie in (0, 1]");
    const double s = std::sqrt(phi);
    const double t = 1.0 - s;
    if (1.0 - phi < 1e-8) {
        // phi^(1/(2t)) (1/s - 1) = e^-1 (t + t^2/2) + O(t^3)
        return 1.0 - (t + 0.5 * t * t) / std::numbers::e;
    }
    // 1 - sqrt(phi) = (1 - phi) / (1 + sqrt(phi)) avoids cancellation near 1.
    const double exponent = std::log(phi) * (1.0 + s) / (2.0 * (1.0 - phi));
    return 1.0 - std::exp(exponent) * ((1.0 - phi) / (1.0 + s)) / s;
}

XiRange xi_star_range(double eta0, double eta_u) {
    if (!(eta0 > 0.0 && eta0 <= eta_u && eta_u < 1.0))
        throw DomainError("xi_star_range: need 0 < eta0 <= eta_u < 1");
    return XiRange{min_detection_error(eta0 / eta_u), 1.0};
}

double solve_phi_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw DomainError("solve_phi_epsilon: epsilon must lie in [0, 1)");
    if (epsilon == 0.0) return 1.0;

    const double target = 1.0 - epsilon;
    double lo = 1e-15;
    double hi = 1.0 - 1e-15;
    if (min_detection_error(lo) >= target) return lo;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = min_detection_error(mid);
        if (v < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    }
    // Both ends are within rounding of the root; pick the closer one.
    const double elo = std::abs(min_detection_error(lo) - target);
    const double ehi = std::abs(min_detection_error(hi) - target);
    return elo < ehi ? lo : hi;
}

Covertness covertness(double eta0, double eta1, double epsilon) {
    Covertness c;
    c.phi = eta0 / eta1;
    c.xi_star = min_detection_error(c.phi);
    c.phi_epsilon = solve_phi_epsilon(epsilon);
    return c;
}

}  // namespace covert
