#pragma once

// Alice's radiometer: false alarm and miss detection rates for a threshold on
// the received power T, the optimal threshold, and the minimum detection
// error xi* which only depends on the overhead ratio phi = eta0 / eta1.

#include "covert/core_params.hpp"

namespace covert {

/// What Alice observes: T = eta * gain * |h_ar|^4 + noise, with |h_ar|^2
/// exponential of mean lambda_ar. gain = 2 phi Pa L_ar^2 / (1 - phi) for TS
/// and rho Pa L_ar^2 for PS.
struct AliceObservation {
    double noise = 0.0;      // sigma_a^2, W
    double lambda_ar = 1.0;
    double gain = 0.0;       // W per unit efficiency
    double eta0 = 0.4;

    double scale(double eta) const { return eta * gain; }
};

AliceObservation make_observation(const SystemParams& params, const SchemeConfig& scheme);

struct DetectionPoint {
    double tau = 0.0;
    double alpha = 1.0;
    double beta = 0.0;
    double xi = 1.0;
};

double false_alarm(const AliceObservation& obs, double tau);
double false_alarm(const SystemParams& params, const SchemeConfig& scheme, double tau);

double miss_detection(const AliceObservation& obs, double eta1, double tau);
double miss_detection(const SystemParams& params, const SchemeConfig& scheme, double eta1,
                      double tau);

/// tau <= sigma_a^2 gives (alpha, beta) = (1, 0).
DetectionPoint detection_error(const AliceObservation& obs, double eta1, double tau);
DetectionPoint detection_error(const SystemParams& params, const SchemeConfig& scheme,
                               double eta1, double tau);

/// Throws DomainError when eta1 <= eta0: both hypotheses coincide.
double optimal_threshold(const AliceObservation& obs, double eta1);
double optimal_threshold(const SystemParams& params, const SchemeConfig& scheme, double eta1);

/// xi*(phi) = 1 - phi^(1 / (2 (1 - sqrt(phi)))) (1/sqrt(phi) - 1), with the
/// phi -> 1 limit handled by a series expansion.
double min_detection_error(double phi);

struct XiRange {
    double lower = 1.0;
    double upper = 1.0;
};

XiRange xi_star_range(double eta0, double eta_u);

/// Root of xi*(phi) = 1 - epsilon. epsilon == 0 gives 1; epsilon >= 1 throws.
double solve_phi_epsilon(double epsilon);

struct Covertness {
    double phi = 1.0;
    double xi_star = 1.0;
    double phi_epsilon = 1.0;
};

Covertness covertness(double eta0, double eta1, double epsilon);

}  // namespace covert
