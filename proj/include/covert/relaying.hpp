#pragma once

// Per-block power allocation and SNR/SINR algebra of the self-sustained
// amplify-and-forward relay.
//
// Every operation has two entry points: one on a RelayLink (the composite
// terms a = Pa L_ar |h_ar|^2, b = L_rb |h_rb|^2 plus the noise powers), and a
// convenience overload taking the full SystemParams and a channel draw.
//
// Under H1 the relay forwards x_a with P_r^1 and sends its own x_c with
// P_r^c, choosing P_r^1 so that Bob's SINR for x_a equals his H0 SNR.

#include "covert/core_params.hpp"

namespace covert {

struct LinkGains {
    double a = 0.0;  // Pa * L_ar * |h_ar|^2, W
    double b = 0.0;  // L_rb * |h_rb|^2
};

struct RelayLink {
    SchemeConfig scheme;
    double eta0 = 0.4;
    LinkGains gains;
    double sigma2_r = 0.0;  // scheme-dependent relay noise
    double sigma2_b = 0.0;  // Bob's total noise
};

RelayLink make_link(const SystemParams& params, const SchemeConfig& scheme,
                    const ChannelDraw& draw);

struct PowerAllocation {
    double pr0 = 0.0;    // forward power under H0
    double pr1 = 0.0;    // forward power under H1
    double prc = 0.0;    // covert power under H1
    double gain2 = 0.0;  // G^2
};

/// Total relay transmit power for conversion efficiency `eta`.
/// TS: 2 eta phi a / (1 - phi);  PS: eta rho a.
double harvested_power_total(const SchemeConfig& scheme, double eta, double a);
double harvested_power_total(const SystemParams& params, const SchemeConfig& scheme, double eta,
                             double g_ar);

/// G^2 normalizing the forwarded signal to unit power.
double amplification_gain2(const RelayLink& link);
double amplification_gain2(const SystemParams& params, const SchemeConfig& scheme, double g_ar);

/// Throws DomainError when eta1 < eta0.
PowerAllocation allocate_powers(const RelayLink& link, double eta1);
PowerAllocation allocate_powers(const SystemParams& params, const SchemeConfig& scheme,
                                double eta1, const ChannelDraw& draw);

double snr_h0(const RelayLink& link);
double snr_h0(const SystemParams& params, const SchemeConfig& scheme, const ChannelDraw& draw);

double sinr_h1(const RelayLink& link, double eta1);
double sinr_h1(const SystemParams& params, const SchemeConfig& scheme, double eta1,
               const ChannelDraw& draw);

/// SNR of x_c after Bob cancels x_a.
double covert_snr(const RelayLink& link, double eta1);
double covert_snr(const SystemParams& params, const SchemeConfig& scheme, double eta1,
                  const ChannelDraw& draw);

/// Same quantity through the Q-term rewrite (Q1/Q2 for TS, Q3/Q4 for PS).
/// Kept as an independent algebraic route for cross-checking covert_snr.
double covert_snr_qform(const RelayLink& link, double eta1);

}  // namespace covert
