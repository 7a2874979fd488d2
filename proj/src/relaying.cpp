#include "covert/relaying.hpp"

#include <cmath>
#include <string>

namespace covert {

namespace {

void check_eta(double eta) {
    if (!(eta > 0.0 && eta < 1.0))
        throw DomainError("conversion efficiency must lie in (0, 1), got " + std::to_string(eta));
}

void check_eta1(const RelayLink& link, double eta1) {
    check_eta(eta1);
    if (eta1 < link.eta0)
        throw DomainError("eta1 < eta0 would require negative covert power");
}

// Harvested power per unit efficiency: 2 phi a / (1 - phi) for TS, rho a for PS.
double harvest_per_eta(const SchemeConfig& scheme, double a) {
    scheme.validate();
    const double f = scheme.fraction;
    return scheme.is_ts() ? 2.0 * f * a / (1.0 - f) : f * a;
}

// Source power seen by the relay's information receiver.
double information_signal(const SchemeConfig& scheme, double a) {
    return scheme.is_ts() ? a : (1.0 - scheme.fraction) * a;
}

}  // namespace

RelayLink make_link(const SystemParams& params, const SchemeConfig& scheme,
                    const ChannelDraw& draw) {
    RelayLink link;
    link.scheme = scheme;
    link.eta0 = params.eta0;
    link.gains.a = params.Pa * params.L_ar() * draw.g_ar;
    link.gains.b = params.L_rb() * draw.g_rb;
    link.sigma2_r = relay_noise_power(params, scheme);
    link.sigma2_b = params.sigma2_b();
    return link;
}

double harvested_power_total(const SchemeConfig& scheme, double eta, double a) {
    check_eta(eta);
    return eta * harvest_per_eta(scheme, a);
}

double harvested_power_total(const SystemParams& params, const SchemeConfig& scheme, double eta,
                             double g_ar) {
    return harvested_power_total(scheme, eta, params.Pa * params.L_ar() * g_ar);
}

double amplification_gain2(const RelayLink& link) {
    return 1.0 / (information_signal(link.scheme, link.gains.a) + link.sigma2_r);
}

double amplification_gain2(const SystemParams& params, const SchemeConfig& scheme, double g_ar) {
    return amplification_gain2(make_link(params, scheme, ChannelDraw{g_ar, 0.0}));
}

PowerAllocation allocate_powers(const RelayLink& link, double eta1) {
    check_eta(link.eta0);
    check_eta1(link, eta1);
    const double unit = harvest_per_eta(link.scheme, link.gains.a);
    const double b = link.gains.b;
    const double s2b = link.sigma2_b;

    PowerAllocation out;
    out.pr0 = link.eta0 * unit;
    out.gain2 = amplification_gain2(link);
    // Surplus (eta1 - eta0) * unit, shrunk by Bob's interference budget.
    out.prc = (eta1 - link.eta0) * unit * s2b / (out.pr0 * b + s2b);
    out.pr1 = eta1 * unit - out.prc;
    return out;
}

PowerAllocation allocate_powers(const SystemParams& params, const SchemeConfig& scheme,
                                double eta1, const ChannelDraw& draw) {
    if (eta1 > params.eta_u) throw DomainError("eta1 exceeds the efficiency cap eta_u");
    return allocate_powers(make_link(params, scheme, draw), eta1);
}

double snr_h0(const RelayLink& link) {
    check_eta(link.eta0);
    const double pr0 = link.eta0 * harvest_per_eta(link.scheme, link.gains.a);
    const double g2 = amplification_gain2(link);
    const double s = information_signal(link.scheme, link.gains.a);
    const double fwd = pr0 * link.gains.b * g2;
    return fwd * s / (fwd * link.sigma2_r + link.sigma2_b);
}

double snr_h0(const SystemParams& params, const SchemeConfig& scheme, const ChannelDraw& draw) {
    return snr_h0(make_link(params, scheme, draw));
}

double sinr_h1(const RelayLink& link, double eta1) {
    const PowerAllocation p = allocate_powers(link, eta1);
    const double s = information_signal(link.scheme, link.gains.a);
    const double fwd = p.pr1 * link.gains.b * p.gain2;
    return fwd * s / (fwd * link.sigma2_r + p.prc * link.gains.b + link.sigma2_b);
}

double sinr_h1(const SystemParams& params, const SchemeConfig& scheme, double eta1,
               const ChannelDraw& draw) {
    if (eta1 > params.eta_u) throw DomainError("eta1 exceeds the efficiency cap eta_u");
    return sinr_h1(make_link(params, scheme, draw), eta1);
}

double covert_snr(const RelayLink& link, double eta1) {
    const PowerAllocation p = allocate_powers(link, eta1);
    const double b = link.gains.b;
    return p.prc * b / (p.pr1 * b * p.gain2 * link.sigma2_r + link.sigma2_b);
}

double covert_snr(const SystemParams& params, const SchemeConfig& scheme, double eta1,
                  const ChannelDraw& draw) {
    if (eta1 > params.eta_u) throw DomainError("eta1 exceeds the efficiency cap eta_u");
    return covert_snr(make_link(params, scheme, draw), eta1);
}

double covert_snr_qform(const RelayLink& link, double eta1) {
    check_eta(link.eta0);
    check_eta1(link, eta1);
    link.scheme.validate();
    const double a = link.gains.a;
    const double ab = a * link.gains.b;
    const double s2r = link.sigma2_r;
    const double s2b = link.sigma2_b;
    const double f = link.scheme.fraction;

    if (link.scheme.is_ts()) {
        const double q1 = 2.0 * link.eta0 * f * ab;
        const double q2 = 2.0 * eta1 * f * ab;
        const double dq = 2.0 * (eta1 - link.eta0) * f * ab;
        const double idle = (1.0 - f) * s2b;
        const double den = q1 * (q2 + idle) * s2r / ((1.0 - f) * (a + s2r)) + (q1 + idle) * s2b;
        return dq * s2b / den;
    }
    const double q3 = link.eta0 * f * ab;
    const double q4 = eta1 * f * ab;
    const double dq = (eta1 - link.eta0) * f * ab;
    const double den = q3 * (q4 + s2b) * s2r / ((1.0 - f) * a + s2r) + (q3 + s2b) * s2b;
    return dq * s2b / den;
}

}  // namespace covert
