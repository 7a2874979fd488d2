#include "covert/covert_rate.hpp"

#include "covert/detection.hpp"
#include "covert/quadrature.hpp"
#include "covert/relaying.hpp"

#include <algorithm>
#include <cmath>

namespace covert {

namespace {

void check_eta1_range(const SystemParams& params, double eta1) {
    if (!(eta1 >= params.eta0 && eta1 <= params.eta_u))
        throw DomainError("eta1 must lie in [eta0, eta_u]");
}

template <class Integrand>
double expectation(const SystemParams& params, std::size_t nodes, Integrand&& f) {
    return exponential_expectation_2d(f, params.lambda_ar, params.lambda_rb, nodes);
}

}  // namespace

double transmission_prefactor(const SchemeConfig& scheme) {
    scheme.validate();
    return scheme.is_ts() ? 0.5 * (1.0 - scheme.fraction) : 0.5;
}

RateResult average_covert_rate(const SystemParams& params, const SchemeConfig& scheme,
                               double eta1) {
    params.validate();
    scheme.validate();
    check_eta1_range(params, eta1);

    RateResult r;
    if (eta1 == params.eta0) return r;  // gamma_c == 0 everywhere

    // The draw-independent parts of the link are fixed; only a and b vary.
    RelayLink base = make_link(params, scheme, ChannelDraw{0.0, 0.0});
    const double pa_lar = params.Pa * params.L_ar();
    const double lrb = params.L_rb();
    auto integrand = [&](double g_ar, double g_rb) {
        RelayLink link = base;
        link.gains.a = pa_lar * g_ar;
        link.gains.b = lrb * g_rb;
        return std::log2(1.0 + covert_snr(link, eta1));
    };

    const double coarse = expectation(params, kQuadNodes, integrand);
    const double fine = expectation(params, kQuadRefineNodes, integrand);
    r.c_avg = std::max(fine, 0.0);
    r.quad_error = fine > 0.0 ? std::abs(coarse - fine) / fine : 0.0;
    r.converged = r.quad_error <= kQuadTolerance;
    return r;
}

RateResult effective_covert_rate(const SystemParams& params, const SchemeConfig& scheme,
                                 double eta1) {
    RateResult r = average_covert_rate(params, scheme, eta1);
    r.psi = transmission_prefactor(scheme) * r.c_avg;
    return r;
}

std::string_view binding_label(Binding b) {
    return b == Binding::Covertness ? "covertness" : "harvester-cap";
}

double covertness_switch_epsilon(double eta0, double eta_u) {
    if (!(eta0 > 0.0 && eta0 <= eta_u && eta_u < 1.0))
        throw DomainError("need 0 < eta0 <= eta_u < 1");
    if (eta0 == eta_u) return 0.0;
    const double su = std::sqrt(eta_u);
    const double s0 = std::sqrt(eta0);
    return std::pow(eta0 / eta_u, su / (2.0 * (su - s0))) * (std::sqrt(eta_u / eta0) - 1.0);
}

Eta1Choice optimal_eta1(const SystemParams& params) {
    params.validate();
    Eta1Choice c;
    c.threshold = covertness_switch_epsilon(params.eta0, params.eta_u);
    c.phi_epsilon = params.epsilon < 1.0 ? solve_phi_epsilon(params.epsilon) : 0.0;

    if (params.eta0 == params.eta_u || params.epsilon > c.threshold) {
        c.eta1_star = params.eta_u;
        c.binding = Binding::HarvesterCap;
        return c;
    }
    c.eta1_star = std::min(params.eta0 / c.phi_epsilon, params.eta_u);
    c.binding = Binding::Covertness;
    return c;
}

OptimizationOutcome max_effective_covert_rate(const SystemParams& params,
                                              const SchemeConfig& scheme) {
    const Eta1Choice choice = optimal_eta1(params);
    OptimizationOutcome out;
    out.eta1_star = choice.eta1_star;
    out.phi_epsilon = choice.phi_epsilon;
    out.binding = choice.binding;
    out.rate = effective_covert_rate(params, scheme, choice.eta1_star);
    out.psi_star = out.rate.psi;
    return out;
}

double forwarding_rate(const SystemParams& params, const SchemeConfig& scheme) {
    params.validate();
    scheme.validate();
    RelayLink base = make_link(params, scheme, ChannelDraw{0.0, 0.0});
    const double pa_lar = params.Pa * params.L_ar();
    const double lrb = params.L_rb();
    auto integrand = [&](double g_ar, double g_rb) {
        RelayLink link = base;
        link.gains.a = pa_lar * g_ar;
        link.gains.b = lrb * g_rb;
        return std::log2(1.0 + snr_h0(link));
    };
    return transmission_prefactor(scheme) * expectation(params, kQuadNodes, integrand);
}

double optimize_harvest_fraction(const SystemParams& params, Scheme variant) {
    auto objective = [&](double f) { return forwarding_rate(params, SchemeConfig{variant, f}); };

    int best = 1;
    double best_val = -1.0;
    for (int k = 1; k <= 99; ++k) {
        const double v = objective(k / 100.0);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }

    double lo = (best - 1) / 100.0;
    double hi = (best + 1) / 100.0;
    lo = std::max(lo, 1e-9);
    hi = std::min(hi, 1.0 - 1e-9);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-4) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        }
    }
    const double mid = 0.5 * (lo + hi);
    // The scan point itself can beat the bracket midpoint on a flat objective.
    return objective(mid) >= best_val ? mid : best / 100.0;
}

}  // namespace covert
