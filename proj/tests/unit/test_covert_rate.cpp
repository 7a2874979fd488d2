#include "covert/covert_rate.hpp"
#include "covert/detection.hpp"
#include "covert/relaying.hpp"

#include <doctest.h>

#include <cmath>

using namespace covert;

namespace {

// Plain Monte Carlo mean of log2(1 + gamma_c), independent of the library's
// simulation module.
double mc_rate(const SystemParams& p, const SchemeConfig& s, double eta1, int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::exponential_distribution<double> ar(1.0 / p.lambda_ar), rb(1.0 / p.lambda_rb);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const ChannelDraw d{ar(gen), rb(gen)};
        sum += std::log2(1.0 + covert_snr(p, s, eta1, d));
    }
    return sum / n;
}

}  // namespace

TEST_CASE("prefactor") {
    CHECK(transmission_prefactor(SchemeConfig::ts(0.5)) == 0.25);
    CHECK(transmission_prefactor(SchemeConfig::ps(0.5)) == 0.5);
}

TEST_CASE("rate is zero without surplus") {
    const SystemParams p = SystemParams::defaults();
    for (const SchemeConfig s : {SchemeConfig::ts(0.5), SchemeConfig::ps(0.5)}) {
        const RateResult r = effective_covert_rate(p, s, p.eta0);
        CHECK(r.c_avg == 0.0);
        CHECK(r.psi == 0.0);
    }
    SystemParams weak = p;
    weak.lambda_rb = 1e-12;
    CHECK(average_covert_rate(weak, SchemeConfig::ts(0.5), 0.7).c_avg < 1e-9);
    CHECK_THROWS_AS(average_covert_rate(p, SchemeConfig::ts(0.5), 0.9), DomainError);
    CHECK_THROWS_AS(average_covert_rate(p, SchemeConfig::ts(0.5), 0.3), DomainError);
}

TEST_CASE("psi applies the prefactor") {
    const SystemParams p = SystemParams::defaults();
    const RateResult ts = effective_covert_rate(p, SchemeConfig::ts(0.3), 0.7);
    CHECK(ts.psi == doctest::Approx(0.35 * ts.c_avg).epsilon(1e-14));
    const RateResult ps = effective_covert_rate(p, SchemeConfig::ps(0.3), 0.7);
    CHECK(ps.psi == doctest::Approx(0.5 * ps.c_avg).epsilon(1e-14));
    CHECK(ts.converged);
    CHECK(ts.quad_error <= kQuadTolerance);
}

TEST_CASE("quadrature agrees with Monte Carlo at the defaults") {
    const SystemParams p = SystemParams::defaults();
    for (const SchemeConfig s : {SchemeConfig::ts(0.5), SchemeConfig::ps(0.7)}) {
        const double quad = average_covert_rate(p, s, 0.7).c_avg;
        const double mc = mc_rate(p, s, 0.7, 1'000'000, 77);
        CHECK(std::abs(mc - quad) / quad <= 0.01);
    }
}

TEST_CASE("psi increases with eta1") {
    SystemParams p = SystemParams::defaults();
    for (double pa_dbm : {0.0, 20.0}) {
        p.Pa = dbm_to_watts(pa_dbm);
        for (const SchemeConfig s : {SchemeConfig::ts(0.6), SchemeConfig::ps(0.8)}) {
            double prev = -1.0;
            for (int i = 0; i < 20; ++i) {
                const double psi = effective_covert_rate(p, s, p.eta0 + (p.eta_u - p.eta0) * i / 19.0).psi;
                CHECK(psi > prev);
                prev = psi;
            }
        }
    }
}

TEST_CASE("optimal eta1 case split") {
    SystemParams p = SystemParams::defaults();
    const double threshold = covertness_switch_epsilon(0.4, 0.8);
    CHECK(threshold == doctest::Approx(0.1268).epsilon(1e-3));
    CHECK(std::abs(threshold - (1.0 - min_detection_error(0.5))) <= 1e-12);

    p.epsilon = 0.1;
    Eta1Choice c = optimal_eta1(p);
    CHECK(c.binding == Binding::Covertness);
    CHECK(c.eta1_star == doctest::Approx(0.690).epsilon(1e-3));
    CHECK(c.eta1_star == doctest::Approx(0.4 / solve_phi_epsilon(0.1)).epsilon(1e-14));

    p.epsilon = 0.2;
    c = optimal_eta1(p);
    CHECK(c.binding == Binding::HarvesterCap);
    CHECK(c.eta1_star == 0.8);

    p.epsilon = 1e-9;
    CHECK(optimal_eta1(p).eta1_star == doctest::Approx(0.4).epsilon(1e-4));

    p.epsilon = 0.1;
    p.eta0 = p.eta_u = 0.5;
    c = optimal_eta1(p);
    CHECK(c.binding == Binding::HarvesterCap);
    CHECK(c.eta1_star == 0.5);
}

TEST_CASE("max effective covert rate") {
    SystemParams p = SystemParams::defaults();
    const OptimizationOutcome ts = max_effective_covert_rate(p, SchemeConfig::ts(0.5));
    const OptimizationOutcome ps = max_effective_covert_rate(p, SchemeConfig::ps(0.5));
    CHECK(ts.eta1_star == ps.eta1_star);
    CHECK(ts.psi_star == effective_covert_rate(p, SchemeConfig::ts(0.5), ts.eta1_star).psi);

    p.epsilon = 0.05;
    const double tight = max_effective_covert_rate(p, SchemeConfig::ts(0.5)).psi_star;
    CHECK(ts.psi_star >= tight);

    // Two loose budgets both past the switch give the same plateau.
    p.epsilon = 0.2;
    const double a = max_effective_covert_rate(p, SchemeConfig::ps(0.5)).psi_star;
    p.epsilon = 0.5;
    const double b = max_effective_covert_rate(p, SchemeConfig::ps(0.5)).psi_star;
    CHECK(std::abs(a - b) <= 1e-12 * a);

    p.epsilon = 1e-12;
    CHECK(max_effective_covert_rate(p, SchemeConfig::ts(0.5)).psi_star < 1e-4);
}

TEST_CASE("psi* grows with Pa") {
    SystemParams p = SystemParams::defaults();
    for (const SchemeConfig s : {SchemeConfig::ts(0.5), SchemeConfig::ps(0.5)}) {
        double prev = -1.0;
        for (double dbm = -30.0; dbm <= 40.0; dbm += 5.0) {
            p.Pa = dbm_to_watts(dbm);
            const double v = max_effective_covert_rate(p, s).psi_star;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("harvest fraction optimization") {
    const SystemParams p = SystemParams::defaults();
    for (Scheme v : {Scheme::TimeSwitching, Scheme::PowerSplitting}) {
        const double f = optimize_harvest_fraction(p, v);
        CHECK(f > 0.0);
        CHECK(f < 1.0);
        const double best = forwarding_rate(p, SchemeConfig{v, f});
        for (double d : {-0.01, 0.01}) {
            if (f + d > 0.0 && f + d < 1.0) CHECK(best >= forwarding_rate(p, SchemeConfig{v, f + d}));
        }
        for (int k = 1; k <= 99; ++k)
            CHECK(best >= forwarding_rate(p, SchemeConfig{v, k / 100.0}) * (1.0 - 1e-9));
        CHECK(optimize_harvest_fraction(p, v) == f);
    }

    const double mid = forwarding_rate(p, SchemeConfig::ts(0.5));
    CHECK(forwarding_rate(p, SchemeConfig::ts(1e-6)) < 1e-3 * mid);
    CHECK(forwarding_rate(p, SchemeConfig::ts(1.0 - 1e-6)) < 1e-3 * mid);
}
