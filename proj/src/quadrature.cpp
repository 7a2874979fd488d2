#include "covert/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace covert {

namespace {

// Laguerre polynomials scaled by e^{-x/2}, which keeps |L_k(x) e^{-x/2}| <= 1
// so the recurrence cannot overflow for large nodes. Returns (l_{n-1}, l_n).
std::pair<double, double> scaled_laguerre(std::size_t n, double x) {
    double prev = 0.0;
    double cur = std::exp(-0.5 * x);
    for (std::size_t k = 0; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return {prev, cur};
}

GaussLaguerreRule build_rule(std::size_t n) {
    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double dn = static_cast<double>(n);

    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // Initial guesses from the usual asymptotic fits, then Newton.
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * dn);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * dn);
        } else {
            const double ai = static_cast<double>(i - 1);
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - rule.nodes[i - 2]);
        }
        // Stop at full precision, or once the step stalls at the rounding
        // floor of the recurrence.
        bool converged = false;
        double prev_step = HUGE_VAL;
        for (int it = 0; it < 200; ++it) {
            const auto [lm1, ln] = scaled_laguerre(n, z);
            const double deriv = dn * (ln - lm1) / z;
            const double step = std::abs(ln / deriv);
            z -= ln / deriv;
            if (step <= 1e-15 * z || (step <= 1e-10 * z && step >= prev_step)) {
                converged = true;
                break;
            }
            prev_step = step;
        }
        if (!converged) throw std::runtime_error("gauss_laguerre: Newton iteration failed");
        rule.nodes[i] = z;
        const auto [ln, lnp1] = scaled_laguerre(n + 1, z);
        (void)ln;
        rule.weights[i] = z * std::exp(-z) / ((dn + 1.0) * (dn + 1.0) * lnp1 * lnp1);
    }
    for (std::size_t i = 1; i < n; ++i)
        if (!(rule.nodes[i] > rule.nodes[i - 1]))
            throw std::runtime_error("gauss_laguerre: nodes not strictly increasing");
    return rule;
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    static std::mutex mu;
    static std::map<std::size_t, GaussLaguerreRule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double exponential_expectation_2d(const std::function<double(double, double)>& f, double mean_x,
                                  double mean_y, std::size_t n) {
    const GaussLaguerreRule& rule = gauss_laguerre(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = mean_x * rule.nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += rule.weights[j] * f(x, mean_y * rule.nodes[j]);
        total += rule.weights[i] * row;
    }
    return total;
}

}  // namespace covert
