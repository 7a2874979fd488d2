#pragma once

// Gauss-Laguerre quadrature for expectations over independent exponential
// variables: integral_0^inf f(x) e^-x dx ~= sum_i w_i f(x_i).

#include <cstddef>
#include <functional>
#include <vector>

namespace covert {

struct GaussLaguerreRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // sum to 1
};

/// n-point rule, n >= 1. Rules are cached; the reference stays valid for the
/// life of the program.
const GaussLaguerreRule& gauss_laguerre(std::size_t n);

/// E[f(X, Y)] for X ~ Exp(mean mean_x), Y ~ Exp(mean mean_y), on an n x n
/// tensor grid.
double exponential_expectation_2d(const std::function<double(double, double)>& f, double mean_x,
                                  double mean_y, std::size_t n);

}  // namespace covert
