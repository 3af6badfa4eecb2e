#pragma once

#include <functional>

#include "trotterlab/common.hpp"

namespace trotterlab::quadrature {

struct GaussRule {
  dvec nodes;    // on [-1, 1], ascending
  dvec weights;  // sum to 2
};

// Gauss-Legendre rule of order n (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

// Integrates f over [a, b] with an n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

// Adaptive Simpson with absolute tolerance. Recursion depth is bounded;
// exceeding it raises numeric_error (integrand assumed smooth).
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth = 60);

}  // namespace trotterlab::quadrature
