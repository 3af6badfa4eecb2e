#include "trotterlab/quadrature.hpp"

#include <cmath>

namespace trotterlab::quadrature {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess for the i-th root of P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
  GaussRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * s;
}

namespace {

double simpson(double fa, double fm, double fb, double h6) { return h6 * (fa + 4.0 * fm + fb); }

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, (m - a) / 6.0);
  const double right = simpson(fm, frm, fb, (b - m) / 6.0);
  const double delta = left + right - whole;
  if (depth <= 0) throw numeric_error("adaptive_quad: max recursion depth exceeded");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int max_depth) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, (b - a) / 6.0);
  return adaptive_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace trotterlab::quadrature
