#include "trotterlab/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace trotterlab::tridiag {

namespace {
double hypot2(double a, double b) { return std::hypot(a, b); }
}  // namespace

void ql_implicit_shift(dvec d, dvec e, dvec& eigenvalues, dvec* vectors, int max_sweeps) {
  const int n = static_cast<int>(d.size());
  if (n == 0) throw std::invalid_argument("ql_implicit_shift: empty matrix");
  if (static_cast<int>(e.size()) != n - 1 && n > 1)
    throw std::invalid_argument("ql_implicit_shift: off-diagonal size mismatch");
  e.resize(n, 0.0);  // e[n-1] used as scratch zero

  dvec& z = *([&]() -> dvec* {
    if (!vectors) return nullptr;
    vectors->assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*vectors)[static_cast<size_t>(i) * n + i] = 1.0;
    return vectors;
  }());

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == max_sweeps)
          throw numeric_error("ql_implicit_shift: no convergence after " +
                              std::to_string(max_sweeps) + " sweeps (n=" + std::to_string(n) +
                              ")");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // recover from underflow
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (vectors) {
            double* zi = z.data() + static_cast<size_t>(i) * n;
            double* zi1 = z.data() + static_cast<size_t>(i + 1) * n;
            for (int k = 0; k < n; ++k) {
              double fk = zi1[k];
              zi1[k] = s * zi[k] + c * fk;
              zi[k] = c * zi[k] - s * fk;
            }
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  // Sort ascending, permuting eigenvectors along.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  eigenvalues.resize(n);
  for (int k = 0; k < n; ++k) eigenvalues[k] = d[idx[k]];
  if (vectors) {
    dvec sorted(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
      std::copy_n(z.data() + static_cast<size_t>(idx[k]) * n, n,
                  sorted.data() + static_cast<size_t>(k) * n);
    *vectors = std::move(sorted);
  }
}

LdltFactor ldlt_factor(const dvec& diag, const dvec& off, double pivot_floor) {
  const int n = static_cast<int>(diag.size());
  LdltFactor f;
  f.d_inv.resize(n);
  f.l.resize(n > 0 ? n - 1 : 0);
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    double piv = diag[i];
    if (i > 0) piv -= off[i - 1] * off[i - 1] * prev;
    if (piv < pivot_floor)
      throw numeric_error("ldlt_factor: nonpositive pivot " + std::to_string(piv) + " at row " +
                          std::to_string(i));
    f.d_inv[i] = 1.0 / piv;
    if (i + 1 < n) f.l[i] = off[i] * f.d_inv[i];
    prev = f.d_inv[i];
  }
  return f;
}

void LdltFactor::solve(std::span<const double> rhs, std::span<double> x) const {
  const int n = static_cast<int>(d_inv.size());
  for (int i = 0; i < n; ++i) x[i] = rhs[i] - (i > 0 ? l[i - 1] * x[i - 1] : 0.0);
  for (int i = 0; i < n; ++i) x[i] *= d_inv[i];
  for (int i = n - 2; i >= 0; --i) x[i] -= l[i] * x[i + 1];
}

dvec bessel_j_sequence(double z, int kmax) {
  if (z < 0.0) throw std::invalid_argument("bessel_j_sequence: z must be >= 0");
  if (z == 0.0) {
    dvec out(kmax + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  // Start the downward recurrence well above both kmax and the turning point.
  const int start =
      std::max(kmax, static_cast<int>(z)) + static_cast<int>(15.0 * std::cbrt(z + 1.0)) + 40;
  dvec j(start + 1, 0.0);
  j[start] = 0.0;
  j[start - 1] = 1e-280;
  for (int k = start - 1; k >= 1; --k) {
    j[k - 1] = (2.0 * k / z) * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > 1e250) {  // rescale to avoid overflow
      for (int i = k - 1; i <= start; ++i) j[i] *= 1e-250;
    }
  }
  double norm = j[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0 * j[k];
  for (auto& v : j) v /= norm;
  j.resize(kmax + 1);
  return j;
}

TridiagPropagator::TridiagPropagator(dvec diag, dvec off) : d_(std::move(diag)), e_(std::move(off)) {
  const int n = static_cast<int>(d_.size());
  if (n == 0) throw std::invalid_argument("TridiagPropagator: empty matrix");
  lo_ = d_[0];
  hi_ = d_[0];
  for (int i = 0; i < n; ++i) {
    double radius = (i > 0 ? std::abs(e_[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e_[i]) : 0.0);
    lo_ = std::min(lo_, d_[i] - radius);
    hi_ = std::max(hi_, d_[i] + radius);
  }
  if (hi_ - lo_ < 1e-300) hi_ = lo_ + 1.0;
  b0_.resize(n);
  b1_.resize(n);
  b2_.resize(n);
}

void TridiagPropagator::prepare(double t) {
  if (has_cache_ && t == cached_t_) return;
  const double center = 0.5 * (hi_ + lo_);
  const double half = 0.5 * (hi_ - lo_);
  const double z = std::abs(half * t);
  // Truncate once the Bessel tail is below round-off for several orders.
  int kmax = static_cast<int>(z + 14.0 * std::cbrt(z + 1.0) + 30.0);
  dvec j = bessel_j_sequence(z, kmax);
  int m = kmax;
  while (m > 2 && std::abs(j[m]) < 1e-17 && std::abs(j[m - 1]) < 1e-17 &&
         std::abs(j[m - 2]) < 1e-17)
    --m;
  coeff_.assign(m + 1, cplx(0.0));
  const double sgn = (t >= 0.0) ? 1.0 : -1.0;  // J_k(-z) handled via (-i)^k -> (i)^k
  coeff_[0] = j[0];
  cplx ik(1.0, 0.0);
  const cplx step = (sgn > 0) ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
  for (int k = 1; k <= m; ++k) {
    ik *= step;
    coeff_[k] = 2.0 * ik * j[k];
  }
  phase_ = std::exp(cplx(0.0, -center * t));
  cached_t_ = t;
  has_cache_ = true;
  last_degree_ = m;
}

void TridiagPropagator::apply(double t, cvec& state) {
  const int n = static_cast<int>(d_.size());
  if (static_cast<int>(state.size()) != n)
    throw std::invalid_argument("TridiagPropagator::apply: dimension mismatch");
  if (t == 0.0) return;
  prepare(t);
  const int m = static_cast<int>(coeff_.size()) - 1;
  const double center = 0.5 * (hi_ + lo_);
  const double half = 0.5 * (hi_ - lo_);
  const double a = 2.0 / half;          // scale for 2*M_hat
  const double b = -2.0 * center / half;
  std::fill(b1_.begin(), b1_.end(), cplx(0.0));
  std::fill(b2_.begin(), b2_.end(), cplx(0.0));
  const double* d = d_.data();
  const double* e = e_.data();
  const cplx* v = state.data();
  for (int k = m; k >= 1; --k) {
    const cplx ak = coeff_[k];
    cplx* b0 = b0_.data();
    cplx* b1 = b1_.data();
    cplx* b2 = b2_.data();
    for (int i = 0; i < n; ++i) {
      cplx mv = d[i] * b1[i];
      if (i > 0) mv += e[i - 1] * b1[i - 1];
      if (i + 1 < n) mv += e[i] * b1[i + 1];
      b0[i] = a * mv + b * b1[i] - b2[i] + ak * v[i];
    }
    std::swap(b2_, b1_);
    std::swap(b1_, b0_);
  }
  // result = M_hat*b1 - b2 + a0*v
  const cplx a0 = coeff_[0];
  cplx* b1 = b1_.data();
  cplx* b2 = b2_.data();
  cplx* out = state.data();
  for (int i = 0; i < n; ++i) {
    cplx mv = d[i] * b1[i];
    if (i > 0) mv += e[i - 1] * b1[i - 1];
    if (i + 1 < n) mv += e[i] * b1[i + 1];
    out[i] = phase_ * (0.5 * a * mv + 0.5 * b * b1[i] - b2[i] + a0 * v[i]);
  }
}

}  // namespace trotterlab::tridiag
