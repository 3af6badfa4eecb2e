#include "trotterlab/oracle.hpp"

#include <cmath>
#include <random>

#include "trotterlab/quadrature.hpp"

namespace trotterlab::oracle {

namespace {

// Box-Muller on raw uniform doubles keeps the stream identical across
// standard-library implementations.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}
  double next() {
    if (have_) {
      have_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * M_PI * u2);
    have_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  double uniform() {
    return (rng_() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
  }
  std::mt19937_64 rng_;
  bool have_ = false;
  double cached_ = 0.0;
};

Matrix random_hermitian(int dim, GaussianStream& gs) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = gs.next();
    for (int j = i + 1; j < dim; ++j) {
      const double re = gs.next() * M_SQRT1_2;
      const double im = gs.next() * M_SQRT1_2;
      m(i, j) = cplx(re, im);
      m(j, i) = cplx(re, -im);
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const double radius = es.eigenvalues().cwiseAbs().maxCoeff();
  if (radius > 0.0) m /= radius;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

GeneratorPair make_generator_pair(int dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("make_generator_pair: dim must be >= 2");
  GeneratorPair p;
  p.dim = dim;
  p.seed = seed;
  GaussianStream gs(seed);
  p.a_mat = random_hermitian(dim, gs);
  p.b_mat = random_hermitian(dim, gs);
  return p;
}

Matrix expm_herm(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw numeric_error("expm_herm: eigensolver failed");
  Vector phases(h.rows());
  for (int k = 0; k < h.rows(); ++k) phases(k) = std::exp(cplx(0.0, -es.eigenvalues()(k) * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix strang_error_direct(const GeneratorPair& pair, double t) {
  const Matrix h = pair.a_mat + pair.b_mat;
  return expm_herm(pair.a_mat, 0.5 * t) * expm_herm(pair.b_mat, t) *
             expm_herm(pair.a_mat, 0.5 * t) -
         expm_herm(h, t);
}

Matrix strang_error_integral(const GeneratorPair& pair, double t, int quad_nodes) {
  if (quad_nodes < 8) throw std::invalid_argument("strang_error_integral: need >= 8 nodes");
  const Matrix& A = pair.a_mat;
  const Matrix& B = pair.b_mat;
  const Matrix H = A + B;
  // [L2, L1] = [-iB, -iA] = -[B, A] = [A, B]
  const Matrix c21 = commutator(A, B);
  const auto rule = quadrature::gauss_legendre(quad_nodes);
  Matrix acc = Matrix::Zero(pair.dim, pair.dim);
  for (int i = 0; i < quad_nodes; ++i) {
    const double s = 0.5 * t * (rule.nodes[i] + 1.0);
    const double ws = 0.5 * t * rule.weights[i];
    const Matrix left = expm_herm(A, 0.5 * s);
    const Matrix tail = expm_herm(H, t - s);
    Matrix inner = Matrix::Zero(pair.dim, pair.dim);
    for (int j = 0; j < quad_nodes; ++j) {
      const double v = 0.5 * (rule.nodes[j] + 1.0);  // u = s v
      const double wu = 0.5 * s * rule.weights[j];
      const double u = s * v;
      const Matrix mid = expm_herm(B, u) * expm_herm(A, 0.5 * (s - u));
      inner += wu * (expm_herm(B, s - u) * (mid * c21 - c21 * mid) * expm_herm(A, 0.5 * u));
    }
    acc += ws * (left * inner * tail);
  }
  return 0.5 * acc;
}

Matrix lie_error_direct(const GeneratorPair& pair, double t) {
  const Matrix h = pair.a_mat + pair.b_mat;
  return expm_herm(pair.b_mat, t) * expm_herm(pair.a_mat, t) - expm_herm(h, t);
}

Matrix lie_error_integral(const GeneratorPair& pair, double t, int quad_nodes) {
  if (quad_nodes < 8) throw std::invalid_argument("lie_error_integral: need >= 8 nodes");
  const Matrix& A = pair.a_mat;
  const Matrix& B = pair.b_mat;
  const Matrix H = A + B;
  const auto rule = quadrature::gauss_legendre(quad_nodes);
  Matrix acc = Matrix::Zero(pair.dim, pair.dim);
  for (int i = 0; i < quad_nodes; ++i) {
    const double s = 0.5 * t * (rule.nodes[i] + 1.0);
    const double w = 0.5 * t * rule.weights[i];
    const Matrix ea = expm_herm(A, s);
    acc += w * (expm_herm(B, s) * (ea * B - B * ea) * expm_herm(H, t - s));
  }
  return cplx(0.0, 1.0) * acc;
}

double commutator_expansion_check(const GeneratorPair& pair, double s, int quad_nodes) {
  if (quad_nodes < 8) throw std::invalid_argument("commutator_expansion_check: need >= 8 nodes");
  const cplx mi(0.0, -1.0);
  const Matrix l1 = mi * pair.a_mat;
  const Matrix l2 = mi * pair.b_mat;
  const Matrix lhs = l1 * expm_herm(pair.b_mat, s) - expm_herm(pair.b_mat, s) * l1;
  const auto rule = quadrature::gauss_legendre(quad_nodes);
  Matrix rhs = Matrix::Zero(pair.dim, pair.dim);
  const Matrix c12 = commutator(l1, l2);
  for (int i = 0; i < quad_nodes; ++i) {
    const double tau = 0.5 * s * (rule.nodes[i] + 1.0);
    const double w = 0.5 * s * rule.weights[i];
    rhs += w * (expm_herm(pair.b_mat, s - tau) * c12 * expm_herm(pair.b_mat, tau));
  }
  return (lhs - rhs).norm();
}

double e1_e2_relation_check(const GeneratorPair& pair, double t, int L) {
  if (L < 1) throw std::invalid_argument("e1_e2_relation_check: L must be >= 1");
  const Matrix& A = pair.a_mat;
  const Matrix& B = pair.b_mat;
  const Matrix H = A + B;
  const int d = pair.dim;
  const Matrix lie_step = expm_herm(B, t) * expm_herm(A, t);
  const Matrix strang_step = expm_herm(A, 0.5 * t) * expm_herm(B, t) * expm_herm(A, 0.5 * t);
  Matrix lieL = Matrix::Identity(d, d), strangL1 = Matrix::Identity(d, d);
  for (int k = 0; k < L; ++k) lieL *= lie_step;
  for (int k = 0; k < L + 1; ++k) strangL1 *= strang_step;
  const Matrix E1 = lieL - expm_herm(H, L * t);
  const Matrix E2 = strangL1 - expm_herm(H, (L + 1) * t);
  const Matrix half = expm_herm(A, 0.5 * t);
  const Matrix half_back = expm_herm(A, -0.5 * t);
  const Matrix term1 = E2 - half * E1 * expm_herm(B, t) * half;
  const Matrix term2 = half * E1 * (lie_step - expm_herm(H, t)) * half_back;
  const Matrix term3 = half * E1 * expm_herm(H, t) * half_back;

  GaussianStream gs(pair.seed ^ 0x9e3779b97f4a7c15ull);
  Vector psi(d);
  for (int i = 0; i < d; ++i) psi(i) = cplx(gs.next(), gs.next());
  psi.normalize();
  return ((term1 + term2 + term3) * psi - E2 * psi).norm();
}

}  // namespace trotterlab::oracle
