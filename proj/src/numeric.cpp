#include "rep/numeric.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rep {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Cplx = std::complex<double>;

int fibre_dim(int n, int p) {
  if (p == 0) return 1;
  if (p == 1) return n;
  throw std::invalid_argument("only the trivial (p=0) and standard (p=1) fibres are supported");
}

// Nodes and weights of the k-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(k, 0.0);
  weights.assign(k, 0.0);
  for (int i = 0; i < k; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (k + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= k; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = k * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= k; ++j) {
      double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    double dp = k * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace

Mat quadratic_form(int n) {
  Mat J = Mat::Identity(n + 2, n + 2);
  J(n + 1, n + 1) = -1.0;
  return J;
}

double form_residual(const Mat& g) {
  int n = static_cast<int>(g.rows()) - 2;
  return (g.transpose() * quadratic_form(n) * g - quadratic_form(n)).cwiseAbs().maxCoeff();
}

Generators build_generators(int n) {
  if (n < 2) throw std::invalid_argument("build_generators: need n >= 2");
  Generators gen;
  gen.n = n;
  gen.H0 = Mat::Zero(n + 2, n + 2);
  gen.H0(n, n + 1) = 1.0;
  gen.H0(n + 1, n) = 1.0;
  gen.w0 = Mat::Identity(n + 2, n + 2);
  for (int i = 0; i <= n; ++i) gen.w0(i, i) = -1.0;
  for (int j = 0; j < n; ++j) {
    Mat N = Mat::Zero(n + 2, n + 2);
    N(j, n) = 1.0;
    N(j, n + 1) = -1.0;
    N(n, j) = -1.0;
    N(n + 1, j) = -1.0;
    gen.N.push_back(N);
    gen.Nbar.push_back(-N.transpose());
  }
  return gen;
}

Mat exp_nilpotent(const Mat& X) {
  Mat P = Mat::Identity(X.rows(), X.cols());
  Mat term = P;
  for (int k = 1; k <= X.rows() + 1; ++k) {
    term = term * X / k;
    if (term.cwiseAbs().maxCoeff() < 1e-14) return P;
    P += term;
  }
  throw std::invalid_argument("exp_nilpotent: series did not terminate; matrix is not nilpotent");
}

Mat m_embed(const Mat& A) {
  int n = static_cast<int>(A.rows());
  Mat M = Mat::Identity(n + 2, n + 2);
  M.topLeftCorner(n, n) = A;
  return M;
}

Mat nbar_of(const Vec& x) {
  int n = static_cast<int>(x.size());
  double q = x.squaredNorm() / 2.0;
  Mat M = Mat::Identity(n + 2, n + 2);
  M.block(0, n, n, 1) = x;
  M.block(0, n + 1, n, 1) = x;
  M.block(n, 0, 1, n) = -x.transpose();
  M.block(n + 1, 0, 1, n) = x.transpose();
  M(n, n) = 1.0 - q;
  M(n, n + 1) = -q;
  M(n + 1, n) = q;
  M(n + 1, n + 1) = 1.0 + q;
  return M;
}

Mat n_of(const Vec& x) {
  int n = static_cast<int>(x.size());
  double q = x.squaredNorm() / 2.0;
  Mat M = Mat::Identity(n + 2, n + 2);
  M.block(0, n, n, 1) = x;
  M.block(0, n + 1, n, 1) = -x;
  M.block(n, 0, 1, n) = -x.transpose();
  M.block(n + 1, 0, 1, n) = -x.transpose();
  M(n, n) = 1.0 - q;
  M(n, n + 1) = q;
  M(n + 1, n) = -q;
  M(n + 1, n + 1) = 1.0 + q;
  return M;
}

Mat a_of(int n, double t) {
  Mat M = Mat::Identity(n + 2, n + 2);
  M(n, n) = std::cosh(t);
  M(n, n + 1) = std::sinh(t);
  M(n + 1, n) = std::sinh(t);
  M(n + 1, n + 1) = std::cosh(t);
  return M;
}

W0NbarDecomposition decompose_w0_nbar(const Vec& x) {
  int n = static_cast<int>(x.size());
  double nx = x.squaredNorm();
  if (nx == 0.0) throw std::invalid_argument("decompose_w0_nbar: x must be nonzero");
  W0NbarDecomposition d;
  d.y = -x / nx;
  d.m_part = 2.0 * x * x.transpose() / nx - Mat::Identity(n, n);
  d.t = std::log(nx);
  Generators gen = build_generators(n);
  Mat lhs = gen.w0 * nbar_of(x);
  Mat rhs = nbar_of(d.y) * m_embed(d.m_part) * a_of(n, d.t) * n_of(d.y);
  d.residual = (lhs - rhs).cwiseAbs().maxCoeff();
  return d;
}

BruhatDecomposition decompose_bruhat(const Vec& y, const Vec& x) {
  int n = static_cast<int>(x.size());
  double nx = x.squaredNorm();
  if (nx == 0.0) throw std::invalid_argument("decompose_bruhat: x must be nonzero");
  Vec w = x + nx * y;
  double nw = w.squaredNorm();
  if (nw == 0.0) throw std::invalid_argument("decompose_bruhat: x + |x|^2 y must be nonzero");
  BruhatDecomposition d;
  d.z = nx * w / nw;
  d.m_part = (2.0 * w * w.transpose() / nw - Mat::Identity(n, n)) *
             (2.0 * x * x.transpose() / nx - Mat::Identity(n, n));
  d.t = std::log(nw / nx);
  Mat G = n_of(-y) * nbar_of(x);
  Mat R = a_of(n, -d.t) * m_embed(d.m_part.transpose()) * nbar_of(-d.z) * G;
  Vec u = R.block(0, n, n, 1);
  // relative to the input scale: the entries of n_y^{-1} nbar_x grow like
  // |x|^2 |y|^2, which double precision can only resolve relatively
  d.residual = (R - n_of(u)).cwiseAbs().maxCoeff() / std::max(1.0, G.cwiseAbs().maxCoeff());
  return d;
}

SectionFn noncompact_action(const Mat& g, SectionFn f, int p, double lambda) {
  int n = static_cast<int>(g.rows()) - 2;
  fibre_dim(n, p);
  double rho = n / 2.0;
  Mat ginv = g.inverse();
  return [=, f = std::move(f)](const Vec& x) -> CVec {
    Mat h = ginv * nbar_of(x);
    Vec v = h.col(n) + h.col(n + 1);
    double s = (v(n) + v(n + 1)) / 2.0;
    if (s <= 1e-12)
      throw std::invalid_argument("noncompact_action: grid point hits the singular set");
    double t = std::log(s);
    Vec z = v.head(n) / (2.0 * s);
    Mat A = (nbar_of(-z) * h).topLeftCorner(n, n);
    CVec val = f(z);
    if (p == 1) val = A.transpose() * val;
    return std::exp(-(lambda + rho) * t) * val;
  };
}

SampledSection sample(const SectionFn& f, const std::vector<Vec>& grid) {
  SampledSection s;
  s.grid = grid;
  for (const auto& x : grid) s.values.push_back(f(x));
  return s;
}

double finite_diff_check_lie_action(int n, const LieGenerator& X, const SectionFn& f,
                                    int p, double lambda, double step,
                                    const std::vector<Vec>& grid) {
  if (step < 1e-6 || step > 1e-3)
    throw std::invalid_argument("finite_diff_check_lie_action: step must lie in [1e-6, 1e-3]");
  int d = fibre_dim(n, p);
  double rho = n / 2.0;

  Mat g;
  switch (X.kind) {
    case GeneratorKind::Nbar: g = nbar_of(step * Vec::Unit(n, X.j - 1)); break;
    case GeneratorKind::N: g = n_of(step * Vec::Unit(n, X.j - 1)); break;
    case GeneratorKind::Dilation: g = a_of(n, step); break;
    case GeneratorKind::MRotation: {
      Mat A = Mat::Identity(n, n);
      A(X.j - 1, X.j - 1) = std::cos(step);
      A(X.l - 1, X.l - 1) = std::cos(step);
      A(X.j - 1, X.l - 1) = std::sin(step);
      A(X.l - 1, X.j - 1) = -std::sin(step);
      g = m_embed(A);
      break;
    }
  }
  SectionFn gf = noncompact_action(g, f, p, lambda);

  double h = step;
  double worst = 0.0, scale = 0.0;
  std::vector<CVec> lhs_all, rhs_all;
  for (const auto& x : grid) {
    CVec fx = f(x);
    std::vector<CVec> D(n);
    for (int k = 0; k < n; ++k)
      D[k] = (f(x + h * Vec::Unit(n, k)) - f(x - h * Vec::Unit(n, k))) / (2.0 * h);

    CVec lhs = (gf(x) - fx) / step;
    CVec rhs = CVec::Zero(d);
    switch (X.kind) {
      case GeneratorKind::Nbar: rhs = -D[X.j - 1]; break;
      case GeneratorKind::Dilation: {
        CVec Ef = CVec::Zero(d);
        for (int k = 0; k < n; ++k) Ef += x(k) * D[k];
        rhs = Ef + (lambda + rho) * fx;
        break;
      }
      case GeneratorKind::MRotation: {
        int a = X.j - 1, b = X.l - 1;
        rhs = -(x(b) * D[a] - x(a) * D[b]);
        if (p == 1) {
          rhs(a) += fx(b);
          rhs(b) -= fx(a);
        }
        break;
      }
      case GeneratorKind::N: {
        int a = X.j - 1;
        CVec Ef = CVec::Zero(d);
        for (int k = 0; k < n; ++k) Ef += x(k) * D[k];
        rhs = x.squaredNorm() * D[a] - 2.0 * x(a) * (Ef + (lambda + rho) * fx);
        if (p == 1) {
          // dsigma(x e_j^t - e_j x^t) f = x f_j - e_j <x, f>
          Cplx xf = 0;
          for (int k = 0; k < n; ++k) xf += x(k) * fx(k);
          rhs += 2.0 * fx(a) * x.cast<Cplx>();
          rhs(a) -= 2.0 * xf;
        }
        break;
      }
    }
    lhs_all.push_back(lhs);
    rhs_all.push_back(rhs);
    scale = std::max({scale, rhs.cwiseAbs().maxCoeff(), fx.cwiseAbs().maxCoeff()});
  }
  scale = std::max(scale, 1e-12);
  for (std::size_t i = 0; i < lhs_all.size(); ++i)
    worst = std::max(worst, (lhs_all[i] - rhs_all[i]).cwiseAbs().maxCoeff() / scale);
  return worst;
}

namespace {

// Rotation taking e_1 to the unit vector u (smooth away from u = -e_1).
Mat rotation_from_e1(const Vec& u) {
  double c = u(0);
  if (c < -1.0 + 1e-8)
    throw std::invalid_argument("rotation_from_e1: direction too close to -e_1");
  Vec v(3);
  v << 0.0, -u(2), u(1);  // e_1 x u
  Mat V = Mat::Zero(3, 3);
  V(0, 1) = -v(2);
  V(0, 2) = v(1);
  V(1, 0) = v(2);
  V(1, 2) = -v(0);
  V(2, 0) = -v(1);
  V(2, 1) = v(0);
  return Mat::Identity(3, 3) + V + V * V / (1.0 + c);
}

// Unit section of the tau component of the standard fibre over R^3 \ {0}.
CVec tau_frame(const Vec& xi, int tau) {
  Vec u = xi.normalized();
  Mat R = rotation_from_e1(u);
  if (tau == 0) return u.cast<Cplx>();
  CVec w(3);
  w << Cplx(0, 0), Cplx(1, 0) / std::sqrt(2.0), Cplx(0, -tau) / std::sqrt(2.0);
  return R.cast<Cplx>() * w;
}

CVec project_tau(const Vec& xi, int tau, const CVec& g) {
  CVec v = tau_frame(xi, tau);
  return v * v.dot(g);
}

}  // namespace

double projection_recursion_check(double lambda, int tau, int sign, int j,
                                  const std::vector<Vec>& grid) {
  if (tau < -1 || tau > 1 || std::abs(sign) != 1 || std::abs(tau + sign) > 1)
    throw std::invalid_argument("projection_recursion_check: need tau, tau+sign in {-1,0,1}");
  if (j < 1 || j > 3) throw std::invalid_argument("projection_recursion_check: j in {1,2,3}");
  const double rho = 1.5;
  const double h = 1e-3;
  auto phi = [](const Vec& xi) {
    return (1.0 + 0.3 * xi(0) - 0.2 * xi(1) + 0.1 * xi(2)) * std::exp(-xi.squaredNorm() / 2.0);
  };
  auto f = [&](const Vec& xi) -> CVec { return phi(xi) * tau_frame(xi, tau); };

  double coeff = 2.0 * lambda + 1.0 + 2.0 * sign * tau;
  int a = j - 1;
  double worst = 0.0, scale = 0.0;
  std::vector<CVec> lhs_all, rhs_all;
  for (const auto& xi : grid) {
    if (xi.norm() < 10 * h)
      throw std::invalid_argument("projection_recursion_check: grid point too close to 0");
    CVec fx = f(xi);
    std::vector<CVec> D(3);
    std::vector<std::vector<CVec>> H(3, std::vector<CVec>(3));
    for (int k = 0; k < 3; ++k) {
      Vec ek = h * Vec::Unit(3, k);
      D[k] = (f(xi + ek) - f(xi - ek)) / (2.0 * h);
      H[k][k] = (f(xi + ek) - 2.0 * fx + f(xi - ek)) / (h * h);
      for (int l = k + 1; l < 3; ++l) {
        Vec el = h * Vec::Unit(3, l);
        H[k][l] = (f(xi + ek + el) - f(xi + ek - el) - f(xi - ek + el) + f(xi - ek - el)) /
                  (4.0 * h * h);
        H[l][k] = H[k][l];
      }
    }
    CVec lap = H[0][0] + H[1][1] + H[2][2];
    CVec Edj = CVec::Zero(3);
    for (int k = 0; k < 3; ++k) Edj += xi(k) * H[k][a];
    Cplx divf = D[0](0) + D[1](1) + D[2](2);
    CVec grad_fj(3);
    for (int k = 0; k < 3; ++k) grad_fj(k) = D[k](a);
    CVec B = xi(a) * lap - 2.0 * (Edj + (rho - lambda) * D[a]) - 2.0 * grad_fj;
    B(a) += 2.0 * divf;

    CVec lhs = project_tau(xi, tau + sign, B);
    CVec rhs = coeff * project_tau(xi, tau + sign, D[a]);
    lhs_all.push_back(lhs);
    rhs_all.push_back(rhs);
    scale = std::max(scale, B.cwiseAbs().maxCoeff());
  }
  scale = std::max(scale, 1e-12);
  for (std::size_t i = 0; i < lhs_all.size(); ++i)
    worst = std::max(worst, (lhs_all[i] - rhs_all[i]).cwiseAbs().maxCoeff() / scale);
  return worst;
}

MultiplierCheck quadrature_multiplier_check(double lambda) {
  if (!(lambda > 0.0 && lambda < 0.5))
    throw std::invalid_argument("quadrature_multiplier_check: need 0 < lambda < 1/2");
  MultiplierCheck out;
  out.lambda = lambda;
  out.expected = (0.5 - lambda) / (0.5 + lambda);

  // Inner integral over u = x - y in spherical coordinates; the radial measure
  // r^{2 lambda - 1} dr is flattened by the substitution s = r^{2 lambda}.
  const double R = 9.0;
  std::vector<double> sn, sw, cn, cw;
  gauss_legendre(40, sn, sw);
  gauss_legendre(16, cn, cw);
  const int nphi = 24;
  double smax = std::pow(R, 2.0 * lambda);

  struct InnerPoint {
    Vec u;
    Vec udir;
    double wt;
  };
  std::vector<InnerPoint> inner;
  for (int ir = 0; ir < 40; ++ir) {
    double s = smax * (sn[ir] + 1.0) / 2.0;
    double ws = smax / 2.0 * sw[ir] / (2.0 * lambda);
    if (s <= 0.0) continue;
    double r = std::pow(s, 1.0 / (2.0 * lambda));
    for (int ic = 0; ic < 16; ++ic) {
      double ct = cn[ic], st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int ip = 0; ip < nphi; ++ip) {
        double phi = 2.0 * kPi * ip / nphi;
        Vec dir(3);
        dir << st * std::cos(phi), st * std::sin(phi), ct;
        inner.push_back({r * dir, dir, ws * cw[ic] * (2.0 * kPi / nphi)});
      }
    }
  }

  std::vector<double> yn, yw;
  gauss_legendre(14, yn, yw);
  const double L = 4.0;
  double T1 = 0.0, T2 = 0.0;
  for (int i = 0; i < 14; ++i)
    for (int jj = 0; jj < 14; ++jj)
      for (int k = 0; k < 14; ++k) {
        Vec y(3);
        y << L * yn[i], L * yn[jj], L * yn[k];
        double wy = L * L * L * yw[i] * yw[jj] * yw[k];
        double gy = std::exp(-y.squaredNorm() / 2.0);
        Vec f1y = -y * gy;
        Vec f2y(3);
        f2y << -y(1) * gy, y(0) * gy, 0.0;
        for (const auto& pt : inner) {
          Vec x = y + pt.u;
          double gx = std::exp(-x.squaredNorm() / 2.0);
          Vec f1x = -x * gx;
          Vec f2x(3);
          f2x << -x(1) * gx, x(0) * gx, 0.0;
          // K(u) v = v - 2 (u.v) u / |u|^2 applied to the y-side values
          Vec k1 = f1y - 2.0 * pt.udir.dot(f1y) * pt.udir;
          Vec k2 = f2y - 2.0 * pt.udir.dot(f2y) * pt.udir;
          T1 += wy * pt.wt * f1x.dot(k1);
          T2 += wy * pt.wt * f2x.dot(k2);
        }
      }

  // Spectral-side normalizations from the analytic Fourier transforms:
  // |F f1|^2 = |xi|^2 e^{-|xi|^2} (radial), |F f2|^2 = (xi_1^2 + xi_2^2) e^{-|xi|^2}.
  double S1 = 4.0 * kPi * 0.5 * std::tgamma(2.5 - lambda);
  double S2 = 2.0 / 3.0 * S1;
  out.measured = (T2 / S2) / (T1 / S1);
  return out;
}

std::vector<VerificationReport> run_decomposition_suite(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> norm_dist(0.1, 10.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_vec = [&](int n) {
    Vec v(n);
    do
      for (int i = 0; i < n; ++i) v(i) = gauss(rng);
    while (v.norm() < 1e-6);
    return Vec(norm_dist(rng) * v.normalized());
  };

  std::vector<VerificationReport> reports;
  for (int n : {3, 4}) {
    double worst_form = 0.0, worst_w0 = 0.0, worst_bruhat = 0.0;
    for (int it = 0; it < count; ++it) {
      Vec x = random_vec(n);
      Vec y;
      double margin;
      do {
        y = random_vec(n);
        margin = (x + x.squaredNorm() * y).norm();
      } while (margin < 1e-3);
      worst_form = std::max({worst_form, form_residual(nbar_of(x)), form_residual(n_of(y))});
      worst_w0 = std::max(worst_w0, decompose_w0_nbar(x).residual);
      worst_bruhat = std::max(worst_bruhat, decompose_bruhat(y, x).residual);
    }
    std::ostringstream base;
    base << "n=" << n << " count=" << count << " seed=" << seed;
    reports.push_back({"quadratic-form-preservation", base.str(), 0.0, worst_form, 1e-10,
                       worst_form <= 1e-10});
    reports.push_back(
        {"w0-nbar-decomposition", base.str(), 0.0, worst_w0, 1e-10, worst_w0 <= 1e-10});
    reports.push_back(
        {"bruhat-decomposition", base.str(), 0.0, worst_bruhat, 1e-10, worst_bruhat <= 1e-10});
  }
  return reports;
}

std::vector<VerificationReport> run_lie_action_suite(unsigned seed) {
  const int n = 3;
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> rad(0.5, 2.0);
  std::vector<Vec> grid;
  for (int i = 0; i < 12; ++i) {
    Vec v(n);
    do
      for (int k = 0; k < n; ++k) v(k) = gauss(rng);
    while (v.norm() < 1e-3 || v.normalized()(0) < -0.8);
    grid.push_back(rad(rng) * v.normalized());
  }

  SectionFn f0 = [](const Vec& x) -> CVec {
    CVec v(1);
    v(0) = (1.0 + 0.3 * x(0) - 0.2 * x(1) + 0.1 * x(2)) * std::exp(-x.squaredNorm() / 2.0);
    return v;
  };
  SectionFn f1 = [](const Vec& x) -> CVec {
    double g = std::exp(-x.squaredNorm() / 2.0);
    CVec v(3);
    v << (1.0 + 0.2 * x(1)) * g, (0.5 - 0.3 * x(0)) * g, x(2) * g;
    return v;
  };

  const double lambda = 0.7;
  const double step = 1e-5;
  std::vector<std::pair<std::string, LieGenerator>> gens = {
      {"Nbar_1", {GeneratorKind::Nbar, 1, 2}}, {"Nbar_2", {GeneratorKind::Nbar, 2, 3}},
      {"Nbar_3", {GeneratorKind::Nbar, 3, 2}}, {"H0", {GeneratorKind::Dilation, 1, 2}},
      {"T_12", {GeneratorKind::MRotation, 1, 2}}, {"T_23", {GeneratorKind::MRotation, 2, 3}},
      {"N_1", {GeneratorKind::N, 1, 2}}, {"N_2", {GeneratorKind::N, 2, 3}},
      {"N_3", {GeneratorKind::N, 3, 2}}};

  std::vector<VerificationReport> reports;
  for (int p : {0, 1}) {
    const SectionFn& f = p == 0 ? f0 : f1;
    for (const auto& [name, X] : gens) {
      double err = finite_diff_check_lie_action(n, X, f, p, lambda, step, grid);
      std::ostringstream ps;
      ps << "n=3 p=" << p << " lambda=" << lambda << " step=" << step << " generator=" << name;
      reports.push_back({"lie-action-finite-difference", ps.str(), 0.0, err, 1e-4, err <= 1e-4});
    }
  }

  std::vector<std::tuple<double, int, int>> proj = {
      {0.3, 0, 1}, {0.3, 0, -1}, {0.3, 1, -1}, {0.3, -1, 1}, {0.5, 1, -1}};
  for (const auto& [lm, tau, sg] : proj) {
    double err = projection_recursion_check(lm, tau, sg, 1, grid);
    std::ostringstream ps;
    ps << "n=3 lambda=" << lm << " tau=" << tau << " sign=" << (sg > 0 ? "+" : "-") << " j=1";
    reports.push_back({"projection-recursion", ps.str(), 0.0, err, 1e-4, err <= 1e-4});
  }
  return reports;
}

std::vector<VerificationReport> run_multiplier_suite() {
  std::vector<VerificationReport> reports;
  for (double lm : {0.125, 0.25, 0.375}) {
    MultiplierCheck c = quadrature_multiplier_check(lm);
    std::ostringstream ps;
    ps << "n=3 p=1 lambda=" << lm;
    reports.push_back({"multiplier-eigenvalue-ratio", ps.str(), c.expected, c.measured, 1e-2,
                       std::abs(c.measured - c.expected) <= 1e-2});
  }
  return reports;
}

}  // namespace rep
