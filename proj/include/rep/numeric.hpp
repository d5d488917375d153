#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace rep {

// Double-precision matrix model of the identity component of the indefinite
// orthogonal group preserving x_1^2+...+x_{n+1}^2 - x_{n+2}^2, together with
// the induced action on sections over R^n in the noncompact picture.

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

struct Generators {
  int n = 0;
  Mat H0;                 // E_{n+1,n+2} + E_{n+2,n+1}
  Mat w0;                 // diag(-1,...,-1,1)
  std::vector<Mat> N;     // N[j-1], j = 1..n
  std::vector<Mat> Nbar;  // theta(N_j) = -N_j^t
};

Mat quadratic_form(int n);           // diag(1,...,1,-1) of size n+2
double form_residual(const Mat& g);  // max |g^t J g - J|

Generators build_generators(int n);  // n >= 2

// exp(X) for nilpotent X by the finite series; throws if the series has not
// terminated (term norm below 1e-14) within dim+1 terms.
Mat exp_nilpotent(const Mat& X);

Mat m_embed(const Mat& A);  // diag(A, 1, 1)
Mat nbar_of(const Vec& x);  // exp(sum x_j Nbar_j), closed form
Mat n_of(const Vec& x);     // exp(sum x_j N_j), closed form
Mat a_of(int n, double t);  // exp(t H0)

// w0 nbar_x = nbar_y m e^{t H0} n_y with y = -x/|x|^2, m = 2xx^t/|x|^2 - I,
// t = 2 log|x|. residual = max-norm defect of the product identity.
struct W0NbarDecomposition {
  Vec y;
  Mat m_part;
  double t = 0;
  double residual = 0;
};
W0NbarDecomposition decompose_w0_nbar(const Vec& x);  // x != 0

// n_y^{-1} nbar_x = nbar_z m e^{t H0} n_1 for some n_1 in N, where with
// w = x + |x|^2 y: z = |x|^2 w/|w|^2, m = (2ww^t/|w|^2 - I)(2xx^t/|x|^2 - I),
// t = 2 log(|w|/|x|). residual = distance of the computed n_1 candidate from
// the closed form n_u read off its first N-column, relative to the largest
// entry of n_y^{-1} nbar_x (those entries grow like |x|^2 |y|^2).
struct BruhatDecomposition {
  Vec z;
  Mat m_part;
  double t = 0;
  double residual = 0;
};
BruhatDecomposition decompose_bruhat(const Vec& y, const Vec& x);

// A smooth section of the bundle over R^n with fibre V_sigma; p = 0 gives the
// trivial one-dimensional fibre, p = 1 the standard n-dimensional one.
using SectionFn = std::function<CVec(const Vec&)>;

struct SampledSection {
  std::vector<Vec> grid;
  std::vector<CVec> values;
};

// (pi_{sigma,lambda}(g) f)(x) for g in the identity component, evaluated by
// factoring g^{-1} nbar_x = nbar_z m e^{t H0} n pointwise; throws at grid
// points where the factorization degenerates.
SectionFn noncompact_action(const Mat& g, SectionFn f, int p, double lambda);
SampledSection sample(const SectionFn& f, const std::vector<Vec>& grid);

enum class GeneratorKind { Nbar, MRotation, Dilation, N };

struct LieGenerator {
  GeneratorKind kind = GeneratorKind::Nbar;
  int j = 1;  // direction for Nbar/N, first rotation axis for MRotation
  int l = 2;  // second rotation axis for MRotation
};

// Compares (pi(exp(step X)) f - f)/step against the derived-representation
// formula (spatial derivatives by central differences) and returns the max
// defect over the grid, relative to the largest formula value on the grid.
double finite_diff_check_lie_action(int n, const LieGenerator& X, const SectionFn& f,
                                    int p, double lambda, double step,
                                    const std::vector<Vec>& grid);

// For n = 3 and the standard fibre, checks that the projection onto the
// tau + sign component of the degree-raising part of the N_j action equals
// -i(2 lambda + 1 + 2 sign tau) times the projection of d_j f, for f a section
// of the tau component (tau in {-1,0,1}, tau + sign in {-1,0,1}). Returns the
// max defect relative to the largest raw N_j-action value on the grid.
double projection_recursion_check(double lambda, int tau, int sign, int j,
                                  const std::vector<Vec>& grid);

// For n = 3 and the standard fibre: quadrature evaluation of the ratio of the
// two spectral eigenvalues of the convolution kernel |u|^{2 lambda - 3}
// (I - 2uu^t/|u|^2), measured on a gradient-type and a rotational Gaussian
// test function; expected (1/2 - lambda)/(1/2 + lambda) for 0 < lambda < 1/2.
struct MultiplierCheck {
  double lambda = 0;
  double expected = 0;
  double measured = 0;
};
MultiplierCheck quadrature_multiplier_check(double lambda);

struct VerificationReport {
  std::string check;
  std::string params;
  double expected = 0;
  double measured = 0;
  double tolerance = 0;
  bool pass = false;
};

std::vector<VerificationReport> run_decomposition_suite(unsigned seed, int count = 1000);
std::vector<VerificationReport> run_lie_action_suite(unsigned seed);
std::vector<VerificationReport> run_multiplier_suite();

}  // namespace rep
