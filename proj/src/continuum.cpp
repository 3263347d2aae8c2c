#include "alcove_bethe/continuum.hpp"

#include <algorithm>
#include <cstddef>
#include <numbers>
#include <numeric>

#include "alcove_bethe/bethe.hpp"
#include "alcove_bethe/laplacian.hpp"
#include "alcove_bethe/wavefunction.hpp"

namespace alcove_bethe {

namespace {
constexpr double kPi = std::numbers::pi;
}

double theta_inf(double x, double g) {
  if (!(g > 0.0)) throw std::domain_error("theta_inf: coupling g must be > 0");
  return 2.0 * std::atan(x / g);
}

double theta_inf_prime(double x, double g) {
  if (!(g > 0.0))
    throw std::domain_error("theta_inf_prime: coupling g must be > 0");
  return 2.0 * g / (x * x + g * g);
}

ContinuumSolution solve_continuum_bethe(const LatticePoint& mu,
                                        const ContinuumParams& cp) {
  if (mu.rank() != cp.n - 1)
    throw std::invalid_argument("solve_continuum_bethe: mu has wrong rank");
  const double g = cp.g;
  ContinuumSolution sol;
  sol.mu = mu;
  sol.mtuple = mu_to_mtuple(mu, cp.n);
  PhaseSolve solve = solve_phase_system(
      1.0, sol.mtuple, [g](double x) { return theta_inf(x, g); },
      [g](double x) { return theta_inf_prime(x, g); });
  sol.xi = ComVector::project(solve.xi);
  sol.residual = solve.residual;
  sol.iterations = solve.iterations;
  for (int j = 0; j + 1 < cp.n; ++j)
    if (!(sol.xi[j] - sol.xi[j + 1] > 0.0))
      throw std::logic_error("solve_continuum_bethe: unordered solution");
  return sol;
}

std::complex<double> lieb_liniger_psi(const ComVector& x, const ComVector& xi,
                                      double g) {
  const int n = xi.n();
  if (x.n() != n)
    throw std::invalid_argument("lieb_liniger_psi: dimension mismatch");
  for (const Root& a : positive_roots(n))
    if (std::abs(pairing(xi, a)) <= 1e-12)
      throw std::domain_error("degenerate spectral point");

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> sum(0.0, 0.0);
  do {
    std::complex<double> coeff(1.0, 0.0);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        double d = xi[perm[static_cast<std::size_t>(a)]] -
                   xi[perm[static_cast<std::size_t>(b)]];
        coeff *= std::complex<double>(d, -g) / d;
      }
    }
    double angle = 0.0;
    for (int i = 0; i < n; ++i)
      angle += x[i] * xi[perm[static_cast<std::size_t>(i)]];
    sum += coeff * std::polar(1.0, angle);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

ComVector rescaled_lattice_vector(const LatticePoint& mu, int m,
                                  const ContinuumParams& cp) {
  if (!mu.in_grid(m))
    throw std::invalid_argument(
        "rescaled_lattice_vector: mu outside the grid; increase m");
  ModelParams params(cp.n, m, cp.lattice_coupling(m));
  BetheSolution sol = bethe_vector(mu, params);
  std::vector<double> scaled(sol.xi.coords());
  for (double& c : scaled) c *= static_cast<double>(m);
  return ComVector::project(scaled);
}

double staircase_norm_constant(int n, int m) {
  double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 1; i < n; ++i) c /= static_cast<double>(m);
  return c;
}

std::complex<double> staircase_gram(const LatticePoint& mu,
                                    const LatticePoint& mu_prime, int m,
                                    const ContinuumParams& cp) {
  if (!mu.in_grid(m) || !mu_prime.in_grid(m))
    throw std::invalid_argument("staircase_gram: mu outside the grid");
  ModelParams params(cp.n, m, cp.lattice_coupling(m));
  LatticeBasis basis = make_basis(params);
  WeightVector weights = build_weights(basis);
  Eigen::VectorXcd col_a =
      evaluate_psi_column(bethe_vector(mu, params).xi, basis);
  Eigen::VectorXcd col_b =
      evaluate_psi_column(bethe_vector(mu_prime, params).xi, basis);
  return staircase_norm_constant(cp.n, m) *
         inner_product(col_a, col_b, weights);
}

LatticePoint floor_lattice_point(const ComVector& x) {
  const int n = x.n();
  std::vector<int> ks(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) {
    double p = x[j] - x[j + 1];
    if (p < 0.0) {
      if (p < -1e-12)
        throw std::invalid_argument(
            "floor_lattice_point: x outside the dominant chamber");
      p = 0.0;
    }
    ks[static_cast<std::size_t>(j)] = static_cast<int>(std::floor(p));
  }
  return LatticePoint(std::move(ks));
}

std::complex<double> staircase_psi(const ComVector& x, const ComVector& xi,
                                   int m, const ContinuumParams& cp) {
  std::vector<double> scaled(x.coords());
  for (double& c : scaled) c *= static_cast<double>(m);
  LatticePoint cell = floor_lattice_point(ComVector::project(scaled));
  if (!cell.in_grid(m)) return {0.0, 0.0};
  ModelParams params(cp.n, m, cp.lattice_coupling(m));
  std::vector<double> spectral(xi.coords());
  for (double& c : spectral) c /= static_cast<double>(m);
  return std::sqrt(weight_at(cell, params)) *
         evaluate_psi(cell, ComVector::project(spectral), params);
}

void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
  nodes.assign(static_cast<std::size_t>(order), 0.0);
  weights.assign(static_cast<std::size_t>(order), 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_order.
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(order - 1 - i)] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
}

std::complex<double> continuum_gram_n2(const ComVector& xi_a,
                                       const ComVector& xi_b, double g,
                                       int nodes) {
  if (xi_a.n() != 2 || xi_b.n() != 2)
    throw std::invalid_argument("continuum_gram_n2: requires n = 2");
  const int per_panel = 16;
  const int panels = std::max(1, nodes / per_panel);
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(per_panel, gl_nodes, gl_weights);

  // The alcove for n = 2 is x(u) = (u/2, -u/2), u in [0,1]; the line
  // element is du/sqrt(2).
  std::complex<double> integral(0.0, 0.0);
  const double width = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    double left = p * width;
    for (int q = 0; q < per_panel; ++q) {
      double u =
          left + 0.5 * width * (gl_nodes[static_cast<std::size_t>(q)] + 1.0);
      ComVector x(std::vector<double>{0.5 * u, -0.5 * u});
      std::complex<double> f =
          lieb_liniger_psi(x, xi_a, g) * std::conj(lieb_liniger_psi(x, xi_b, g));
      integral += gl_weights[static_cast<std::size_t>(q)] * 0.5 * width * f;
    }
  }
  return integral / std::sqrt(2.0);
}

}  // namespace alcove_bethe
