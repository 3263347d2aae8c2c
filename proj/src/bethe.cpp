#include "alcove_bethe/bethe.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace alcove_bethe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double theta(double x, double t) {
  if (!(t > -1.0 && t < 1.0))
    throw std::domain_error("theta: coupling outside (-1,1)");
  double k = std::round(x / kTwoPi);
  double w = x - kTwoPi * k;  // w in [-pi, pi]
  double principal =
      2.0 * std::atan2((1.0 + t) * std::sin(0.5 * w),
                       (1.0 - t) * std::cos(0.5 * w));
  return principal + kTwoPi * k;
}

double theta_prime(double x, double t) {
  if (!(t > -1.0 && t < 1.0))
    throw std::domain_error("theta_prime: coupling outside (-1,1)");
  return (1.0 - t * t) / (1.0 - 2.0 * t * std::cos(x) + t * t);
}

std::vector<int> mu_to_mtuple(const LatticePoint& mu, int n) {
  if (mu.rank() != n - 1)
    throw std::invalid_argument("mu_to_mtuple: rank mismatch");
  std::vector<int> m(static_cast<std::size_t>(n));
  int suffix = 0;
  for (int j = n - 1; j >= 0; --j) {
    if (j < n - 1) suffix += mu[j];
    m[static_cast<std::size_t>(j)] = suffix + (n - 1 - j);
  }
  return m;
}

PhaseSolve solve_phase_system(double mass, const std::vector<int>& mtuple,
                              const std::function<double(double)>& th,
                              const std::function<double(double)>& thp,
                              double tol, int max_iter) {
  const int n = static_cast<int>(mtuple.size());
  Eigen::VectorXd xi(n);
  for (int j = 0; j < n; ++j)
    xi(j) = kTwoPi * mtuple[static_cast<std::size_t>(j)] /
            (static_cast<double>(n) + mass);

  auto residual_of = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd f(n);
    for (int j = 0; j < n; ++j) {
      double s = mass * y(j) - kTwoPi * mtuple[static_cast<std::size_t>(j)];
      for (int l = 0; l < n; ++l)
        if (l != j) s += th(y(j) - y(l));
      f(j) = s;
    }
    return f;
  };

  Eigen::VectorXd f = residual_of(xi);
  int iterations = 0;
  for (; iterations < max_iter; ++iterations) {
    if (f.lpNorm<Eigen::Infinity>() <= tol) break;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      double diag = mass;
      for (int l = 0; l < n; ++l) {
        if (l == j) continue;
        double d = thp(xi(j) - xi(l));
        diag += d;
        jac(j, l) = -d;
      }
      jac(j, j) = diag;
    }
    Eigen::VectorXd step = jac.llt().solve(-f);
    double fnorm = f.norm();
    double s = 1.0;
    bool accepted = false;
    while (s > 1e-12) {
      Eigen::VectorXd trial = xi + s * step;
      Eigen::VectorXd ftrial = residual_of(trial);
      if (ftrial.norm() < fnorm) {
        xi = trial;
        f = ftrial;
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) break;  // at the rounding floor; final check below decides
  }

  double res = f.lpNorm<Eigen::Infinity>();
  if (res > tol)
    throw std::runtime_error(
        "solve_phase_system: no convergence after " +
        std::to_string(iterations) + " iterations (residual " +
        std::to_string(res) + ")");
  PhaseSolve out;
  out.xi.assign(xi.data(), xi.data() + n);
  out.residual = res;
  out.iterations = iterations;
  return out;
}

PhaseSolve solve_additive_system(const std::vector<int>& mtuple,
                                 const ModelParams& params) {
  const double t = params.t;
  return solve_phase_system(
      static_cast<double>(params.m), mtuple,
      [t](double x) { return theta(x, t); },
      [t](double x) { return theta_prime(x, t); });
}

double multiplicative_residual(const std::vector<double>& xi,
                               const ModelParams& params) {
  const int n = params.n;
  const double t = params.t;
  const std::complex<double> i_unit(0.0, 1.0);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    std::complex<double> lhs =
        std::exp(i_unit * (static_cast<double>(params.m) *
                           xi[static_cast<std::size_t>(j)]));
    std::complex<double> rhs(1.0, 0.0);
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      std::complex<double> phase = std::exp(
          i_unit * (xi[static_cast<std::size_t>(j)] -
                    xi[static_cast<std::size_t>(l)]));
      rhs *= (1.0 - t * phase) / (phase - t);
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

BetheSolution bethe_vector(const LatticePoint& mu, const ModelParams& params) {
  if (mu.rank() != params.n - 1)
    throw std::invalid_argument("bethe_vector: mu has wrong rank");
  if (!mu.in_grid(params.m))
    throw std::invalid_argument("bethe_vector: mu outside the grid");
  params.require_repulsive();

  BetheSolution sol;
  sol.mu = mu;
  sol.mtuple = mu_to_mtuple(mu, params.n);
  PhaseSolve solve = solve_additive_system(sol.mtuple, params);

  double mult = multiplicative_residual(solve.xi, params);
  if (mult > 1e-10)
    throw std::runtime_error(
        "bethe_vector: multiplicative Bethe residual " + std::to_string(mult));

  sol.xi = ComVector::project(solve.xi);
  sol.residual = solve.residual;
  sol.iterations = solve.iterations;

  // Theorem domain: xi in 2 pi Int(A).
  double affine = sol.xi[0] - sol.xi[params.n - 1];
  if (!(affine < kTwoPi))
    throw std::logic_error("bethe_vector: solution escaped the alcove");
  for (int j = 0; j + 1 < params.n; ++j)
    if (!(sol.xi[j] - sol.xi[j + 1] > 0.0))
      throw std::logic_error("bethe_vector: solution escaped the alcove");
  return sol;
}

}  // namespace alcove_bethe
