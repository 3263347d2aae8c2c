#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "alcove_bethe/bethe.hpp"

using namespace alcove_bethe;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Scalar bisection oracle for n = 2:  m u + 2 theta(u) = 2 pi (m_1 - m_2).
double bisect_n2(double mass, int dm, double t) {
  auto f = [&](double u) { return mass * u + 2.0 * theta(u, t) - kTwoPi * dm; };
  double lo = 1e-12, hi = kTwoPi * dm;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0) == (f(lo) > 0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("theta: normalization, periodic shift, and oddness") {
  for (double t : {-0.8, -0.3, 0.0, 0.5, 0.9}) {
    CHECK(theta(0.0, t) == doctest::Approx(0.0));
    CHECK(theta(std::numbers::pi, t) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-13));
    CHECK(theta(-std::numbers::pi, t) ==
          doctest::Approx(-std::numbers::pi).epsilon(1e-13));
    for (double x : {0.7, -2.9, 4.2, 11.0}) {
      CHECK(theta(x + kTwoPi, t) - theta(x, t) ==
            doctest::Approx(kTwoPi).epsilon(1e-12));
      CHECK(theta(-x, t) == doctest::Approx(-theta(x, t)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(theta(1.0, 1.0), std::domain_error);
}

TEST_CASE("theta is continuous and strictly increasing across seams") {
  for (double t : {-0.6, 0.5, 0.95}) {
    double prev = theta(-9.0, t);
    for (double x = -9.0 + 1e-3; x < 9.0; x += 1e-3) {
      double cur = theta(x, t);
      CHECK(cur > prev);
      CHECK(cur - prev < 1e-3 * ((1.0 + std::abs(t)) / (1.0 - std::abs(t))) *
                             (1.0 + std::abs(t)) / (1.0 - std::abs(t)) * 1.01);
      prev = cur;
    }
    // Right at an odd multiple of pi (the atan2 seam).
    double jump = theta(std::numbers::pi + 1e-9, t) -
                  theta(std::numbers::pi - 1e-9, t);
    CHECK(std::abs(jump) < 1e-6);
  }
}

TEST_CASE("theta reduces to the identity at t = 0") {
  for (double x : {-7.1, -0.2, 0.0, 1.3, 9.9})
    CHECK(theta(x, 0.0) == doctest::Approx(x).epsilon(1e-13));
}

TEST_CASE("theta_prime: closed form, bounds, finite differences") {
  CHECK(theta_prime(0.4, 0.0) == doctest::Approx(1.0));
  for (double t : {0.0, 0.3, 0.7}) {
    double kappa_minus = (1.0 - t * t) / ((1.0 - std::abs(t)) * (1.0 - std::abs(t)));
    CHECK(theta_prime(0.0, t) == doctest::Approx(kappa_minus).epsilon(1e-13));
  }
  for (double t : {-0.5, 0.2, 0.85}) {
    double kp = (1.0 - t * t) / ((1.0 + std::abs(t)) * (1.0 + std::abs(t)));
    double km = (1.0 - t * t) / ((1.0 - std::abs(t)) * (1.0 - std::abs(t)));
    for (double x = -7.0; x <= 7.0; x += 0.37) {
      double d = theta_prime(x, t);
      CHECK(d >= kp - 1e-12);
      CHECK(d <= km + 1e-12);
      double h = 1e-5;
      double fd = (theta(x + h, t) - theta(x - h, t)) / (2.0 * h);
      CHECK(std::abs(d - fd) <= 1e-6);
    }
  }
}

TEST_CASE("quantum numbers from grid points") {
  CHECK(mu_to_mtuple(LatticePoint({0, 0}), 3) == std::vector<int>{2, 1, 0});
  CHECK(mu_to_mtuple(LatticePoint({4}), 2) == std::vector<int>{5, 0});
  CHECK(mu_to_mtuple(LatticePoint({1, 1}), 3) == std::vector<int>{4, 2, 0});

  for (int n = 2; n <= 5; ++n) {
    int m = 4;
    for (const LatticePoint& mu : enumerate_lattice(ModelParams(n, m, 0.0))) {
      auto mt = mu_to_mtuple(mu, n);
      for (int j = 0; j + 1 < n; ++j) CHECK(mt[j] > mt[j + 1]);
      CHECK(mt.front() - mt.back() < m + n);
    }
  }
}

TEST_CASE("t=0 additive system is solved in one Newton step, matching the "
          "linear oracle") {
  for (int n : {2, 3, 4}) {
    int m = 3;
    ModelParams params(n, m, 0.0);
    for (const LatticePoint& mu : enumerate_lattice(params)) {
      auto mt = mu_to_mtuple(mu, n);
      PhaseSolve sol = solve_additive_system(mt, params);
      CHECK(sol.iterations <= 2);
      CHECK(sol.residual <= 1e-12);

      // Oracle: the t=0 system is (m+n) xi_j - sum_l xi_l = 2 pi m_j.
      Eigen::MatrixXd a = Eigen::MatrixXd::Constant(n, n, -1.0) +
                          static_cast<double>(m + n) *
                              Eigen::MatrixXd::Identity(n, n);
      Eigen::VectorXd rhs(n);
      for (int j = 0; j < n; ++j) rhs(j) = kTwoPi * mt[j];
      Eigen::VectorXd expected = a.fullPivLu().solve(rhs);
      for (int j = 0; j < n; ++j)
        CHECK(sol.xi[j] == doctest::Approx(expected(j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("summing the equations fixes the center of mass") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> tdist(-0.9, 0.9);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 5);
    ModelParams params(n, m, tdist(rng));
    auto points = enumerate_lattice(params);
    const LatticePoint& mu = points[rng() % points.size()];
    auto mt = mu_to_mtuple(mu, n);
    PhaseSolve sol = solve_additive_system(mt, params);
    double sum_xi = 0.0;
    int sum_m = 0;
    for (int j = 0; j < n; ++j) {
      sum_xi += sol.xi[j];
      sum_m += mt[j];
    }
    CHECK(m * sum_xi == doctest::Approx(kTwoPi * sum_m).epsilon(1e-10));
  }
}

TEST_CASE("component ordering follows the quantum numbers") {
  ModelParams params(3, 2, 0.6);
  PhaseSolve sol = solve_additive_system({2, 1, 0}, params);
  CHECK(sol.xi[0] > sol.xi[1]);
  CHECK(sol.xi[1] > sol.xi[2]);
}

TEST_CASE("equal quantum numbers collapse the components") {
  ModelParams params(3, 4, 0.5);
  PhaseSolve sol = solve_additive_system({3, 3, 0}, params);
  CHECK(sol.xi[0] == doctest::Approx(sol.xi[1]).epsilon(1e-12));
  PhaseSolve sol2 = solve_additive_system({5, 5, 5}, ModelParams(3, 4, -0.3));
  CHECK(sol2.xi[0] == doctest::Approx(sol2.xi[1]).epsilon(1e-12));
  CHECK(sol2.xi[1] == doctest::Approx(sol2.xi[2]).epsilon(1e-12));
}

TEST_CASE("distance bounds on solved components") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> tdist(-0.9, 0.9);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 5);
    double t = tdist(rng);
    ModelParams params(n, m, t);
    auto points = enumerate_lattice(params);
    const LatticePoint& mu = points[rng() % points.size()];
    auto mt = mu_to_mtuple(mu, n);
    PhaseSolve sol = solve_additive_system(mt, params);

    double kp = (1.0 - t * t) / ((1.0 + std::abs(t)) * (1.0 + std::abs(t)));
    double km = (1.0 - t * t) / ((1.0 - std::abs(t)) * (1.0 - std::abs(t)));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (mt[j] < mt[k]) continue;
        double gap = sol.xi[j] - sol.xi[k];
        double dm = kTwoPi * (mt[j] - mt[k]);
        CHECK(gap >= dm / (m + n * km) - 1e-9);
        CHECK(gap <= dm / (m + n * kp) + 1e-9);
        if (mt[j] - mt[k] < n + m) CHECK(gap < kTwoPi);
      }
    }
  }
}

TEST_CASE("Newton Jacobian stays positive definite with eigenvalues >= m") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> xdist(-8.0, 8.0);
  for (double t : {-0.7, 0.0, 0.4, 0.9}) {
    int n = 4, m = 3;
    for (int rep = 0; rep < 20; ++rep) {
      Eigen::VectorXd xi(n);
      for (int j = 0; j < n; ++j) xi(j) = xdist(rng);
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
      for (int j = 0; j < n; ++j) {
        double diag = m;
        for (int l = 0; l < n; ++l) {
          if (l == j) continue;
          double d = theta_prime(xi(j) - xi(l), t);
          diag += d;
          jac(j, l) = -d;
        }
        jac(j, j) = diag;
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac,
                                                        Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() >= m - 1e-10);
    }
  }
}

TEST_CASE("bethe_vector: t=0 closed form") {
  for (int n : {2, 3, 4}) {
    for (int m : {1, 3}) {
      ModelParams params(n, m, 0.0);
      for (const LatticePoint& mu : enumerate_lattice(params)) {
        BetheSolution sol = bethe_vector(mu, params);
        ComVector target = weight_to_com(mu, n);
        ComVector rho = weight_to_com(rho_point(n), n);
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
          double expected = kTwoPi * (rho[j] + target[j]) / (n + m);
          worst = std::max(worst, std::abs(sol.xi[j] - expected));
        }
        CHECK(worst <= 1e-10);
      }
    }
  }
}

TEST_CASE("bethe_vector: frozen golden value for n=2, m=3, t=0.5, mu=0") {
  ModelParams params(2, 3, 0.5);
  BetheSolution sol = bethe_vector(LatticePoint({0}), params);
  // Independent scalar bisection on  3u + 2 theta(u) = 2 pi.
  double u = bisect_n2(3.0, 1, 0.5);
  CHECK(sol.xi[0] == doctest::Approx(0.5 * u).epsilon(1e-11));
  // Golden value recorded from the oracle run.
  CHECK(sol.xi[0] == doctest::Approx(0.42403103949074050).epsilon(1e-11));
  CHECK(sol.xi[1] == doctest::Approx(-0.42403103949074050).epsilon(1e-11));
  CHECK(sol.residual <= 1e-12);
}

TEST_CASE("bethe_vector: domain, injectivity, multiplicative residual") {
  ModelParams params(3, 3, 0.5);
  auto points = enumerate_lattice(params);
  std::vector<BetheSolution> sols;
  for (const LatticePoint& mu : points) sols.push_back(bethe_vector(mu, params));

  for (const BetheSolution& sol : sols) {
    CHECK(sol.xi[0] - sol.xi[2] < kTwoPi);
    for (int j = 0; j + 1 < 3; ++j) CHECK(sol.xi[j] > sol.xi[j + 1]);
    auto mt = sol.mtuple;
    PhaseSolve raw = solve_additive_system(mt, params);
    CHECK(multiplicative_residual(raw.xi, params) <= 1e-10);
  }
  for (std::size_t a = 0; a < sols.size(); ++a) {
    for (std::size_t b = a + 1; b < sols.size(); ++b) {
      double dist = 0.0;
      for (int j = 0; j < 3; ++j)
        dist = std::max(dist, std::abs(sols[a].xi[j] - sols[b].xi[j]));
      CHECK(dist > 1e-8);
    }
  }
}

TEST_CASE("bethe_vector is smooth across t = 0") {
  const double h = 1e-4;
  LatticePoint mu({1, 0});
  auto at = [&](double t) { return bethe_vector(mu, ModelParams(3, 2, t)); };
  BetheSolution left = at(-h), mid = at(0.0), right = at(h);
  for (int j = 0; j < 3; ++j) {
    double back = (mid.xi[j] - left.xi[j]) / h;
    double fwd = (right.xi[j] - mid.xi[j]) / h;
    CHECK(std::abs(fwd - back) <= 1e-4);
  }
}

TEST_CASE("bethe_vector rejects bad inputs") {
  CHECK_THROWS_AS(bethe_vector(LatticePoint({5}), ModelParams(2, 3, 0.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bethe_vector(LatticePoint({1}), ModelParams(2, 3, 1.2)),
                  std::domain_error);
}
