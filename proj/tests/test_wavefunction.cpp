#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "alcove_bethe/laplacian.hpp"
#include "alcove_bethe/wavefunction.hpp"

using namespace alcove_bethe;

namespace {

constexpr double kPi = std::numbers::pi;

ComVector admissible_xi(int n, std::mt19937_64& rng) {
  // Random point strictly inside 2 pi Int(A): positive simple pairings,
  // affine pairing below 2 pi.
  std::uniform_real_distribution<double> u(0.1, 0.9);
  std::vector<double> gaps(static_cast<std::size_t>(n - 1));
  double total = 0.0;
  for (double& g : gaps) {
    g = u(rng);
    total += g;
  }
  double scale = 2.0 * kPi * 0.95 / std::max(total, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 2; i >= 0; --i)
    x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i + 1)] +
                                     gaps[static_cast<std::size_t>(i)] * scale;
  return ComVector::project(x);
}

ComVector permuted(const ComVector& xi, const std::vector<int>& perm) {
  std::vector<double> out(static_cast<std::size_t>(xi.n()));
  for (int i = 0; i < xi.n(); ++i)
    out[static_cast<std::size_t>(i)] = xi[perm[static_cast<std::size_t>(i)]];
  return ComVector::project(out);
}

ComVector negated(const ComVector& xi) {
  std::vector<double> out(xi.coords());
  for (double& c : out) c = -c;
  return ComVector::project(out);
}

}  // namespace

TEST_CASE("psi at the origin matches the Poincaré product") {
  std::mt19937_64 rng(53);
  for (int n : {2, 3, 4, 5}) {
    for (double t : {-0.6, 0.0, 0.45, 0.9}) {
      ModelParams params(n, 3, t);
      double product = psi0_value(params);
      CHECK(product > 0.0);
      LatticePoint origin(std::vector<int>(n - 1, 0));
      for (int rep = 0; rep < 3; ++rep) {
        Complex value = evaluate_psi(origin, admissible_xi(n, rng), params);
        CHECK(std::abs(value - Complex(product, 0.0)) <= 1e-12 * product);
      }
    }
  }
  CHECK(psi0_value(ModelParams(2, 1, 0.3)) == doctest::Approx(1.3));
  double t = 0.3;
  CHECK(psi0_value(ModelParams(3, 1, t)) ==
        doctest::Approx((1.0 + t) * (1.0 + t + t * t)).epsilon(1e-14));
}

TEST_CASE("t=0, n=2 wave function is the Weyl character") {
  ModelParams params(2, 6, 0.0);
  std::mt19937_64 rng(59);
  for (int k = 0; k <= 6; ++k) {
    for (int rep = 0; rep < 4; ++rep) {
      ComVector xi = admissible_xi(2, rng);
      double u = pairing(xi, Root{0, 1});
      Complex psi = evaluate_psi(LatticePoint({k}), xi, params);
      double expected = std::sin(0.5 * (k + 1) * u) / std::sin(0.5 * u);
      CHECK(std::abs(psi - Complex(expected, 0.0)) <= 1e-11);
    }
  }
}

TEST_CASE("psi is invariant under permutations of the spectral point") {
  ModelParams params(3, 4, 0.55);
  std::mt19937_64 rng(61);
  ComVector xi = admissible_xi(3, rng);
  LatticePoint lambda({2, 1});
  Complex base = evaluate_psi(lambda, xi, params);
  for (const std::vector<int>& perm :
       {std::vector<int>{1, 0, 2}, {2, 0, 1}, {2, 1, 0}}) {
    Complex other = evaluate_psi(lambda, permuted(xi, perm), params);
    CHECK(std::abs(base - other) <= 1e-11 * std::max(1.0, std::abs(base)));
  }
}

TEST_CASE("conjugation: psi at -xi is the complex conjugate") {
  ModelParams params(3, 3, -0.4);
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 5; ++rep) {
    ComVector xi = admissible_xi(3, rng);
    LatticePoint lambda({1, 2});
    Complex a = evaluate_psi(lambda, xi, params);
    Complex b = evaluate_psi(lambda, negated(xi), params);
    CHECK(std::abs(b - std::conj(a)) <= 1e-11 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("interior intertwining with the eigenvalue symbol") {
  // Strictly interior lambda: every positive-root pairing inside (0, m),
  // so all orbit neighbors are on-grid and carry unit coefficients.
  struct Case {
    ModelParams params;
    LatticePoint lambda;
  };
  std::vector<Case> cases = {{ModelParams(2, 3, 0.5), LatticePoint({1})},
                             {ModelParams(3, 4, -0.65), LatticePoint({1, 1})},
                             {ModelParams(4, 5, 0.8), LatticePoint({1, 1, 1})}};
  std::mt19937_64 rng(71);
  for (const Case& c : cases) {
    const int n = c.params.n;
    for (int k = 1; k <= n - 1; ++k) {
      for (int rep = 0; rep < 4; ++rep) {
        ComVector xi = admissible_xi(n, rng);
        Complex lhs(0.0, 0.0);
        for (const ComVector& nu : orbit_of_weight(k, n)) {
          auto delta = omega_displacement(nu);
          std::vector<int> target = c.lambda.coords();
          for (int j = 0; j < n - 1; ++j)
            target[static_cast<std::size_t>(j)] +=
                delta[static_cast<std::size_t>(j)];
          lhs += evaluate_psi(LatticePoint(target), xi, c.params);
        }
        Complex rhs = eigenvalue_symbol(k, xi) *
                      evaluate_psi(c.lambda, xi, c.params);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("eigenvalue symbols") {
  std::mt19937_64 rng(73);
  ComVector xi2 = admissible_xi(2, rng);
  double u = pairing(xi2, Root{0, 1});
  CHECK(std::abs(eigenvalue_symbol(1, xi2) -
                 Complex(2.0 * std::cos(0.5 * u), 0.0)) <= 1e-13);

  for (int n : {2, 3, 4, 5}) {
    ComVector zero(std::vector<double>(n, 0.0));
    for (int k = 1; k <= n - 1; ++k)
      CHECK(std::abs(eigenvalue_symbol(k, zero) -
                     Complex(static_cast<double>(binomial(n, k)), 0.0)) <=
            1e-13);
  }

  for (int n : {3, 4, 5}) {
    ComVector xi = admissible_xi(n, rng);
    for (int k = 1; k <= n - 1; ++k)
      CHECK(std::abs(eigenvalue_symbol(k, xi) -
                     std::conj(eigenvalue_symbol(n - k, xi))) <= 1e-13);
  }
  CHECK_THROWS_AS(eigenvalue_symbol(3, admissible_xi(3, rng)),
                  std::invalid_argument);
}

TEST_CASE("hamiltonian symbol") {
  ComVector zero(std::vector<double>{0.0, 0.0});
  CHECK(hamiltonian_symbol(zero) == doctest::Approx(0.0));
  ComVector pipi(std::vector<double>{kPi, -kPi});
  CHECK(hamiltonian_symbol(pipi) == doctest::Approx(4.0));

  std::mt19937_64 rng(79);
  for (int n : {2, 3, 4}) {
    ComVector xi = admissible_xi(n, rng);
    double via_symbol =
        static_cast<double>(n) - eigenvalue_symbol(1, xi).real();
    CHECK(hamiltonian_symbol(xi) ==
          doctest::Approx(via_symbol).epsilon(1e-12));
  }
}

TEST_CASE("degenerate spectral points are rejected") {
  ModelParams params(3, 2, 0.4);
  // Vanishing root pairing.
  ComVector equal(std::vector<double>{0.5, 0.5, -1.0});
  CHECK_THROWS_WITH_AS(evaluate_psi(LatticePoint({0, 0}), equal, params),
                       "degenerate spectral point", std::domain_error);
  // Pairing at a nonzero multiple of 2 pi is just as singular.
  ComVector wrapped(
      std::vector<double>{kPi + 0.25, 0.25 - kPi, -0.5});
  CHECK_THROWS_WITH_AS(evaluate_psi(LatticePoint({0, 0}), wrapped, params),
                       "degenerate spectral point", std::domain_error);
}

TEST_CASE("evaluation stays finite close to a wall") {
  ModelParams params(2, 3, 0.9);
  double u = 1e-6;
  ComVector xi(std::vector<double>{0.5 * u, -0.5 * u});
  Complex psi = evaluate_psi(LatticePoint({2}), xi, params);
  CHECK(std::isfinite(psi.real()));
  CHECK(std::isfinite(psi.imag()));
}
