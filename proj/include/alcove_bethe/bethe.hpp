// Bethe equations in additive form, solved by damped Newton on the
// strictly convex Yang-Yang functional.  The same Newton core serves the
// lattice system (mass = m, lattice theta) and the continuum system
// (mass = 1, arctan theta).
#ifndef ALCOVE_BETHE_BETHE_HPP
#define ALCOVE_BETHE_BETHE_HPP

#include <functional>
#include <vector>

#include "alcove_bethe/alcove.hpp"

namespace alcove_bethe {

// Continuous odd increasing branch of the scattering phase:
// theta(x) = 2 atan2((1+t) sin(x/2), (1-t) cos(x/2)) shifted by 2 pi k so
// that theta(x + 2 pi) = theta(x) + 2 pi.  Requires |t| < 1.
double theta(double x, double t);

// theta'(x) = (1 - t^2) / (1 - 2 t cos x + t^2) > 0.
double theta_prime(double x, double t);

// Quantum numbers m_j = k_j + ... + k_{n-1} + n - j for j = 1..n;
// strictly decreasing with m_1 - m_n < m + n whenever mu is on the grid.
std::vector<int> mu_to_mtuple(const LatticePoint& mu, int n);

struct PhaseSolve {
  std::vector<double> xi;  // unprojected solution, one entry per particle
  double residual = 0.0;   // max absolute equation mismatch
  int iterations = 0;      // accepted Newton steps
};

// Solves  mass*xi_j + sum_{l != j} th(xi_j - xi_l) = 2 pi m_j  by damped
// Newton from xi_j = 2 pi m_j / (n + mass).  The Jacobian
// (mass + sum_l thp(xi_j - xi_l)) delta_jk - thp(xi_j - xi_k) is positive
// definite, so step halving on the residual norm always makes progress.
// Throws std::runtime_error carrying the last residual on non-convergence.
PhaseSolve solve_phase_system(double mass, const std::vector<int>& mtuple,
                              const std::function<double(double)>& th,
                              const std::function<double(double)>& thp,
                              double tol = 1e-12, int max_iter = 200);

// Lattice additive system (mass = m, theta at coupling t).
PhaseSolve solve_additive_system(const std::vector<int>& mtuple,
                                 const ModelParams& params);

// Worst mismatch of the multiplicative system
// e^{i m xi_j} = prod_{l != j} (1 - t e^{i(xi_j-xi_l)})/(e^{i(xi_j-xi_l)} - t)
// with overall constant 1 (holds for the unprojected solution).
double multiplicative_residual(const std::vector<double>& xi,
                               const ModelParams& params);

struct BetheSolution {
  LatticePoint mu;
  std::vector<int> mtuple;
  ComVector xi;            // projected onto E; lies in 2 pi Int(A)
  double residual = 0.0;   // max additive mismatch of the solved system
  int iterations = 0;
};

// Solves for xi(m) with m = mu_to_mtuple(mu), checks the multiplicative
// system to 1e-10 on the unprojected solution, then projects onto the
// center-of-mass plane.
BetheSolution bethe_vector(const LatticePoint& mu, const ModelParams& params);

}  // namespace alcove_bethe

#endif
