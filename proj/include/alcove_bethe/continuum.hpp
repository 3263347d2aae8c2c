// Lieb-Liniger continuum side: arctan scattering phase, continuum Bethe
// solver, continuum wave functions, the t = e^{-g/m} rescaling of the
// lattice model, and the staircase embedding comparing the two.
#ifndef ALCOVE_BETHE_CONTINUUM_HPP
#define ALCOVE_BETHE_CONTINUUM_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "alcove_bethe/alcove.hpp"

namespace alcove_bethe {

struct ContinuumParams {
  int n = 2;
  double g = 1.0;

  ContinuumParams() = default;
  ContinuumParams(int n_, double g_) : n(n_), g(g_) {
    if (n < 2) throw std::invalid_argument("ContinuumParams: n must be >= 2");
    if (!(g > 0.0))
      throw std::domain_error("ContinuumParams: coupling g must be > 0");
  }

  // Coupling rescaling tying the lattice at dilation m to this model.
  double lattice_coupling(int m) const {
    return std::exp(-g / static_cast<double>(m));
  }
};

// theta_inf(x) = 2 arctan(x/g); odd, strictly increasing, bounded by pi.
double theta_inf(double x, double g);

// theta_inf'(x) = 2g / (x^2 + g^2).
double theta_inf_prime(double x, double g);

struct ContinuumSolution {
  LatticePoint mu;
  std::vector<int> mtuple;
  ComVector xi;           // projected; strictly ordered xi_1 > ... > xi_n
  double residual = 0.0;
  int iterations = 0;
};

// Damped Newton on  xi_j + sum_{l != j} theta_inf(xi_j - xi_l) = 2 pi m_j
// followed by the center-of-mass projection.  mu needs nonnegative
// coordinates only (any point of the infinite grid).
ContinuumSolution solve_continuum_bethe(const LatticePoint& mu,
                                        const ContinuumParams& cp);

// Psi_inf(x, xi) = sum_sigma prod_{alpha in R+}
//   (<alpha,xi_sigma> - i g)/<alpha,xi_sigma> * e^{i<x,xi_sigma>}.
// Throws std::domain_error("degenerate spectral point") when some root
// pairing of xi vanishes.
std::complex<double> lieb_liniger_psi(const ComVector& x, const ComVector& xi,
                                      double g);

// m * xi^{(m)}_mu computed at coupling t = e^{-g/m}; converges to the
// continuum Bethe vector as m grows.  Requires mu on the grid of size m.
ComVector rescaled_lattice_vector(const LatticePoint& mu, int m,
                                  const ContinuumParams& cp);

// c_{n,m} = 1/(m^{n-1} sqrt(n)), the cell volume of the staircase grid.
double staircase_norm_constant(int n, int m);

// Exact continuum inner product of two embedded lattice eigenfunctions:
// c_{n,m} * sum_lambda Psi_lambda(xi_mu) conj(Psi_lambda(xi_mu'))
// Delta_lambda at coupling t = e^{-g/m}.
std::complex<double> staircase_gram(const LatticePoint& mu,
                                    const LatticePoint& mu_prime, int m,
                                    const ContinuumParams& cp);

// Integral truncation [x] = sum_j floor(<x,alpha_j>) omega_j for x in the
// closure of the dominant chamber.
LatticePoint floor_lattice_point(const ComVector& x);

// Staircase wave function sqrt(Delta_[mx]) Psi_[mx](xi/m) at coupling
// t = e^{-g/m}; zero once [mx] falls off the grid.
std::complex<double> staircase_psi(const ComVector& x, const ComVector& xi,
                                   int m, const ContinuumParams& cp);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Continuum inner product over the alcove for n = 2 by composite
// Gauss-Legendre quadrature with `nodes` total nodes (quadrature oracle).
std::complex<double> continuum_gram_n2(const ComVector& xi_a,
                                       const ComVector& xi_b, double g,
                                       int nodes = 256);

}  // namespace alcove_bethe

#endif
