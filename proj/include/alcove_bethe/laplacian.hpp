// Discrete Laplacians on the alcove grid: boundary coefficients, weight
// function, weighted inner product, self-adjoint combinations, and the
// lattice Hamiltonian.  Two independent construction paths are kept: the
// coefficient formula and the raw boundary convention (fold + t^length).
#ifndef ALCOVE_BETHE_LAPLACIAN_HPP
#define ALCOVE_BETHE_LAPLACIAN_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "alcove_bethe/alcove.hpp"

namespace alcove_bethe {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using WeightVector = Eigen::VectorXd;

// t^e by repeated multiplication, exact integer exponent e >= 0.
double tpow(double t, int e);

// Poincaré-series hopping coefficient V^{(m)}_{lambda,nu} for a grid point
// lambda and an orbit vector nu with lambda + nu still on the grid.
// Throws std::invalid_argument when lambda + nu leaves the grid.
double boundary_coefficient(const LatticePoint& lambda, const ComVector& nu,
                            const ModelParams& params);

// Single weight Delta^{(m)}_lambda; requires -1 < t < 1.
double weight_at(const LatticePoint& lambda, const ModelParams& params);

// Weights Delta^{(m)}_lambda in basis order; requires -1 < t < 1.
WeightVector build_weights(const LatticeBasis& basis);

// Matrix of L_k^{(m)}: M(lambda, lambda+nu) = V^{(m)}_{lambda,nu} over the
// S_n-orbit of omega_k, zero elsewhere; (L_k psi)_lambda = sum_c M(l,c) psi_c.
OperatorMatrix build_laplacian(int k, const LatticeBasis& basis);

// <psi, phi>^{(m)} = sum_lambda psi_lambda conj(phi_lambda) Delta_lambda.
Complex inner_product(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& phi,
                      const WeightVector& weights);

double weighted_norm(const Eigen::VectorXcd& psi, const WeightVector& weights);

// L_{R,k} = (L_k + L_{n-k})/2 for k = 1..floor(n/2) and
// L_{I,k} = (L_k - L_{n-k})/(2i) for k = 1..floor((n-1)/2).
struct SelfAdjointCombinations {
  std::vector<OperatorMatrix> real_part;  // L_{R,1}, L_{R,2}, ...
  std::vector<OperatorMatrix> imag_part;  // L_{I,1}, ...
};

SelfAdjointCombinations self_adjoint_combinations(const LatticeBasis& basis);

// H^{(m)} = n Id - L_{R,1}^{(m)}.
OperatorMatrix build_hamiltonian(const LatticeBasis& basis);

// Same operator assembled from the standard-coordinate hopping coefficients
// V^{+-}_{j,lambda} with nu_j = e_j - e/n; agrees with build_hamiltonian
// entrywise.
OperatorMatrix build_hamiltonian_hopping(const LatticeBasis& basis);

// Applies L_k through the raw boundary convention: each out-of-grid
// neighbor is folded into the grid and its value picks up t^length.
// Independent of the coefficient formula above.
Eigen::VectorXcd apply_laplacian_definition(int k, const LatticeBasis& basis,
                                            const Eigen::VectorXcd& psi);

}  // namespace alcove_bethe

#endif
