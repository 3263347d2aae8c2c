// Full eigenbasis assembly and spectral verification: per-column
// eigen-residuals, Gram matrix, eigenvalue separation, and dense
// diagonalization oracles.
#ifndef ALCOVE_BETHE_SPECTRUM_HPP
#define ALCOVE_BETHE_SPECTRUM_HPP

#include <vector>

#include <Eigen/Dense>

#include "alcove_bethe/bethe.hpp"
#include "alcove_bethe/laplacian.hpp"

namespace alcove_bethe {

struct SpectralData {
  ModelParams params;
  LatticeBasis basis;
  WeightVector weights;
  std::vector<OperatorMatrix> laplacians;  // L_1 .. L_{n-1}
  std::vector<BetheSolution> solutions;    // one per mu, basis order
  // Column mu holds (Psi_lambda(xi_mu))_lambda.
  OperatorMatrix eigenmatrix;
  // Entry (k-1, mu) holds E_k(xi_mu).
  Eigen::MatrixXcd eigenvalues;
  // Weighted relative residual ||L_k v - E_k v|| / ||v|| per (k-1, mu).
  Eigen::MatrixXd residuals;
  double max_eigen_residual = 0.0;
};

// Solves every mu on the grid (in parallel), evaluates all wave-function
// columns and eigenvalues, and records the eigen-residuals.
SpectralData assemble_spectrum(const ModelParams& params);

// G(mu, mu') = <Psi(xi_mu), Psi(xi_mu')>^{(m)}; Hermitian with positive
// diagonal, numerically diagonal by orthogonality.
Eigen::MatrixXcd gram_matrix(const SpectralData& sd);

double max_offdiagonal_gram(const Eigen::MatrixXcd& gram);
double min_diagonal_gram(const Eigen::MatrixXcd& gram);

// True iff every pair mu != mu' is separated by some eigenvalue:
// |E_k(xi_mu) - E_k(xi_mu')| > tol for at least one k.
bool separation_check(const SpectralData& sd, double tol = 1e-8);

// Hamiltonian eigenvalues through the Bethe route: sum_j (1 - cos xi_mu,j).
std::vector<double> hamiltonian_bethe_eigenvalues(const SpectralData& sd);

// Dense diagonalization oracles (independent of the Bethe route).
std::vector<Complex> dense_eigenvalues(const OperatorMatrix& mat);
// For operators self-adjoint in the weighted inner product; diagonalizes
// the symmetrized D^{1/2} M D^{-1/2}.
std::vector<double> dense_selfadjoint_eigenvalues(const OperatorMatrix& mat,
                                                  const WeightVector& weights);

// Multiset comparison after sorting by (Re, Im).
bool multisets_close(std::vector<Complex> a, std::vector<Complex> b,
                     double tol);
bool multisets_close(std::vector<double> a, std::vector<double> b, double tol);

// Condition number of the eigenmatrix (numerical completeness check).
double eigenmatrix_condition(const SpectralData& sd);

}  // namespace alcove_bethe

#endif
