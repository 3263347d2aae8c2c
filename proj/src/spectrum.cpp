#include "alcove_bethe/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "alcove_bethe/parallel.hpp"
#include "alcove_bethe/wavefunction.hpp"

namespace alcove_bethe {

SpectralData assemble_spectrum(const ModelParams& params) {
  params.require_repulsive();
  SpectralData sd;
  sd.params = params;
  sd.basis = make_basis(params);
  sd.weights = build_weights(sd.basis);
  const int n = params.n;
  const int dim = sd.basis.dim();
  for (int k = 1; k <= n - 1; ++k)
    sd.laplacians.push_back(build_laplacian(k, sd.basis));

  sd.solutions.resize(static_cast<std::size_t>(dim));
  sd.eigenmatrix.resize(dim, dim);
  sd.eigenvalues.resize(n - 1, dim);
  sd.residuals.resize(n - 1, dim);

  parallel_for(dim, [&](int mu_idx) {
    const LatticePoint& mu = sd.basis.points[static_cast<std::size_t>(mu_idx)];
    BetheSolution sol = bethe_vector(mu, params);
    Eigen::VectorXcd column = evaluate_psi_column(sol.xi, sd.basis);
    double vnorm = weighted_norm(column, sd.weights);
    for (int k = 1; k <= n - 1; ++k) {
      Complex ek = eigenvalue_symbol(k, sol.xi);
      Eigen::VectorXcd defect =
          sd.laplacians[static_cast<std::size_t>(k - 1)] * column -
          ek * column;
      sd.eigenvalues(k - 1, mu_idx) = ek;
      sd.residuals(k - 1, mu_idx) = weighted_norm(defect, sd.weights) / vnorm;
    }
    sd.eigenmatrix.col(mu_idx) = column;
    sd.solutions[static_cast<std::size_t>(mu_idx)] = std::move(sol);
  });

  sd.max_eigen_residual = sd.residuals.maxCoeff();
  return sd;
}

Eigen::MatrixXcd gram_matrix(const SpectralData& sd) {
  const int dim = sd.basis.dim();
  Eigen::MatrixXcd gram(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      gram(a, b) =
          inner_product(sd.eigenmatrix.col(a), sd.eigenmatrix.col(b),
                        sd.weights);
  return gram;
}

double max_offdiagonal_gram(const Eigen::MatrixXcd& gram) {
  double worst = 0.0;
  for (Eigen::Index a = 0; a < gram.rows(); ++a)
    for (Eigen::Index b = 0; b < gram.cols(); ++b)
      if (a != b) worst = std::max(worst, std::abs(gram(a, b)));
  return worst;
}

double min_diagonal_gram(const Eigen::MatrixXcd& gram) {
  double least = std::numeric_limits<double>::infinity();
  for (Eigen::Index a = 0; a < gram.rows(); ++a)
    least = std::min(least, gram(a, a).real());
  return least;
}

bool separation_check(const SpectralData& sd, double tol) {
  const int dim = sd.basis.dim();
  const int rows = static_cast<int>(sd.eigenvalues.rows());
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      bool separated = false;
      for (int k = 0; k < rows; ++k) {
        if (std::abs(sd.eigenvalues(k, a) - sd.eigenvalues(k, b)) > tol) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

std::vector<double> hamiltonian_bethe_eigenvalues(const SpectralData& sd) {
  std::vector<double> ev;
  ev.reserve(sd.solutions.size());
  for (const BetheSolution& s : sd.solutions)
    ev.push_back(hamiltonian_symbol(s.xi));
  return ev;
}

std::vector<Complex> dense_eigenvalues(const OperatorMatrix& mat) {
  Eigen::ComplexEigenSolver<OperatorMatrix> solver(mat, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_eigenvalues: eigensolver failed");
  std::vector<Complex> ev(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + mat.rows());
  return ev;
}

std::vector<double> dense_selfadjoint_eigenvalues(const OperatorMatrix& mat,
                                                  const WeightVector& weights) {
  // M self-adjoint w.r.t. diag(w) means D^{1/2} M D^{-1/2} is Hermitian.
  const Eigen::Index dim = mat.rows();
  Eigen::VectorXd sqrtw = weights.cwiseSqrt();
  OperatorMatrix sym(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b)
      sym(a, b) = mat(a, b) * sqrtw(a) / sqrtw(b);
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(sym,
                                                       Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error(
        "dense_selfadjoint_eigenvalues: eigensolver failed");
  return std::vector<double>(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + dim);
}

namespace {

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

bool multisets_close(std::vector<Complex> a, std::vector<Complex> b,
                     double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), complex_less);
  std::sort(b.begin(), b.end(), complex_less);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

bool multisets_close(std::vector<double> a, std::vector<double> b,
                     double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

double eigenmatrix_condition(const SpectralData& sd) {
  Eigen::JacobiSVD<OperatorMatrix> svd(sd.eigenmatrix);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0)
    return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

}  // namespace alcove_bethe
