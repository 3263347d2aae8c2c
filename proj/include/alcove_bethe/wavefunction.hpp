// Bethe wave functions in Hall-Littlewood form: symmetrized n!-term sums
// over permuted spectral parameters, plus the eigenvalue symbols.
#ifndef ALCOVE_BETHE_WAVEFUNCTION_HPP
#define ALCOVE_BETHE_WAVEFUNCTION_HPP

#include <complex>

#include <Eigen/Dense>

#include "alcove_bethe/alcove.hpp"

namespace alcove_bethe {

// Guards the hwf denominators: every positive-root pairing of xi must stay
// at least 1e-9 away from 2 pi Z.  Throws
// std::domain_error("degenerate spectral point") otherwise.  Points inside
// 2 pi Int(A) pass; so do their S_n images and negations.
void require_spectral_point(const ComVector& xi);

// Psi_lambda(xi) = sum over permutations sigma of
//   prod_{alpha in R+} (1 - t e^{-i<alpha,xi_sigma>})/(1 - e^{-i<alpha,xi_sigma>})
//   * e^{i<lambda,xi_sigma>},
// with compensated accumulation over the n! terms.
std::complex<double> evaluate_psi(const LatticePoint& lambda,
                                  const ComVector& xi,
                                  const ModelParams& params);

// The whole column (Psi_lambda(xi))_lambda over the basis in one sweep;
// the permutation coefficients are shared across lambda.
Eigen::VectorXcd evaluate_psi_column(const ComVector& xi,
                                     const LatticeBasis& basis);

// E_k(xi) = sum over the S_n-orbit of omega_k of e^{i<nu,xi>}
//         = elementary symmetric polynomial e_k of (e^{i xi_1},...,e^{i xi_n}).
std::complex<double> eigenvalue_symbol(int k, const ComVector& xi);

// E(xi) = sum_j (1 - cos xi_j) >= 0.
double hamiltonian_symbol(const ComVector& xi);

// Closed product for Psi_0: prod_{alpha in R+}
// (1 - t^{1+<rho,alpha>})/(1 - t^{<rho,alpha>}), the Poincaré polynomial
// of S_n; positive and xi-independent for -1 < t < 1.
double psi0_value(const ModelParams& params);

}  // namespace alcove_bethe

#endif
