#include "alcove_bethe/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <vector>

#include "alcove_bethe/laplacian.hpp"

namespace alcove_bethe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier compensated accumulator, componentwise over re/im.
class CompensatedSum {
 public:
  void add(std::complex<double> x) {
    add_part(sum_re_, comp_re_, x.real());
    add_part(sum_im_, comp_im_, x.imag());
  }
  std::complex<double> value() const {
    return {sum_re_ + comp_re_, sum_im_ + comp_im_};
  }

 private:
  static void add_part(double& s, double& c, double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double sum_re_ = 0.0, sum_im_ = 0.0;
  double comp_re_ = 0.0, comp_im_ = 0.0;
};

// Coefficient prod_{a<b} (1 - t e^{-i(eta_a - eta_b)})/(1 - e^{-i(eta_a - eta_b)})
// for one permuted spectral vector eta.
std::complex<double> permutation_coefficient(const std::vector<double>& eta,
                                             double t) {
  std::complex<double> c(1.0, 0.0);
  const int n = static_cast<int>(eta.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      double d = eta[static_cast<std::size_t>(a)] -
                 eta[static_cast<std::size_t>(b)];
      std::complex<double> phase = std::polar(1.0, -d);
      c *= (1.0 - t * phase) / (1.0 - phase);
    }
  }
  return c;
}

}  // namespace

void require_spectral_point(const ComVector& xi) {
  const int n = xi.n();
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      double p = xi[j] - xi[k];
      double dist = std::abs(p - kTwoPi * std::round(p / kTwoPi));
      if (dist <= 1e-9)
        throw std::domain_error("degenerate spectral point");
    }
  }
}

std::complex<double> evaluate_psi(const LatticePoint& lambda,
                                  const ComVector& xi,
                                  const ModelParams& params) {
  const int n = params.n;
  if (xi.n() != n || lambda.rank() != n - 1)
    throw std::invalid_argument("evaluate_psi: dimension mismatch");
  require_spectral_point(xi);
  const ComVector lam = weight_to_com(lambda, n);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> eta(static_cast<std::size_t>(n));
  CompensatedSum acc;
  do {
    for (int i = 0; i < n; ++i)
      eta[static_cast<std::size_t>(i)] = xi[perm[static_cast<std::size_t>(i)]];
    std::complex<double> coeff = permutation_coefficient(eta, params.t);
    double angle = 0.0;
    for (int i = 0; i < n; ++i)
      angle += lam[i] * eta[static_cast<std::size_t>(i)];
    acc.add(coeff * std::polar(1.0, angle));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc.value();
}

Eigen::VectorXcd evaluate_psi_column(const ComVector& xi,
                                     const LatticeBasis& basis) {
  const int n = basis.params.n;
  if (xi.n() != n)
    throw std::invalid_argument("evaluate_psi_column: dimension mismatch");
  require_spectral_point(xi);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> eta(static_cast<std::size_t>(n));
  std::vector<double> prefix(static_cast<std::size_t>(n - 1));
  std::vector<CompensatedSum> acc(static_cast<std::size_t>(basis.dim()));
  do {
    for (int i = 0; i < n; ++i)
      eta[static_cast<std::size_t>(i)] = xi[perm[static_cast<std::size_t>(i)]];
    std::complex<double> coeff = permutation_coefficient(eta, basis.params.t);
    // <omega_j, eta> = eta_1 + ... + eta_j  (eta sums to zero).
    double run = 0.0;
    for (int j = 0; j < n - 1; ++j) {
      run += eta[static_cast<std::size_t>(j)];
      prefix[static_cast<std::size_t>(j)] = run;
    }
    for (int idx = 0; idx < basis.dim(); ++idx) {
      const LatticePoint& lambda = basis.points[static_cast<std::size_t>(idx)];
      double angle = 0.0;
      for (int j = 0; j < n - 1; ++j)
        angle += lambda[j] * prefix[static_cast<std::size_t>(j)];
      acc[static_cast<std::size_t>(idx)].add(coeff * std::polar(1.0, angle));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Eigen::VectorXcd col(basis.dim());
  for (int idx = 0; idx < basis.dim(); ++idx)
    col(idx) = acc[static_cast<std::size_t>(idx)].value();
  return col;
}

std::complex<double> eigenvalue_symbol(int k, const ComVector& xi) {
  const int n = xi.n();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("eigenvalue_symbol: k out of range");
  // Sum over k-subsets in lexicographic order.
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  CompensatedSum acc;
  while (true) {
    double angle = 0.0;
    for (int idx : subset) angle += xi[idx];
    acc.add(std::polar(1.0, angle));
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      subset[static_cast<std::size_t>(j)] =
          subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return acc.value();
}

double hamiltonian_symbol(const ComVector& xi) {
  double e = 0.0;
  for (int j = 0; j < xi.n(); ++j) e += 1.0 - std::cos(xi[j]);
  return e;
}

double psi0_value(const ModelParams& params) {
  params.require_repulsive();
  double v = 1.0;
  for (const Root& a : positive_roots(params.n)) {
    int h = rho_pairing(a);
    v *= (1.0 - tpow(params.t, 1 + h)) / (1.0 - tpow(params.t, h));
  }
  return v;
}

}  // namespace alcove_bethe
