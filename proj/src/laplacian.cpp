#include "alcove_bethe/laplacian.hpp"

#include <cmath>
#include <cstddef>

namespace alcove_bethe {

double tpow(double t, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}

double boundary_coefficient(const LatticePoint& lambda, const ComVector& nu,
                            const ModelParams& params) {
  const int n = params.n;
  const int m = params.m;
  std::vector<int> delta = omega_displacement(nu);
  std::vector<int> target = lambda.coords();
  int sum = 0;
  for (int j = 0; j < n - 1; ++j) {
    target[static_cast<std::size_t>(j)] += delta[static_cast<std::size_t>(j)];
    if (target[static_cast<std::size_t>(j)] < 0)
      throw std::invalid_argument("boundary_coefficient: neighbor off grid");
    sum += target[static_cast<std::size_t>(j)];
  }
  if (sum > m)
    throw std::invalid_argument("boundary_coefficient: neighbor off grid");

  const double t = params.t;
  double v = 1.0;
  for (const Root& a : positive_roots(n)) {
    int pl = lambda.pairing_with(a);
    int pn = coord_pairing(delta, a);
    if (pl == 0 && pn == 1) {
      int h = rho_pairing(a);
      v *= (1.0 - tpow(t, 1 + h)) / (1.0 - tpow(t, h));
    } else if (pl == m && pn == -1) {
      int h = n - rho_pairing(a);
      v *= (1.0 - tpow(t, 1 + h)) / (1.0 - tpow(t, h));
    }
  }
  return v;
}

double weight_at(const LatticePoint& lambda, const ModelParams& params) {
  params.require_repulsive();
  const int n = params.n;
  const int m = params.m;
  const double t = params.t;
  double d = 1.0;
  for (const Root& a : positive_roots(n)) {
    int pl = lambda.pairing_with(a);
    if (pl == 0) {
      int h = rho_pairing(a);
      d *= (1.0 - tpow(t, h)) / (1.0 - tpow(t, 1 + h));
    } else if (pl == m) {
      int h = n - rho_pairing(a);
      d *= (1.0 - tpow(t, h)) / (1.0 - tpow(t, 1 + h));
    }
  }
  return d;
}

WeightVector build_weights(const LatticeBasis& basis) {
  basis.params.require_repulsive();
  WeightVector w(basis.dim());
  for (int i = 0; i < basis.dim(); ++i)
    w(i) = weight_at(basis.points[static_cast<std::size_t>(i)], basis.params);
  return w;
}

OperatorMatrix build_laplacian(int k, const LatticeBasis& basis) {
  basis.params.require_repulsive();
  const int n = basis.params.n;
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("build_laplacian: k out of range");
  const auto orbit = orbit_of_weight(k, n);
  OperatorMatrix mat = OperatorMatrix::Zero(basis.dim(), basis.dim());
  for (int row = 0; row < basis.dim(); ++row) {
    const LatticePoint& lambda = basis.points[static_cast<std::size_t>(row)];
    for (const ComVector& nu : orbit) {
      std::vector<int> delta = omega_displacement(nu);
      std::vector<int> target = lambda.coords();
      for (int j = 0; j < n - 1; ++j)
        target[static_cast<std::size_t>(j)] +=
            delta[static_cast<std::size_t>(j)];
      auto col = basis.index_of(target);
      if (!col) continue;
      mat(row, *col) = boundary_coefficient(lambda, nu, basis.params);
    }
  }
  return mat;
}

Complex inner_product(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& phi,
                      const WeightVector& weights) {
  if (psi.size() != phi.size() || psi.size() != weights.size())
    throw std::invalid_argument("inner_product: length mismatch");
  Complex s(0.0, 0.0);
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    s += psi(i) * std::conj(phi(i)) * weights(i);
  return s;
}

double weighted_norm(const Eigen::VectorXcd& psi, const WeightVector& weights) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    s += std::norm(psi(i)) * weights(i);
  return std::sqrt(s);
}

SelfAdjointCombinations self_adjoint_combinations(const LatticeBasis& basis) {
  const int n = basis.params.n;
  std::vector<OperatorMatrix> laps;
  laps.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) laps.push_back(build_laplacian(k, basis));
  SelfAdjointCombinations out;
  for (int k = 1; k <= n / 2; ++k)
    out.real_part.push_back(
        0.5 * (laps[static_cast<std::size_t>(k - 1)] +
               laps[static_cast<std::size_t>(n - k - 1)]));
  for (int k = 1; k <= (n - 1) / 2; ++k)
    out.imag_part.push_back(
        (laps[static_cast<std::size_t>(k - 1)] -
         laps[static_cast<std::size_t>(n - k - 1)]) /
        Complex(0.0, 2.0));
  return out;
}

OperatorMatrix build_hamiltonian(const LatticeBasis& basis) {
  const int n = basis.params.n;
  OperatorMatrix l1 = build_laplacian(1, basis);
  OperatorMatrix lr1 =
      n == 2 ? l1 : OperatorMatrix(0.5 * (l1 + build_laplacian(n - 1, basis)));
  return OperatorMatrix(static_cast<double>(n) *
                            OperatorMatrix::Identity(basis.dim(), basis.dim()) -
                        lr1);
}

OperatorMatrix build_hamiltonian_hopping(const LatticeBasis& basis) {
  basis.params.require_repulsive();
  const int n = basis.params.n;
  const int m = basis.params.m;
  const double t = basis.params.t;
  OperatorMatrix mat = OperatorMatrix::Zero(basis.dim(), basis.dim());
  // Pairing of lambda with e_a - e_b for arbitrary a, b (exact integer).
  auto pair_ab = [&](const LatticePoint& p, int a, int b) {
    return p.pairing_with(Root{a, b});
  };
  for (int row = 0; row < basis.dim(); ++row) {
    const LatticePoint& lambda = basis.points[static_cast<std::size_t>(row)];
    mat(row, row) = static_cast<double>(n);
    for (int j = 0; j < n; ++j) {
      // nu_j = e_j - e/n has omega displacement delta_i = [i==j] - [i==j-1].
      std::vector<int> up = lambda.coords();
      std::vector<int> down = lambda.coords();
      if (j < n - 1) {
        ++up[static_cast<std::size_t>(j)];
        --down[static_cast<std::size_t>(j)];
      }
      if (j > 0) {
        --up[static_cast<std::size_t>(j - 1)];
        ++down[static_cast<std::size_t>(j - 1)];
      }
      if (auto col = basis.index_of(up)) {
        double vplus = 1.0;
        for (int k = j + 1; k < n; ++k)
          if (pair_ab(lambda, j, k) == 0) {
            int h = k - j;
            vplus *= (1.0 - tpow(t, 1 + h)) / (1.0 - tpow(t, h));
          }
        for (int k = 0; k < j; ++k)
          if (pair_ab(lambda, k, j) == m) {
            int h = n + k - j;
            vplus *= (1.0 - tpow(t, 1 + h)) / (1.0 - tpow(t, h));
          }
        mat(row, *col) -= 0.5 * vplus;
      }
      if (auto col = basis.index_of(down)) {
        double vminus = 1.0;
        for (int k = 0; k < j; ++k)
          if (pair_ab(lambda, k, j) == 0) {
            int h = j - k;
            vminus *= (1.0 - tpow(t, 1 + h)) / (1.0 - tpow(t, h));
          }
        for (int k = j + 1; k < n; ++k)
          if (pair_ab(lambda, j, k) == m) {
            int h = n + j - k;
            vminus *= (1.0 - tpow(t, 1 + h)) / (1.0 - tpow(t, h));
          }
        mat(row, *col) -= 0.5 * vminus;
      }
    }
  }
  return mat;
}

Eigen::VectorXcd apply_laplacian_definition(int k, const LatticeBasis& basis,
                                            const Eigen::VectorXcd& psi) {
  const int n = basis.params.n;
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("apply_laplacian_definition: k out of range");
  if (psi.size() != basis.dim())
    throw std::invalid_argument("apply_laplacian_definition: length mismatch");
  const double t = basis.params.t;
  const auto orbit = orbit_of_weight(k, n);
  std::vector<std::vector<int>> displacements;
  displacements.reserve(orbit.size());
  for (const ComVector& nu : orbit)
    displacements.push_back(omega_displacement(nu));

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(basis.dim());
  for (int row = 0; row < basis.dim(); ++row) {
    const LatticePoint& lambda = basis.points[static_cast<std::size_t>(row)];
    Complex acc(0.0, 0.0);
    for (const auto& delta : displacements) {
      std::vector<int> target = lambda.coords();
      for (int j = 0; j < n - 1; ++j)
        target[static_cast<std::size_t>(j)] +=
            delta[static_cast<std::size_t>(j)];
      FoldResult fold = fold_coords(std::move(target), basis.params);
      auto idx = basis.index_of(fold.target.coords());
      if (!idx)
        throw std::logic_error("apply_laplacian_definition: fold left grid");
      acc += tpow(t, fold.length) * psi(*idx);
    }
    out(row) = acc;
  }
  return out;
}

}  // namespace alcove_bethe
