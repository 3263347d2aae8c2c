// Type-A alcove combinatorics: center-of-mass plane, roots and fundamental
// weights, the finite lattice grid over the dilated alcove, and affine
// folding with length counting.
#ifndef ALCOVE_BETHE_ALCOVE_HPP
#define ALCOVE_BETHE_ALCOVE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove_bethe {

// Model instance: n particles, dilation factor m, coupling t.
// t is accepted as any real here; Hilbert-space constructions
// (weights, inner products, operators) reject |t| >= 1 themselves.
struct ModelParams {
  int n = 2;
  int m = 1;
  double t = 0.0;

  ModelParams() = default;
  ModelParams(int n_, int m_, double t_) : n(n_), m(m_), t(t_) {
    if (n < 2) throw std::invalid_argument("ModelParams: n must be >= 2");
    if (m < 1) throw std::invalid_argument("ModelParams: m must be >= 1");
  }

  // Throws unless -1 < t < 1.
  void require_repulsive() const {
    if (!(t > -1.0 && t < 1.0))
      throw std::domain_error("outside repulsive regime");
  }
};

// Root e_j - e_k with zero-based indices j != k; positive iff j < k.
struct Root {
  int j = 0;
  int k = 1;
  bool positive() const { return j < k; }
};

// All positive roots e_j - e_k, j < k, in lexicographic (j,k) order.
std::vector<Root> positive_roots(int n);

// <rho, e_j - e_k> = k - j (exact integer; valid for any j,k).
inline int rho_pairing(const Root& a) { return a.k - a.j; }

// Real vector in the center-of-mass plane E (components sum to zero).
class ComVector {
 public:
  ComVector() = default;
  // Validates the zero-sum invariant to 1e-12 absolute.
  explicit ComVector(std::vector<double> coords);
  // Projects an arbitrary vector onto E by subtracting the mean.
  static ComVector project(const std::vector<double>& coords);

  int n() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::vector<double> coords_;
};

// <x, e_j - e_k> = x_j - x_k.
double pairing(const ComVector& x, const Root& a);

// Lattice point in the omega-basis: nonnegative integer coordinates
// (k_1..k_{n-1}); membership in the grid requires sum(k) <= m.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> ks);

  int rank() const { return static_cast<int>(ks_.size()); }  // = n-1
  int operator[](int j) const { return ks_[j]; }              // zero-based
  const std::vector<int>& coords() const { return ks_; }
  int coord_sum() const;
  bool in_grid(int m) const { return coord_sum() <= m; }

  // <lambda, e_j - e_k> = k_j + ... + k_{k-1} (exact integer), j < k.
  int pairing_with(const Root& a) const;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.ks_ == b.ks_;
  }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.ks_ < b.ks_;
  }

 private:
  std::vector<int> ks_;
};

// All-ones lattice point (rho in the omega basis).
LatticePoint rho_point(int n);

struct FoldResult {
  LatticePoint target;
  int length = 0;
};

// Every (k_1..k_{n-1}) with k_j >= 0 and sum <= m, lexicographic order.
// This ordering defines the basis index used by every matrix downstream.
std::vector<LatticePoint> enumerate_lattice(const ModelParams& params);

// sum_j k_j omega_j with omega_j = e_1+...+e_j - (j/n) e.
ComVector weight_to_com(const LatticePoint& p, int n);

// S_n-orbit of omega_k (1 <= k <= n-1): all vectors with k components
// equal to 1-k/n and n-k components equal to -k/n; cardinality C(n,k).
// Deterministic order: lexicographic over the k-subsets of positions.
std::vector<ComVector> orbit_of_weight(int k, int n);

// Displacement of an orbit vector in the omega basis:
// delta_j = <nu, alpha_j> in {-1,0,1}, exact integers.
std::vector<int> omega_displacement(const ComVector& nu);

// Pairing of a weight given by omega coordinates (possibly negative) with
// a root: <sum_i c_i omega_i, e_j - e_k> = c_j + ... + c_{k-1} for j < k.
int coord_pairing(const std::vector<int>& coords, const Root& a);

// Greedy affine folding of integer omega-coordinates (possibly negative
// or out of range) into the grid; returns the image and the number of
// reflections applied ( = the affine length).
FoldResult fold_coords(std::vector<int> ks, const ModelParams& params);

// Folds a weight-lattice vector into the grid.  Throws
// std::invalid_argument("not a weight-lattice vector") when some pairing
// with a simple root is not an integer within 1e-9.
FoldResult fold_into_alcove(const ComVector& x, const ModelParams& params);

// Enumerated grid plus index lookup; shared by all operator builders.
struct LatticeBasis {
  ModelParams params;
  std::vector<LatticePoint> points;

  int dim() const { return static_cast<int>(points.size()); }
  std::optional<int> index_of(const std::vector<int>& ks) const;

  std::map<std::vector<int>, int> index;
};

LatticeBasis make_basis(const ModelParams& params);

// C(n+m-1, m) as a size check helper.
long long binomial(int n, int k);

}  // namespace alcove_bethe

#endif
