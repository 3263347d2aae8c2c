#include "alcove_bethe/alcove.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace alcove_bethe {

std::vector<Root> positive_roots(int n) {
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) roots.push_back(Root{j, k});
  return roots;
}

ComVector::ComVector(std::vector<double> coords) : coords_(std::move(coords)) {
  double sum = std::accumulate(coords_.begin(), coords_.end(), 0.0);
  if (std::abs(sum) > 1e-12)
    throw std::invalid_argument(
        "ComVector: components must sum to zero (got sum = " +
        std::to_string(sum) + ")");
}

ComVector ComVector::project(const std::vector<double>& coords) {
  double mean = std::accumulate(coords.begin(), coords.end(), 0.0) /
                static_cast<double>(coords.size());
  std::vector<double> centered(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    centered[i] = coords[i] - mean;
  ComVector v;
  v.coords_ = std::move(centered);
  return v;
}

double pairing(const ComVector& x, const Root& a) {
  return x[a.j] - x[a.k];
}

LatticePoint::LatticePoint(std::vector<int> ks) : ks_(std::move(ks)) {
  for (int k : ks_)
    if (k < 0)
      throw std::invalid_argument("LatticePoint: coordinates must be >= 0");
}

int LatticePoint::coord_sum() const {
  return std::accumulate(ks_.begin(), ks_.end(), 0);
}

int coord_pairing(const std::vector<int>& coords, const Root& a) {
  int lo = std::min(a.j, a.k), hi = std::max(a.j, a.k);
  int s = 0;
  for (int i = lo; i < hi && i < static_cast<int>(coords.size()); ++i)
    s += coords[static_cast<std::size_t>(i)];
  return a.j < a.k ? s : -s;
}

int LatticePoint::pairing_with(const Root& a) const {
  return coord_pairing(ks_, a);
}

LatticePoint rho_point(int n) {
  return LatticePoint(std::vector<int>(static_cast<std::size_t>(n - 1), 1));
}

namespace {

void enumerate_rec(int slots_left, int budget, std::vector<int>& prefix,
                   std::vector<LatticePoint>& out) {
  if (slots_left == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = 0; k <= budget; ++k) {
    prefix.push_back(k);
    enumerate_rec(slots_left - 1, budget - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LatticePoint> enumerate_lattice(const ModelParams& params) {
  std::vector<LatticePoint> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(params.n - 1));
  enumerate_rec(params.n - 1, params.m, prefix, out);
  return out;
}

ComVector weight_to_com(const LatticePoint& p, int n) {
  if (p.rank() != n - 1)
    throw std::invalid_argument("weight_to_com: point has wrong rank");
  // x_i = sum_{j >= i} k_j - (sum_j j k_j)/n, with j one-based.
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  double shift = 0.0;
  for (int j = 0; j < n - 1; ++j) shift += static_cast<double>((j + 1) * p[j]);
  shift /= static_cast<double>(n);
  double suffix = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    if (i < n - 1) suffix += p[i];
    x[static_cast<std::size_t>(i)] = suffix - shift;
  }
  return ComVector::project(x);
}

std::vector<ComVector> orbit_of_weight(int k, int n) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("orbit_of_weight: k out of range");
  std::vector<ComVector> orbit;
  // Lexicographically first k-subset is {0,..,k-1}; advance via the usual
  // combination successor.
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  const double lo = -static_cast<double>(k) / n;
  const double hi = 1.0 + lo;
  while (true) {
    std::vector<double> v(static_cast<std::size_t>(n), lo);
    for (int idx : subset) v[static_cast<std::size_t>(idx)] = hi;
    orbit.push_back(ComVector::project(v));
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      subset[static_cast<std::size_t>(j)] =
          subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return orbit;
}

std::vector<int> omega_displacement(const ComVector& nu) {
  std::vector<int> delta(static_cast<std::size_t>(nu.n() - 1));
  for (int j = 0; j + 1 < nu.n(); ++j) {
    double p = nu[j] - nu[j + 1];
    int r = static_cast<int>(std::lround(p));
    if (std::abs(p - r) > 1e-9 || r < -1 || r > 1)
      throw std::invalid_argument("omega_displacement: not an orbit vector");
    delta[static_cast<std::size_t>(j)] = r;
  }
  return delta;
}

FoldResult fold_coords(std::vector<int> ks, const ModelParams& params) {
  const int n = params.n;
  const int m = params.m;
  if (static_cast<int>(ks.size()) != n - 1)
    throw std::invalid_argument("fold_coords: wrong rank");
  int length = 0;
  for (int guard = 0;; ++guard) {
    if (guard > 1000000)
      throw std::logic_error("fold_coords: folding did not terminate");
    int violated = -1;  // simple-root wall index, or n-1 for the affine wall
    for (int j = 0; j < n - 1; ++j) {
      if (ks[static_cast<std::size_t>(j)] < 0) {
        violated = j;
        break;
      }
    }
    int c = std::accumulate(ks.begin(), ks.end(), 0);
    if (violated < 0 && c > m) violated = n - 1;
    if (violated < 0) break;
    if (violated < n - 1) {
      // r_j: k_j -> -k_j, neighbors gain k_j.
      int j = violated;
      int kj = ks[static_cast<std::size_t>(j)];
      if (j > 0) ks[static_cast<std::size_t>(j - 1)] += kj;
      if (j + 1 < n - 1) ks[static_cast<std::size_t>(j + 1)] += kj;
      ks[static_cast<std::size_t>(j)] = -kj;
    } else {
      // r_0^{(m)}: x -> x + (m - c) alpha_0, alpha_0 = omega_1 + omega_{n-1}
      // (= 2 omega_1 when n = 2).
      int gap = m - c;
      if (n == 2) {
        ks[0] += 2 * gap;
      } else {
        ks[0] += gap;
        ks[static_cast<std::size_t>(n - 2)] += gap;
      }
    }
    ++length;
  }
  return FoldResult{LatticePoint(std::move(ks)), length};
}

FoldResult fold_into_alcove(const ComVector& x, const ModelParams& params) {
  const int n = params.n;
  if (x.n() != n)
    throw std::invalid_argument("fold_into_alcove: dimension mismatch");
  std::vector<int> ks(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) {
    double p = x[j] - x[j + 1];
    long r = std::lround(p);
    if (std::abs(p - static_cast<double>(r)) > 1e-9)
      throw std::invalid_argument("not a weight-lattice vector");
    ks[static_cast<std::size_t>(j)] = static_cast<int>(r);
  }
  return fold_coords(std::move(ks), params);
}

std::optional<int> LatticeBasis::index_of(const std::vector<int>& ks) const {
  auto it = index.find(ks);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

LatticeBasis make_basis(const ModelParams& params) {
  LatticeBasis basis;
  basis.params = params;
  basis.points = enumerate_lattice(params);
  for (int i = 0; i < basis.dim(); ++i)
    basis.index.emplace(basis.points[static_cast<std::size_t>(i)].coords(), i);
  return basis;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace alcove_bethe
