#include "alcove_bethe/serialize.hpp"

#include <string>

namespace alcove_bethe {

namespace {

nlohmann::json complex_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json basis_json(const LatticeBasis& basis) {
  nlohmann::json out = nlohmann::json::array();
  for (const LatticePoint& p : basis.points) out.push_back(p.coords());
  return out;
}

}  // namespace

nlohmann::json operator_json(int k, const LatticeBasis& basis,
                             const OperatorMatrix& mat) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < mat.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < mat.cols(); ++c)
      row.push_back(complex_json(mat(r, c)));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"n", basis.params.n},
                        {"m", basis.params.m},
                        {"t", basis.params.t},
                        {"k", k},
                        {"basis", basis_json(basis)},
                        {"matrix", std::move(rows)}};
}

nlohmann::json bethe_solution_json(const BetheSolution& sol) {
  return nlohmann::json{{"mu", sol.mu.coords()},
                        {"mtuple", sol.mtuple},
                        {"xi", sol.xi.coords()},
                        {"residual", sol.residual},
                        {"iterations", sol.iterations}};
}

nlohmann::json spectrum_report_json(const SpectralData& sd) {
  Eigen::MatrixXcd gram = gram_matrix(sd);
  nlohmann::json spectra;
  for (int k = 1; k <= sd.params.n - 1; ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int mu = 0; mu < sd.basis.dim(); ++mu)
      row.push_back(complex_json(sd.eigenvalues(k - 1, mu)));
    spectra[std::to_string(k)] = std::move(row);
  }
  return nlohmann::json{
      {"params",
       {{"n", sd.params.n}, {"m", sd.params.m}, {"t", sd.params.t}}},
      {"dim", sd.basis.dim()},
      {"max_eigen_residual", sd.max_eigen_residual},
      {"max_offdiag_gram", max_offdiagonal_gram(gram)},
      {"spectra", std::move(spectra)},
      {"hamiltonian_eigenvalues", hamiltonian_bethe_eigenvalues(sd)}};
}

}  // namespace alcove_bethe
