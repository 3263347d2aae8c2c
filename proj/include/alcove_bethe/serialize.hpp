// JSON export of operators, Bethe solutions, and spectral reports.
#ifndef ALCOVE_BETHE_SERIALIZE_HPP
#define ALCOVE_BETHE_SERIALIZE_HPP

#include <json.hpp>

#include "alcove_bethe/bethe.hpp"
#include "alcove_bethe/spectrum.hpp"

namespace alcove_bethe {

// { "n", "m", "t", "k", "basis": [[k_1..k_{n-1}],...],
//   "matrix": [[[re,im],...],...] }
nlohmann::json operator_json(int k, const LatticeBasis& basis,
                             const OperatorMatrix& mat);

// { "mu": [...], "mtuple": [...], "xi": [...], "residual": r,
//   "iterations": i }
nlohmann::json bethe_solution_json(const BetheSolution& sol);

// { "params": {...}, "dim": d, "max_eigen_residual": r,
//   "max_offdiag_gram": x, "spectra": {"k": [[re,im],...]},
//   "hamiltonian_eigenvalues": [...] }
nlohmann::json spectrum_report_json(const SpectralData& sd);

}  // namespace alcove_bethe

#endif
