// Experiment runner: spectral reports, Bethe solutions, the invariant
// verification table, and continuum-limit sweeps.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alcove_bethe/continuum.hpp"
#include "alcove_bethe/serialize.hpp"
#include "alcove_bethe/spectrum.hpp"
#include "alcove_bethe/wavefunction.hpp"

namespace ab = alcove_bethe;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty list entry");
    values.push_back(std::stoi(item));
  }
  return values;
}

ab::LatticePoint parse_mu(const std::string& csv, int n) {
  std::vector<int> coords = parse_int_list(csv);
  if (static_cast<int>(coords.size()) != n - 1)
    throw std::invalid_argument("--mu needs n-1 comma-separated coordinates");
  return ab::LatticePoint(coords);
}

struct CheckRow {
  std::string name;
  double measured;
  double threshold;
  bool pass;
};

std::string render_table(const std::vector<CheckRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(26) << "check" << std::setw(14) << "measured"
      << std::setw(14) << "threshold"
      << "status\n";
  for (const CheckRow& r : rows) {
    out << std::left << std::setw(26) << r.name << std::setw(14)
        << std::scientific << std::setprecision(3) << r.measured
        << std::setw(14) << r.threshold << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

int run_spectrum(int n, int m, double t, const std::string& output,
                 const std::string& format, std::optional<int> k_export,
                 double tol_mult) {
  if (!(t > -1.0 && t < 1.0)) {
    std::cerr << "outside repulsive regime\n";
    return kExitConfig;
  }
  if (format != "json") {
    std::cerr << "spectrum supports --format json only\n";
    return kExitConfig;
  }
  ab::SpectralData sd = ab::assemble_spectrum(ab::ModelParams(n, m, t));
  nlohmann::json report = ab::spectrum_report_json(sd);
  if (k_export) {
    if (*k_export < 1 || *k_export > n - 1) {
      std::cerr << "--k must lie in 1.." << n - 1 << "\n";
      return kExitConfig;
    }
    report["operator"] = ab::operator_json(
        *k_export, sd.basis,
        sd.laplacians[static_cast<std::size_t>(*k_export - 1)]);
  }
  write_text(output, report.dump(2) + "\n");

  Eigen::MatrixXcd gram = ab::gram_matrix(sd);
  bool ok = sd.max_eigen_residual <= 1e-9 * tol_mult &&
            ab::max_offdiagonal_gram(gram) <=
                1e-8 * tol_mult * ab::min_diagonal_gram(gram);
  return ok ? 0 : kExitNumerical;
}

int run_bethe(int n, int m, double t, const std::string& mu_csv,
              const std::string& output) {
  if (!(t > -1.0 && t < 1.0)) {
    std::cerr << "outside repulsive regime\n";
    return kExitConfig;
  }
  ab::ModelParams params(n, m, t);
  std::vector<ab::LatticePoint> mus;
  if (mu_csv.empty()) {
    mus = ab::enumerate_lattice(params);
  } else {
    ab::LatticePoint mu = parse_mu(mu_csv, n);
    if (!mu.in_grid(m))
      throw std::invalid_argument("--mu lies outside the grid");
    mus.push_back(mu);
  }
  nlohmann::json list = nlohmann::json::array();
  for (const ab::LatticePoint& mu : mus)
    list.push_back(ab::bethe_solution_json(ab::bethe_vector(mu, params)));
  write_text(output, list.dump(2) + "\n");
  return 0;
}

int run_verify(int n, int m, double t, std::uint64_t seed,
               const std::string& output, double tol_mult) {
  if (!(t > -1.0 && t < 1.0)) {
    std::cerr << "outside repulsive regime\n";
    return kExitConfig;
  }
  ab::ModelParams params(n, m, t);
  ab::LatticeBasis basis = ab::make_basis(params);
  ab::WeightVector weights = ab::build_weights(basis);
  std::vector<ab::OperatorMatrix> laps;
  for (int k = 1; k <= n - 1; ++k) laps.push_back(ab::build_laplacian(k, basis));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto random_vec = [&]() {
    Eigen::VectorXcd v(basis.dim());
    for (int i = 0; i < basis.dim(); ++i)
      v(i) = std::complex<double>(unit(rng), unit(rng));
    return v;
  };

  std::vector<CheckRow> rows;

  double adj = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::VectorXcd psi = random_vec(), phi = random_vec();
    for (int k = 1; k <= n - 1; ++k) {
      ab::Complex lhs = ab::inner_product(laps[k - 1] * psi, phi, weights);
      ab::Complex rhs =
          ab::inner_product(psi, laps[n - 1 - k] * phi, weights);
      adj = std::max(adj, std::abs(lhs - rhs) /
                              std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    }
  }
  rows.push_back({"adjointness", adj, 1e-12 * tol_mult,
                  adj <= 1e-12 * tol_mult});

  double balance = 0.0;
  for (int k = 1; k <= n - 1; ++k) {
    for (const ab::ComVector& nu : ab::orbit_of_weight(k, n)) {
      auto delta = ab::omega_displacement(nu);
      std::vector<double> neg(nu.coords());
      for (double& c : neg) c = -c;
      ab::ComVector minus_nu = ab::ComVector::project(neg);
      for (const ab::LatticePoint& mu : basis.points) {
        std::vector<int> source = mu.coords();
        bool inside = true;
        int sum = 0;
        for (int j = 0; j < n - 1; ++j) {
          source[static_cast<std::size_t>(j)] -=
              delta[static_cast<std::size_t>(j)];
          inside &= source[static_cast<std::size_t>(j)] >= 0;
          sum += source[static_cast<std::size_t>(j)];
        }
        if (!inside || sum > m) continue;
        ab::LatticePoint from(source);
        double lhs = ab::boundary_coefficient(from, nu, params) *
                     ab::weight_at(from, params);
        double rhs = ab::boundary_coefficient(mu, minus_nu, params) *
                     ab::weight_at(mu, params);
        balance =
            std::max(balance, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
  }
  rows.push_back({"detailed-balance", balance, 1e-12 * tol_mult,
                  balance <= 1e-12 * tol_mult});

  double comm = 0.0;
  for (std::size_t a = 0; a < laps.size(); ++a)
    for (std::size_t b = a + 1; b < laps.size(); ++b)
      comm = std::max(
          comm, (laps[a] * laps[b] - laps[b] * laps[a]).cwiseAbs().maxCoeff());
  rows.push_back({"commutators", comm, 1e-10 * tol_mult,
                  comm <= 1e-10 * tol_mult});

  double defn = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::VectorXcd psi = random_vec();
    for (int k = 1; k <= n - 1; ++k) {
      Eigen::VectorXcd via_matrix = laps[k - 1] * psi;
      Eigen::VectorXcd via_defn =
          ab::apply_laplacian_definition(k, basis, psi);
      defn = std::max(defn, (via_matrix - via_defn).cwiseAbs().maxCoeff());
    }
  }
  rows.push_back({"definition-vs-matrix", defn, 1e-12 * tol_mult,
                  defn <= 1e-12 * tol_mult});

  ab::OperatorMatrix h = ab::build_hamiltonian(basis);
  double ham = (h - ab::build_hamiltonian_hopping(basis)).cwiseAbs().maxCoeff();
  rows.push_back({"hamiltonian-two-routes", ham, 1e-12 * tol_mult,
                  ham <= 1e-12 * tol_mult});

  ab::SpectralData sd = ab::assemble_spectrum(params);
  rows.push_back({"eigen-residual", sd.max_eigen_residual, 1e-9 * tol_mult,
                  sd.max_eigen_residual <= 1e-9 * tol_mult});

  Eigen::MatrixXcd gram = ab::gram_matrix(sd);
  double rel_offdiag =
      ab::max_offdiagonal_gram(gram) / ab::min_diagonal_gram(gram);
  rows.push_back({"gram-offdiagonal", rel_offdiag, 1e-8 * tol_mult,
                  rel_offdiag <= 1e-8 * tol_mult});

  std::vector<double> dense_h =
      ab::dense_selfadjoint_eigenvalues(h, sd.weights);
  std::vector<double> bethe_h = ab::hamiltonian_bethe_eigenvalues(sd);
  bool ham_spec = ab::multisets_close(dense_h, bethe_h, 1e-8 * tol_mult);
  rows.push_back({"hamiltonian-spectrum", ham_spec ? 0.0 : 1.0, 0.5,
                  ham_spec});

  bool separated = ab::separation_check(sd);
  rows.push_back({"eigenvalue-separation", separated ? 0.0 : 1.0, 0.5,
                  separated});

  write_text(output, render_table(rows));
  for (const CheckRow& r : rows)
    if (!r.pass) return kExitNumerical;
  return 0;
}

int run_continuum(int n, double g, const std::string& mu_csv,
                  const std::string& m_list_csv, const std::string& output,
                  const std::string& format) {
  if (!(g > 0.0)) {
    std::cerr << "continuum coupling must satisfy g > 0\n";
    return kExitConfig;
  }
  std::vector<int> m_list = parse_int_list(m_list_csv);
  if (m_list.empty()) {
    std::cerr << "--m-list must not be empty\n";
    return kExitConfig;
  }
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 1 || (i > 0 && m_list[i] <= m_list[i - 1])) {
      std::cerr << "--m-list must be ascending positive integers\n";
      return kExitConfig;
    }
  }
  ab::LatticePoint mu = parse_mu(mu_csv, n);
  if (!mu.in_grid(m_list.front())) {
    std::cerr << "--mu must lie on the coarsest grid (sum of coordinates <= "
              << m_list.front() << ")\n";
    return kExitConfig;
  }

  ab::ContinuumParams cp(n, g);
  ab::ContinuumSolution cont = ab::solve_continuum_bethe(mu, cp);
  std::optional<std::complex<double>> continuum_diag;
  if (n == 2) continuum_diag = ab::continuum_gram_n2(cont.xi, cont.xi, g);

  struct Row {
    int m;
    double t, err_xi, runtime_ms;
    std::optional<double> err_gram_diag;
  };
  std::vector<Row> rows;
  for (int m : m_list) {
    auto start = std::chrono::steady_clock::now();
    ab::ComVector rescaled = ab::rescaled_lattice_vector(mu, m, cp);
    double err = 0.0;
    for (int j = 0; j < n; ++j) err = std::hypot(err, rescaled[j] - cont.xi[j]);
    std::optional<double> gram_err;
    if (continuum_diag) {
      std::complex<double> diag = ab::staircase_gram(mu, mu, m, cp);
      gram_err = std::abs(diag - *continuum_diag);
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    rows.push_back({m, cp.lattice_coupling(m), err, ms, gram_err});
  }

  std::string mu_label;
  for (int j = 0; j < n - 1; ++j)
    mu_label += (j ? "," : "") + std::to_string(mu[j]);

  std::ostringstream out;
  if (format == "csv") {
    out << "n,g,mu,m,t,err_xi,err_gram_diag,runtime_ms\n";
    for (const Row& r : rows) {
      out << n << ',' << format17(g) << ",\"" << mu_label << "\"," << r.m
          << ',' << format17(r.t) << ',' << format17(r.err_xi) << ',';
      if (r.err_gram_diag) out << format17(*r.err_gram_diag);
      char ms[32];
      std::snprintf(ms, sizeof(ms), "%.3f", r.runtime_ms);
      out << ',' << ms << "\n";
    }
  } else {
    nlohmann::json list = nlohmann::json::array();
    for (const Row& r : rows) {
      nlohmann::json item{{"n", n},          {"g", g},
                          {"mu", mu.coords()}, {"m", r.m},
                          {"t", r.t},        {"err_xi", r.err_xi},
                          {"runtime_ms", r.runtime_ms}};
      if (r.err_gram_diag) item["err_gram_diag"] = *r.err_gram_diag;
      list.push_back(std::move(item));
    }
    out << list.dump(2) << "\n";
  }
  write_text(output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice discretization of the repulsive delta Bose gas on "
               "the circle: spectra, Bethe vectors, verification, continuum "
               "limit"};
  app.require_subcommand(1);

  int n = 2, m = 1;
  double t = 0.0, g = 1.0;
  std::string mu_csv, m_list_csv, output;
  std::string spectrum_format = "json";
  std::string continuum_format = "csv";
  std::uint64_t seed = 12345;
  double tol_mult = 1.0;
  std::optional<int> k_export;

  auto* spectrum = app.add_subcommand(
      "spectrum", "assemble the eigenbasis and emit the JSON report");
  spectrum->add_option("--n", n, "particle count (>= 2)")->required();
  spectrum->add_option("--m", m, "dilation factor (>= 1)")->required();
  spectrum->add_option("--t", t, "lattice coupling, -1 < t < 1")->required();
  spectrum->add_option("--k", k_export,
                       "also embed the matrix of L_k in the report");
  spectrum->add_option("--format", spectrum_format, "json (default)");
  spectrum->add_option("-o,--output", output, "output path (default stdout)");
  spectrum->add_option("--tol-override", tol_mult,
                       "multiplier applied to the pass thresholds");

  auto* bethe = app.add_subcommand(
      "bethe", "solve Bethe vectors and emit them as JSON");
  bethe->add_option("--n", n, "particle count (>= 2)")->required();
  bethe->add_option("--m", m, "dilation factor (>= 1)")->required();
  bethe->add_option("--t", t, "lattice coupling, -1 < t < 1")->required();
  bethe->add_option("--mu", mu_csv,
                    "quantum number as comma-separated omega coordinates "
                    "(default: whole grid)");
  bethe->add_option("-o,--output", output, "output path (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "run the invariant suite and print a pass/fail table");
  verify->add_option("--n", n, "particle count (>= 2)")->required();
  verify->add_option("--m", m, "dilation factor (>= 1)")->required();
  verify->add_option("--t", t, "lattice coupling, -1 < t < 1")->required();
  verify->add_option("--seed", seed, "seed for the random probe vectors");
  verify->add_option("--tol-override", tol_mult,
                     "multiplier applied to the pass thresholds");
  verify->add_option("-o,--output", output, "output path (default stdout)");

  auto* continuum = app.add_subcommand(
      "continuum", "rescaled-lattice convergence sweep toward the "
                   "Lieb-Liniger model");
  continuum->add_option("--n", n, "particle count (>= 2)")->required();
  continuum->add_option("--g", g, "continuum coupling, g > 0")->required();
  continuum->add_option("--mu", mu_csv, "quantum number (comma-separated)")
      ->required();
  continuum->add_option("--m-list", m_list_csv,
                        "ascending dilation factors, e.g. 8,16,32,64")
      ->required();
  continuum->add_option("--format", continuum_format, "csv (default) or json");
  continuum->add_option("-o,--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (spectrum->parsed())
      return run_spectrum(n, m, t, output, spectrum_format, k_export, tol_mult);
    if (bethe->parsed()) return run_bethe(n, m, t, mu_csv, output);
    if (verify->parsed())
      return run_verify(n, m, t, seed, output, tol_mult);
    return run_continuum(n, g, mu_csv, m_list_csv, output, continuum_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
