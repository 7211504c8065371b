// Copyright 2026 The QZNav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qznav/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qznav/errors.hpp"

namespace qznav {

namespace {

using nlohmann::json;

// Parse-time hermiticity bound; looser than the wrapper tolerance because
// files may carry hand-rounded decimals.
constexpr double kParseHermiticity = 1e-9;
constexpr double kMinStateNorm = 1e-12;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw ParseError("problem file: " + context + ": " + what);
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    fail(key, "missing field");
  }
  return *it;
}

double require_number(const json& node, const std::string& context) {
  if (!node.is_number()) {
    fail(context, "expected a number");
  }
  return node.get<double>();
}

Eigen::MatrixXd parse_real_matrix(const json& node, Eigen::Index dim,
                                  const std::string& context) {
  if (!node.is_array() || node.size() != static_cast<std::size_t>(dim)) {
    fail(context, "expected a " + std::to_string(dim) + "-row array");
  }
  Eigen::MatrixXd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const json& row = node[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      fail(context, "row " + std::to_string(r) + " has wrong length");
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      out(r, c) = require_number(row[static_cast<std::size_t>(c)],
                                 context + " entry");
    }
  }
  return out;
}

Eigen::VectorXd parse_real_vector(const json& node, Eigen::Index dim,
                                  const std::string& context) {
  if (!node.is_array() || node.size() != static_cast<std::size_t>(dim)) {
    fail(context, "expected a length-" + std::to_string(dim) + " array");
  }
  Eigen::VectorXd out(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    out(k) =
        require_number(node[static_cast<std::size_t>(k)], context + " entry");
  }
  return out;
}

Matrix parse_complex_matrix(const json& node, Eigen::Index dim,
                            const std::string& context) {
  if (!node.is_object()) {
    fail(context, "expected an object with real/imag arrays");
  }
  const Eigen::MatrixXd re =
      parse_real_matrix(require(node, "real"), dim, context + ".real");
  const Eigen::MatrixXd im =
      parse_real_matrix(require(node, "imag"), dim, context + ".imag");
  return re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
}

Vector parse_complex_vector(const json& node, Eigen::Index dim,
                            const std::string& context) {
  if (!node.is_object()) {
    fail(context, "expected an object with real/imag arrays");
  }
  const Eigen::VectorXd re =
      parse_real_vector(require(node, "real"), dim, context + ".real");
  const Eigen::VectorXd im =
      parse_real_vector(require(node, "imag"), dim, context + ".imag");
  return re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
}

Vector load_state(const json& node, Eigen::Index dim,
                  const std::string& context,
                  std::vector<std::string>* warnings) {
  Vector psi = parse_complex_vector(node, dim, context);
  const double norm = psi.norm();
  if (!(norm > kMinStateNorm) || !std::isfinite(norm)) {
    fail(context, "state norm too small to renormalise");
  }
  if (std::abs(norm - 1.0) > linalg_tolerances().state_norm && warnings) {
    std::ostringstream note;
    note << context << ": norm " << norm << " renormalised to 1";
    warnings->push_back(note.str());
  }
  return psi / norm;
}

json complex_matrix_to_json(const Matrix& m) {
  json real = json::array();
  json imag = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json real_row = json::array();
    json imag_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      real_row.push_back(m(r, c).real());
      imag_row.push_back(m(r, c).imag());
    }
    real.push_back(std::move(real_row));
    imag.push_back(std::move(imag_row));
  }
  return json{{"real", std::move(real)}, {"imag", std::move(imag)}};
}

json complex_vector_to_json(const Vector& v) {
  json real = json::array();
  json imag = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    real.push_back(v(k).real());
    imag.push_back(v(k).imag());
  }
  return json{{"real", std::move(real)}, {"imag", std::move(imag)}};
}

json diagnostics_to_json(const SolutionDiagnostics& diag) {
  return json{{"arrival_fidelity", diag.arrival_fidelity},
              {"norm_residual", diag.norm_residual},
              {"horizontality_residual", diag.horizontality_residual},
              {"full_throttle_residual", diag.full_throttle_residual},
              {"unit_cost_residual", diag.unit_cost_residual},
              {"frame_consistency_residual", diag.frame_consistency_residual},
              {"theta_residual", diag.theta_residual},
              {"next_root", diag.next_root},
              {"trivial", diag.trivial}};
}

}  // namespace

ProblemFile parse_problem_json(const std::string& text,
                               std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("problem file: invalid JSON: ") +
                     err.what());
  }
  if (!doc.is_object()) {
    fail("document", "expected a JSON object");
  }
  ProblemFile pf;
  const json& dim_node = require(doc, "dimension");
  if (!dim_node.is_number_integer() || dim_node.get<long long>() < 1) {
    fail("dimension", "expected a positive integer");
  }
  pf.dimension = static_cast<Eigen::Index>(dim_node.get<long long>());

  Matrix h0 = parse_complex_matrix(require(doc, "h0"), pf.dimension, "h0");
  const double asym = (h0 - h0.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kParseHermiticity) {
    std::ostringstream msg;
    msg << "not Hermitian, max |h0 - h0^dag| = " << asym;
    fail("h0", msg.str());
  }
  pf.h0 = ((h0 + h0.adjoint()) / 2.0).eval();

  pf.psi_i = load_state(require(doc, "psi_i"), pf.dimension, "psi_i", warnings);
  pf.psi_f = load_state(require(doc, "psi_f"), pf.dimension, "psi_f", warnings);

  if (const auto it = doc.find("epsilon"); it != doc.end()) {
    pf.epsilon = require_number(*it, "epsilon");
  }
  if (const auto it = doc.find("tolerances"); it != doc.end()) {
    if (!it->is_object()) {
      fail("tolerances", "expected an object");
    }
    if (const auto rt = it->find("root_tol"); rt != it->end()) {
      pf.root_tol = require_number(*rt, "tolerances.root_tol");
      if (!(*pf.root_tol > 0.0)) {
        fail("tolerances.root_tol", "must be positive");
      }
    }
    if (const auto tm = it->find("t_max"); tm != it->end()) {
      pf.t_max = require_number(*tm, "tolerances.t_max");
      if (!(*pf.t_max > 0.0)) {
        fail("tolerances.t_max", "must be positive");
      }
    }
  }
  return pf;
}

ProblemFile load_problem_file(const std::string& path,
                              std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open problem file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_json(buffer.str(), warnings);
}

std::string dump_normalized(const ProblemFile& pf) {
  json doc{{"dimension", static_cast<long long>(pf.dimension)},
           {"h0", complex_matrix_to_json(pf.h0)},
           {"psi_i", complex_vector_to_json(pf.psi_i)},
           {"psi_f", complex_vector_to_json(pf.psi_f)}};
  if (pf.epsilon) {
    doc["epsilon"] = *pf.epsilon;
  }
  if (pf.root_tol || pf.t_max) {
    json tol = json::object();
    if (pf.root_tol) {
      tol["root_tol"] = *pf.root_tol;
    }
    if (pf.t_max) {
      tol["t_max"] = *pf.t_max;
    }
    doc["tolerances"] = std::move(tol);
  }
  return doc.dump(2) + "\n";
}

NavigationProblem to_navigation_problem(
    const ProblemFile& pf, std::optional<double> epsilon_override) {
  const std::optional<double> eps =
      epsilon_override ? epsilon_override : pf.epsilon;
  Matrix wind = pf.h0;
  if (eps) {
    wind *= *eps;
  }
  NavigationProblem p(HermitianOperator(wind), PureState::normalized(pf.psi_i),
                      PureState::normalized(pf.psi_f));
  if (pf.root_tol) {
    p.root_tol = *pf.root_tol;
  }
  if (pf.t_max) {
    p.t_max = *pf.t_max;
  }
  return p;
}

std::string solution_to_json(const NavigationSolution& sol, double root_tol,
                             const std::string& failed_check) {
  json doc{{"t_star", sol.t_star},
           {"theta", sol.theta},
           {"trivial", sol.diagnostics.trivial},
           {"h1_initial", complex_matrix_to_json(sol.h1_initial.matrix())},
           {"aligned_psi_f", complex_vector_to_json(sol.aligned_psi_f.vector())},
           {"diagnostics", diagnostics_to_json(sol.diagnostics)},
           {"root_tol", root_tol},
           {"pass", failed_check.empty()},
           {"failed_check", failed_check}};
  return doc.dump(2) + "\n";
}

std::string report_to_json(const OptimalityReport& report) {
  json doc{{"t_star", report.t_star},
           {"dt", report.dt},
           {"n_samples", report.n_samples},
           {"seed", report.seed},
           {"fid_threshold", report.fid_threshold},
           {"horizon", report.horizon},
           {"trivial", report.trivial},
           {"solver_arrived", report.solver_arrived},
           {"solver_arrival", report.solver_arrival},
           {"n_arrived", report.n_arrived},
           {"min_competitor_arrival", report.min_competitor_arrival},
           {"orbit_min_arrival", report.orbit_min_arrival},
           {"piecewise_min_arrival", report.piecewise_min_arrival},
           {"pass", report.pass}};
  return doc.dump(2) + "\n";
}

std::string format_double(double x) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k > 0) {
      line += ',';
    }
    line += cells[k];
  }
  line += '\n';
  return line;
}

BlochPoint bloch_point(double t, const PureState& psi) {
  if (psi.dim() != 2) {
    throw DimensionMismatchError("Bloch coordinates need a two-level state");
  }
  const Complex a = psi.vector()(0);
  const Complex b = psi.vector()(1);
  const Complex cross = std::conj(a) * b;
  return BlochPoint{t, 2.0 * cross.real(), 2.0 * cross.imag(),
                    std::norm(a) - std::norm(b)};
}

}  // namespace qznav
