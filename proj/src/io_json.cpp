#include "cohomap/io_json.hpp"

#include <stdexcept>

namespace cohomap {

Json matrix_to_json(const MatrixXc& M) {
  if (M.rows() != M.cols()) {
    throw std::invalid_argument("matrix encoding expects a square matrix");
  }
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      row.push_back(Json::array({M(i, j).real(), M(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", M.rows()}, {"rows", std::move(rows)}};
}

MatrixXc matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
    throw std::invalid_argument(
        "matrix encoding must be an object with fields 'n' and 'rows'");
  }
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("rows");
  if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("matrix encoding: 'rows' must hold n rows");
  }
  MatrixXc M(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix encoding: row " + std::to_string(i) +
                                  " must hold n entries");
    }
    for (int c = 0; c < n; ++c) {
      const auto& e = row.at(c);
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("matrix encoding: entries are [re, im] pairs");
      }
      M(i, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return M;
}

Json cvector_to_json(const Eigen::VectorXcd& z) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out.push_back(Json::array({z(i).real(), z(i).imag()}));
  }
  return out;
}

Eigen::VectorXcd cvector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("complex vector encoding must be a non-empty array");
  }
  Eigen::VectorXcd z(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j.at(i);
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("complex vector entries are [re, im] pairs");
    }
    z(static_cast<Eigen::Index>(i)) =
        Complex(e.at(0).get<double>(), e.at(1).get<double>());
  }
  return z;
}

Json rvector_to_json(const Eigen::VectorXd& p) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(p(i));
  return out;
}

Eigen::VectorXd rvector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("real vector encoding must be a non-empty array");
  }
  Eigen::VectorXd p(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    p(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
  }
  return p;
}

Json degree_estimate_to_json(const DegreeEstimate& est) {
  return Json{
      {"mean", est.mean},
      {"stderr", est.stderr_},
      {"samples", est.samples},
      {"rounded", est.rounded},
      {"verdict", est.verdict()},
      {"excluded_fraction", est.excluded_fraction},
  };
}

}  // namespace cohomap
