#pragma once

#include <json.hpp>

#include "cohomap/degree.hpp"
#include "cohomap/linalg.hpp"

namespace cohomap {

using Json = nlohmann::json;

/// Complex matrix encoding {"n": int, "rows": [[[re, im], ...], ...]},
/// row-major.
Json matrix_to_json(const MatrixXc& M);
MatrixXc matrix_from_json(const Json& j);

/// Complex vector encoding [[re, im], ...].
Json cvector_to_json(const Eigen::VectorXcd& z);
Eigen::VectorXcd cvector_from_json(const Json& j);

/// Sphere points are plain real arrays.
Json rvector_to_json(const Eigen::VectorXd& p);
Eigen::VectorXd rvector_from_json(const Json& j);

Json degree_estimate_to_json(const DegreeEstimate& est);

}  // namespace cohomap
