#pragma once

#include <cstdint>
#include <string>

#include "cohomap/manifold.hpp"

namespace cohomap {

/// Differential of `map` at p in the oriented orthonormal frames of the
/// model: column i is the tangent-projected central difference along
/// frame direction i, expressed in the frame at map(p). Image
/// representatives are aligned to the base image before differencing.
/// Throws std::runtime_error when a map output is off-manifold
/// beyond 1e-6.
Eigen::MatrixXd differential(const PointMap& map, const ManifoldModel& model,
                             const Eigen::VectorXd& p, double h);

/// Determinant of the differential; +1 for the identity map.
double signed_jacobian(const PointMap& map, const ManifoldModel& model,
                       const Eigen::VectorXd& p, double h = 1e-4);

struct DegreeEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long long samples = 0;
  long long rounded = 0;
  bool accepted = false;  // |mean - rounded| <= max(0.2, 3 stderr)
  double excluded_fraction = 0.0;

  std::string verdict() const { return accepted ? "accepted" : "inconclusive"; }
};

struct DegreeOptions {
  long long samples = 200000;
  std::uint64_t seed = 42;
  double h = 1e-4;
  int workers = 0;                   // 0 = hardware concurrency
  double singular_exclusion = 1e-3;  // slice-parameter band to resample
};

/// Monte-Carlo degree: mean and standard error of the signed Jacobian
/// over i.i.d. uniform/Haar samples. Sample i always uses stream i of
/// the seed, and the reduction is index-ordered, so the result does not
/// depend on the worker count. Draws within `singular_exclusion` of a
/// singular locus are resampled (fraction reported); aborts when more
/// than 1% of draws are rejected for off-manifold outputs.
DegreeEstimate estimate_degree(const PointMap& map, const ManifoldModel& model,
                               const DegreeOptions& opt);

}  // namespace cohomap
