#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>

#include "cohomap/linalg.hpp"
#include "cohomap/random.hpp"

namespace cohomap {

/// A concrete oriented Riemannian manifold presented through flattened
/// real ambient coordinates. Frames are orthonormal for the ambient
/// inner product and consistently oriented:
///   SU(3): left-translated su(3) frame (global);
///   S^n:   any tangent frame (e1..en) with det[p, e1, ..., en] = +1;
///   CP^m:  (h1, i h1, ..., hm, i hm) from a complex orthonormal
///          horizontal basis (complex orientation).
class ManifoldModel {
 public:
  virtual ~ManifoldModel() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;          // intrinsic real dimension
  virtual int ambient_dim() const = 0;  // flattened ambient coordinates

  virtual Eigen::VectorXd sample(RandomSource& rng) const = 0;

  /// ambient_dim x dim matrix of orthonormal oriented frame columns.
  virtual Eigen::MatrixXd frame(const Eigen::VectorXd& p) const = 0;

  /// Geodesic step: retract(p, xi, 0) = p, first-order consistent.
  virtual Eigen::VectorXd retract(const Eigen::VectorXd& p,
                                  const Eigen::VectorXd& xi,
                                  double h) const = 0;

  /// Orthogonal projection of an ambient vector onto T_p M.
  virtual Eigen::VectorXd project(const Eigen::VectorXd& p,
                                  const Eigen::VectorXd& v) const = 0;

  virtual double membership_residual(const Eigen::VectorXd& p) const = 0;

  /// Replaces an image representative by the equivalent one closest to
  /// base (phase alignment on CP^m; identity elsewhere).
  virtual Eigen::VectorXd align_representative(const Eigen::VectorXd& base,
                                               const Eigen::VectorXd& rep) const {
    return rep;
  }

  /// Distance in the slice parameter to the nearest singular locus,
  /// used by the sampler's exclusion rule.
  virtual double singular_gap(const Eigen::VectorXd& p) const = 0;
};

// Flattening conventions (real/imag interleaved, column-major for
// matrices); the frames above are orthonormal for the flat dot product.
Eigen::VectorXd flatten_su3(const Matrix3c& B);
Matrix3c unflatten_su3(const Eigen::VectorXd& v);
Eigen::VectorXd flatten_complex(const Eigen::VectorXcd& z);
Eigen::VectorXcd unflatten_complex(const Eigen::VectorXd& v);

/// "su3", "sN" (1 <= N <= 7), "cpM" (1 <= M <= 5).
std::unique_ptr<ManifoldModel> make_manifold(const std::string& name);

using PointMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Map specification "kind:k", kind in {psi, rho, power|sphere, fold|cpm}.
struct MapSpec {
  std::string kind;
  long long k = 1;

  static MapSpec parse(const std::string& text);  // throws invalid_argument
  std::string str() const;
};

/// Binds a map spec to a manifold as a flattened-point callable; throws
/// std::invalid_argument on incompatible pairs (psi on spheres, even k
/// for psi/fold, ...).
PointMap make_point_map(const MapSpec& spec, const ManifoldModel& model);

}  // namespace cohomap
