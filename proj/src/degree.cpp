#include "cohomap/degree.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cohomap {

namespace {

constexpr double kOffManifoldTolerance = 1e-6;

void require_on_manifold(const ManifoldModel& model, const Eigen::VectorXd& q) {
  const double res = model.membership_residual(q);
  if (!(res <= kOffManifoldTolerance)) {
    throw std::runtime_error("map output off-manifold (residual " +
                             std::to_string(res) + ")");
  }
}

}  // namespace

Eigen::MatrixXd differential(const PointMap& map, const ManifoldModel& model,
                             const Eigen::VectorXd& p, double h) {
  if (!(h > 0)) throw std::invalid_argument("differential: step must be positive");
  const int n = model.dim();

  const Eigen::VectorXd q = map(p);
  require_on_manifold(model, q);

  const Eigen::MatrixXd source_frame = model.frame(p);
  const Eigen::MatrixXd image_frame = model.frame(q);

  Eigen::MatrixXd J(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd plus = map(model.retract(p, source_frame.col(i), h));
    Eigen::VectorXd minus = map(model.retract(p, source_frame.col(i), -h));
    require_on_manifold(model, plus);
    require_on_manifold(model, minus);
    plus = model.align_representative(q, plus);
    minus = model.align_representative(q, minus);
    const Eigen::VectorXd diff =
        model.project(q, (plus - minus) / (2.0 * h));
    J.col(i) = image_frame.transpose() * diff;
  }
  return J;
}

double signed_jacobian(const PointMap& map, const ManifoldModel& model,
                       const Eigen::VectorXd& p, double h) {
  return differential(map, model, p, h).determinant();
}

DegreeEstimate estimate_degree(const PointMap& map, const ManifoldModel& model,
                               const DegreeOptions& opt) {
  if (opt.samples < 1000) {
    throw std::invalid_argument("degree estimation needs at least 10^3 samples");
  }
  const long long n = opt.samples;
  std::vector<double> jac(static_cast<std::size_t>(n));
  std::vector<long long> excluded_counts(static_cast<std::size_t>(n), 0);
  std::vector<long long> rejected_counts(static_cast<std::size_t>(n), 0);
  std::vector<std::string> failure;
  std::mutex failure_mu;

  // Sample i always uses stream i, so the estimate is independent of the
  // worker count.
  auto worker = [&](long long begin, long long end) {
    for (long long i = begin; i < end; ++i) {
      RandomSource rng(opt.seed, static_cast<std::uint64_t>(i));
      bool done = false;
      for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
        Eigen::VectorXd p = model.sample(rng);
        if (model.singular_gap(p) < opt.singular_exclusion) {
          ++excluded_counts[static_cast<std::size_t>(i)];
          continue;
        }
        try {
          jac[static_cast<std::size_t>(i)] = signed_jacobian(map, model, p, opt.h);
          done = true;
        } catch (const std::exception& e) {
          ++rejected_counts[static_cast<std::size_t>(i)];
          std::lock_guard<std::mutex> lock(failure_mu);
          if (failure.size() < 8) failure.emplace_back(e.what());
        }
      }
      if (!done) {
        std::lock_guard<std::mutex> lock(failure_mu);
        failure.emplace_back("sample " + std::to_string(i) +
                             " exhausted resampling attempts");
        return;
      }
    }
  };

  int workers = opt.workers > 0
                    ? opt.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > n) workers = static_cast<int>(n);

  if (workers == 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long long begin = w * chunk;
      const long long end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  long long excluded = 0, rejected = 0;
  for (long long i = 0; i < n; ++i) {
    excluded += excluded_counts[static_cast<std::size_t>(i)];
    rejected += rejected_counts[static_cast<std::size_t>(i)];
  }
  const double total_draws = static_cast<double>(n + excluded + rejected);
  if (rejected > 0 && static_cast<double>(rejected) / total_draws > 0.01) {
    std::string detail = failure.empty() ? "" : (": " + failure.front());
    throw std::runtime_error(
        "more than 1% of draws rejected for off-manifold outputs" + detail);
  }
  if (!failure.empty() && failure.back().find("exhausted") != std::string::npos) {
    throw std::runtime_error("degree estimation aborted: " + failure.back());
  }

  // index-ordered reduction keeps the result worker-count independent
  double mean = 0.0;
  for (long long i = 0; i < n; ++i) mean += jac[static_cast<std::size_t>(i)];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (long long i = 0; i < n; ++i) {
    const double d = jac[static_cast<std::size_t>(i)] - mean;
    ss += d * d;
  }

  DegreeEstimate est;
  est.mean = mean;
  est.stderr_ = n > 1 ? std::sqrt(ss / (static_cast<double>(n) *
                                        static_cast<double>(n - 1)))
                      : 0.0;
  est.samples = n;
  est.rounded = std::llround(mean);
  est.accepted = std::abs(mean - static_cast<double>(est.rounded)) <=
                 std::max(0.2, 3.0 * est.stderr_);
  est.excluded_fraction = static_cast<double>(excluded) / total_draws;
  return est;
}

}  // namespace cohomap
