#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "vflab/types.hpp"

namespace testsupport {

inline std::mt19937 make_rng(std::uint32_t seed) { return std::mt19937(seed); }

/// Uniformly distributed rotation matrix from a normalized random quaternion.
inline Eigen::Matrix3d random_rotation(std::mt19937& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond q(normal(gen), normal(gen), normal(gen), normal(gen));
  q.normalize();
  return q.toRotationMatrix();
}

inline double trapezoid(const std::vector<double>& y, double dx) {
  if (y.size() < 2) return 0.0;
  double acc = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) acc += y[i];
  return acc * dx;
}

/// Largest node-to-node distance between two equally sized node sets.
inline double max_node_distance(const std::vector<vflab::Vec3>& a,
                                const std::vector<vflab::Vec3>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, (a[i] - b[i]).norm());
  }
  return worst;
}

/// Root-mean-square node distance; averages out incoherent roundoff.
inline double rms_node_distance(const std::vector<vflab::Vec3>& a,
                                const std::vector<vflab::Vec3>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += (a[i] - b[i]).squaredNorm();
  }
  return std::sqrt(acc / static_cast<double>(a.size()));
}

}  // namespace testsupport
