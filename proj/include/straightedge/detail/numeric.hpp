#pragma once

#include <Eigen/Core>

#include <cmath>

namespace straightedge::detail {

// Neumaier compensated accumulation; order of add() calls is part of the
// determinism contract of every aggregate in this library.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

inline double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

}  // namespace straightedge::detail
