#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftrom {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

constexpr double kPi = 3.14159265358979323846;

// Time-stamped sequence of real grid states (marching output).
struct Trajectory {
  std::vector<double> times;
  std::vector<Vec> states;
};

inline std::vector<double> uniform_times(double t_final, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("time step must be positive");
  const int n = static_cast<int>(std::llround(t_final / dt));
  std::vector<double> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) out.push_back(i * dt);
  return out;
}

}  // namespace liftrom
