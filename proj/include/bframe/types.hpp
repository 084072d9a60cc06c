#pragma once

#include <complex>

#include <Eigen/Dense>

namespace bframe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace bframe
