#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qtraj {

using Complex = std::complex<double>;
using Op = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Tolerance tiers used throughout: exact arithmetic identities vs.
// decompositions / normalization residuals.
namespace tol {
inline constexpr double exact = 1e-12;
inline constexpr double decomp = 1e-10;
inline constexpr double degeneracy = 1e-8;
}  // namespace tol

}  // namespace qtraj
