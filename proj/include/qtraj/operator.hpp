#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qtraj/types.hpp"

namespace qtraj {

// --- basic operator algebra ------------------------------------------------

inline Op adjoint(const Op& a) { return a.adjoint(); }

inline double frobenius(const Op& a) { return a.norm(); }

inline Op identity(Eigen::Index d) { return Op::Identity(d, d); }

inline bool is_hermitian(const Op& a, double tolr = tol::decomp) {
  return a.rows() == a.cols() && frobenius(Op(a - a.adjoint())) <= tolr;
}

inline bool is_unitary(const Op& u, double tolr = tol::decomp) {
  if (u.rows() != u.cols()) return false;
  return frobenius(Op(u.adjoint() * u - identity(u.rows()))) <= tolr;
}

void require_square(const Op& a, const char* what);
void require_same_dim(const Op& a, const Op& b, const char* what);

// |a><b|
inline Op outer(const Vec& a, const Vec& b) { return a * b.adjoint(); }

inline double norm_sq(const Vec& v) { return v.squaredNorm(); }

Op kron(const Op& a, const Op& b);
Vec kron(const Vec& a, const Vec& b);

// Frobenius norm of AB - BA.
double commutator_norm(const Op& a, const Op& b);

// --- validated density operator ---------------------------------------------

// Hermitian, positive semidefinite, unit-trace matrix. Construction validates;
// violations throw std::invalid_argument.
class DensityOperator {
 public:
  static constexpr double herm_tol = 1e-10;
  static constexpr double trace_tol = 1e-10;
  static constexpr double psd_tol = 1e-10;

  explicit DensityOperator(Op rho);
  static DensityOperator pure(const Vec& psi);
  static DensityOperator maximally_mixed(Eigen::Index d);

  const Op& op() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }
  double purity() const { return (rho_ * rho_).trace().real(); }

 private:
  Op rho_;
};

// tr(rho Z); real within 1e-10 when Z is Hermitian.
Complex expectation(const DensityOperator& rho, const Op& z);

// --- spectral decomposition ---------------------------------------------------

// Z = sum_j lambda_j P_j with eigenvalues grouped to degeneracy_tol and
// ordered by descending value.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Op> projectors;

  std::size_t size() const { return eigenvalues.size(); }
  Op reconstruct() const;
};

SpectralDecomposition spectral(const Op& z, double degeneracy_tol = tol::degeneracy);

// (1/2) sum of singular values of a - b; in [0, 1] for density operators.
double trace_distance(const DensityOperator& a, const DensityOperator& b);
double trace_distance(const Op& a, const Op& b);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Op& hermitian);

}  // namespace qtraj
