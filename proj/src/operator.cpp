#include "qtraj/operator.hpp"

#include <algorithm>
#include <numeric>

namespace qtraj {

void require_square(const Op& a, const char* what) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

void require_same_dim(const Op& a, const Op& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
}

Op kron(const Op& a, const Op& b) {
  Op out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double commutator_norm(const Op& a, const Op& b) {
  require_same_dim(a, b, "commutator_norm");
  return frobenius(Op(a * b - b * a));
}

DensityOperator::DensityOperator(Op rho) : rho_(std::move(rho)) {
  require_square(rho_, "DensityOperator");
  if (frobenius(Op(rho_ - rho_.adjoint())) > herm_tol)
    throw std::invalid_argument("DensityOperator: not Hermitian");
  if (std::abs(rho_.trace().real() - 1.0) > trace_tol || std::abs(rho_.trace().imag()) > trace_tol)
    throw std::invalid_argument("DensityOperator: trace != 1");
  if (min_eigenvalue(rho_) < -psd_tol)
    throw std::invalid_argument("DensityOperator: not positive semidefinite");
}

DensityOperator DensityOperator::pure(const Vec& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw std::invalid_argument("DensityOperator::pure: zero vector");
  return DensityOperator(Op(outer(psi, psi) / n2));
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index d) {
  return DensityOperator(Op(identity(d) / static_cast<double>(d)));
}

Complex expectation(const DensityOperator& rho, const Op& z) {
  require_same_dim(rho.op(), z, "expectation");
  return (rho.op() * z).trace();
}

Op SpectralDecomposition::reconstruct() const {
  Op out = Op::Zero(projectors.front().rows(), projectors.front().cols());
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) out += eigenvalues[j] * projectors[j];
  return out;
}

SpectralDecomposition spectral(const Op& z, double degeneracy_tol) {
  require_square(z, "spectral");
  if (!is_hermitian(z)) throw std::invalid_argument("spectral: operator is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Op> solver(z);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectral: eigensolver failed");

  const auto& vals = solver.eigenvalues();  // ascending
  const Op& vecs = solver.eigenvectors();
  const Eigen::Index d = z.rows();

  SpectralDecomposition out;
  // Walk from the top so groups come out in descending order.
  Eigen::Index i = d - 1;
  while (i >= 0) {
    Eigen::Index j = i;
    while (j - 1 >= 0 && std::abs(vals(j - 1) - vals(i)) <= degeneracy_tol) --j;
    Op proj = Op::Zero(d, d);
    double lambda = 0.0;
    for (Eigen::Index k = j; k <= i; ++k) {
      proj += outer(vecs.col(k), vecs.col(k));
      lambda += vals(k);
    }
    lambda /= static_cast<double>(i - j + 1);
    out.eigenvalues.push_back(lambda);
    out.projectors.push_back(std::move(proj));
    i = j - 1;
  }
  return out;
}

double trace_distance(const Op& a, const Op& b) {
  require_same_dim(a, b, "trace_distance");
  const Op diff = a - b;
  // Difference of density operators is Hermitian; fall back to SVD otherwise.
  if (is_hermitian(diff, 1e-9)) {
    Eigen::SelfAdjointEigenSolver<Op> solver(diff);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Op> svd(diff);
  return 0.5 * svd.singularValues().sum();
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  return trace_distance(a.op(), b.op());
}

double min_eigenvalue(const Op& hermitian) {
  Eigen::SelfAdjointEigenSolver<Op> solver(hermitian);
  return solver.eigenvalues().minCoeff();
}

}  // namespace qtraj
