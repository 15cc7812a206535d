#pragma once

#include <Eigen/Dense>
#include <complex>

namespace sepcrit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Kronecker product, usable directly on expressions.  The scalar type of the
// result follows Eigen's product promotion rules, so real (x) complex works.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using ScalarA = typename DerivedA::Scalar;
  using ScalarB = typename DerivedB::Scalar;
  using Scalar = typename Eigen::ScalarBinaryOpTraits<ScalarA, ScalarB>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Scalar(a(i, j)) * b;
  return out;
}

// Singular values, non-increasing (Eigen's order).
template <typename Derived>
RealVector singular_values(const Eigen::MatrixBase<Derived>& m) {
  return m.eval().jacobiSvd().singularValues();
}

// Trace norm: sum of singular values.
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m) {
  return singular_values(m).sum();
}

// Spectral norm: largest singular value.
template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  auto sv = singular_values(m);
  return sv.size() == 0 ? 0.0 : sv(0);
}

// Eigenvalues of a Hermitian matrix, sorted increasing.  The input is
// symmetrized first so callers may pass matrices that are Hermitian only up
// to roundoff.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  ComplexMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace sepcrit
