#include "sepcrit/bloch.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sepcrit {

namespace {

// How far from real the coefficient tensors may drift before we treat it as
// a fault rather than roundoff (the traces are real analytically).
constexpr double kImagTol = 1e-10;

void check_bases(const DensityMatrix& rho, const std::vector<GellMannBasis>& bases) {
  if (bases.size() != rho.dims().size())
    throw DimMismatch("need one generator basis per party");
  for (std::size_t k = 0; k < bases.size(); ++k)
    if (bases[k].dim() != rho.dims()[k])
      throw DimMismatch("basis dimension does not match its party");
}

std::vector<GellMannBasis> default_bases(const DensityMatrix& rho) {
  std::vector<GellMannBasis> bases;
  bases.reserve(rho.dims().size());
  for (int d : rho.dims()) bases.emplace_back(d);
  return bases;
}

// rho reshaped so party k contributes one mode of extent d_k^2 holding the
// pair (row digit, column digit) as i*d_k + j.
ComplexTensor paired_tensor(const DensityMatrix& rho) {
  const auto& dims = rho.dims();
  const int parties = rho.parties();
  std::vector<Eigen::Index> modes(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k)
    modes[k] = static_cast<Eigen::Index>(dims[k]) * dims[k];
  ComplexTensor paired(modes);

  const Eigen::Index n = rho.side();
  std::vector<Eigen::Index> idx(dims.size());
  for (Eigen::Index row = 0; row < n; ++row)
    for (Eigen::Index col = 0; col < n; ++col) {
      Eigen::Index r = row, c = col;
      for (int k = parties - 1; k >= 0; --k) {
        const int d = dims[static_cast<std::size_t>(k)];
        idx[static_cast<std::size_t>(k)] = (r % d) * d + (c % d);
        r /= d;
        c /= d;
      }
      paired.at(idx) = rho.matrix()(row, col);
    }
  return paired;
}

// Coefficient map for one party.  Row 0 extracts the identity component
// (trace / d); row a >= 1 extracts generator a-1: sum_ij rho_ij (g)_ji / 2.
// with_identity_row = false drops row 0, which computes the correlation
// tensor directly.
Eigen::MatrixXcd coefficient_map(const GellMannBasis& basis, bool with_identity_row) {
  const int d = basis.dim();
  const Eigen::Index rows = with_identity_row ? d * d : d * d - 1;
  Eigen::MatrixXcd map = Eigen::MatrixXcd::Zero(rows, static_cast<Eigen::Index>(d) * d);
  Eigen::Index row = 0;
  if (with_identity_row) {
    for (int i = 0; i < d; ++i) map(0, static_cast<Eigen::Index>(i) * d + i) = 1.0 / d;
    row = 1;
  }
  for (int a = 0; a < basis.count(); ++a, ++row)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        map(row, static_cast<Eigen::Index>(i) * d + j) = basis.generator(a)(j, i) / 2.0;
  return map;
}

RealTensor realify(const ComplexTensor& t) {
  const double imag_max = t.data().imag().cwiseAbs().maxCoeff();
  if (imag_max > kImagTol) {
    std::ostringstream msg;
    msg << "coefficient tensor has imaginary residue " << imag_max;
    throw std::logic_error(msg.str());
  }
  RealTensor out(t.modes());
  out.data() = t.data().real();
  return out;
}

RealTensor coefficients(const DensityMatrix& rho, const std::vector<GellMannBasis>& bases,
                        bool with_identity_row) {
  check_bases(rho, bases);
  ComplexTensor t = paired_tensor(rho);
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(bases.size()); ++k)
    t = mode_apply(t, coefficient_map(bases[static_cast<std::size_t>(k)], with_identity_row), k);
  return realify(t);
}

}  // namespace

RealTensor augmented_tensor(const DensityMatrix& rho, const std::vector<GellMannBasis>& bases) {
  return coefficients(rho, bases, true);
}

RealTensor augmented_tensor(const DensityMatrix& rho) {
  return augmented_tensor(rho, default_bases(rho));
}

RealTensor correlation_tensor(const DensityMatrix& rho, const std::vector<GellMannBasis>& bases) {
  return coefficients(rho, bases, false);
}

RealTensor correlation_tensor(const DensityMatrix& rho) {
  return correlation_tensor(rho, default_bases(rho));
}

DensityMatrix reconstruct(const RealTensor& augmented, const std::vector<GellMannBasis>& bases) {
  if (augmented.order() != static_cast<Eigen::Index>(bases.size()))
    throw ShapeMismatch("need one generator basis per tensor mode");
  std::vector<int> dims;
  dims.reserve(bases.size());
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const int d = bases[k].dim();
    if (augmented.modes()[k] != static_cast<Eigen::Index>(d) * d)
      throw ShapeMismatch("augmented mode extent must be d^2 for its basis");
    dims.push_back(d);
  }

  ComplexTensor t(augmented.modes());
  t.data() = augmented.data().cast<Complex>();
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(bases.size()); ++k) {
    const GellMannBasis& basis = bases[static_cast<std::size_t>(k)];
    const int d = basis.dim();
    // Inverse map: coefficient index to matrix-entry pairs, identity first.
    Eigen::MatrixXcd expand = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d) * d,
                                                     static_cast<Eigen::Index>(d) * d);
    for (int i = 0; i < d; ++i) expand(static_cast<Eigen::Index>(i) * d + i, 0) = 1.0;
    for (int a = 0; a < basis.count(); ++a)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          expand(static_cast<Eigen::Index>(i) * d + j, a + 1) = basis.generator(a)(i, j);
    t = mode_apply(t, expand, k);
  }

  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  ComplexMatrix mat(n, n);
  std::vector<Eigen::Index> idx(dims.size());
  for (Eigen::Index row = 0; row < n; ++row)
    for (Eigen::Index col = 0; col < n; ++col) {
      Eigen::Index r = row, c = col;
      for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        const int d = dims[static_cast<std::size_t>(k)];
        idx[static_cast<std::size_t>(k)] = (r % d) * d + (c % d);
        r /= d;
        c /= d;
      }
      mat(row, col) = t.at(idx);
    }
  return validate_density(mat, dims);
}

BipartiteSplit bipartite_split(const RealTensor& augmented) {
  if (augmented.order() != 2) throw NotBipartite("expected an order-2 augmented tensor");
  const RealMatrix full = unfold(augmented, 0);
  BipartiteSplit split;
  split.augmented = full;
  split.r = full.col(0).tail(full.rows() - 1);
  split.s = full.row(0).tail(full.cols() - 1).transpose();
  split.body = full.bottomRightCorner(full.rows() - 1, full.cols() - 1);
  return split;
}

BlochVector pure_bloch(const ComplexVector& psi, const GellMannBasis& basis) {
  if (psi.size() != basis.dim()) throw DimMismatch("state vector does not match basis dimension");
  if (std::abs(psi.norm() - 1.0) > 1e-12) throw NotNormalized("state vector must be unit norm");
  BlochVector x{basis.dim(), RealVector(basis.count())};
  for (int a = 0; a < basis.count(); ++a) {
    const Complex v = psi.adjoint() * (basis.generator(a) * psi);
    x.coeffs(a) = v.real() / 2.0;
  }
  return x;
}

RealVector augmented_coeffs(const BlochVector& x) {
  RealVector out(x.coeffs.size() + 1);
  out(0) = 1.0 / x.dim;
  out.tail(x.coeffs.size()) = x.coeffs;
  return out;
}

}  // namespace sepcrit
