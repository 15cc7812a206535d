#include "sepcrit/density.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace sepcrit {

namespace {

Eigen::Index product_of(const std::vector<int>& dims) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  return n;
}

// Strides of a row-major multi-index over dims (last party fastest).
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, std::vector<int> dims)
    : mat_(std::move(mat)), dims_(std::move(dims)) {}

DensityMatrix validate_density(const ComplexMatrix& mat, std::vector<int> dims) {
  if (dims.empty()) throw DimMismatch("dims list is empty");
  for (int d : dims)
    if (d < 2) throw DimMismatch("every party dimension must be at least 2");
  const Eigen::Index n = product_of(dims);
  if (mat.rows() != n || mat.cols() != n) {
    std::ostringstream msg;
    msg << "matrix is " << mat.rows() << "x" << mat.cols() << " but dims require " << n << "x" << n;
    throw DimMismatch(msg.str());
  }
  const double herm_dev = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    std::ostringstream msg;
    msg << "max |m - m^dagger| = " << herm_dev << " exceeds " << kHermitianTol;
    throw NotHermitian(msg.str());
  }
  ComplexMatrix herm = (mat + mat.adjoint()) / 2.0;
  const double trace_dev = std::abs(herm.trace() - Complex(1.0, 0.0));
  if (trace_dev > kTraceTol) {
    std::ostringstream msg;
    msg << "|trace - 1| = " << trace_dev << " exceeds " << kTraceTol;
    throw TraceNotOne(msg.str());
  }
  const RealVector eigs = hermitian_eigenvalues(herm);
  if (eigs(0) < kEigenvalueFloor) {
    std::ostringstream msg;
    msg << "smallest eigenvalue " << eigs(0) << " is below " << kEigenvalueFloor;
    throw NotPositive(msg.str());
  }
  return DensityMatrix(std::move(herm), std::move(dims));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int party) {
  const auto& dims = rho.dims();
  if (party < 0 || party >= rho.parties()) throw BadParty("party index out of range");
  const auto strides = strides_of(dims);
  const Eigen::Index n = rho.side();
  const Eigen::Index stride = strides[static_cast<std::size_t>(party)];
  const int d = dims[static_cast<std::size_t>(party)];

  ComplexMatrix out(n, n);
  for (Eigen::Index row = 0; row < n; ++row) {
    const Eigen::Index ri = (row / stride) % d;
    for (Eigen::Index col = 0; col < n; ++col) {
      const Eigen::Index ci = (col / stride) % d;
      // Swap the party's row and column digits, keep all other digits.
      const Eigen::Index new_row = row + (ci - ri) * stride;
      const Eigen::Index new_col = col + (ri - ci) * stride;
      out(new_row, new_col) = rho.matrix()(row, col);
    }
  }
  return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
  if (rho.parties() != 2) throw NotBipartite("realignment needs exactly two parties");
  const int d1 = rho.dims()[0];
  const int d2 = rho.dims()[1];
  ComplexMatrix out(static_cast<Eigen::Index>(d1) * d1, static_cast<Eigen::Index>(d2) * d2);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d1; ++k)
      for (int j = 0; j < d2; ++j)
        for (int l = 0; l < d2; ++l)
          out(static_cast<Eigen::Index>(i) * d1 + k, static_cast<Eigen::Index>(j) * d2 + l) =
              rho.matrix()(static_cast<Eigen::Index>(i) * d2 + j,
                           static_cast<Eigen::Index>(k) * d2 + l);
  return out;
}

DensityMatrix assemble(const SeparableEnsemble& ensemble) {
  const Eigen::Index n = product_of(ensemble.dims);
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (std::size_t t = 0; t < ensemble.weights.size(); ++t) {
    ComplexVector product = ensemble.vectors[t][0];
    for (std::size_t p = 1; p < ensemble.dims.size(); ++p) {
      ComplexVector next(product.size() * ensemble.vectors[t][p].size());
      for (Eigen::Index a = 0; a < product.size(); ++a)
        next.segment(a * ensemble.vectors[t][p].size(), ensemble.vectors[t][p].size()) =
            product(a) * ensemble.vectors[t][p];
      product = std::move(next);
    }
    acc += ensemble.weights[t] * (product * product.adjoint());
  }
  return validate_density(acc, ensemble.dims);
}

RandomSeparable random_separable(const std::vector<int>& dims, int terms, std::uint64_t seed) {
  if (terms < 1) throw DimMismatch("need at least one product term");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  SeparableEnsemble ensemble;
  ensemble.dims = dims;
  ensemble.weights.resize(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (auto& w : ensemble.weights) {
    w = expo(rng);
    total += w;
  }
  for (auto& w : ensemble.weights) w /= total;

  ensemble.vectors.resize(static_cast<std::size_t>(terms));
  for (auto& term : ensemble.vectors) {
    term.reserve(dims.size());
    for (int d : dims) {
      ComplexVector v(d);
      for (int a = 0; a < d; ++a) v(a) = Complex(gauss(rng), gauss(rng));
      v.normalize();
      term.push_back(std::move(v));
    }
  }
  DensityMatrix state = assemble(ensemble);
  return RandomSeparable{std::move(state), std::move(ensemble)};
}

}  // namespace sepcrit
