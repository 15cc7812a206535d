#pragma once

#include <cstdint>
#include <vector>

#include "sepcrit/errors.hpp"
#include "sepcrit/matrix.hpp"

namespace sepcrit {

// Tolerances used when admitting a matrix as a density operator.  The
// eigenvalue floor is negative: tiny negative eigenvalues from roundoff are
// accepted, anything below is rejected as not positive semidefinite.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;

// A validated multipartite density operator.  Instances only come out of
// validate_density (or helpers built on it), so holding a DensityMatrix is
// proof the matrix is Hermitian, unit trace, PSD, and sized to its dims.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return mat_; }
  const std::vector<int>& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  Eigen::Index side() const { return mat_.rows(); }

 private:
  DensityMatrix(ComplexMatrix mat, std::vector<int> dims);
  friend DensityMatrix validate_density(const ComplexMatrix& mat, std::vector<int> dims);

  ComplexMatrix mat_;
  std::vector<int> dims_;
};

// The only way to obtain a DensityMatrix.  Throws DimMismatch, NotHermitian,
// TraceNotOne, or NotPositive; on success the stored matrix is the exactly
// Hermitian part (m + m^dagger)/2 of the input.
DensityMatrix validate_density(const ComplexMatrix& mat, std::vector<int> dims);

// Transposes the indices of one party (0-based) and leaves the rest alone.
// Applying it twice returns the original matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, int party);

// Realignment of a bipartite state: R[(i,k),(j,l)] = rho[(i,j),(k,l)] with
// row/column multi-indices split as row = i*d2 + j over parties.  R has shape
// d1^2 x d2^2; for a product state it factors as vec(rho_A) vec(rho_B)^T.
ComplexMatrix realign(const DensityMatrix& rho);

// An explicit separable decomposition: rho = sum_i weight[i] * (x) over
// parties of |vectors[i][party]><vectors[i][party]|.  Weights are positive
// and sum to one; every vector is unit norm.
struct SeparableEnsemble {
  std::vector<int> dims;
  std::vector<double> weights;
  std::vector<std::vector<ComplexVector>> vectors;  // [term][party]
};

DensityMatrix assemble(const SeparableEnsemble& ensemble);

struct RandomSeparable {
  DensityMatrix state;
  SeparableEnsemble ensemble;
};

// Draws `terms` product states with Haar-like factors (normalized complex
// Gaussian vectors) and mixes them with normalized exponential weights.
// Deterministic in `seed`.
RandomSeparable random_separable(const std::vector<int>& dims, int terms, std::uint64_t seed);

}  // namespace sepcrit
