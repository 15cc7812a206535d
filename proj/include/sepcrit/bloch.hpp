#pragma once

#include <vector>

#include "sepcrit/density.hpp"
#include "sepcrit/gellmann.hpp"
#include "sepcrit/tensor.hpp"

namespace sepcrit {

// Correlation data of an N-party state in a product of generator bases.
//
// The augmented tensor has modes d_k^2 with index 0 standing for the
// (unnormalized) identity and index a >= 1 for generator a-1.  With
// S = {k : a_k >= 1} the entry is
//
//   Tr(rho * (x)_k L_k) / (2^|S| * prod_{m not in S} d_m),
//
// where L_k is generator a_k - 1 for k in S and the identity otherwise.
// Entry (0,...,0) is 1/(d_1...d_N); a full-support entry is a correlation
// tensor component Tr(rho * g (x) ... (x) g) / 2^N.
//
// The correlation tensor is the full-support block alone, with modes
// d_k^2 - 1 and 0-based generator indices.

RealTensor augmented_tensor(const DensityMatrix& rho, const std::vector<GellMannBasis>& bases);
RealTensor augmented_tensor(const DensityMatrix& rho);

RealTensor correlation_tensor(const DensityMatrix& rho, const std::vector<GellMannBasis>& bases);
RealTensor correlation_tensor(const DensityMatrix& rho);

// Inverse map: rebuilds the state from its augmented tensor,
// rho = sum over all indices of entry * (x)_k (identity or generator).
// The result goes through density validation, so a tensor that does not come
// from a state fails with the corresponding validation error.
DensityMatrix reconstruct(const RealTensor& augmented, const std::vector<GellMannBasis>& bases);

// Bipartite view of an order-2 augmented tensor: local Bloch vectors r, s,
// the body correlation matrix T, and the full augmented matrix whose first
// row/column hold the identity components.
struct BipartiteSplit {
  RealVector r;
  RealVector s;
  RealMatrix body;       // (d1^2-1) x (d2^2-1)
  RealMatrix augmented;  // d1^2 x d2^2
};

BipartiteSplit bipartite_split(const RealTensor& augmented);

// Bloch vector of a pure state: x_a = <psi| g_a |psi> / 2.  Requires a unit
// vector.  Its Euclidean norm is sqrt((d-1)/(2d)) for every pure state.
struct BlochVector {
  int dim;
  RealVector coeffs;
};

BlochVector pure_bloch(const ComplexVector& psi, const GellMannBasis& basis);

// Prepends the identity component 1/d, giving the column that the augmented
// matrix of a product state factors over; its norm is
// sqrt((d^2 - d + 2) / (2 d^2)).
RealVector augmented_coeffs(const BlochVector& x);

}  // namespace sepcrit
