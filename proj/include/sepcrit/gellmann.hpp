#pragma once

#include <vector>

#include "sepcrit/errors.hpp"
#include "sepcrit/matrix.hpp"

namespace sepcrit {

// Generalized Gell-Mann generators of su(d): d^2 - 1 Hermitian traceless
// matrices with Tr(g_a g_b) = 2 delta_ab.  The library-wide ordering groups
// by kind:
//
//   symmetric    E_jk + E_kj                      for j < k, (j,k) lexicographic
//   antisymmetric -i (E_jk - E_kj)                for j < k, (j,k) lexicographic
//   diagonal     sqrt(2/(l(l+1))) diag(1,...,1,-l,0,...)  for l = 1..d-1
//
// For d = 2 this yields the Pauli matrices in the order x, y, z.  Catalog
// witnesses may carry a different generator convention; from_generators
// admits any set that satisfies the same algebraic contract.
class GellMannBasis {
 public:
  explicit GellMannBasis(int d);

  // Wraps caller-supplied generators after checking count, Hermiticity,
  // tracelessness, and the Gram condition Tr(g_a g_b) = 2 delta_ab.
  static GellMannBasis from_generators(int d, std::vector<ComplexMatrix> generators);

  int dim() const { return d_; }
  int count() const { return static_cast<int>(generators_.size()); }
  const ComplexMatrix& generator(int a) const { return generators_[static_cast<std::size_t>(a)]; }
  const std::vector<ComplexMatrix>& generators() const { return generators_; }

 private:
  GellMannBasis(int d, std::vector<ComplexMatrix> generators);

  int d_;
  std::vector<ComplexMatrix> generators_;
};

}  // namespace sepcrit
