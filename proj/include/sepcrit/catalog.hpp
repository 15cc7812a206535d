#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sepcrit/criteria.hpp"
#include "sepcrit/density.hpp"

namespace sepcrit {

// Reference states.  Every constructor returns a validated DensityMatrix.

// Maximally entangled qubit pair (|00> + |11>)/sqrt(2).
DensityMatrix bell_state();

// 3x3 bound entangled state built from the five-tile product basis whose
// complement has no product vector: the normalized projector onto the
// orthocomplement of the tiles.  PPT on both sides yet entangled.
DensityMatrix tiles_state();

// 3x3 bound entangled state with the chessboard support pattern, given by
// its (integer / 12) matrix.
DensityMatrix chessboard_state();

// N-party GHZ state over qudits: sum_i |i...i> / sqrt(d).
DensityMatrix ghz_state(int parties, int d);

// Werner-type qubit pair: p * Bell + (1 - p) * I/4 for p in [0, 1].
// Entangled iff p > 1/3.
DensityMatrix werner_qubit(double p);

// Interpolation x * tiles + (1 - x) * I/9 for x in [0, 1].
DensityMatrix tiles_noise(double x);

// Chessboard state embedded as three qutrits by attaching an ancilla in |0>,
// then mixed with 27-dimensional white noise:
// p * (chessboard (x) |0><0|) + (1 - p) I/27, dims {3, 3, 3}.  The margins
// of the correlation criteria do not depend on which pure ancilla is used.
DensityMatrix chessboard_with_ancilla(double p);

// The generator convention the printed tiles witness is expressed in:
// negated diagonal generators first, then symmetric, then antisymmetric.
GellMannBasis tiles_witness_basis();

// A 9x9 augmented-matrix witness tailored to the tiles state, carried in its
// own basis convention.  Detects tiles noise down to x ~ 0.94.
Witness tiles_witness();

// A one-parameter curve of states for threshold scanning.
struct StateFamily {
  std::string name;
  std::vector<int> dims;
  std::string parameter;
  double lo = 0.0;
  double hi = 1.0;
  std::function<DensityMatrix(double)> at;
};

const std::vector<StateFamily>& families();
const StateFamily& family_by_name(const std::string& name);  // Error if unknown

std::vector<std::string> state_names();
DensityMatrix state_by_name(const std::string& name);  // Error if unknown

}  // namespace sepcrit
