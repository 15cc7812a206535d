#include "sepcrit/catalog.hpp"

#include <cmath>

#include "sepcrit/matrix.hpp"

namespace sepcrit {

namespace {

ComplexVector basis_ket(int d, int i) {
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1.0;
  return v;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

DensityMatrix mixed_with_identity(const ComplexMatrix& pure_part, double weight,
                                  const std::vector<int>& dims) {
  const Eigen::Index n = pure_part.rows();
  ComplexMatrix mat = weight * pure_part +
                      (1.0 - weight) / static_cast<double>(n) * ComplexMatrix::Identity(n, n);
  return validate_density(mat, dims);
}

}  // namespace

DensityMatrix bell_state() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return validate_density(projector(psi), {2, 2});
}

DensityMatrix tiles_state() {
  const double r2 = std::sqrt(2.0);
  const ComplexVector e0 = basis_ket(3, 0), e1 = basis_ket(3, 1), e2 = basis_ket(3, 2);
  std::vector<ComplexVector> tiles;
  tiles.push_back(kron(e0, ComplexVector((e0 - e1) / r2)));
  tiles.push_back(kron(ComplexVector((e0 - e1) / r2), e2));
  tiles.push_back(kron(e2, ComplexVector((e1 - e2) / r2)));
  tiles.push_back(kron(ComplexVector((e1 - e2) / r2), e0));
  tiles.push_back(kron(ComplexVector((e0 + e1 + e2) / 3.0), ComplexVector(e0 + e1 + e2)));
  ComplexMatrix proj = ComplexMatrix::Zero(9, 9);
  for (const auto& t : tiles) proj += projector(t);
  const ComplexMatrix rho = (ComplexMatrix::Identity(9, 9) - proj) / 4.0;
  return validate_density(rho, {3, 3});
}

DensityMatrix chessboard_state() {
  // Integer pattern scaled by 1/12; the zero final row/column pins the
  // support to the chessboard cells.
  static const double cells[9][9] = {
      {1, 0, 1, 0, 0, 0, 1, 0, 0},   {0, 1, 0, 0, 0, -1, 0, -1, 0},
      {1, 0, 2, 0, -1, 0, 0, 0, 0},  {0, 0, 0, 1, 0, -1, 0, 1, 0},
      {0, 0, -1, 0, 1, 0, 1, 0, 0},  {0, -1, 0, -1, 0, 2, 0, 0, 0},
      {1, 0, 0, 0, 1, 0, 2, 0, 0},   {0, -1, 0, 1, 0, 0, 0, 2, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0}};
  ComplexMatrix mat(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) mat(i, j) = cells[i][j] / 12.0;
  return validate_density(mat, {3, 3});
}

DensityMatrix ghz_state(int parties, int d) {
  if (parties < 2) throw DimMismatch("GHZ needs at least two parties");
  if (d < 2) throw BadDimension("GHZ needs local dimension >= 2");
  Eigen::Index n = 1;
  for (int k = 0; k < parties; ++k) n *= d;
  ComplexVector psi = ComplexVector::Zero(n);
  // |i...i| has row-major offset i * (d^(N-1) + ... + 1).
  Eigen::Index step = 0;
  for (Eigen::Index s = 1, k = 0; k < parties; ++k, s *= d) step += s;
  for (int i = 0; i < d; ++i) psi(i * step) = 1.0 / std::sqrt(static_cast<double>(d));
  return validate_density(projector(psi), std::vector<int>(static_cast<std::size_t>(parties), d));
}

DensityMatrix werner_qubit(double p) {
  if (p < 0.0 || p > 1.0) throw Error("werner parameter must lie in [0, 1]");
  return mixed_with_identity(bell_state().matrix(), p, {2, 2});
}

DensityMatrix tiles_noise(double x) {
  if (x < 0.0 || x > 1.0) throw Error("tiles noise parameter must lie in [0, 1]");
  return mixed_with_identity(tiles_state().matrix(), x, {3, 3});
}

DensityMatrix chessboard_with_ancilla(double p) {
  if (p < 0.0 || p > 1.0) throw Error("chessboard noise parameter must lie in [0, 1]");
  const ComplexMatrix anc = projector(basis_ket(3, 0));
  const ComplexMatrix embedded = kron(chessboard_state().matrix(), anc);
  return mixed_with_identity(embedded, p, {3, 3, 3});
}

GellMannBasis tiles_witness_basis() {
  const GellMannBasis grouped(3);
  // Grouped order for d = 3: sym(0,1), sym(0,2), sym(1,2), anti(0,1),
  // anti(0,2), anti(1,2), diag(1,-1,0), diag(1,1,-2)/sqrt(3).
  std::vector<ComplexMatrix> gens;
  gens.push_back(-grouped.generator(6));
  gens.push_back(-grouped.generator(7));
  for (int a = 0; a < 6; ++a) gens.push_back(grouped.generator(a));
  return GellMannBasis::from_generators(3, std::move(gens));
}

Witness tiles_witness() {
  static const double cells[9][9] = {
      {0.8134, 0.1905, -0.11, 0.18, -0.4067, 0.1798, 0, 0, 0},
      {0.1905, 0.3849, -0.243, -0.806, 0.2608, -0.0989, 0, 0, 0},
      {-0.11, -0.243, 0.1043, -0.3511, -0.1506, 0.8736, 0, 0, 0},
      {0.1798, -0.0989, 0.8736, -0.3258, -0.1634, -0.2898, 0, 0, 0},
      {-0.4067, 0.2608, -0.1506, -0.1634, -0.867, -0.1634, 0, 0, 0},
      {0.1798, -0.806, -0.3511, -0.2898, -0.1634, -0.3258, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0.964, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0.964, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0.964}};
  RealTensor entries({9, 9});
  for (Eigen::Index i = 0; i < 9; ++i)
    for (Eigen::Index j = 0; j < 9; ++j) entries(i, j) = cells[i][j];
  return Witness(WitnessKind::AugmentedMatrix, std::move(entries),
                 {tiles_witness_basis(), tiles_witness_basis()});
}

const std::vector<StateFamily>& families() {
  static const std::vector<StateFamily> table = {
      {"tiles-noise", {3, 3}, "x", 0.0, 1.0, tiles_noise},
      {"chessboard-noise", {3, 3, 3}, "p", 0.0, 1.0, chessboard_with_ancilla},
      {"werner", {2, 2}, "p", 0.0, 1.0, werner_qubit},
  };
  return table;
}

const StateFamily& family_by_name(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw Error("unknown family: " + name);
}

std::vector<std::string> state_names() { return {"bell", "tiles", "chessboard", "ghz3"}; }

DensityMatrix state_by_name(const std::string& name) {
  if (name == "bell") return bell_state();
  if (name == "tiles") return tiles_state();
  if (name == "chessboard") return chessboard_state();
  if (name == "ghz3") return ghz_state(3, 2);
  throw Error("unknown state: " + name);
}

}  // namespace sepcrit
