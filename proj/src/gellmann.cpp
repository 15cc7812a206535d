#include "sepcrit/gellmann.hpp"

#include <cmath>
#include <sstream>

namespace sepcrit {

namespace {

constexpr double kStructureTol = 1e-14;
constexpr double kGramTol = 1e-12;

std::vector<ComplexMatrix> grouped_generators(int d) {
  std::vector<ComplexMatrix> gens;
  gens.reserve(static_cast<std::size_t>(d) * d - 1);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = g(k, j) = Complex(1.0, 0.0);
      gens.push_back(std::move(g));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      gens.push_back(std::move(g));
    }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int a = 0; a < l; ++a) g(a, a) = scale;
    g(l, l) = -scale * l;
    gens.push_back(std::move(g));
  }
  return gens;
}

void check_generators(int d, const std::vector<ComplexMatrix>& gens) {
  if (static_cast<int>(gens.size()) != d * d - 1)
    throw BadDimension("generator count must be d^2 - 1");
  for (const auto& g : gens) {
    if (g.rows() != d || g.cols() != d) throw BadDimension("generator has wrong shape");
    if ((g - g.adjoint()).cwiseAbs().maxCoeff() > kStructureTol)
      throw BadDimension("generator is not Hermitian");
    if (std::abs(g.trace()) > kStructureTol) throw BadDimension("generator is not traceless");
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      const Complex gram = (gens[a] * gens[b]).trace();
      const double want = (a == b) ? 2.0 : 0.0;
      if (std::abs(gram - Complex(want, 0.0)) > kGramTol) {
        std::ostringstream msg;
        msg << "Gram condition fails at pair (" << a << "," << b << "): got " << gram;
        throw BadDimension(msg.str());
      }
    }
}

}  // namespace

GellMannBasis::GellMannBasis(int d, std::vector<ComplexMatrix> generators)
    : d_(d), generators_(std::move(generators)) {}

GellMannBasis::GellMannBasis(int d) : d_(d) {
  if (d < 2) throw BadDimension("basis needs d >= 2");
  generators_ = grouped_generators(d);
  check_generators(d, generators_);
}

GellMannBasis GellMannBasis::from_generators(int d, std::vector<ComplexMatrix> generators) {
  if (d < 2) throw BadDimension("basis needs d >= 2");
  check_generators(d, generators);
  return GellMannBasis(d, std::move(generators));
}

}  // namespace sepcrit
