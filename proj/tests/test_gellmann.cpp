#include <doctest.h>

#include <cmath>

#include "sepcrit/gellmann.hpp"

using namespace sepcrit;

TEST_CASE("d = 2 yields the Pauli matrices in x, y, z order") {
  const GellMannBasis basis(2);
  REQUIRE(basis.count() == 3);

  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  CHECK((basis.generator(0) - x).cwiseAbs().maxCoeff() == 0.0);
  CHECK((basis.generator(1) - y).cwiseAbs().maxCoeff() == 0.0);
  CHECK((basis.generator(2) - z).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("d = 3 ordering groups symmetric, antisymmetric, diagonal") {
  const GellMannBasis basis(3);
  REQUIRE(basis.count() == 8);

  // Symmetric block first, in (0,1), (0,2), (1,2) order.
  CHECK(basis.generator(0)(0, 1) == Complex(1, 0));
  CHECK(basis.generator(1)(0, 2) == Complex(1, 0));
  CHECK(basis.generator(2)(1, 2) == Complex(1, 0));
  // Then the antisymmetric block with the same pair order.
  CHECK(basis.generator(3)(0, 1) == Complex(0, -1));
  CHECK(basis.generator(4)(0, 2) == Complex(0, -1));
  CHECK(basis.generator(5)(1, 2) == Complex(0, -1));
  // Diagonals last: diag(1,-1,0) and diag(1,1,-2)/sqrt(3).
  CHECK(basis.generator(6)(0, 0) == Complex(1, 0));
  CHECK(basis.generator(6)(1, 1) == Complex(-1, 0));
  CHECK(basis.generator(6)(2, 2) == Complex(0, 0));
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(basis.generator(7)(0, 0) - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(basis.generator(7)(2, 2) - Complex(-2 * s, 0)) < 1e-15);
}

TEST_CASE("generators satisfy the algebraic contract") {
  for (int d = 2; d <= 5; ++d) {
    const GellMannBasis basis(d);
    REQUIRE(basis.count() == d * d - 1);
    for (int a = 0; a < basis.count(); ++a) {
      const auto& g = basis.generator(a);
      CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK(std::abs(g.trace()) <= 1e-14);
      for (int b = a; b < basis.count(); ++b) {
        const Complex gram = (g * basis.generator(b)).trace();
        const double want = a == b ? 2.0 : 0.0;
        CHECK(std::abs(gram - Complex(want, 0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("from_generators admits a reordered basis and rejects broken ones") {
  const GellMannBasis grouped(3);
  std::vector<ComplexMatrix> reordered;
  for (int a = grouped.count() - 1; a >= 0; --a) reordered.push_back(grouped.generator(a));
  const GellMannBasis reversed = GellMannBasis::from_generators(3, reordered);
  CHECK((reversed.generator(0) - grouped.generator(7)).cwiseAbs().maxCoeff() == 0.0);

  // Negating a generator keeps the contract.
  std::vector<ComplexMatrix> negated = grouped.generators();
  negated[0] = -negated[0];
  CHECK_NOTHROW(GellMannBasis::from_generators(3, negated));

  // Wrong count, non-traceless, and broken Gram all fail.
  std::vector<ComplexMatrix> short_list(grouped.generators().begin(),
                                        grouped.generators().end() - 1);
  CHECK_THROWS_AS(GellMannBasis::from_generators(3, short_list), BadDimension);

  std::vector<ComplexMatrix> with_trace = grouped.generators();
  with_trace[0] = ComplexMatrix::Identity(3, 3);
  CHECK_THROWS_AS(GellMannBasis::from_generators(3, with_trace), BadDimension);

  std::vector<ComplexMatrix> duplicated = grouped.generators();
  duplicated[1] = duplicated[0];
  CHECK_THROWS_AS(GellMannBasis::from_generators(3, duplicated), BadDimension);

  std::vector<ComplexMatrix> rescaled = grouped.generators();
  rescaled[0] *= 0.5;
  CHECK_THROWS_AS(GellMannBasis::from_generators(3, rescaled), BadDimension);
}

TEST_CASE("dimension one and zero are rejected") {
  CHECK_THROWS_AS(GellMannBasis(1), BadDimension);
  CHECK_THROWS_AS(GellMannBasis(0), BadDimension);
}
