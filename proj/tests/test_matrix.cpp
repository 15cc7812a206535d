#include <doctest.h>

#include <random>

#include "sepcrit/density.hpp"
#include "sepcrit/matrix.hpp"

using namespace sepcrit;

namespace {

ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

// Trace norm through the eigenvalues of m m^dagger, independent of the SVD
// path used by the library.
double trace_norm_by_eigenvalues(const ComplexMatrix& m) {
  const RealVector eigs = hermitian_eigenvalues(m * m.adjoint());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) acc += std::sqrt(std::max(0.0, eigs(i)));
  return acc;
}

}  // namespace

TEST_CASE("kron matches hand-computed blocks") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  CHECK(k(0, 1) == Complex(0.0, -1.0));
  CHECK(k(1, 0) == Complex(0.0, 1.0));
  CHECK(k(0, 3) == Complex(0.0, -2.0));
  CHECK(k(2, 1) == Complex(0.0, -3.0));
  CHECK(k(3, 2) == Complex(0.0, 4.0));
  CHECK(k(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("kron accepts expressions and mixed scalars") {
  const RealMatrix i2 = RealMatrix::Identity(2, 2);
  const ComplexMatrix x = random_complex(2, 2, 7);
  const ComplexMatrix k = kron(2.0 * i2, x);
  CHECK((k.topLeftCorner(2, 2) - 2.0 * x).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  CHECK(k.topRightCorner(2, 2).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("singular values are sorted and consistent with the trace norm") {
  const ComplexMatrix m = random_complex(5, 7, 11);
  const RealVector sv = singular_values(m);
  REQUIRE(sv.size() == 5);
  for (Eigen::Index i = 1; i < sv.size(); ++i) CHECK(sv(i - 1) >= sv(i));
  CHECK(std::abs(trace_norm(m) - sv.sum()) < 1e-12);
  CHECK(std::abs(spectral_norm(m) - sv(0)) < 1e-12);
}

TEST_CASE("trace norm agrees with the eigenvalue route") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ComplexMatrix m = random_complex(4 + seed % 3, 6, 100 + seed);
    CHECK(std::abs(trace_norm(m) - trace_norm_by_eigenvalues(m)) < 1e-10);
  }
}

TEST_CASE("hermitian eigenvalues come out increasing") {
  ComplexMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  const RealVector eigs = hermitian_eigenvalues(z);
  CHECK(eigs(0) == doctest::Approx(-1.0));
  CHECK(eigs(1) == doctest::Approx(1.0));
}

TEST_CASE("validate_density accepts the maximally mixed state") {
  const DensityMatrix rho = validate_density(ComplexMatrix::Identity(4, 4) / 4.0, {2, 2});
  CHECK(rho.parties() == 2);
  CHECK(rho.side() == 4);
  CHECK(rho.dims() == std::vector<int>{2, 2});
}

TEST_CASE("validate_density rejects each defect with its own error") {
  ComplexMatrix ok = ComplexMatrix::Identity(4, 4) / 4.0;

  ComplexMatrix skew = ok;
  skew(0, 1) = Complex(0.0, 1e-3);
  CHECK_THROWS_AS(validate_density(skew, {2, 2}), NotHermitian);

  CHECK_THROWS_AS(validate_density(2.0 * ok, {2, 2}), TraceNotOne);

  ComplexMatrix indef = ok;
  indef(0, 0) = -0.25;
  indef(1, 1) = 0.75;
  CHECK_THROWS_AS(validate_density(indef, {2, 2}), NotPositive);

  CHECK_THROWS_AS(validate_density(ok, {2, 3}), DimMismatch);
  CHECK_THROWS_AS(validate_density(ok, {}), DimMismatch);
  CHECK_THROWS_AS(validate_density(ok, {4, 1}), DimMismatch);
}

TEST_CASE("validate_density tolerates roundoff-sized defects") {
  ComplexMatrix nearly = ComplexMatrix::Identity(4, 4) / 4.0;
  nearly(0, 1) = Complex(0.0, 1e-12);
  nearly(0, 0) += 1e-12;
  CHECK_NOTHROW(validate_density(nearly, {2, 2}));
}

TEST_CASE("partial transpose is an involution and permutes entries") {
  const RandomSeparable rs = random_separable({2, 3}, 3, 42);
  const ComplexMatrix pt = partial_transpose(rs.state, 0);
  const DensityMatrix as_state = validate_density(pt, {2, 3});
  const ComplexMatrix back = partial_transpose(as_state, 0);
  CHECK((back - rs.state.matrix()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(partial_transpose(rs.state, 2), BadParty);
  CHECK_THROWS_AS(partial_transpose(rs.state, -1), BadParty);
}

TEST_CASE("partial transpose of the Bell state exposes the negative eigenvalue") {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const DensityMatrix rho = validate_density(bell, {2, 2});
  for (int party : {0, 1}) {
    const RealVector eigs = hermitian_eigenvalues(partial_transpose(rho, party));
    CHECK(eigs(0) == doctest::Approx(-0.5));
  }
}

TEST_CASE("partial transpose on a three-party state moves only its party") {
  const RandomSeparable rs = random_separable({2, 2, 2}, 2, 5);
  // Transposing party 1 equals conjugating by nothing on parties 0 and 2:
  // check one entry relation rho'[(i a j),(k b l)] = rho[(i b j),(k a l)].
  const ComplexMatrix pt = partial_transpose(rs.state, 1);
  const auto& m = rs.state.matrix();
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int b = 0; b < 2; ++b)
            for (int l = 0; l < 2; ++l)
              CHECK(pt(4 * i + 2 * a + j, 4 * k + 2 * b + l) ==
                    m(4 * i + 2 * b + j, 4 * k + 2 * a + l));
}

TEST_CASE("realignment reproduces the reference trace norms") {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(std::abs(trace_norm(realign(validate_density(bell, {2, 2}))) - 2.0) < 1e-12);

  const DensityMatrix mixed22 = validate_density(ComplexMatrix::Identity(4, 4) / 4.0, {2, 2});
  CHECK(std::abs(trace_norm(realign(mixed22)) - 0.5) < 1e-12);

  ComplexMatrix zz = ComplexMatrix::Zero(4, 4);
  zz(0, 0) = 1.0;  // |00><00|
  CHECK(std::abs(trace_norm(realign(validate_density(zz, {2, 2}))) - 1.0) < 1e-12);

  const DensityMatrix mixed33 = validate_density(ComplexMatrix::Identity(9, 9) / 9.0, {3, 3});
  CHECK(std::abs(trace_norm(realign(mixed33)) - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("realignment of a product state is an outer product of vectorizations") {
  const RandomSeparable rs = random_separable({3, 2}, 1, 9);
  const ComplexMatrix r = realign(rs.state);
  const RealVector sv = singular_values(r);
  CHECK(sv(0) == doctest::Approx(1.0));  // pure factors vectorize to unit norm
  CHECK(sv.tail(sv.size() - 1).cwiseAbs().maxCoeff() < 1e-12);

  const RandomSeparable rs3 = random_separable({2, 2, 2}, 1, 9);
  CHECK_THROWS_AS(realign(rs3.state), NotBipartite);
}

TEST_CASE("random_separable is deterministic and well formed") {
  const RandomSeparable a = random_separable({2, 3}, 4, 123);
  const RandomSeparable b = random_separable({2, 3}, 4, 123);
  CHECK((a.state.matrix() - b.state.matrix()).cwiseAbs().maxCoeff() == 0.0);

  const RandomSeparable c = random_separable({2, 3}, 4, 124);
  CHECK((a.state.matrix() - c.state.matrix()).cwiseAbs().maxCoeff() > 1e-6);

  double total = 0.0;
  for (double w : a.ensemble.weights) {
    CHECK(w > 0.0);
    total += w;
  }
  CHECK(total == doctest::Approx(1.0));
  for (const auto& term : a.ensemble.vectors)
    for (const auto& v : term) CHECK(v.norm() == doctest::Approx(1.0));

  const DensityMatrix again = assemble(a.ensemble);
  CHECK((again.matrix() - a.state.matrix()).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(random_separable({2, 2}, 0, 1), DimMismatch);
}
