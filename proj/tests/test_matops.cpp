#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "phermion/errors.hpp"
#include "phermion/matops.hpp"
#include "phermion/rng.hpp"

using namespace phermion;

namespace {

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("Frobenius norm and residual scaling", "[matops]") {
  REQUIRE(fro_norm(m2(3, 4, 0, 0)) == Catch::Approx(5.0));
  REQUIRE(residual_scale(m2(3, 4, 0, 0)) == Catch::Approx(5.0));
  // Small operands never shrink the scale below 1.
  REQUIRE(residual_scale(m2(1e-3, 0, 0, 0)) == Catch::Approx(1.0));
  REQUIRE(residual_scale(m2(3, 4, 0, 0), m2(6, 8, 0, 0)) == Catch::Approx(10.0));

  REQUIRE(approx_zero(m2(1e-12, 0, 0, 0)));
  REQUIRE_FALSE(approx_zero(m2(1e-6, 0, 0, 0)));
  // The same residual passes against a large operand scale.
  REQUIRE(approx_zero(m2(1e-6, 0, 0, 0), defaults::tolerance, 1e5));
}

TEST_CASE("dagger, commutator, anticommutator", "[matops]") {
  const Complex i(0, 1);
  const ComplexMatrix s1 = m2(0, 1, 1, 0);
  const ComplexMatrix s2 = m2(0, -i, i, 0);
  const ComplexMatrix s3 = m2(1, 0, 0, -1);

  REQUIRE(approx_equal(dagger(s2), s2));
  REQUIRE(approx_equal(dagger(m2(0, i, 0, 0)), m2(0, 0, -i, 0)));
  REQUIRE(approx_equal(commutator(s1, s2), ComplexMatrix(2.0 * i * s3)));
  REQUIRE(approx_zero(anticommutator(s1, s2)));
  REQUIRE(approx_equal(anticommutator(s1, s1),
                       ComplexMatrix(2.0 * ComplexMatrix::Identity(2, 2))));
}

TEST_CASE("kron dimensions, values, and size cap", "[matops]") {
  const ComplexMatrix a = m2(1, 2, 3, 4);
  const ComplexMatrix b = m2(0, 5, 6, 7);
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k(0, 1) == Complex(5, 0));    // a(0,0) b(0,1)
  REQUIRE(k(2, 0) == Complex(0, 0));    // a(1,0) b(0,0)
  REQUIRE(k(3, 3) == Complex(28, 0));   // a(1,1) b(1,1)

  const ComplexMatrix big = ComplexMatrix::Identity(1025, 1025);
  const ComplexMatrix big2 = ComplexMatrix::Identity(1024, 1024);
  REQUIRE_THROWS_AS(kron(big, big2), SizeError);
}

TEST_CASE("inverse and condition number", "[matops]") {
  const ComplexMatrix a = m2(4, 0, 0, 1);
  REQUIRE(approx_equal(inverse(a), m2(0.25, 0, 0, 1)));
  REQUIRE(condition_number(a) == Catch::Approx(4.0));
  REQUIRE_THROWS_AS(inverse(m2(1, 1, 1, 1)), SingularityError);

  Rng rng = make_rng();
  const ComplexMatrix r = random_invertible(5, rng);
  REQUIRE(approx_zero(ComplexMatrix(r * inverse(r) - ComplexMatrix::Identity(5, 5)),
                      defaults::tolerance, residual_scale(r)));
}

TEST_CASE("eigendecomposition reconstructs the matrix", "[matops]") {
  Rng rng = make_rng();
  const ComplexMatrix a = random_matrix(6, rng);
  const EigenDecomposition ed = eig(a);
  REQUIRE(ed.diagonalizable);
  const ComplexMatrix lambda = ed.values.asDiagonal();
  REQUIRE(approx_zero(ComplexMatrix(a * ed.vectors - ed.vectors * lambda),
                      1e-10, residual_scale(a)));
}

TEST_CASE("inertia counts signs of the spectrum", "[matops]") {
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(0, 0) = 5;
  d(1, 1) = -3;
  d(2, 2) = 1e-14;  // counted as zero
  d(3, 3) = 2;
  const Inertia in = inertia_of(d);
  REQUIRE((in == Inertia{2, 1, 1}));
  REQUIRE(in.indefinite());
  REQUIRE(in.singular());
  REQUIRE_FALSE(in.definite());
  REQUIRE((Inertia{3, 0, 0}.positive_definite()));
  REQUIRE((Inertia{0, 2, 0}.negative_definite()));
  REQUIRE_THROWS_AS(inertia_of(m2(0, 1, 0, 0)), DomainError);
}

TEST_CASE("positive-definite square root", "[matops]") {
  // sqrt([[2,1],[1,2]]) has eigenpairs sqrt(3) on (1,1) and 1 on (1,-1):
  // entries ((sqrt(3)+1)/2, (sqrt(3)-1)/2).
  const ComplexMatrix h = m2(2, 1, 1, 2);
  const ComplexMatrix s = sqrt_pos_def(h);
  REQUIRE(std::abs(s(0, 0) - Complex(1.3660254037844386, 0)) < 1e-12);
  REQUIRE(std::abs(s(0, 1) - Complex(0.3660254037844386, 0)) < 1e-12);
  REQUIRE(approx_equal(s, dagger(s)));
  REQUIRE(approx_zero(ComplexMatrix(s * s - h), 1e-12, residual_scale(h)));

  REQUIRE_THROWS_AS(sqrt_pos_def(m2(1, 0, 0, -1)), DomainError);
  REQUIRE_THROWS_AS(sqrt_pos_def(m2(0, 1, 0, 0)), DomainError);
}
