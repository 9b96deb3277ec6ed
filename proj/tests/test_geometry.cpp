#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "oracles.hpp"
#include "symball/errors.hpp"
#include "symball/geometry.hpp"
#include "symball/random.hpp"

using namespace symball;
using helpers::bp;
using helpers::bp1;
using helpers::vec;

namespace {
const Complex I_(0.0, 1.0);
}

TEST_CASE("inner product is linear in the first slot and conjugate symmetric") {
  const Vector z = vec({Complex(0.3, 0.1), Complex(-0.2, 0.4)});
  const Vector w = vec({Complex(0.1, -0.5), Complex(0.2, 0.2)});
  const Complex lambda(0.7, -1.3);
  CHECK(std::abs(inner(lambda * z, w) - lambda * inner(z, w)) < 1e-15);
  CHECK(std::abs(inner(z, w) - std::conj(inner(w, z))) < 1e-15);
  CHECK(std::abs(inner(z, z).real() - z.squaredNorm()) < 1e-15);
  CHECK(std::abs(inner(z, z).imag()) < 1e-15);
}

TEST_CASE("points outside the open ball are rejected") {
  CHECK_THROWS_AS(BallPoint(vec({Complex(1.0, 0.0)})), domain_error);
  CHECK_THROWS_AS(BallPoint(vec({Complex(0.8, 0.0), Complex(0.0, 0.7)})), domain_error);
  CHECK_NOTHROW(BallPoint(vec({Complex(0.8, 0.0), Complex(0.0, 0.5)})));
  CHECK_THROWS_AS(BallPoint{Vector()}, domain_error);
}

TEST_CASE("mobius exchanges the origin and the center") {
  SampleStream st("test-mobius-exchange", 7);
  for (int s = 1; s <= 3; ++s) {
    for (int trial = 0; trial < 50; ++trial) {
      const BallPoint a = st.ball_point(s, 0.9);
      CHECK(sup_distance(mobius(a, BallPoint::origin(s)), a) < 1e-14);
      CHECK(mobius(a, a).norm() < 1e-14);
    }
  }
}

TEST_CASE("mobius is an involution and preserves the ball") {
  SampleStream st("test-mobius-involution", 11);
  for (int s = 1; s <= 4; ++s) {
    for (int trial = 0; trial < 100; ++trial) {
      const BallPoint a = st.ball_point(s, 0.9);
      const BallPoint z = st.ball_point(s, 0.95);
      const BallPoint w = mobius(a, z);
      CHECK(w.norm() < 1.0);
      CHECK(sup_distance(mobius(a, w), z) < 1e-12);
    }
  }
}

TEST_CASE("one-dimensional mobius matches the direct disc formula") {
  SampleStream st("test-mobius-disc", 13);
  for (int trial = 0; trial < 200; ++trial) {
    const BallPoint a = st.ball_point(1, 0.9);
    const BallPoint z = st.ball_point(1, 0.95);
    const Complex expected = oracles::disc_mobius(a[0], z[0]);
    CHECK(std::abs(mobius(a, z)[0] - expected) < 1e-14);
  }
  // A value small enough to check by hand: (0.5 + 0.5) / (1 + 0.25).
  CHECK(std::abs(mobius(bp1(0.5), bp1(-0.5))[0] - Complex(0.8, 0.0)) < 1e-15);
}

TEST_CASE("mobius with center zero is the antipodal map") {
  const BallPoint z = bp({Complex(0.3, 0.2), Complex(-0.1, 0.4)});
  const BallPoint w = mobius(BallPoint::origin(2), z);
  CHECK(sup_distance(w, bp({Complex(-0.3, -0.2), Complex(0.1, -0.4)})) == 0.0);
}

TEST_CASE("unitarity is validated on construction") {
  Matrix bad(2, 2);
  bad << Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0);
  CHECK_THROWS_AS(Unitary{bad}, domain_error);
  CHECK_NOTHROW(Unitary::identity(3));
  Matrix rot(2, 2);
  rot << Complex(0, 0), Complex(-1, 0), Complex(1, 0), Complex(0, 0);
  CHECK_NOTHROW(Unitary{rot});
  SampleStream st("test-unitary", 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Unitary u = random_unitary(st, 3);
    CHECK((u.entries().adjoint() * u.entries() - Matrix::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("canonical parameters of the identity map") {
  const Automorphism id = Automorphism::identity(2);
  CHECK((id.unitary_part().entries() + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(id.center().norm() == 0.0);
  SampleStream st("test-identity", 5);
  for (int trial = 0; trial < 20; ++trial) {
    const BallPoint z = st.ball_point(2, 0.95);
    CHECK(sup_distance(id(z), z) < 1e-15);
  }
}

TEST_CASE("linear maps evaluate as matrix action") {
  Matrix d(2, 2);
  d << I_, Complex(0, 0), Complex(0, 0), Complex(1, 0);
  const Automorphism g = Automorphism::from_linear(Unitary(d));
  const BallPoint z = bp({Complex(0.3, 0.0), Complex(0.4, 0.0)});
  CHECK(sup_distance(g(z), bp({Complex(0.0, 0.3), Complex(0.4, 0.0)})) < 1e-15);
  // The same matrix installed directly as the unitary parameter acts through
  // the antipodal map first.
  const Automorphism h(Unitary(d), BallPoint::origin(2));
  CHECK(sup_distance(h(z), bp({Complex(0.0, -0.3), Complex(-0.4, 0.0)})) < 1e-15);
}

TEST_CASE("automorphisms map the ball into the ball") {
  SampleStream st("test-aut-range", 17);
  for (int trial = 0; trial < 100; ++trial) {
    const Automorphism g = random_automorphism(st, 3);
    const BallPoint z = st.ball_point(3, 0.97);
    CHECK(g(z).norm() < 1.0);
  }
}

TEST_CASE("composition matches pointwise composition") {
  SampleStream st("test-compose", 19);
  for (int s = 1; s <= 3; ++s) {
    for (int trial = 0; trial < 30; ++trial) {
      const Automorphism g1 = random_automorphism(st, s);
      const Automorphism g2 = random_automorphism(st, s);
      const Automorphism g = compose(g1, g2);
      for (int i = 0; i < 5; ++i) {
        const BallPoint z = st.ball_point(s, 0.9);
        CHECK(sup_distance(g(z), g1(g2(z))) < 1e-12);
      }
    }
  }
}

TEST_CASE("composing with the inverse recovers the identity parameters") {
  SampleStream st("test-compose-inverse", 23);
  for (int trial = 0; trial < 30; ++trial) {
    const Automorphism g = random_automorphism(st, 2);
    const Automorphism e = compose(g, g.inverse());
    CHECK((e.unitary_part().entries() + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(e.center().norm() < 1e-12);
  }
}

TEST_CASE("composition of linear maps multiplies the matrices") {
  SampleStream st("test-compose-linear", 29);
  const Unitary u1 = random_unitary(st, 2);
  const Unitary u2 = random_unitary(st, 2);
  const Automorphism g = compose(Automorphism::from_linear(u1), Automorphism::from_linear(u2));
  // Canonical parameters of z -> (U1 U2) z are (-U1 U2, 0).
  CHECK((g.unitary_part().entries() + u1.entries() * u2.entries()).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(g.center().norm() < 1e-12);
}

TEST_CASE("inverse parameters are the adjoint and the rotated center") {
  SampleStream st("test-inverse", 31);
  for (int trial = 0; trial < 30; ++trial) {
    const Automorphism g = random_automorphism(st, 3);
    const Automorphism gi = g.inverse();
    CHECK((gi.unitary_part().entries() - g.unitary_part().entries().adjoint())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK(sup_distance(gi.center(),
                       BallPoint(g.unitary_part().entries() * g.center().coords())) <
          1e-15);
    const BallPoint z = st.ball_point(3, 0.9);
    CHECK(sup_distance(gi(g(z)), z) < 1e-12);
    CHECK(sup_distance(g(gi(z)), z) < 1e-12);
  }
}

TEST_CASE("dimension mismatches are reported") {
  const Automorphism id = Automorphism::identity(2);
  CHECK_THROWS_AS(id(bp({Complex(0.1, 0.0)})), dimension_mismatch);
  CHECK_THROWS_AS(mobius(bp1(0.5), bp({Complex(0.1, 0.0), Complex(0.0, 0.0)})),
                  dimension_mismatch);
  CHECK_THROWS_AS(compose(Automorphism::identity(1), Automorphism::identity(2)),
                  dimension_mismatch);
  CHECK_THROWS_AS(Automorphism(Unitary::identity(2), BallPoint::origin(3)),
                  dimension_mismatch);
}
