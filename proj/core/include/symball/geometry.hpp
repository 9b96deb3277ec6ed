#pragma once

#include <Eigen/Dense>
#include <complex>

#include "symball/errors.hpp"

namespace symball {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Hermitian inner product <z,w> = sum_i z_i * conj(w_i), linear in the
/// first argument.
Complex inner(const Vector& z, const Vector& w);

/// max_i |v_i| over the complex entries.
double sup_norm(const Vector& v);

/// Entrywise tolerance for the unitarity check U* U = I.
inline constexpr double kUnitaryTol = 1e-12;

/// A point of the open unit ball in C^s (Euclidean norm < 1).
class BallPoint {
 public:
  explicit BallPoint(Vector coords);

  static BallPoint origin(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Vector& coords() const { return coords_; }
  Complex operator[](int i) const { return coords_[i]; }
  double norm() const { return coords_.norm(); }

  /// Exact (bitwise-value) equality.
  bool operator==(const BallPoint& other) const;

 private:
  Vector coords_;
};

double sup_distance(const BallPoint& u, const BallPoint& v);

/// An s x s matrix with U* U = I to within kUnitaryTol entrywise.
class Unitary {
 public:
  explicit Unitary(Matrix entries);

  static Unitary identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  Unitary adjoint() const;

 private:
  Matrix entries_;
};

/// The involutive ball automorphism phi_a exchanging 0 and a:
///
///   phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z,a>)
///
/// with P_a the orthogonal projection onto span(a), Q_a = id - P_a and
/// s_a = sqrt(1 - |a|^2).  At a = 0 the formula is extended continuously by
/// P_0 = 0, s_0 = 1, so phi_0 = -id.
BallPoint mobius(const BallPoint& a, const BallPoint& z);

/// A ball automorphism in canonical form z -> U * phi_a(z).  The pair
/// (U, a) determines the map uniquely; in particular a is the unique
/// preimage of 0.  Note that the identity map has params (-I, 0) because
/// phi_0 = -id.
class Automorphism {
 public:
  Automorphism(Unitary unitary_part, BallPoint center);

  /// Canonical params of the identity map, (-I, 0).
  static Automorphism identity(int dim);
  /// The linear map z -> U z, i.e. params (-U, 0).
  static Automorphism from_linear(const Unitary& u);

  int dim() const { return center_.dim(); }
  const Unitary& unitary_part() const { return unitary_; }
  const BallPoint& center() const { return center_; }

  BallPoint operator()(const BallPoint& z) const;

  /// Canonical params of the inverse map: (U*, U a).
  Automorphism inverse() const;

 private:
  Unitary unitary_;
  BallPoint center_;
};

/// Canonical params of g1 o g2.  The center is b = phi_{a2}(U2* a1) and the
/// unitary part is recovered column-by-column from the linear map
/// (g1 o g2) o phi_b by evaluating at e_i / 2.
Automorphism compose(const Automorphism& g1, const Automorphism& g2);

}  // namespace symball
