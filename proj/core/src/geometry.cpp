#include "symball/geometry.hpp"

#include <cmath>
#include <sstream>

namespace symball {

namespace {

void require_same_dim(int lhs, int rhs, const char* what) {
  if (lhs != rhs) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << lhs << " vs " << rhs << ")";
    throw dimension_mismatch(msg.str());
  }
}

}  // namespace

Complex inner(const Vector& z, const Vector& w) {
  require_same_dim(static_cast<int>(z.size()), static_cast<int>(w.size()),
                   "inner");
  // Eigen's dot() conjugates its *object* argument: w.dot(z) = sum conj(w_i) z_i.
  return w.dot(z);
}

double sup_norm(const Vector& v) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

BallPoint::BallPoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1) {
    throw domain_error("BallPoint: dimension must be at least 1");
  }
  const double n = coords_.norm();
  if (!(n < 1.0)) {
    std::ostringstream msg;
    msg << "BallPoint: norm " << n << " is not < 1";
    throw domain_error(msg.str());
  }
}

BallPoint BallPoint::origin(int dim) {
  return BallPoint(Vector::Zero(dim));
}

bool BallPoint::operator==(const BallPoint& other) const {
  if (dim() != other.dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (coords_[i] != other.coords_[i]) return false;
  }
  return true;
}

double sup_distance(const BallPoint& u, const BallPoint& v) {
  require_same_dim(u.dim(), v.dim(), "sup_distance");
  return sup_norm(u.coords() - v.coords());
}

Unitary::Unitary(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw domain_error("Unitary: matrix must be square with dimension >= 1");
  }
  const Matrix gram = entries_.adjoint() * entries_;
  const Matrix id = Matrix::Identity(entries_.rows(), entries_.cols());
  const double dev = (gram - id).cwiseAbs().maxCoeff();
  if (!(dev <= kUnitaryTol)) {
    std::ostringstream msg;
    msg << "Unitary: U*U deviates from identity by " << dev;
    throw domain_error(msg.str());
  }
}

Unitary Unitary::identity(int dim) {
  return Unitary(Matrix::Identity(dim, dim));
}

Unitary Unitary::adjoint() const {
  return Unitary(entries_.adjoint());
}

BallPoint mobius(const BallPoint& a, const BallPoint& z) {
  require_same_dim(a.dim(), z.dim(), "mobius");
  const Vector& av = a.coords();
  const Vector& zv = z.coords();
  const double a2 = av.squaredNorm();
  if (a2 == 0.0) {
    // Continuous extension phi_0 = -id.
    return BallPoint(-zv);
  }
  const Complex za = inner(zv, av);
  const Vector proj = (za / a2) * av;  // P_a z
  const double sa = std::sqrt(1.0 - a2);
  const Vector numerator = av - proj - sa * (zv - proj);
  const Complex denominator = 1.0 - za;
  return BallPoint(numerator / denominator);
}

Automorphism::Automorphism(Unitary unitary_part, BallPoint center)
    : unitary_(std::move(unitary_part)), center_(std::move(center)) {
  require_same_dim(unitary_.dim(), center_.dim(), "Automorphism");
}

Automorphism Automorphism::identity(int dim) {
  return from_linear(Unitary::identity(dim));
}

Automorphism Automorphism::from_linear(const Unitary& u) {
  // z -> U z equals (-U) o phi_0.
  return Automorphism(Unitary(-u.entries()), BallPoint::origin(u.dim()));
}

BallPoint Automorphism::operator()(const BallPoint& z) const {
  const BallPoint moved = mobius(center_, z);
  return BallPoint(unitary_.entries() * moved.coords());
}

Automorphism Automorphism::inverse() const {
  // phi_a o U* = U* o phi_{Ua}, so (U o phi_a)^-1 = U* o phi_{Ua}.
  BallPoint rotated_center(unitary_.entries() * center_.coords());
  return Automorphism(unitary_.adjoint(), std::move(rotated_center));
}

Automorphism compose(const Automorphism& g1, const Automorphism& g2) {
  require_same_dim(g1.dim(), g2.dim(), "compose");
  const int s = g1.dim();

  // The composed map sends b to 0, so b = g2^-1(g1^-1(0)) = phi_{a2}(U2* a1).
  const Vector pulled = g2.unitary_part().entries().adjoint() * g1.center().coords();
  const BallPoint b = mobius(g2.center(), BallPoint(pulled));

  // (g1 o g2) o phi_b fixes 0 and is therefore exactly linear; read its
  // columns off at t e_i with t = 1/2.
  const double t = 0.5;
  Matrix v(s, s);
  for (int i = 0; i < s; ++i) {
    Vector e = Vector::Zero(s);
    e[i] = t;
    const BallPoint image = g1(g2(mobius(b, BallPoint(e))));
    v.col(i) = image.coords() / t;
  }
  return Automorphism(Unitary(std::move(v)), b);
}

}  // namespace symball
