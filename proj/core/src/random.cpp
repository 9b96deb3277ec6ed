#include "symball/random.hpp"

#include <cmath>
#include <numbers>

namespace symball {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 output function.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

SampleStream::SampleStream(std::string_view name, std::uint64_t seed)
    : key_(mix(fnv1a(name) + kGamma * mix(seed + kGamma))) {}

std::uint64_t SampleStream::next() {
  return mix(key_ + (++counter_) * kGamma);
}

double SampleStream::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SampleStream::normal() {
  // (0,1] for the log argument.
  const double u = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(2.0 * std::numbers::pi * v);
}

Complex SampleStream::normal_complex() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Vector SampleStream::gaussian_vector(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = normal_complex();
  return v;
}

Matrix SampleStream::gaussian_matrix(int dim) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = normal_complex();
  }
  return m;
}

BallPoint SampleStream::ball_point(int dim, double max_norm) {
  Vector direction = gaussian_vector(dim);
  double n = direction.norm();
  while (n == 0.0) {  // astronomically unlikely
    direction = gaussian_vector(dim);
    n = direction.norm();
  }
  const double radius = max_norm * uniform();
  return BallPoint(direction * (radius / n));
}

Unitary random_unitary(SampleStream& stream, int dim) {
  const Matrix g = stream.gaussian_matrix(dim);
  const Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the factorization is unique (Haar measure).
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return Unitary(std::move(q));
}

Automorphism random_automorphism(SampleStream& stream, int dim) {
  Unitary u = random_unitary(stream, dim);
  BallPoint center = stream.ball_point(dim, 0.9);
  return Automorphism(std::move(u), std::move(center));
}

Automorphism random_automorphism(std::uint64_t seed, int dim) {
  if (dim < 1) throw domain_error("random_automorphism: dimension must be >= 1");
  SampleStream stream("automorphism", seed);
  return random_automorphism(stream, dim);
}

}  // namespace symball
