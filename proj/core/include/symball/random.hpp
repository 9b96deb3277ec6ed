#pragma once

#include <cstdint>
#include <string_view>

#include "symball/geometry.hpp"

namespace symball {

/// Deterministic counter-based sample stream.  The same (name, seed) pair
/// always produces the same sequence, and differently-named streams are
/// independent, so concurrent suites cannot perturb each other's draws.
class SampleStream {
 public:
  SampleStream(std::string_view name, std::uint64_t seed);

  std::uint64_t next();

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal (Box-Muller; consumes two uniforms per call).
  double normal();
  Complex normal_complex();

  Vector gaussian_vector(int dim);
  Matrix gaussian_matrix(int dim);

  /// Point with direction uniform on the sphere and norm uniform in
  /// [0, max_norm].
  BallPoint ball_point(int dim, double max_norm = 0.9);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Haar-style unitary from QR of a gaussian matrix with the R-diagonal
/// phases absorbed into Q.
Unitary random_unitary(SampleStream& stream, int dim);

/// Random automorphism with center norm <= 0.9.
Automorphism random_automorphism(SampleStream& stream, int dim);

/// Convenience overload drawing from a stream named "automorphism".
Automorphism random_automorphism(std::uint64_t seed, int dim);

}  // namespace symball
