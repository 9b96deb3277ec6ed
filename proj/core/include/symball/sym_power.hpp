#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symball/geometry.hpp"

namespace symball {

/// Total order on points of C^s: lexicographic on the interleaved real
/// tuple (Re z_1, Im z_1, ..., Re z_s, Im z_s), with -0 ordered before +0
/// so equal-ranked points are bit-identical.
bool point_less(const BallPoint& u, const BallPoint& v);

/// An ordered m-tuple of points of the ball (a point of the Cartesian
/// power).  All points share one ambient dimension.
class OrderedConfig {
 public:
  explicit OrderedConfig(std::vector<BallPoint> points);

  int size() const { return static_cast<int>(points_.size()); }  // m
  int dim() const { return points_.front().dim(); }              // s
  const std::vector<BallPoint>& points() const { return points_; }
  const BallPoint& operator[](int i) const { return points_[i]; }

  /// The tuple (x^{sigma(0)}, ..., x^{sigma(m-1)}); sigma must be a
  /// permutation of 0..m-1.
  OrderedConfig permuted(const std::vector<int>& sigma) const;

 private:
  std::vector<BallPoint> points_;
};

/// An unordered m-tuple, stored as its canonical (sorted) representative.
/// Two configs are equal iff their canonical sequences are equal.
class SymConfig {
 public:
  explicit SymConfig(std::vector<BallPoint> points);

  /// <z : m>, the point z repeated m times.
  static SymConfig diagonal(const BallPoint& z, int m);

  int size() const { return static_cast<int>(points_.size()); }  // m
  int dim() const { return points_.front().dim(); }              // s
  const std::vector<BallPoint>& points() const { return points_; }
  const BallPoint& operator[](int i) const { return points_[i]; }

  bool operator==(const SymConfig& other) const;

 private:
  std::vector<BallPoint> points_;
};

/// The quotient map: forgets the ordering.  project(sigma . t) == project(t)
/// bitwise for every permutation sigma.
SymConfig project(const OrderedConfig& t);

/// Max over positions of the pointwise sup distance between the canonical
/// sequences.
double sup_distance(const SymConfig& a, const SymConfig& b);

/// A partition of m: weakly decreasing positive parts summing to m.
/// Labels the stratum of configs with exactly these multiplicities.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  int total() const;                       // m
  int size() const { return static_cast<int>(parts_.size()); }  // k
  const std::vector<int>& parts() const { return parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of m, in descending lexicographic order starting from (m).
std::vector<Partition> all_partitions(int m);

/// Number of ordered preimages over the stratum: m! / (m_1! ... m_k!).
/// Exact; throws overflow_error beyond 64 bits.
std::uint64_t covering_degree(const Partition& p);

/// Multiplicity pattern of c: points are clustered by the transitive
/// closure of the relation sup_distance <= tol (tol = 0 gives exact
/// grouping); returns cluster sizes sorted decreasingly.
Partition classify_stratum(const SymConfig& c, double tol);

/// Codimension s * (m - k) of the stratum labelled by p inside the
/// symmetric power of the ball in C^s.
int stratum_codimension(const Partition& p, int s);

/// The distinct ordered tuples projecting to c.  Materialized only for
/// m <= 8 (up to 40320 tuples); use fiber_size for larger m.
std::vector<OrderedConfig> fiber(const SymConfig& c);

/// |fiber(c)| by counting, valid for any m.
std::uint64_t fiber_size(const SymConfig& c);

/// Calls fn with every permutation of {0, ..., m-1}.
void for_each_permutation(int m, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace symball
