#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "symball/sym_power.hpp"

namespace symball {

/// The m-th symmetric power of an automorphism g: applies g to every member
/// of the unordered tuple and re-canonicalizes.  Maps diagonals <z : m> to
/// diagonals <g(z) : m>.
class InducedMap {
 public:
  InducedMap(Automorphism generator, int power);

  int power() const { return power_; }  // m
  int dim() const { return generator_.dim(); }
  const Automorphism& generator() const { return generator_; }

  SymConfig operator()(const SymConfig& c) const;

  InducedMap inverse() const;

 private:
  Automorphism generator_;
  int power_;
};

/// True iff projecting the pointwise image of t agrees with applying the
/// induced map after projection, within tol after canonical alignment.
/// This is the definitional commutative square of the quotient.
bool commutes_with_projection(const Automorphism& g, const OrderedConfig& t, double tol);

using SymMapFn = std::function<SymConfig(const SymConfig&)>;

struct ExtractOptions {
  /// Maximum admissible spread of a diagonal's image.
  double diagonal_tol = 1e-8;
  /// Round-trip bound checked on random configs.
  double roundtrip_tol = 1e-8;
  int roundtrip_samples = 100;
  std::uint64_t seed = 0;
};

struct ExtractReport {
  Automorphism generator;
  double max_diagonal_spread;
  double max_roundtrip_error;
};

/// Recovers g from a black box f promised to equal the m-th symmetric power
/// of some automorphism.  g is read off diagonals: f(<z : m>) = <g(z) : m>
/// pins g(z); the canonical params follow from b = g(0) and the columns of
/// the linear map phi_b o g at e_i / 2.  Throws not_induced if a diagonal
/// image is not a diagonal within diagonal_tol, if the column matrix is not
/// unitary, or if the recovered map fails the round-trip bound on
/// roundtrip_samples random configs.
ExtractReport extract_generator_report(const SymMapFn& f, int s, int m,
                                       const ExtractOptions& options = {});

Automorphism extract_generator(const SymMapFn& f, int s, int m,
                               const ExtractOptions& options = {});

/// A self-map of the Cartesian power acting componentwise after a fixed
/// permutation of the slots: (t^1,...,t^m) -> (h_1(t^{sigma(1)}), ...,
/// h_m(t^{sigma(m)})).
class TupleMap {
 public:
  /// permutation holds images of 0..m-1.
  TupleMap(std::vector<Automorphism> components, std::vector<int> permutation);

  int power() const { return static_cast<int>(components_.size()); }
  int dim() const { return components_.front().dim(); }
  const std::vector<Automorphism>& components() const { return components_; }
  const std::vector<int>& permutation() const { return permutation_; }

  OrderedConfig operator()(const OrderedConfig& t) const;

 private:
  std::vector<Automorphism> components_;
  std::vector<int> permutation_;
};

struct InvarianceWitness {
  std::vector<int> sigma;
  int sample_index;
  double deviation;
};

struct InvarianceReport {
  bool invariant;
  double max_deviation;
  std::optional<InvarianceWitness> witness;
};

/// Checks whether the multiset output of h is unchanged by every
/// permutation of its inputs, over the given samples.  Brute force over
/// S_m, so m <= 8 is required.  A failure report carries the first
/// violating (sigma, sample).
InvarianceReport check_sm_invariance_report(const TupleMap& h,
                                            const std::vector<OrderedConfig>& samples,
                                            double tol);

bool check_sm_invariance(const TupleMap& h, const std::vector<OrderedConfig>& samples,
                         double tol);

}  // namespace symball
