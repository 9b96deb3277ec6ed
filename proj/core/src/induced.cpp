#include "symball/induced.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symball/random.hpp"

namespace symball {

InducedMap::InducedMap(Automorphism generator, int power)
    : generator_(std::move(generator)), power_(power) {
  if (power_ < 1) throw domain_error("InducedMap: power must be >= 1");
}

SymConfig InducedMap::operator()(const SymConfig& c) const {
  if (c.size() != power_) {
    throw dimension_mismatch("InducedMap: config size does not match power");
  }
  if (c.dim() != dim()) {
    throw dimension_mismatch("InducedMap: config dimension does not match generator");
  }
  std::vector<BallPoint> images;
  images.reserve(c.size());
  for (int i = 0; i < c.size(); ++i) images.push_back(generator_(c[i]));
  return SymConfig(std::move(images));
}

InducedMap InducedMap::inverse() const {
  return InducedMap(generator_.inverse(), power_);
}

bool commutes_with_projection(const Automorphism& g, const OrderedConfig& t, double tol) {
  if (g.dim() != t.dim()) {
    throw dimension_mismatch("commutes_with_projection: dimension mismatch");
  }
  std::vector<BallPoint> images;
  images.reserve(t.size());
  for (int i = 0; i < t.size(); ++i) images.push_back(g(t[i]));
  const SymConfig via_tuple = project(OrderedConfig(std::move(images)));
  const SymConfig via_induced = InducedMap(g, t.size())(project(t));
  return sup_distance(via_tuple, via_induced) <= tol;
}

namespace {

// Spread of a config around its mean point; zero exactly when diagonal.
double diagonal_spread(const SymConfig& c) {
  Vector mean = Vector::Zero(c.dim());
  for (int i = 0; i < c.size(); ++i) mean += c[i].coords();
  mean /= static_cast<double>(c.size());
  double spread = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    spread = std::max(spread, sup_norm(c[i].coords() - mean));
  }
  return spread;
}

}  // namespace

ExtractReport extract_generator_report(const SymMapFn& f, int s, int m,
                                       const ExtractOptions& options) {
  if (s < 1 || m < 1) throw domain_error("extract_generator: s and m must be >= 1");

  double max_spread = 0.0;
  // g evaluated through the diagonal; the image must itself be a diagonal.
  auto eval = [&](const Vector& z) -> Vector {
    const SymConfig image = f(SymConfig::diagonal(BallPoint(z), m));
    if (image.dim() != s || image.size() != m) {
      throw not_induced("extract_generator: image has wrong shape");
    }
    const double spread = diagonal_spread(image);
    max_spread = std::max(max_spread, spread);
    if (!(spread <= options.diagonal_tol)) {
      std::ostringstream msg;
      msg << "extract_generator: diagonal image has spread " << spread;
      throw not_induced(msg.str());
    }
    Vector mean = Vector::Zero(s);
    for (int i = 0; i < m; ++i) mean += image[i].coords();
    return mean / static_cast<double>(m);
  };

  const Vector b = eval(Vector::Zero(s));
  const BallPoint center_image{Vector(b)};

  // phi_b o g fixes 0, hence is linear; columns at e_i / 2.
  const double t = 0.5;
  Matrix v(s, s);
  for (int i = 0; i < s; ++i) {
    Vector e = Vector::Zero(s);
    e[i] = t;
    const BallPoint moved = mobius(center_image, BallPoint(eval(e)));
    v.col(i) = moved.coords() / t;
  }

  Automorphism recovered = [&] {
    try {
      Unitary u(std::move(v));
      Vector a = u.entries().adjoint() * b;
      return Automorphism(std::move(u), BallPoint(std::move(a)));
    } catch (const domain_error& e) {
      throw not_induced(std::string("extract_generator: ") + e.what());
    }
  }();

  // Validate against f away from the diagonal.
  const InducedMap candidate(recovered, m);
  SampleStream stream("extract-roundtrip", options.seed);
  double max_roundtrip = 0.0;
  for (int trial = 0; trial < options.roundtrip_samples; ++trial) {
    std::vector<BallPoint> points;
    points.reserve(m);
    for (int i = 0; i < m; ++i) points.push_back(stream.ball_point(s));
    const SymConfig sample(std::move(points));
    const double err = sup_distance(candidate(sample), f(sample));
    max_roundtrip = std::max(max_roundtrip, err);
    if (!(err <= options.roundtrip_tol)) {
      std::ostringstream msg;
      msg << "extract_generator: round-trip error " << err
          << " exceeds bound " << options.roundtrip_tol;
      throw not_induced(msg.str());
    }
  }

  return ExtractReport{std::move(recovered), max_spread, max_roundtrip};
}

Automorphism extract_generator(const SymMapFn& f, int s, int m,
                               const ExtractOptions& options) {
  return extract_generator_report(f, s, m, options).generator;
}

TupleMap::TupleMap(std::vector<Automorphism> components, std::vector<int> permutation)
    : components_(std::move(components)), permutation_(std::move(permutation)) {
  if (components_.empty()) {
    throw domain_error("TupleMap: at least one component required");
  }
  const int m = static_cast<int>(components_.size());
  for (const Automorphism& g : components_) {
    if (g.dim() != components_.front().dim()) {
      throw dimension_mismatch("TupleMap: components of mixed dimension");
    }
  }
  if (static_cast<int>(permutation_.size()) != m) {
    throw domain_error("TupleMap: permutation length does not match component count");
  }
  std::vector<bool> seen(m, false);
  for (int image : permutation_) {
    if (image < 0 || image >= m || seen[image]) {
      throw domain_error("TupleMap: not a permutation of 0..m-1");
    }
    seen[image] = true;
  }
}

OrderedConfig TupleMap::operator()(const OrderedConfig& t) const {
  if (t.size() != power() || t.dim() != dim()) {
    throw dimension_mismatch("TupleMap: tuple shape does not match map");
  }
  std::vector<BallPoint> out;
  out.reserve(t.size());
  for (int j = 0; j < power(); ++j) {
    out.push_back(components_[j](t[permutation_[j]]));
  }
  return OrderedConfig(std::move(out));
}

InvarianceReport check_sm_invariance_report(const TupleMap& h,
                                            const std::vector<OrderedConfig>& samples,
                                            double tol) {
  const int m = h.power();
  if (m > 8) {
    throw domain_error("check_sm_invariance: brute force over S_m limited to m <= 8");
  }
  if (samples.empty()) {
    throw domain_error("check_sm_invariance: at least one sample required");
  }
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw domain_error("check_sm_invariance: tol must be finite and >= 0");
  }
  InvarianceReport report{true, 0.0, std::nullopt};
  for (std::size_t sample_index = 0; sample_index < samples.size(); ++sample_index) {
    const OrderedConfig& tau = samples[sample_index];
    if (tau.size() != m || tau.dim() != h.dim()) {
      throw dimension_mismatch("check_sm_invariance: sample shape does not match map");
    }
    // Baseline: components applied in the identity arrangement.
    std::vector<BallPoint> base;
    base.reserve(m);
    for (int j = 0; j < m; ++j) base.push_back(h.components()[j](tau[j]));
    const SymConfig baseline = project(OrderedConfig(std::move(base)));

    for_each_permutation(m, [&](const std::vector<int>& sigma) {
      if (report.witness) return;
      std::vector<BallPoint> rearranged;
      rearranged.reserve(m);
      for (int j = 0; j < m; ++j) {
        rearranged.push_back(h.components()[j](tau[sigma[j]]));
      }
      const double dev = sup_distance(project(OrderedConfig(std::move(rearranged))), baseline);
      report.max_deviation = std::max(report.max_deviation, dev);
      if (!(dev <= tol)) {
        report.invariant = false;
        report.witness = InvarianceWitness{sigma, static_cast<int>(sample_index), dev};
      }
    });
    if (report.witness) break;
  }
  return report;
}

bool check_sm_invariance(const TupleMap& h, const std::vector<OrderedConfig>& samples,
                         double tol) {
  return check_sm_invariance_report(h, samples, tol).invariant;
}

}  // namespace symball
