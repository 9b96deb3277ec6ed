#include "symball/sym_power.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "symball/integers.hpp"

namespace symball {

namespace {

// Strict order on doubles refined so that -0 sorts before +0; with NaN
// excluded (ball invariant) equal ranks imply identical bits.
bool scalar_less(double a, double b) {
  if (a < b) return true;
  if (b < a) return false;
  return std::signbit(a) && !std::signbit(b);
}

bool scalar_eq(double a, double b) {
  return !scalar_less(a, b) && !scalar_less(b, a);
}

void require_nonempty_same_dim(const std::vector<BallPoint>& points, const char* what) {
  if (points.empty()) {
    throw domain_error(std::string(what) + ": at least one point required");
  }
  const int s = points.front().dim();
  for (const BallPoint& p : points) {
    if (p.dim() != s) {
      throw dimension_mismatch(std::string(what) + ": points of mixed dimension");
    }
  }
}

}  // namespace

bool point_less(const BallPoint& u, const BallPoint& v) {
  for (int i = 0; i < u.dim(); ++i) {
    const Complex a = u[i];
    const Complex b = v[i];
    if (!scalar_eq(a.real(), b.real())) return scalar_less(a.real(), b.real());
    if (!scalar_eq(a.imag(), b.imag())) return scalar_less(a.imag(), b.imag());
  }
  return false;
}

OrderedConfig::OrderedConfig(std::vector<BallPoint> points)
    : points_(std::move(points)) {
  require_nonempty_same_dim(points_, "OrderedConfig");
}

OrderedConfig OrderedConfig::permuted(const std::vector<int>& sigma) const {
  const int m = size();
  if (static_cast<int>(sigma.size()) != m) {
    throw domain_error("permuted: permutation length does not match tuple length");
  }
  std::vector<bool> seen(m, false);
  std::vector<BallPoint> out;
  out.reserve(m);
  for (int image : sigma) {
    if (image < 0 || image >= m || seen[image]) {
      throw domain_error("permuted: not a permutation of 0..m-1");
    }
    seen[image] = true;
    out.push_back(points_[image]);
  }
  return OrderedConfig(std::move(out));
}

SymConfig::SymConfig(std::vector<BallPoint> points) : points_(std::move(points)) {
  require_nonempty_same_dim(points_, "SymConfig");
  std::sort(points_.begin(), points_.end(), point_less);
}

SymConfig SymConfig::diagonal(const BallPoint& z, int m) {
  if (m < 1) throw domain_error("diagonal: m must be >= 1");
  return SymConfig(std::vector<BallPoint>(m, z));
}

bool SymConfig::operator==(const SymConfig& other) const {
  return points_ == other.points_;
}

SymConfig project(const OrderedConfig& t) {
  return SymConfig(t.points());
}

double sup_distance(const SymConfig& a, const SymConfig& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) {
    throw dimension_mismatch("sup_distance: configs of different shape");
  }
  double d = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    d = std::max(d, sup_distance(a[i], b[i]));
  }
  return d;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw domain_error("Partition: needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw domain_error("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw domain_error("Partition: parts must be weakly decreasing");
    }
  }
}

int Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Partition> all_partitions(int m) {
  if (m < 1) throw domain_error("all_partitions: m must be >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  // Weakly decreasing parts, largest first.
  auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, m, m);
  return out;
}

std::uint64_t covering_degree(const Partition& p) {
  return multinomial(p.parts());
}

Partition classify_stratum(const SymConfig& c, double tol) {
  if (tol < 0.0 || !std::isfinite(tol)) {
    throw domain_error("classify_stratum: tol must be finite and >= 0");
  }
  const int m = c.size();
  // Union-find over points; the tol relation is closed transitively.
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (sup_distance(c[i], c[j]) <= tol) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::vector<int> count(m, 0);
  for (int i = 0; i < m; ++i) ++count[find(i)];
  std::vector<int> sizes;
  for (int n : count) {
    if (n > 0) sizes.push_back(n);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return Partition(std::move(sizes));
}

int stratum_codimension(const Partition& p, int s) {
  if (s < 1) throw domain_error("stratum_codimension: s must be >= 1");
  return s * (p.total() - p.size());
}

namespace {

// Labels points by their position among the distinct values of the
// canonical sequence; equal points (exact) share a label.
std::vector<int> distinct_labels(const SymConfig& c) {
  std::vector<int> labels(c.size());
  int label = 0;
  for (int i = 1; i < c.size(); ++i) {
    if (!(c[i] == c[i - 1])) ++label;
    labels[i] = label;
  }
  return labels;
}

}  // namespace

std::vector<OrderedConfig> fiber(const SymConfig& c) {
  if (c.size() > 8) {
    throw domain_error("fiber: materialized only for m <= 8; use fiber_size");
  }
  std::vector<int> labels = distinct_labels(c);
  std::vector<BallPoint> representative;
  for (int i = 0; i < c.size(); ++i) {
    if (i == 0 || labels[i] != labels[i - 1]) representative.push_back(c[i]);
  }
  std::vector<OrderedConfig> out;
  // The label sequence starts sorted, so next_permutation walks every
  // distinct rearrangement exactly once.
  do {
    std::vector<BallPoint> points;
    points.reserve(c.size());
    for (int label : labels) points.push_back(representative[label]);
    out.emplace_back(std::move(points));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::uint64_t fiber_size(const SymConfig& c) {
  return covering_degree(classify_stratum(c, 0.0));
}

void for_each_permutation(int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    fn(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace symball
