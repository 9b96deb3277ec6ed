#include "symball/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "symball/integers.hpp"

namespace symball {

int MultiIndex::weight() const {
  return std::accumulate(entries.begin(), entries.end(), 0);
}

std::vector<MultiIndex> multi_indices(int m, int s) {
  if (m < 1 || s < 1) throw domain_error("multi_indices: m and s must be >= 1");
  std::vector<MultiIndex> out;
  std::vector<int> current(s + 1, 0);
  // Filling left to right with the largest first entry yields descending
  // lexicographic order directly.
  auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == s) {
      current[position] = remaining;
      out.push_back(MultiIndex{current});
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[position] = v;
      self(self, position + 1, remaining - v);
    }
  };
  recurse(recurse, 0, m);
  return out;
}

std::uint64_t embedding_dimension(int m, int s) {
  if (m < 1 || s < 1) {
    throw domain_error("embedding_dimension: m and s must be >= 1");
  }
  return binomial(static_cast<unsigned>(m + s), static_cast<unsigned>(m)) - 1;
}

EmbeddingCoords::EmbeddingCoords(int m, int s, std::vector<Complex> values)
    : m_(m), s_(s), indices_(multi_indices(m, s)), values_(std::move(values)) {
  if (values_.size() != indices_.size()) {
    throw domain_error("EmbeddingCoords: coefficient count does not match binom(m+s, m)");
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) rank_[indices_[i]] = i;
}

Complex EmbeddingCoords::at(const MultiIndex& mu) const {
  const auto it = rank_.find(mu);
  if (it == rank_.end()) {
    throw domain_error("EmbeddingCoords: multi-index has wrong weight or length");
  }
  return values_[it->second];
}

namespace {

// Multiplies out prod_j (x_0 + sum_i z^j_i x_i) over the given point
// sequence; coefficient accumulation order is fixed by the sequence, so the
// result is bitwise deterministic in it.
EmbeddingCoords product_of_linear_forms(std::span<const BallPoint> points) {
  const int m = static_cast<int>(points.size());
  const int s = points.front().dim();
  std::map<MultiIndex, Complex> poly;
  poly[MultiIndex{std::vector<int>(s + 1, 0)}] = Complex(1.0, 0.0);
  for (const BallPoint& z : points) {
    std::map<MultiIndex, Complex> next;
    for (const auto& [mu, coeff] : poly) {
      MultiIndex bumped = mu;
      bumped.entries[0] += 1;
      next[bumped] += coeff;
      for (int i = 0; i < s; ++i) {
        bumped = mu;
        bumped.entries[i + 1] += 1;
        next[bumped] += coeff * z[i];
      }
    }
    poly = std::move(next);
  }
  const std::vector<MultiIndex> order = multi_indices(m, s);
  std::vector<Complex> values;
  values.reserve(order.size());
  for (const MultiIndex& mu : order) {
    const auto it = poly.find(mu);
    values.push_back(it == poly.end() ? Complex(0.0, 0.0) : it->second);
  }
  return EmbeddingCoords(m, s, std::move(values));
}

}  // namespace

EmbeddingCoords segre_whitney(const SymConfig& c) {
  return product_of_linear_forms(c.points());
}

EmbeddingCoords segre_whitney(const OrderedConfig& t) {
  return product_of_linear_forms(t.points());
}

std::vector<Complex> elementary_symmetric(const SymConfig& c) {
  if (c.dim() != 1) {
    throw dimension_mismatch("elementary_symmetric: defined for s = 1 only");
  }
  const int m = c.size();
  // Vieta: multiply (x + z_j) in one after another.
  std::vector<Complex> sigma(m + 1, Complex(0.0, 0.0));
  sigma[0] = Complex(1.0, 0.0);
  for (int j = 0; j < m; ++j) {
    const Complex z = c[j][0];
    for (int k = j + 1; k >= 1; --k) {
      sigma[k] += z * sigma[k - 1];
    }
  }
  return std::vector<Complex>(sigma.begin() + 1, sigma.end());
}

double sup_distance(const EmbeddingCoords& a, const EmbeddingCoords& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim()) {
    throw dimension_mismatch("sup_distance: embeddings of different shape");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  }
  return d;
}

}  // namespace symball
