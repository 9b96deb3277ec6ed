#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "symball/sym_power.hpp"

namespace symball {

/// Exponent vector (mu_0, ..., mu_s) of a degree-m monomial in s+1
/// variables; indexes both monomials x^mu and symmetric-tensor basis
/// elements.
struct MultiIndex {
  std::vector<int> entries;

  int weight() const;
  auto operator<=>(const MultiIndex&) const = default;
};

/// All mu with |mu| = m and s+1 entries, in descending lexicographic order;
/// the list has binom(m+s, m) elements and starts with (m, 0, ..., 0).
std::vector<MultiIndex> multi_indices(int m, int s);

/// binom(m+s, m) - 1, the dimension of the projective space the m-th
/// symmetric power of projective s-space embeds into.  Exact.
std::uint64_t embedding_dimension(int m, int s);

/// Affine Segre-Whitney coordinates of an unordered m-tuple: the
/// coefficients of prod_j (x_0 + z^j_1 x_1 + ... + z^j_s x_s) in the
/// monomial basis, listed in multi_indices(m, s) order.  The coefficient at
/// (m, 0, ..., 0) is 1 by construction.
class EmbeddingCoords {
 public:
  EmbeddingCoords(int m, int s, std::vector<Complex> values);

  int degree() const { return m_; }  // m
  int dim() const { return s_; }     // s
  std::size_t size() const { return values_.size(); }

  const std::vector<MultiIndex>& indices() const { return indices_; }
  const std::vector<Complex>& values() const { return values_; }
  Complex at(const MultiIndex& mu) const;

 private:
  int m_;
  int s_;
  std::vector<MultiIndex> indices_;
  std::vector<Complex> values_;
  std::map<MultiIndex, std::size_t> rank_;
};

/// Coefficients of the product of linear forms lifted from the canonical
/// sequence of c; bitwise deterministic in c.
EmbeddingCoords segre_whitney(const SymConfig& c);

/// Same product evaluated in the given order, without canonicalization.
/// Agrees with the canonical evaluation up to floating-point reassociation.
EmbeddingCoords segre_whitney(const OrderedConfig& t);

/// (sigma_1, ..., sigma_m) of a one-dimensional config, by the Vieta
/// recurrence; matches the (m-k, k) Segre-Whitney coefficients.
std::vector<Complex> elementary_symmetric(const SymConfig& c);

/// Max over multi-indices of |a_mu - b_mu|.
double sup_distance(const EmbeddingCoords& a, const EmbeddingCoords& b);

}  // namespace symball
