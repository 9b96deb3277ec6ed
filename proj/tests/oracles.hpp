#pragma once

// Slow, written-from-scratch re-computations used as ground truth.  Nothing
// here may call into the library under test.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

/// The disc automorphism exchanging 0 and a, written in one variable.
inline Complex disc_mobius(Complex a, Complex z) {
  return (a - z) / (1.0 - std::conj(a) * z);
}

/// sigma_k as a literal sum over all k-element subsets.
inline Complex subset_sigma(const std::vector<Complex>& zs, int k) {
  const int n = static_cast<int>(zs.size());
  Complex total(0.0, 0.0);
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::sort(pick.begin(), pick.end());
  do {
    Complex term(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
      if (pick[i]) term *= zs[i];
    }
    total += term;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

/// Binomial coefficients by the additive Pascal recursion.
inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

/// Number of distinct reorderings of a label word, by generating all n!
/// index permutations and de-duplicating the words.
inline std::uint64_t distinct_orderings(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end());
  std::set<std::vector<int>> words;
  do {
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = labels[idx[i]];
    words.insert(word);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return words.size();
}

/// All exponent vectors with the given length and weight, by plain
/// recursion, sorted descending afterwards.
inline std::vector<std::vector<int>> exponent_vectors(int weight, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(length, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == length - 1) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, weight);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracles
