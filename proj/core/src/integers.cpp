#include "symball/integers.hpp"

#include <limits>

#include "symball/errors.hpp"

namespace symball {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw overflow_error("integer product exceeds 64 bits");
  }
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // Prefix products C(n-k+i, i) are exact at every step.
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw overflow_error("binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t multinomial(std::span<const int> parts) {
  // m!/(m_1!...m_k!) = prod_j C(m_1+...+m_j, m_j), each factor exact.
  std::uint64_t result = 1;
  unsigned cumulative = 0;
  for (int part : parts) {
    if (part < 1) throw domain_error("multinomial: parts must be positive");
    cumulative += static_cast<unsigned>(part);
    result = checked_mul(result, binomial(cumulative, static_cast<unsigned>(part)));
  }
  return result;
}

}  // namespace symball
