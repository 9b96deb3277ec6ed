#pragma once

#include <cstdint>
#include <span>

namespace symball {

/// a * b, throwing overflow_error if the product does not fit in 64 bits.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Exact binomial coefficient C(n, k); throws overflow_error when the result
/// exceeds 64 bits.
std::uint64_t binomial(unsigned n, unsigned k);

/// Exact multinomial coefficient m! / (parts_1! ... parts_k!) where
/// m = sum(parts); parts must be positive.
std::uint64_t multinomial(std::span<const int> parts);

}  // namespace symball
