#pragma once

#include <initializer_list>
#include <vector>

#include "symball/geometry.hpp"
#include "symball/sym_power.hpp"

namespace helpers {

inline symball::Vector vec(std::initializer_list<symball::Complex> cs) {
  symball::Vector v(static_cast<int>(cs.size()));
  int i = 0;
  for (const auto& c : cs) v[i++] = c;
  return v;
}

inline symball::BallPoint bp(std::initializer_list<symball::Complex> cs) {
  return symball::BallPoint(vec(cs));
}

/// One-dimensional point from a complex scalar.
inline symball::BallPoint bp1(symball::Complex c) { return bp({c}); }

inline symball::OrderedConfig ord(std::vector<symball::BallPoint> pts) {
  return symball::OrderedConfig(std::move(pts));
}

inline symball::SymConfig cfg(std::vector<symball::BallPoint> pts) {
  return symball::SymConfig(std::move(pts));
}

}  // namespace helpers
