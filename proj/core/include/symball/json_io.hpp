#pragma once

#include <nlohmann/json.hpp>

#include "symball/embedding.hpp"
#include "symball/induced.hpp"

namespace symball {

using Json = nlohmann::json;

// Wire formats.  Complex scalars are two-element [re, im] arrays; a
// BallPoint is an array of s scalars; configs carry explicit "m"/"s"
// alongside their "points"; embedding coefficients are listed in
// multi_indices order as {"mu": [...], "value": [re, im]} entries.

Json encode(const Complex& z);
Json encode(const BallPoint& p);
Json encode(const Unitary& u);
Json encode(const Automorphism& g);
Json encode(const OrderedConfig& t);
Json encode(const SymConfig& c);
Json encode(const Partition& p);
Json encode(const EmbeddingCoords& e);
Json encode(const InducedMap& f);
Json encode(const TupleMap& h);

// Decoders validate structure and domain constraints and throw schema_error
// with the JSON-pointer-style path of the offending element.

Complex decode_complex(const Json& j, const std::string& path = "");
BallPoint decode_ball_point(const Json& j, const std::string& path = "");
Unitary decode_unitary(const Json& j, const std::string& path = "");
Automorphism decode_automorphism(const Json& j, const std::string& path = "");
OrderedConfig decode_ordered_config(const Json& j, const std::string& path = "");
/// Requires the listed points to already be in canonical order.
SymConfig decode_sym_config(const Json& j, const std::string& path = "");
Partition decode_partition(const Json& j, const std::string& path = "");
EmbeddingCoords decode_embedding(const Json& j, const std::string& path = "");
InducedMap decode_induced_map(const Json& j, const std::string& path = "");
TupleMap decode_tuple_map(const Json& j, const std::string& path = "");

}  // namespace symball
