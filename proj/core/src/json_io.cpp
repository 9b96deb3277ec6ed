#include "symball/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace symball {

namespace {

std::string item(const std::string& path, const char* key) {
  return path + "/" + key;
}

std::string item(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw schema_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) {
    throw schema_error(item(path, key), "missing required field");
  }
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer()) throw schema_error(item(path, key), "expected an integer");
  return v.get<int>();
}

// Re-throws domain violations as schema errors carrying the JSON path, so
// the offending element is reported to the caller.
template <typename F>
auto locate(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const schema_error&) {
    throw;
  } catch (const error& e) {
    throw schema_error(path, e.what());
  }
}

}  // namespace

Json encode(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Json encode(const BallPoint& p) {
  Json out = Json::array();
  for (int i = 0; i < p.dim(); ++i) out.push_back(encode(p[i]));
  return out;
}

Json encode(const Unitary& u) {
  Json out = Json::array();
  for (int r = 0; r < u.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < u.dim(); ++c) row.push_back(encode(Complex(u.entries()(r, c))));
    out.push_back(std::move(row));
  }
  return out;
}

Json encode(const Automorphism& g) {
  return Json{{"unitary", encode(g.unitary_part())}, {"center", encode(g.center())}};
}

namespace {

Json encode_points(const std::vector<BallPoint>& points) {
  Json out = Json::array();
  for (const BallPoint& p : points) out.push_back(encode(p));
  return out;
}

}  // namespace

Json encode(const OrderedConfig& t) {
  return Json{{"m", t.size()}, {"s", t.dim()}, {"points", encode_points(t.points())}};
}

Json encode(const SymConfig& c) {
  return Json{{"m", c.size()}, {"s", c.dim()}, {"points", encode_points(c.points())}};
}

Json encode(const Partition& p) {
  return Json(p.parts());
}

Json encode(const EmbeddingCoords& e) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) {
    coeffs.push_back(Json{{"mu", e.indices()[i].entries}, {"value", encode(e.values()[i])}});
  }
  return Json{{"m", e.degree()}, {"s", e.dim()}, {"coeffs", std::move(coeffs)}};
}

Json encode(const InducedMap& f) {
  return Json{{"m", f.power()}, {"generator", encode(f.generator())}};
}

Json encode(const TupleMap& h) {
  Json sigma = Json::array();
  for (int image : h.permutation()) sigma.push_back(image + 1);  // wire format is 1-based
  Json components = Json::array();
  for (const Automorphism& g : h.components()) components.push_back(encode(g));
  return Json{{"sigma", std::move(sigma)}, {"components", std::move(components)}};
}

Complex decode_complex(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw schema_error(path, "expected a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

BallPoint decode_ball_point(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw schema_error(path, "expected a nonempty array of [re, im] pairs");
  }
  Vector coords(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords[static_cast<Eigen::Index>(i)] = decode_complex(j[i], item(path, i));
  }
  return locate(path, [&] { return BallPoint(std::move(coords)); });
}

Unitary decode_unitary(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw schema_error(path, "expected a nonempty square matrix");
  }
  const std::size_t n = j.size();
  Matrix entries(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != n) {
      throw schema_error(item(path, r), "expected a matrix row of length " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          decode_complex(row[c], item(item(path, r), c));
    }
  }
  return locate(path, [&] { return Unitary(std::move(entries)); });
}

Automorphism decode_automorphism(const Json& j, const std::string& path) {
  Unitary u = decode_unitary(field(j, "unitary", path), item(path, "unitary"));
  BallPoint center = decode_ball_point(field(j, "center", path), item(path, "center"));
  return locate(path, [&] { return Automorphism(std::move(u), std::move(center)); });
}

namespace {

std::vector<BallPoint> decode_points(const Json& j, const std::string& path) {
  const Json& m_json = field(j, "m", path);
  const Json& s_json = field(j, "s", path);
  if (!m_json.is_number_integer() || !s_json.is_number_integer()) {
    throw schema_error(path, "\"m\" and \"s\" must be integers");
  }
  const int m = m_json.get<int>();
  const int s = s_json.get<int>();
  const Json& points_json = field(j, "points", path);
  if (!points_json.is_array() || static_cast<int>(points_json.size()) != m) {
    throw schema_error(item(path, "points"),
                       "expected exactly m = " + std::to_string(m) + " points");
  }
  std::vector<BallPoint> points;
  points.reserve(points_json.size());
  for (std::size_t i = 0; i < points_json.size(); ++i) {
    const std::string p = item(item(path, "points"), i);
    BallPoint point = decode_ball_point(points_json[i], p);
    if (point.dim() != s) {
      throw schema_error(p, "point dimension does not match \"s\"");
    }
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace

OrderedConfig decode_ordered_config(const Json& j, const std::string& path) {
  return locate(path, [&] { return OrderedConfig(decode_points(j, path)); });
}

SymConfig decode_sym_config(const Json& j, const std::string& path) {
  std::vector<BallPoint> points = decode_points(j, path);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (point_less(points[i], points[i - 1])) {
      throw schema_error(item(item(path, "points"), i),
                         "points are not in canonical order (apply `project` first)");
    }
  }
  return locate(path, [&] { return SymConfig(std::move(points)); });
}

Partition decode_partition(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw schema_error(path, "expected a nonempty array of integers");
  }
  std::vector<int> parts;
  parts.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) {
      throw schema_error(item(path, i), "expected an integer part");
    }
    parts.push_back(j[i].get<int>());
  }
  return locate(path, [&] { return Partition(std::move(parts)); });
}

EmbeddingCoords decode_embedding(const Json& j, const std::string& path) {
  const int m = int_field(j, "m", path);
  const int s = int_field(j, "s", path);
  const Json& coeffs = field(j, "coeffs", path);
  if (!coeffs.is_array()) throw schema_error(item(path, "coeffs"), "expected an array");
  const std::vector<MultiIndex> order = locate(path, [&] { return multi_indices(m, s); });
  if (coeffs.size() != order.size()) {
    throw schema_error(item(path, "coeffs"),
                       "expected " + std::to_string(order.size()) + " coefficients");
  }
  std::vector<Complex> values;
  values.reserve(order.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string p = item(item(path, "coeffs"), i);
    const Json& mu = field(coeffs[i], "mu", p);
    if (!mu.is_array() || mu.get<std::vector<int>>() != order[i].entries) {
      throw schema_error(item(p, "mu"), "multi-index out of canonical order");
    }
    values.push_back(decode_complex(field(coeffs[i], "value", p), item(p, "value")));
  }
  return locate(path, [&] { return EmbeddingCoords(m, s, std::move(values)); });
}

InducedMap decode_induced_map(const Json& j, const std::string& path) {
  const int m = int_field(j, "m", path);
  Automorphism g = decode_automorphism(field(j, "generator", path), item(path, "generator"));
  return locate(path, [&] { return InducedMap(std::move(g), m); });
}

TupleMap decode_tuple_map(const Json& j, const std::string& path) {
  const Json& sigma_json = field(j, "sigma", path);
  const Json& components_json = field(j, "components", path);
  if (!sigma_json.is_array() || !components_json.is_array()) {
    throw schema_error(path, "\"sigma\" and \"components\" must be arrays");
  }
  std::vector<int> sigma;
  sigma.reserve(sigma_json.size());
  for (std::size_t i = 0; i < sigma_json.size(); ++i) {
    if (!sigma_json[i].is_number_integer()) {
      throw schema_error(item(item(path, "sigma"), i), "expected an integer");
    }
    sigma.push_back(sigma_json[i].get<int>() - 1);  // wire format is 1-based
  }
  std::vector<Automorphism> components;
  components.reserve(components_json.size());
  for (std::size_t i = 0; i < components_json.size(); ++i) {
    components.push_back(
        decode_automorphism(components_json[i], item(item(path, "components"), i)));
  }
  return locate(path, [&] { return TupleMap(std::move(components), std::move(sigma)); });
}

}  // namespace symball
