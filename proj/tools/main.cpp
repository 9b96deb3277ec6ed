// symball: command-line surface over the symmetric-power library.
//
// Single binary, subcommand style.  Payloads are JSON documents read from
// --in FILE or standard input; results are JSON documents written to --out
// FILE or standard output.  Identical (command, payload, seed) always yields
// byte-identical output.
//
// Exit codes: 0 success, 1 check failure (a verification suite failed, an
// invariance check came back false, or a black box was not an induced map),
// 2 usage/schema/domain error.  Errors are reported as {"error": {...}}.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symball/embedding.hpp"
#include "symball/errors.hpp"
#include "symball/induced.hpp"
#include "symball/json_io.hpp"
#include "symball/random.hpp"
#include "symball/sym_power.hpp"
#include "symball/verification.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int m = 0;  // 0 = not supplied
  int s = 0;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::string in_path;
  std::string out_path;
  std::vector<int> partition;
};

void emit(const RunConfig& cfg, const symball::Json& doc) {
  const std::string text = doc.dump();
  if (cfg.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      throw symball::domain_error("cannot open output file: " + cfg.out_path);
    }
    out << text << "\n";
  }
}

// Error objects always go to standard output so that a consumer reads one
// document from one place regardless of success or failure.
int emit_error(const std::string& type, const std::string& message,
               const std::string& path = "") {
  symball::Json err{{"type", type}, {"message", message}};
  if (!path.empty()) err["path"] = path;
  std::cout << symball::Json{{"error", err}}.dump() << "\n";
  return kExitUsage;
}

symball::Json read_payload(const RunConfig& cfg) {
  std::string text;
  if (cfg.in_path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(cfg.in_path, std::ios::binary);
    if (!in) {
      throw symball::domain_error("cannot open input file: " + cfg.in_path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return symball::Json::parse(text);
  } catch (const symball::Json::parse_error& e) {
    throw symball::schema_error("", std::string("payload is not valid JSON: ") + e.what());
  }
}

const symball::Json& payload_field(const symball::Json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key)) {
    throw symball::schema_error(key, "payload object must contain this field");
  }
  return payload.at(key);
}

void require_dims(const RunConfig& cfg) {
  if (cfg.m <= 0 || cfg.s <= 0) {
    throw symball::domain_error("this command requires --m and --s (both >= 1)");
  }
}

void check_requested_shape(const RunConfig& cfg, int m, int s) {
  if (cfg.m > 0 && cfg.m != m) {
    throw symball::schema_error(
        "m", "payload has m = " + std::to_string(m) + " but --m " +
                 std::to_string(cfg.m) + " was requested");
  }
  if (cfg.s > 0 && cfg.s != s) {
    throw symball::schema_error(
        "s", "payload has s = " + std::to_string(s) + " but --s " +
                 std::to_string(cfg.s) + " was requested");
  }
}

int cmd_dim(const RunConfig& cfg) {
  require_dims(cfg);
  emit(cfg, symball::Json{{"N", symball::embedding_dimension(cfg.m, cfg.s)}});
  return kExitSuccess;
}

int cmd_indices(const RunConfig& cfg) {
  require_dims(cfg);
  symball::Json list = symball::Json::array();
  for (const symball::MultiIndex& mu : symball::multi_indices(cfg.m, cfg.s)) {
    list.push_back(mu.entries);
  }
  emit(cfg, symball::Json{{"m", cfg.m}, {"s", cfg.s}, {"indices", list}});
  return kExitSuccess;
}

int cmd_embed(const RunConfig& cfg) {
  const symball::SymConfig c = symball::decode_sym_config(read_payload(cfg));
  check_requested_shape(cfg, c.size(), c.dim());
  emit(cfg, symball::encode(symball::segre_whitney(c)));
  return kExitSuccess;
}

int cmd_project(const RunConfig& cfg) {
  const symball::OrderedConfig t = symball::decode_ordered_config(read_payload(cfg));
  check_requested_shape(cfg, t.size(), t.dim());
  emit(cfg, symball::encode(symball::project(t)));
  return kExitSuccess;
}

int cmd_fiber(const RunConfig& cfg) {
  const symball::SymConfig c = symball::decode_sym_config(read_payload(cfg));
  check_requested_shape(cfg, c.size(), c.dim());
  symball::Json doc{{"count", symball::fiber_size(c)}};
  if (c.size() <= 8) {
    symball::Json tuples = symball::Json::array();
    for (const symball::OrderedConfig& t : symball::fiber(c)) {
      symball::Json points = symball::Json::array();
      for (const symball::BallPoint& p : t.points()) points.push_back(symball::encode(p));
      tuples.push_back(points);
    }
    doc["tuples"] = tuples;
  }
  emit(cfg, doc);
  return kExitSuccess;
}

int cmd_degree(const RunConfig& cfg) {
  if (cfg.partition.empty()) {
    throw symball::domain_error("degree requires --partition (e.g. --partition 3,1,1)");
  }
  const symball::Partition p(cfg.partition);
  emit(cfg, symball::Json{{"degree", symball::covering_degree(p)}});
  return kExitSuccess;
}

int cmd_classify(const RunConfig& cfg) {
  const symball::SymConfig c = symball::decode_sym_config(read_payload(cfg));
  check_requested_shape(cfg, c.size(), c.dim());
  const symball::Partition p = symball::classify_stratum(c, cfg.tol);
  emit(cfg, symball::Json{{"partition", symball::encode(p)},
                          {"codimension", symball::stratum_codimension(p, c.dim())}});
  return kExitSuccess;
}

int cmd_aut_eval(const RunConfig& cfg) {
  const symball::Json payload = read_payload(cfg);
  const symball::Automorphism g =
      symball::decode_automorphism(payload_field(payload, "automorphism"), "automorphism");
  const symball::BallPoint z =
      symball::decode_ball_point(payload_field(payload, "point"), "point");
  if (z.dim() != g.dim()) {
    throw symball::dimension_mismatch("point dimension does not match the automorphism");
  }
  emit(cfg, symball::Json{{"point", symball::encode(g(z))}});
  return kExitSuccess;
}

int cmd_sym_apply(const RunConfig& cfg) {
  const symball::Json payload = read_payload(cfg);
  const symball::InducedMap f =
      symball::decode_induced_map(payload_field(payload, "map"), "map");
  const symball::SymConfig c =
      symball::decode_sym_config(payload_field(payload, "config"), "config");
  emit(cfg, symball::encode(f(c)));
  return kExitSuccess;
}

int cmd_recover(const RunConfig& cfg) {
  const symball::Json payload = read_payload(cfg);
  const symball::InducedMap f =
      symball::decode_induced_map(payload_field(payload, "map"), "map");
  symball::ExtractOptions options;
  options.seed = cfg.seed;
  try {
    const symball::ExtractReport report = symball::extract_generator_report(
        [&f](const symball::SymConfig& c) { return f(c); }, f.dim(), f.power(), options);
    emit(cfg, symball::Json{{"automorphism", symball::encode(report.generator)},
                            {"max_diagonal_spread", report.max_diagonal_spread},
                            {"max_roundtrip_error", report.max_roundtrip_error}});
    return kExitSuccess;
  } catch (const symball::not_induced& e) {
    std::cout << symball::Json{{"error", {{"type", "not_induced"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitCheckFailure;
  }
}

int cmd_invariance(const RunConfig& cfg) {
  const symball::Json payload = read_payload(cfg);
  const symball::TupleMap h =
      symball::decode_tuple_map(payload_field(payload, "map"), "map");
  symball::SampleStream stream("cli-invariance", cfg.seed);
  std::vector<symball::OrderedConfig> samples;
  for (int i = 0; i < 6; ++i) {
    std::vector<symball::BallPoint> pts;
    for (int j = 0; j < h.power(); ++j) pts.push_back(stream.ball_point(h.dim()));
    samples.emplace_back(std::move(pts));
  }
  const symball::InvarianceReport report =
      symball::check_sm_invariance_report(h, samples, cfg.tol);
  symball::Json doc{{"invariant", report.invariant},
                    {"max_deviation", report.max_deviation}};
  if (report.witness) {
    symball::Json sigma = symball::Json::array();
    for (int v : report.witness->sigma) sigma.push_back(v + 1);
    doc["witness"] = symball::Json{{"sigma", sigma},
                                   {"sample_index", report.witness->sample_index},
                                   {"deviation", report.witness->deviation}};
  }
  emit(cfg, doc);
  return report.invariant ? kExitSuccess : kExitCheckFailure;
}

int cmd_verify(const RunConfig& cfg) {
  symball::VerifyConfig vcfg;
  vcfg.seed = cfg.seed;
  vcfg.tol = cfg.tol;
  vcfg.m = cfg.m;
  vcfg.s = cfg.s;
  const std::vector<symball::SuiteResult> results = symball::run_verification(vcfg);
  symball::Json suites = symball::Json::array();
  for (const symball::SuiteResult& r : results) {
    suites.push_back(symball::Json{{"name", r.name},
                                   {"passed", r.passed},
                                   {"max_deviation", r.max_deviation},
                                   {"detail", r.detail}});
  }
  const bool ok = symball::all_passed(results);
  emit(cfg, symball::Json{{"passed", ok}, {"suites", suites}});
  return ok ? kExitSuccess : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Symmetric powers of the complex unit ball: automorphisms, "
               "quotient maps, strata, embeddings, induced maps."};
  app.require_subcommand(1);

  int (*handler)(const RunConfig&) = nullptr;
  auto add = [&](const char* name, const char* help, int (*fn)(const RunConfig&),
                 bool dims, bool payload) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (dims) {
      sub->add_option("--m", cfg.m, "number of points")->check(CLI::PositiveNumber);
      sub->add_option("--s", cfg.s, "ambient complex dimension")
          ->check(CLI::PositiveNumber);
    }
    if (payload) {
      sub->add_option("--in", cfg.in_path, "read the JSON payload from FILE")
          ->check(CLI::ExistingFile);
    }
    sub->add_option("--out", cfg.out_path, "write the result document to FILE");
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  add("dim", "affine dimension of the embedded symmetric power", cmd_dim, true, false);
  add("indices", "monomial multi-index basis in canonical order", cmd_indices, true,
      false);
  add("embed", "embedding coordinates of an unordered config", cmd_embed, true, true);
  add("project", "canonical representative of an ordered tuple", cmd_project, true, true);
  add("fiber", "ordered tuples over an unordered config", cmd_fiber, true, true);
  CLI::App* degree =
      add("degree", "number of ordered tuples over a stratum", cmd_degree, false, false);
  degree->add_option("--partition", cfg.partition, "multiplicities, e.g. 3,1,1")
      ->delimiter(',')
      ->required();
  CLI::App* classify = add("classify", "multiplicity pattern of a config", cmd_classify,
                           true, true);
  add("aut-eval", "apply a ball automorphism to a point", cmd_aut_eval, false, true);
  add("sym-apply", "apply an induced map to an unordered config", cmd_sym_apply, false,
      true);
  CLI::App* recover =
      add("recover", "recover the generator of an induced map", cmd_recover, false, true);
  CLI::App* invariance = add("invariance", "test a tuple map for permutation invariance",
                             cmd_invariance, false, true);
  CLI::App* verify =
      add("verify", "run every property suite and report pass/fail", cmd_verify, true,
          false);

  for (CLI::App* sub : {classify, invariance, verify}) {
    sub->add_option("--tol", cfg.tol, "comparison tolerance (default 1e-10)");
  }
  for (CLI::App* sub : {recover, invariance, verify}) {
    sub->add_option("--seed", cfg.seed, "sample-stream seed (default 0)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    std::ostringstream msg;
    msg << e.get_name() << ": " << e.what();
    return emit_error("usage", msg.str());
  }

  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
    return emit_error("usage", "--tol must be positive and finite");
  }

  try {
    return handler(cfg);
  } catch (const symball::schema_error& e) {
    return emit_error("schema", e.what(), e.path());
  } catch (const symball::dimension_mismatch& e) {
    return emit_error("dimension", e.what());
  } catch (const symball::overflow_error& e) {
    return emit_error("overflow", e.what());
  } catch (const symball::domain_error& e) {
    return emit_error("domain", e.what());
  } catch (const symball::error& e) {
    return emit_error("internal", e.what());
  }
}
