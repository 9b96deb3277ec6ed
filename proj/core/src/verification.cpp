#include "symball/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>
#include <utility>
#include <vector>

#include "symball/embedding.hpp"
#include "symball/errors.hpp"
#include "symball/geometry.hpp"
#include "symball/induced.hpp"
#include "symball/random.hpp"
#include "symball/sym_power.hpp"

namespace symball {
namespace {

// Internal thresholds.  These are fixed on purpose: cfg.tol only governs the
// analytic identities checked on generic samples, while agreement between two
// exact computations (enumerative counts, coefficient identities) is held to
// the tighter bounds below.
constexpr double kCoefficientTol = 1e-12;   // coefficient-level agreement
constexpr double kRecoveryTol = 1e-8;       // parameter recovery accuracy
constexpr double kSeparationFloor = 1e-3;   // "clearly distinct" premise
constexpr double kInjectivityFloor = 1e-9;  // embedding must separate by this

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

int clamp_or(int requested, int lo, int hi, int fallback) {
  if (requested <= 0) return fallback;
  return std::clamp(requested, lo, hi);
}

OrderedConfig random_ordered(SampleStream& st, int m, int s, double max_norm = 0.9) {
  std::vector<BallPoint> pts;
  pts.reserve(m);
  for (int i = 0; i < m; ++i) pts.push_back(st.ball_point(s, max_norm));
  return OrderedConfig(std::move(pts));
}

SymConfig random_config(SampleStream& st, int m, int s, double max_norm = 0.9) {
  return project(random_ordered(st, m, s, max_norm));
}

std::vector<int> random_permutation(SampleStream& st, int m) {
  std::vector<int> sigma(m);
  for (int i = 0; i < m; ++i) sigma[i] = i;
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(st.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(sigma[i], sigma[j]);
  }
  return sigma;
}

/// k distinct real anchor points on the first coordinate axis of C^s,
/// shared by the enumerative suites.
std::vector<BallPoint> anchors(int k, int s) {
  std::vector<BallPoint> out;
  out.reserve(k);
  for (int j = 0; j < k; ++j) {
    Vector v = Vector::Zero(s);
    v[0] = Complex((j + 1) * 0.13 - 0.35, 0.0);
    out.emplace_back(std::move(v));
  }
  return out;
}

SymConfig with_multiplicities(const std::vector<BallPoint>& centers, const Partition& p) {
  std::vector<BallPoint> pts;
  for (int j = 0; j < p.size(); ++j) {
    for (int r = 0; r < p.parts()[j]; ++r) pts.push_back(centers[j]);
  }
  return SymConfig(std::move(pts));
}

// --- suite 1: N(m, s) = binom(m+s, m) - 1 and the monomial basis ---------

SuiteResult suite_dimension(const VerifyConfig&) {
  SuiteResult r{"dimension-formula", true, 0.0, ""};
  // Additive Pascal triangle, independent of the multiplicative binomial in
  // the library.
  std::uint64_t pascal[17][17] = {};
  for (int n = 0; n <= 16; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  int pairs = 0;
  for (int m = 1; m <= 8; ++m) {
    for (int s = 1; s <= 8; ++s) {
      const std::uint64_t count = pascal[m + s][m];
      if (embedding_dimension(m, s) != count - 1) {
        r.passed = false;
        r.detail = "embedding_dimension(" + std::to_string(m) + ", " + std::to_string(s) +
                   ") != binom(m+s, m) - 1";
        return r;
      }
      const auto basis = multi_indices(m, s);
      bool basis_ok = basis.size() == count && basis.front().entries.front() == m;
      for (std::size_t i = 0; basis_ok && i < basis.size(); ++i) {
        basis_ok = basis[i].weight() == m && (i == 0 || basis[i] < basis[i - 1]);
      }
      if (!basis_ok) {
        r.passed = false;
        r.detail = "monomial basis for (m, s) = (" + std::to_string(m) + ", " +
                   std::to_string(s) + ") is not the descending degree-m list";
        return r;
      }
      ++pairs;
    }
  }
  r.detail = std::to_string(pairs) + " (m, s) pairs checked exactly";
  return r;
}

// --- suite 2: phi_a is an involution exchanging 0 and a -------------------

SuiteResult suite_involution(const VerifyConfig& cfg) {
  SuiteResult r{"mobius-involution", true, 0.0, ""};
  const int s_max = clamp_or(cfg.s, 1, 6, 3);
  SampleStream st("verify-involution", cfg.seed);
  int samples = 0;
  for (int s = 1; s <= s_max; ++s) {
    for (int trial = 0; trial < 1000; ++trial) {
      const BallPoint a = st.ball_point(s, 0.9);
      const BallPoint z = st.ball_point(s, 0.95);
      const BallPoint w = mobius(a, z);
      double dev = sup_distance(mobius(a, w), z);
      dev = std::max(dev, sup_distance(mobius(a, BallPoint::origin(s)), a));
      dev = std::max(dev, mobius(a, a).norm());
      r.max_deviation = std::max(r.max_deviation, dev);
      ++samples;
    }
  }
  r.passed = r.max_deviation <= cfg.tol;
  r.detail = std::to_string(samples) + " samples with |a| <= 0.9, |z| <= 0.95; max deviation " +
             fmt(r.max_deviation);
  return r;
}

// --- suite 3: project is permutation-invariant, bitwise; so is the -------
// --- induced embedding, up to reassociation                        -------

SuiteResult suite_quotient(const VerifyConfig& cfg) {
  SuiteResult r{"quotient-invariance", true, 0.0, ""};
  const int m_max = clamp_or(cfg.m, 1, 6, 5);
  const int s_max = clamp_or(cfg.s, 1, 4, 3);
  SampleStream st("verify-quotient", cfg.seed);
  int orderings = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + trial % m_max;
    const int s = 1 + (trial / m_max) % s_max;
    const OrderedConfig t = random_ordered(st, m, s);
    const SymConfig c = project(t);
    const EmbeddingCoords canonical = segre_whitney(c);
    bool exact_ok = true;
    for_each_permutation(m, [&](const std::vector<int>& sigma) {
      const OrderedConfig shuffled = t.permuted(sigma);
      if (!(project(shuffled) == c)) exact_ok = false;
      r.max_deviation =
          std::max(r.max_deviation, sup_distance(segre_whitney(shuffled), canonical));
      ++orderings;
    });
    if (!exact_ok) {
      r.passed = false;
      r.detail = "canonical representative depends on the input ordering (trial " +
                 std::to_string(trial) + ")";
      return r;
    }
  }
  r.passed = r.max_deviation <= kCoefficientTol;
  r.detail = std::to_string(orderings) + " orderings of 500 configs; canonical forms " +
             "bit-identical, max coefficient deviation " + fmt(r.max_deviation);
  return r;
}

// --- suite 4: |fiber| = m! / prod m_j! on every stratum -------------------

SuiteResult suite_covering(const VerifyConfig& cfg) {
  SuiteResult r{"covering-degree", true, 0.0, ""};
  const int m_max = clamp_or(cfg.m, 1, 8, 6);
  std::uint64_t factorial[9];
  factorial[0] = 1;
  for (int n = 1; n <= 8; ++n) factorial[n] = factorial[n - 1] * n;
  int strata = 0;
  for (int m = 1; m <= m_max; ++m) {
    for (const Partition& p : all_partitions(m)) {
      const SymConfig c = with_multiplicities(anchors(p.size(), 1), p);
      if (!(classify_stratum(c, 0.0) == p)) {
        r.passed = false;
        r.detail = "representative config not classified into its own stratum (m = " +
                   std::to_string(m) + ")";
        return r;
      }
      std::uint64_t expected = factorial[m];
      for (int part : p.parts()) expected /= factorial[part];
      const auto tuples = fiber(c);
      bool ok = tuples.size() == expected && fiber_size(c) == expected &&
                covering_degree(p) == expected;
      for (std::size_t i = 0; ok && i < tuples.size(); ++i) {
        ok = project(tuples[i]) == c;
      }
      if (!ok) {
        r.passed = false;
        r.detail = "fiber mismatch over a stratum of m = " + std::to_string(m);
        return r;
      }
      ++strata;
    }
  }
  r.detail = std::to_string(strata) + " strata for m <= " + std::to_string(m_max) +
             ", counts exact";
  return r;
}

// --- suite 5: s = 1 coefficients are the elementary symmetric functions ---

SuiteResult suite_polydisc(const VerifyConfig& cfg) {
  SuiteResult r{"polydisc-reduction", true, 0.0, ""};
  const int m_max = clamp_or(cfg.m, 1, 8, 6);
  SampleStream st("verify-polydisc", cfg.seed);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + trial % m_max;
    const SymConfig c = random_config(st, m, 1);
    const EmbeddingCoords emb = segre_whitney(c);
    const std::vector<Complex> sigma = elementary_symmetric(c);
    double dev = std::abs(emb.at(MultiIndex{{m, 0}}) - Complex(1.0, 0.0));
    for (int k = 1; k <= m; ++k) {
      dev = std::max(dev, std::abs(emb.at(MultiIndex{{m - k, k}}) - sigma[k - 1]));
    }
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  r.passed = r.max_deviation <= kCoefficientTol;
  r.detail = "500 one-dimensional configs, m <= " + std::to_string(m_max) +
             "; max coefficient deviation " + fmt(r.max_deviation);
  return r;
}

// --- suite 6: the generator of an induced map is recoverable --------------

SuiteResult suite_recovery(const VerifyConfig& cfg) {
  SuiteResult r{"generator-recovery", true, 0.0, ""};
  SampleStream st("verify-recovery", cfg.seed);
  int trials = 0;
  for (int s = 2; s <= 3; ++s) {
    for (int m = 2; m <= 3; ++m) {
      for (int trial = 0; trial < 25; ++trial) {
        const Automorphism g = random_automorphism(st, s);
        const InducedMap f(g, m);
        ExtractOptions opts;
        opts.seed = cfg.seed + static_cast<std::uint64_t>(trials);
        ExtractReport rep = extract_generator_report(
            [&f](const SymConfig& c) { return f(c); }, s, m, opts);
        const double dev_center = sup_distance(rep.generator.center(), g.center());
        const double dev_unitary =
            (rep.generator.unitary_part().entries() - g.unitary_part().entries())
                .cwiseAbs()
                .maxCoeff();
        const double dev = std::max({dev_center, dev_unitary, rep.max_roundtrip_error});
        r.max_deviation = std::max(r.max_deviation, dev);
        ++trials;
      }
    }
  }
  r.passed = r.max_deviation <= kRecoveryTol;
  r.detail = std::to_string(trials) + " induced maps over (s, m) in {2,3} x {2,3}; max " +
             "parameter/round-trip deviation " + fmt(r.max_deviation);
  return r;
}

// --- suite 7: (g1 g2)^m = g1^m g2^m and (g^m)^-1 g^m = id -----------------

SuiteResult suite_functoriality(const VerifyConfig& cfg) {
  SuiteResult r{"functoriality-automorphy", true, 0.0, ""};
  const int m_max = clamp_or(cfg.m, 2, 5, 3);
  const int s_max = clamp_or(cfg.s, 1, 4, 3);
  SampleStream st("verify-functoriality", cfg.seed);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % (m_max - 1);
    const int s = 1 + (trial / (m_max - 1)) % s_max;
    const Automorphism g1 = random_automorphism(st, s);
    const Automorphism g2 = random_automorphism(st, s);
    const SymConfig c = random_config(st, m, s);
    const SymConfig composed = InducedMap(compose(g1, g2), m)(c);
    const SymConfig chained = InducedMap(g1, m)(InducedMap(g2, m)(c));
    double dev = sup_distance(composed, chained);
    const InducedMap f(g1, m);
    dev = std::max(dev, sup_distance(f.inverse()(f(c)), c));
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  r.passed = r.max_deviation <= cfg.tol;
  r.detail = "200 samples; max deviation " + fmt(r.max_deviation);
  return r;
}

// --- suite 8: componentwise tuple maps with one deviating component -------
// --- never descend; all-equal tuples always do                      -------

SuiteResult suite_rigidity(const VerifyConfig& cfg) {
  SuiteResult r{"tuple-rigidity", true, 0.0, ""};
  const int m_max = clamp_or(cfg.m, 2, 6, 4);
  const int s = clamp_or(cfg.s, 1, 4, 2);
  SampleStream st("verify-rigidity", cfg.seed);
  int rejected = 0;
  int accepted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + trial % (m_max - 1);
    const Automorphism shared = random_automorphism(st, s);
    // Draw a deviating component until it is separated from the shared one.
    double separation = 0.0;
    Automorphism deviant = shared;
    while (separation < kSeparationFloor) {
      deviant = random_automorphism(st, s);
      separation = 0.0;
      for (int probe = 0; probe < 8; ++probe) {
        const BallPoint z = st.ball_point(s, 0.9);
        separation = std::max(separation, sup_distance(shared(z), deviant(z)));
      }
    }
    std::vector<Automorphism> components(m, shared);
    components[static_cast<int>(st.next() % static_cast<std::uint64_t>(m))] = deviant;
    const std::vector<int> sigma = random_permutation(st, m);
    std::vector<OrderedConfig> samples;
    for (int i = 0; i < 6; ++i) samples.push_back(random_ordered(st, m, s));

    const InvarianceReport mixed =
        check_sm_invariance_report(TupleMap(components, sigma), samples, cfg.tol);
    if (mixed.invariant) {
      r.passed = false;
      r.detail = "a tuple map with a deviating component passed the invariance check "
                 "(trial " + std::to_string(trial) + ")";
      return r;
    }
    ++rejected;

    const InvarianceReport uniform = check_sm_invariance_report(
        TupleMap(std::vector<Automorphism>(m, shared), sigma), samples, cfg.tol);
    r.max_deviation = std::max(r.max_deviation, uniform.max_deviation);
    if (!uniform.invariant) {
      r.passed = false;
      r.detail = "an all-equal tuple map failed the invariance check (trial " +
                 std::to_string(trial) + ", deviation " + fmt(uniform.max_deviation) + ")";
      return r;
    }
    ++accepted;
  }
  r.detail = std::to_string(rejected) + " deviating tuples rejected, " +
             std::to_string(accepted) + " all-equal tuples accepted; max all-equal " +
             "deviation " + fmt(r.max_deviation);
  return r;
}

// --- suite 9: stratum codimension s (m - k), by formula and by -----------
// --- perturbed classification                                  -----------

SuiteResult suite_codimension(const VerifyConfig&) {
  SuiteResult r{"stratum-codimension", true, 0.0, ""};
  const double delta = 1e-3;
  int directions = 0;
  int strata = 0;
  for (int s = 2; s <= 3; ++s) {
    // The pinned special case: one doubled point has codimension s.
    for (int m = 2; m <= 4; ++m) {
      std::vector<int> parts{2};
      for (int j = 2; j < m; ++j) parts.push_back(1);
      if (stratum_codimension(Partition(parts), s) != s) {
        r.passed = false;
        r.detail = "codimension of the doubled-point stratum is not s";
        return r;
      }
    }
    for (int m = 1; m <= 4; ++m) {
      for (const Partition& p : all_partitions(m)) {
        const int k = p.size();
        const std::vector<BallPoint> centers = anchors(k, s);
        const SymConfig c = with_multiplicities(centers, p);
        if (!(classify_stratum(c, 0.0) == p)) {
          r.passed = false;
          r.detail = "representative config not classified into its own stratum";
          return r;
        }
        if (s * k + stratum_codimension(p, s) != s * m) {
          r.passed = false;
          r.detail = "dimension + codimension != s * m for a partition of " +
                     std::to_string(m);
          return r;
        }
        // Moving a whole cluster in any of the s * k coordinate directions
        // (real or imaginary part) stays inside the stratum.
        for (int j = 0; j < k; ++j) {
          for (int d = 0; d < s; ++d) {
            for (int part = 0; part < 2; ++part) {
              std::vector<BallPoint> moved = centers;
              Vector v = moved[j].coords();
              v[d] += part == 0 ? Complex(delta, 0.0) : Complex(0.0, delta);
              moved[j] = BallPoint(std::move(v));
              if (!(classify_stratum(with_multiplicities(moved, p), 0.0) == p)) {
                r.passed = false;
                r.detail = "whole-cluster move left the stratum";
                return r;
              }
              ++directions;
            }
          }
        }
        // Splitting one copy off a multiple point must leave the stratum.
        if (k < m) {
          std::vector<BallPoint> pts;
          for (int j = 0; j < k; ++j) {
            for (int rep = 0; rep < p.parts()[j]; ++rep) pts.push_back(centers[j]);
          }
          Vector v = pts[0].coords();  // first part is >= 2 copies
          v[0] += Complex(0.0, delta);
          pts[0] = BallPoint(std::move(v));
          if (classify_stratum(SymConfig(std::move(pts)), 0.0) == p) {
            r.passed = false;
            r.detail = "splitting a multiple point did not change the stratum";
            return r;
          }
        }
        ++strata;
      }
    }
  }
  r.detail = std::to_string(strata) + " strata, " + std::to_string(directions) +
             " tangent directions verified";
  return r;
}

// --- suite 10: the embedding separates distinct configs -------------------

SuiteResult suite_injectivity(const VerifyConfig& cfg) {
  SuiteResult r{"embedding-injectivity", true, 0.0, ""};
  const int m_max = clamp_or(cfg.m, 1, 5, 4);
  const int s_max = clamp_or(cfg.s, 1, 4, 3);
  SampleStream st("verify-injectivity", cfg.seed);
  double min_separation = 1.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + trial % m_max;
    const int s = 1 + (trial / m_max) % s_max;
    const SymConfig c1 = random_config(st, m, s);
    SymConfig c2 = random_config(st, m, s);
    int guard = 0;
    while (sup_distance(c1, c2) < kSeparationFloor && guard++ < 64) {
      c2 = random_config(st, m, s);
    }
    min_separation =
        std::min(min_separation, sup_distance(segre_whitney(c1), segre_whitney(c2)));
  }
  // For this suite the recorded extremum is the smallest embedding-side
  // distance over all pairs; it must stay above the separation floor.
  r.max_deviation = min_separation;
  r.passed = min_separation > kInjectivityFloor;
  r.detail = "500 pairs of configs at least " + fmt(kSeparationFloor) +
             " apart; smallest embedding distance " + fmt(min_separation);
  return r;
}

SuiteResult guarded(SuiteResult (*suite)(const VerifyConfig&), const char* name,
                    const VerifyConfig& cfg) {
  try {
    return suite(cfg);
  } catch (const std::exception& e) {
    return SuiteResult{name, false, 0.0, std::string("aborted: ") + e.what()};
  }
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig& cfg) {
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
    throw domain_error("run_verification: tol must be positive and finite");
  }
  std::vector<SuiteResult> out;
  out.push_back(guarded(suite_dimension, "dimension-formula", cfg));
  out.push_back(guarded(suite_involution, "mobius-involution", cfg));
  out.push_back(guarded(suite_quotient, "quotient-invariance", cfg));
  out.push_back(guarded(suite_covering, "covering-degree", cfg));
  out.push_back(guarded(suite_polydisc, "polydisc-reduction", cfg));
  out.push_back(guarded(suite_recovery, "generator-recovery", cfg));
  out.push_back(guarded(suite_functoriality, "functoriality-automorphy", cfg));
  out.push_back(guarded(suite_rigidity, "tuple-rigidity", cfg));
  out.push_back(guarded(suite_codimension, "stratum-codimension", cfg));
  out.push_back(guarded(suite_injectivity, "embedding-injectivity", cfg));
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

}  // namespace symball
