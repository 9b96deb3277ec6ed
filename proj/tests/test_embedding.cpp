#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "symball/embedding.hpp"
#include "symball/errors.hpp"
#include "symball/random.hpp"

using namespace symball;
using helpers::bp;
using helpers::bp1;
using helpers::cfg;

TEST_CASE("multi index lists are complete and descending") {
  for (const auto& [m, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 2}, {4, 1}, {2, 2}}) {
    const auto basis = multi_indices(m, s);
    const auto expected = oracles::exponent_vectors(m, s + 1);
    REQUIRE(basis.size() == expected.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].entries == expected[i]);
      CHECK(basis[i].weight() == m);
    }
  }
}

TEST_CASE("the degree two two-variable basis, spelled out") {
  const auto basis = multi_indices(2, 2);
  const std::vector<std::vector<int>> expected{{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                               {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  REQUIRE(basis.size() == expected.size());
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis[i].entries == expected[i]);
}

TEST_CASE("embedding dimension agrees with the binomial count") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(embedding_dimension(m, 1) == static_cast<std::uint64_t>(m));
    for (int s = 1; s <= 8; ++s) {
      CHECK(embedding_dimension(m, s) == oracles::pascal(m + s, m) - 1);
      CHECK(multi_indices(m, s).size() == oracles::pascal(m + s, m));
    }
  }
  CHECK(embedding_dimension(1, 7) == 7);
  CHECK(embedding_dimension(2, 2) == 5);
  CHECK_THROWS_AS(embedding_dimension(40, 40), overflow_error);
  CHECK_THROWS_AS(embedding_dimension(0, 1), domain_error);
  CHECK_THROWS_AS(embedding_dimension(1, 0), domain_error);
}

TEST_CASE("a product of two linear forms, expanded by hand") {
  const Complex alpha(0.3, 0.1);
  const Complex beta(0.0, 0.4);
  // Points (alpha, 0) and (0, beta): the product is
  // x0^2 + alpha x0 x1 + beta x0 x2 + alpha beta x1 x2.
  const SymConfig c = cfg({bp({alpha, Complex(0, 0)}), bp({Complex(0, 0), beta})});
  const EmbeddingCoords e = segre_whitney(c);
  CHECK(std::abs(e.at(MultiIndex{{2, 0, 0}}) - Complex(1, 0)) == 0.0);
  CHECK(std::abs(e.at(MultiIndex{{1, 1, 0}}) - alpha) < 1e-15);
  CHECK(std::abs(e.at(MultiIndex{{1, 0, 1}}) - beta) < 1e-15);
  CHECK(std::abs(e.at(MultiIndex{{0, 1, 1}}) - alpha * beta) < 1e-15);
  CHECK(std::abs(e.at(MultiIndex{{0, 2, 0}})) == 0.0);
  CHECK(std::abs(e.at(MultiIndex{{0, 0, 2}})) == 0.0);
}

TEST_CASE("a single point embeds as its own coordinates") {
  const BallPoint z = bp({Complex(0.2, -0.1), Complex(0.4, 0.3)});
  const EmbeddingCoords e = segre_whitney(cfg({z}));
  CHECK(std::abs(e.at(MultiIndex{{1, 0, 0}}) - Complex(1, 0)) == 0.0);
  CHECK(std::abs(e.at(MultiIndex{{0, 1, 0}}) - z[0]) == 0.0);
  CHECK(std::abs(e.at(MultiIndex{{0, 0, 1}}) - z[1]) == 0.0);
}

TEST_CASE("one-variable coefficients are the elementary symmetric functions") {
  SampleStream st("test-polydisc", 53);
  for (int m = 1; m <= 6; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<BallPoint> pts;
      std::vector<Complex> zs;
      for (int i = 0; i < m; ++i) {
        pts.push_back(st.ball_point(1, 0.9));
        zs.push_back(pts.back()[0]);
      }
      const SymConfig c = cfg(pts);
      const EmbeddingCoords e = segre_whitney(c);
      const auto sigma = elementary_symmetric(c);
      REQUIRE(static_cast<int>(sigma.size()) == m);
      for (int k = 1; k <= m; ++k) {
        CHECK(std::abs(e.at(MultiIndex{{m - k, k}}) - sigma[k - 1]) < 1e-13);
        CHECK(std::abs(sigma[k - 1] - oracles::subset_sigma(zs, k)) < 1e-13);
      }
    }
  }
  // The worked two-point case: z = 0.5 and -0.5 give sigma = (0, -0.25).
  const auto sigma = elementary_symmetric(cfg({bp1(0.5), bp1(-0.5)}));
  CHECK(std::abs(sigma[0] - Complex(0, 0)) == 0.0);
  CHECK(std::abs(sigma[1] - Complex(-0.25, 0)) == 0.0);
  CHECK_THROWS_AS(elementary_symmetric(cfg({bp({Complex(0.1, 0), Complex(0, 0)})})),
                  dimension_mismatch);
}

TEST_CASE("embedding coordinates are ordering independent bit for bit") {
  SampleStream st("test-embed-order", 59);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BallPoint> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(st.ball_point(2, 0.9));
    const OrderedConfig t(pts);
    const SymConfig c = project(t);
    const EmbeddingCoords canonical = segre_whitney(c);
    for_each_permutation(4, [&](const std::vector<int>& sigma) {
      // Canonicalizing first gives identical bits; evaluating in a shuffled
      // order only reassociates the arithmetic.
      CHECK(sup_distance(segre_whitney(project(t.permuted(sigma))), canonical) == 0.0);
      CHECK(sup_distance(segre_whitney(t.permuted(sigma)), canonical) < 1e-13);
    });
  }
}

TEST_CASE("embedding coordinate lookups are validated") {
  const EmbeddingCoords e = segre_whitney(cfg({bp1(0.3), bp1(0.4)}));
  CHECK(e.degree() == 2);
  CHECK(e.dim() == 1);
  CHECK(e.values().size() == 3);
  CHECK_THROWS_AS(e.at(MultiIndex{{1, 0, 1}}), domain_error);
  CHECK_THROWS_AS(e.at(MultiIndex{{3, 0}}), domain_error);
  const EmbeddingCoords f = segre_whitney(cfg({bp1(0.3), bp1(0.4), bp1(0.5)}));
  CHECK_THROWS_AS(sup_distance(e, f), dimension_mismatch);
}
