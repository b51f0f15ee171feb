// Copyright 2026 The Tropical Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "generators.hpp"
#include "tropical/errors.hpp"
#include "tropical/closure.hpp"
#include "tropical/oracles.hpp"

namespace tropical {
namespace {

constexpr Scalar E = kEpsilon;

void expect_witness(const Matrix& a, const CycleMeanResult& r) {
  ASSERT_TRUE(r.witness_cycle.has_value());
  std::vector<std::size_t> nodes = *r.witness_cycle;
  std::sort(nodes.begin(), nodes.end());
  EXPECT_EQ(std::adjacent_find(nodes.begin(), nodes.end()), nodes.end()) << "not elementary";
  EXPECT_NEAR(cycle_mean(a, *r.witness_cycle), r.lambda, 1e-9);
}

TEST(MaxCycleMean, Examples) {
  const Matrix a{{0, 3}, {-1, 0}};
  const CycleMeanResult r = max_cycle_mean(a);
  EXPECT_DOUBLE_EQ(r.lambda, 1.0);
  expect_witness(a, r);
  EXPECT_EQ(r.witness_cycle->size(), 2u);

  const CycleMeanResult acyclic = max_cycle_mean(Matrix{{E, 1}, {E, E}});
  EXPECT_TRUE(is_epsilon(acyclic.lambda));
  EXPECT_FALSE(acyclic.witness_cycle.has_value());

  const Matrix b{{-1, 0}, {-3, -2}};
  const CycleMeanResult rb = max_cycle_mean(b);
  EXPECT_DOUBLE_EQ(rb.lambda, -1.0);
  ASSERT_TRUE(rb.witness_cycle.has_value());
  EXPECT_EQ(*rb.witness_cycle, std::vector<std::size_t>{0});

  EXPECT_THROW(max_cycle_mean(Matrix(2, 3)), DimensionMismatch);
}

TEST(MaxCycleMean, DisjointComponents) {
  // Two components joined by a one-way arc; the better one is the second.
  const Matrix a{{-2, 1, 0, E}, {-4, E, E, E}, {E, E, E, 3}, {E, E, -1, E}};
  const CycleMeanResult r = max_cycle_mean(a);
  EXPECT_DOUBLE_EQ(r.lambda, 1.0);
  expect_witness(a, r);
}

TEST(Scc, Examples) {
  const auto chain = strongly_connected_components(digraph_of(Matrix{{E, 1, E}, {E, E, 1}, {E, E, E}}));
  EXPECT_EQ(chain, (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
  const auto two = strongly_connected_components(digraph_of(Matrix{{E, 1}, {1, E}}));
  EXPECT_EQ(two, (std::vector<std::vector<std::size_t>>{{0, 1}}));
  const auto mutual = strongly_connected_components(digraph_of(Matrix{{0, 3}, {-1, 0}}));
  EXPECT_EQ(mutual, (std::vector<std::vector<std::size_t>>{{0, 1}}));
}

TEST(Digraph, ArcsAreFiniteEntries) {
  const Digraph g = digraph_of(Matrix{{E, 2}, {-1, E}});
  EXPECT_EQ(g.nodes, 2u);
  ASSERT_EQ(g.arcs.size(), 2u);
}

TEST(KleeneStar, Examples) {
  EXPECT_TRUE(near(kleene_star(Matrix{{-1, 0}, {-3, -2}}), Matrix{{0, 0}, {-3, 0}}));
  EXPECT_TRUE(near(kleene_star(Matrix::epsilon(3, 3)), Matrix::identity(3)));
  try {
    kleene_star(Matrix{{1}});
    FAIL() << "expected DivergentStar";
  } catch (const DivergentStar& e) {
    EXPECT_DOUBLE_EQ(e.lambda(), 1.0);
  }
}

TEST(KleeneStarScaled, Examples) {
  EXPECT_TRUE(near(kleene_star_scaled(Matrix{{1}}, 1.0), Matrix{{0}}));
  const Matrix a{{0, 3}, {-1, 0}};
  EXPECT_TRUE(near(kleene_star_scaled(a, 1.0), oracle::brute_star(Matrix{{-1, 2}, {-2, -1}})));
  EXPECT_TRUE(near(kleene_star_scaled(a, 1.0), Matrix{{0, 2}, {-2, 0}}));
  EXPECT_THROW(kleene_star_scaled(a, 0.5), DivergentStar);
}

class ClosureProperties : public ::testing::TestWithParam<int> {};

TEST_P(ClosureProperties, KarpMatchesEnumeration) {
  testing::Gen gen(static_cast<std::uint64_t>(GetParam()));
  const Matrix a = gen.sparse(gen.size(1, 6), 0.7, -10, 10);
  const CycleMeanResult r = max_cycle_mean(a);
  const Scalar brute = oracle::brute_cycle_mean(a);
  if (is_epsilon(brute)) {
    EXPECT_TRUE(is_epsilon(r.lambda));
  } else {
    EXPECT_NEAR(r.lambda, brute, 1e-9);
    expect_witness(a, r);
  }
}

TEST_P(ClosureProperties, StarIdentities) {
  testing::Gen gen(500 + static_cast<std::uint64_t>(GetParam()));
  Matrix a = gen.sparse(gen.size(1, 6), 0.7, -10, 10);
  const Scalar lambda = max_cycle_mean(a).lambda;
  if (!is_epsilon(lambda)) a = a.shifted(-lambda - gen.real(0, 1));
  const Tolerance tol;
  const Matrix star = kleene_star(a);
  EXPECT_TRUE(near(star, oracle::brute_star(a), tol));
  EXPECT_TRUE(near(otimes(star, star), star, tol));
  EXPECT_TRUE(near(kleene_star(star), star, tol));
  EXPECT_TRUE(near(oplus(otimes(a, star), Matrix::identity(a.rows())), star, tol));
}

TEST_P(ClosureProperties, CycleMeanInvariantUnderDiagonalSimilarity) {
  testing::Gen gen(900 + static_cast<std::uint64_t>(GetParam()));
  const std::size_t n = gen.size(1, 6);
  const Matrix a = gen.sparse(n, 0.7, -10, 10);
  const Vector x = gen.vector(n, -10, 10);
  const Matrix similar = otimes(otimes(inverse_diag(x), a), diag(x));
  const Scalar before = max_cycle_mean(a).lambda;
  const Scalar after = max_cycle_mean(similar).lambda;
  if (is_epsilon(before)) {
    EXPECT_TRUE(is_epsilon(after));
  } else {
    EXPECT_NEAR(before, after, 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, ClosureProperties, ::testing::Range(0, 200));

}  // namespace
}  // namespace tropical
