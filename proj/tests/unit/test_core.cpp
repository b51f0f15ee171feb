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
#include "tropical/matrix.hpp"

namespace tropical {
namespace {

constexpr Scalar E = kEpsilon;

TEST(Scalar, EpsilonIsNeutralAndAbsorbing) {
  EXPECT_EQ(oplus(E, 3.0), 3.0);
  EXPECT_EQ(oplus(-2.0, E), -2.0);
  EXPECT_TRUE(is_epsilon(otimes(E, 5.0)));
  EXPECT_TRUE(is_epsilon(otimes(5.0, E)));
  EXPECT_TRUE(is_epsilon(otimes(E, E)));
}

TEST(Scalar, ToleranceComparisons) {
  EXPECT_TRUE(leq(E, -1e300));
  EXPECT_FALSE(leq(0.0, E));
  EXPECT_TRUE(leq(1.0 + 5e-10, 1.0));
  EXPECT_FALSE(leq(1.0 + 5e-10, 1.0, Tolerance(0)));
  EXPECT_TRUE(near(E, E));
  EXPECT_FALSE(near(E, -1e300));
}

TEST(Construction, RejectsBadShapesAndValues) {
  EXPECT_THROW(Matrix(0, 2), DimensionMismatch);
  EXPECT_THROW((Matrix{{1, 2}, {3}}), DimensionMismatch);
  EXPECT_THROW(Vector(std::vector<double>{}), DimensionMismatch);
  EXPECT_THROW((Vector{1.0, std::nan("")}), Error);
  EXPECT_THROW((Vector{std::numeric_limits<double>::infinity()}), Error);
}

TEST(Tadd, Examples) {
  const Matrix a{{1, E}, {0, 2}};
  EXPECT_TRUE(near(oplus(a, Matrix{{0, 3}, {E, 1}}), Matrix{{1, 3}, {0, 2}}));
  EXPECT_TRUE(near(oplus(a, a), a));
  EXPECT_TRUE(near(oplus(a, Matrix::epsilon(2, 2)), a));
  EXPECT_THROW(oplus(a, Matrix(2, 3)), DimensionMismatch);
}

TEST(Tmul, Examples) {
  EXPECT_TRUE(near(otimes(Matrix{{1, 2}, {3, 4}}, Vector{3, 2}), Vector{4, 6}));
  const Matrix a{{1, E}, {-2, 7}};
  EXPECT_TRUE(near(otimes(Matrix::identity(2), a), a));
  EXPECT_TRUE(is_epsilon(otimes(Matrix{{E, E}}, Vector{0, 0})[0]));
  EXPECT_THROW(otimes(Matrix(2, 3), Matrix(2, 3)), DimensionMismatch);
}

TEST(TmulMin, Examples) {
  EXPECT_TRUE(near(otimes_min(Matrix{{-1, -2}, {-3, -4}}, Vector{5, 6}), Vector{4, 2}));
  // diag(0) is finite only at size 1; larger sizes carry ε and are rejected.
  EXPECT_TRUE(near(otimes_min(diag(Vector{0}), Vector{1.5}), Vector{1.5}));
  EXPECT_THROW(otimes_min(diag(Vector{0, 0}), Vector{1.5, -2}), EpsilonEntry);
  EXPECT_THROW(otimes_min(Matrix{{E, 0}}, Vector{1, 2}), EpsilonEntry);
  EXPECT_THROW(otimes_min(Matrix{{0, 0}}, Vector{1, 2, 3}), DimensionMismatch);
}

TEST(Conjugate, Examples) {
  const Matrix a{{1, 2}, {3, 4}};
  EXPECT_TRUE(near(conjugate(a), Matrix{{-1, -3}, {-2, -4}}));
  EXPECT_TRUE(near(conjugate(conjugate(a)), a));
  const Vector u{1, 2};
  EXPECT_EQ(otimes(conjugate(u), Matrix::column(u))[0], 0.0);
  EXPECT_THROW(conjugate(Matrix{{E}}), EpsilonEntry);
}

TEST(Diag, Examples) {
  EXPECT_TRUE(near(diag(Vector{0, 0}), Matrix::identity(2)));
  EXPECT_TRUE(near(otimes(diag(Vector{5, 6}), diag(Vector{-5, -6})), Matrix::identity(2)));
  EXPECT_TRUE(near(inverse_diag(Vector{5, 6}), diag(Vector{-5, -6})));
  EXPECT_EQ(otimes(diag(Vector{1}), Vector{3})[0], 4.0);
  EXPECT_THROW(diag(Vector{E}), EpsilonEntry);
}

TEST(Leq, Examples) {
  const Matrix a{{1, -3}, {E, 2}};
  EXPECT_TRUE(leq(a, a));
  EXPECT_TRUE(leq(Matrix::epsilon(2, 2), a));
  EXPECT_FALSE(leq(Matrix{{0}}, Matrix{{-1}}));
}

class AlgebraLaws : public ::testing::TestWithParam<int> {};

TEST_P(AlgebraLaws, HoldOnRandomFiniteMatrices) {
  testing::Gen gen(static_cast<std::uint64_t>(GetParam()));
  const std::size_t m = gen.size(1, 6), k = gen.size(1, 6), n = gen.size(1, 6), p = gen.size(1, 6);
  const Matrix a = gen.matrix(m, k, -10, 10);
  const Matrix b = gen.matrix(k, n, -10, 10);
  const Matrix b2 = gen.matrix(k, n, -10, 10);
  const Matrix c = gen.matrix(n, p, -10, 10);
  const Tolerance tol;

  EXPECT_TRUE(near(otimes(otimes(a, b), c), otimes(a, otimes(b, c)), tol));
  EXPECT_TRUE(near(otimes(a, oplus(b, b2)), oplus(otimes(a, b), otimes(a, b2)), tol));
  // Isotonicity with B ⊕ B2 ≥ B.
  const Matrix big = oplus(b, b2);
  EXPECT_TRUE(leq(otimes(b, c), otimes(big, c), tol));
  EXPECT_TRUE(leq(otimes(a, b), otimes(a, big), tol));
}

TEST_P(AlgebraLaws, ConjugationLaws) {
  testing::Gen gen(1000 + static_cast<std::uint64_t>(GetParam()));
  const std::size_t m = gen.size(1, 6), k = gen.size(1, 6), n = gen.size(1, 6);
  const Matrix a = gen.matrix(m, k, -10, 10);
  const Matrix b = gen.matrix(k, n, -10, 10);
  const Tolerance tol;
  EXPECT_TRUE(near(conjugate(conjugate(a)), a, tol));
  EXPECT_TRUE(near(conjugate(otimes(a, b)), otimes_min(conjugate(b), conjugate(a)), tol));
  EXPECT_TRUE(near(conjugate(otimes_min(a, b)), otimes(conjugate(b), conjugate(a)), tol));
}

TEST_P(AlgebraLaws, VectorConjugateIdentities) {
  testing::Gen gen(2000 + static_cast<std::uint64_t>(GetParam()));
  const Vector u = gen.vector(gen.size(1, 6), -10, 10);
  const Matrix col = Matrix::column(u);
  const Tolerance tol;
  EXPECT_TRUE(near(otimes(conjugate(u), col)[0], 0.0, tol));
  EXPECT_TRUE(leq(Matrix::identity(u.size()), otimes(col, conjugate(col)), tol));
}

INSTANTIATE_TEST_SUITE_P(Random, AlgebraLaws, ::testing::Range(0, 100));

}  // namespace
}  // namespace tropical
