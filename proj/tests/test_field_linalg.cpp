// Copyright 2026 The qpa authors.
//
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qpa/linalg.hpp"

using namespace qpa;

TEST_CASE("field construction") {
  CHECK(Field::rationals().is_rational());
  CHECK(Field::rationals().name() == "Q");
  CHECK(Field::prime(5).name() == "F5");
  CHECK(Field::prime(2).p == 2);
  CHECK_THROWS_AS(Field::prime(4), InputError);
  CHECK_THROWS_AS(Field::prime(1), InputError);
  CHECK_THROWS_AS(Field::prime(0), InputError);

  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(2147483647));  // 2^31 - 1
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7 * 13
}

TEST_CASE("rational scalar arithmetic") {
  const Field q = Field::rationals();
  const Scalar a = Scalar::of_int(q, 3);
  const Scalar b = Scalar::of_int(q, -2);
  CHECK((a + b).rational() == 1);
  CHECK((a * b).rational() == -6);
  CHECK((a - b).rational() == 5);
  CHECK((a / b).rational() == Rational(-3, 2));
  CHECK((-a).rational() == -3);
  CHECK(b.inverse().rational() == Rational(-1, 2));
  CHECK(Scalar::of_rational(q, Rational(7, 3)).str() == "7/3");
  CHECK(Scalar::zero(q).is_zero());
  CHECK(Scalar::one(q).is_one());
  CHECK_THROWS_AS(a / Scalar::zero(q), InputError);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), InputError);
}

TEST_CASE("prime field scalar arithmetic") {
  const Field f5 = Field::prime(5);
  const Scalar two = Scalar::of_int(f5, 2);
  const Scalar seven = Scalar::of_int(f5, 7);
  CHECK(seven.residue() == 2);
  CHECK(Scalar::of_int(f5, -1).residue() == 4);
  CHECK((two * seven).residue() == 4);
  CHECK((two + seven).residue() == 4);
  CHECK(two.inverse().residue() == 3);  // 2*3 = 6 = 1 mod 5
  CHECK((two / seven).is_one());
  // 1/2 maps to the mod-5 inverse of 2.
  CHECK(Scalar::of_rational(f5, Rational(1, 2)).residue() == 3);
  CHECK_THROWS_AS(Scalar::of_rational(f5, Rational(1, 5)), InputError);
  CHECK_THROWS_AS(two / Scalar::zero(f5), InputError);
}

TEST_CASE("mixed-field arithmetic is rejected") {
  const Scalar a = Scalar::of_int(Field::rationals(), 1);
  const Scalar b = Scalar::of_int(Field::prime(3), 1);
  CHECK_THROWS_AS(a + b, InputError);
  CHECK_THROWS_AS(a * b, InputError);
}

TEST_CASE("matrix multiplication and identity") {
  const Field q = Field::rationals();
  ScalarMatrix m(2, 2, q);
  m.at(0, 0) = Scalar::of_int(q, 1);
  m.at(0, 1) = Scalar::of_int(q, 2);
  m.at(1, 0) = Scalar::of_int(q, 3);
  m.at(1, 1) = Scalar::of_int(q, 4);
  CHECK(m * ScalarMatrix::identity(2, q) == m);
  const ScalarMatrix sq = m * m;
  CHECK(sq.at(0, 0).rational() == 7);
  CHECK(sq.at(0, 1).rational() == 10);
  CHECK(sq.at(1, 0).rational() == 15);
  CHECK(sq.at(1, 1).rational() == 22);
}

TEST_CASE("rank, inverse, nullspace") {
  const Field q = Field::rationals();
  ScalarMatrix m(2, 2, q);
  m.at(0, 0) = Scalar::of_int(q, 1);
  m.at(0, 1) = Scalar::of_int(q, 2);
  m.at(1, 0) = Scalar::of_int(q, 3);
  m.at(1, 1) = Scalar::of_int(q, 4);
  CHECK(m.rank() == 2);
  CHECK(m.is_invertible());
  const ScalarMatrix inv = *m.inverse();
  CHECK(m * inv == ScalarMatrix::identity(2, q));
  CHECK(inv * m == ScalarMatrix::identity(2, q));

  ScalarMatrix s(2, 2, q);  // rank 1
  s.at(0, 0) = Scalar::of_int(q, 1);
  s.at(0, 1) = Scalar::of_int(q, 2);
  s.at(1, 0) = Scalar::of_int(q, 2);
  s.at(1, 1) = Scalar::of_int(q, 4);
  CHECK(s.rank() == 1);
  CHECK(!s.is_invertible());
  CHECK(!s.inverse().has_value());
  const auto null = s.nullspace_basis();
  REQUIRE(null.size() == 1);
  // s * x = 0 for the basis vector.
  for (std::size_t r = 0; r < 2; ++r) {
    Scalar acc = Scalar::zero(q);
    for (std::size_t c = 0; c < 2; ++c) acc += s.at(r, c) * null[0][c];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("rank-nullity on random matrices over F3") {
  const Field f3 = Field::prime(3);
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> dim(1, 5), entry(0, 2);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    ScalarMatrix m(rows, cols, f3);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar::of_int(f3, entry(rng));
    const auto null = m.nullspace_basis();
    CHECK(m.rank() + null.size() == cols);
    for (const auto& x : null)
      for (std::size_t r = 0; r < rows; ++r) {
        Scalar acc = Scalar::zero(f3);
        for (std::size_t c = 0; c < cols; ++c) acc += m.at(r, c) * x[c];
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("rref produces pivot columns") {
  const Field f5 = Field::prime(5);
  ScalarMatrix m(2, 3, f5);
  m.at(0, 0) = Scalar::of_int(f5, 2);
  m.at(0, 1) = Scalar::of_int(f5, 1);
  m.at(0, 2) = Scalar::of_int(f5, 0);
  m.at(1, 0) = Scalar::of_int(f5, 4);
  m.at(1, 1) = Scalar::of_int(f5, 2);
  m.at(1, 2) = Scalar::of_int(f5, 1);
  const auto pivots = m.rref();
  REQUIRE(pivots == std::vector<std::size_t>{0, 2});
  CHECK(m.at(0, 0).is_one());
  CHECK(m.at(1, 0).is_zero());
  CHECK(m.at(1, 2).is_one());
  CHECK(m.at(0, 2).is_zero());
}
