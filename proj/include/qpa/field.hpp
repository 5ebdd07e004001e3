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

#ifndef QPA_FIELD_HPP_
#define QPA_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpa {

using Rational = boost::multiprecision::cpp_rational;

/// Thrown on invalid arguments to library operations (mismatched fields,
/// unknown vertices, malformed maps, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computation would need degrees beyond the certified
/// truncation of a Groebner basis.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int truncation_degree)
      : std::runtime_error(what), truncation_degree(truncation_degree) {}
  int truncation_degree;
};

/// Coefficient field: the rationals (p == 0) or a prime field F_p, p < 2^31.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  std::string name() const;  // "Q" or "F<p>"
};

bool is_prime(std::uint32_t n);

/// An exact field element. Every Scalar carries its field; mixing fields in
/// arithmetic is an InputError.
class Scalar {
 public:
  Scalar() = default;  // zero over Q

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  static Scalar of_int(Field f, long long n) { return Scalar(f, n); }
  static Scalar of_rational(Field f, const Rational& q);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Value as a rational; only valid over Q.
  const Rational& rational() const;
  /// Canonical representative in [0, p); only valid over F_p.
  std::uint32_t residue() const;

  std::string str() const;

 private:
  Scalar(Field f, long long n);

  void check_same_field(const Scalar& o) const;

  Field field_;
  Rational q_ = 0;        // value over Q
  std::uint32_t r_ = 0;   // value over F_p
};

}  // namespace qpa

#endif  // QPA_FIELD_HPP_
