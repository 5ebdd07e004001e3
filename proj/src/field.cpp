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

#include "qpa/field.hpp"

namespace qpa {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p);
}

namespace {

std::uint32_t mod_reduce(long long n, std::uint32_t p) {
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw InputError("division by zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

}  // namespace

Scalar::Scalar(Field f, long long n) : field_(f) {
  if (f.is_rational())
    q_ = n;
  else
    r_ = mod_reduce(n, f.p);
}

Scalar Scalar::of_rational(Field f, const Rational& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = q;
  } else {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(q) % f.p;
    cpp_int den = denominator(q) % f.p;
    if (num < 0) num += f.p;
    std::uint32_t n = static_cast<std::uint32_t>(num);
    std::uint32_t d = static_cast<std::uint32_t>(den);
    if (d == 0) throw InputError("rational with denominator divisible by " + std::to_string(f.p));
    s.r_ = mod_mul(n, mod_inv(d, f.p), f.p);
  }
  return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p; }

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw InputError("mixed-field arithmetic: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mod_mul(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    if (q_ == 0) throw InputError("division by zero over Q");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inv(r_, field_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const Rational& Scalar::rational() const {
  if (!field_.is_rational()) throw InputError("rational() on a prime-field scalar");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw InputError("residue() on a rational scalar");
  return r_;
}

std::string Scalar::str() const {
  return field_.is_rational() ? q_.str() : std::to_string(r_);
}

}  // namespace qpa
