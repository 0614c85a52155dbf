/*
  Copyright 2026 The mckay Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef MCKAY_EXACTNUM_CYCLOTOMIC_HPP
#define MCKAY_EXACTNUM_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mckay::exactnum {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p" or "p/q" text of a reduced rational.
std::string toString(const Rational& q);

unsigned long eulerPhi(unsigned long n);
unsigned long lcm(unsigned long a, unsigned long b);

// Integer coefficients (low degree first) of the n-th cyclotomic polynomial.
// Tables are built once per conductor and shared read-only afterwards.
const std::vector<long>& cyclotomicPolynomial(unsigned n);

// An element of Q(zeta_N) held as a polynomial in zeta_N of degree < phi(N),
// reduced modulo Phi_N. Internally the coefficients share one positive
// denominator; the pair (numerators, denominator) is kept in lowest terms, so
// equal values at equal conductor have identical representations.
class Cyclotomic {
 public:
  Cyclotomic();  // zero at conductor 1
  Cyclotomic(const Rational& value, unsigned conductor);
  Cyclotomic(long value, unsigned conductor);

  static Cyclotomic root(long k, unsigned conductor);
  static Cyclotomic zero(unsigned conductor) { return Cyclotomic(0L, conductor); }
  static Cyclotomic one(unsigned conductor) { return Cyclotomic(1L, conductor); }

  // Sum_a counts[a] * zeta_N^a with counts.size() == N.
  static Cyclotomic fromRootCounts(std::span<const long> counts);

  unsigned conductor() const noexcept { return n_; }
  std::size_t degree() const noexcept { return num_.size(); }
  Rational coeff(std::size_t k) const;
  bool isZero() const noexcept;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scalar);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& a, Cyclotomic b) { return b *= a; }

  // Equality is only meaningful at equal conductors; comparing across
  // conductors raises ConductorMismatch.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic inverse() const;
  Cyclotomic conjugate() const;
  // The Galois automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic promote(unsigned conductor) const;

  std::optional<Rational> tryRational() const;
  std::complex<double> toComplex() const;

  // "a0 + a1*z + a2*z^2 ... (z = zeta_N)"
  std::string toString() const;
  // Injective byte encoding at fixed conductor.
  std::string key() const;
  std::size_t hash() const { return std::hash<std::string>{}(key()); }

 private:
  Cyclotomic(unsigned conductor, std::vector<Integer> num, Integer den);
  void normalize();

  unsigned n_;
  std::vector<Integer> num_;
  Integer den_;
};

Cyclotomic root(long k, unsigned conductor);
Cyclotomic inv(const Cyclotomic& a);
Cyclotomic conjugate(const Cyclotomic& a);
Cyclotomic promote(const Cyclotomic& a, unsigned conductor);
std::optional<Rational> tryRational(const Cyclotomic& a);
std::complex<double> toComplex(const Cyclotomic& a);

// s with s*s == d at its minimal conductor, for d in {2, 5, -3, -7}.
Cyclotomic sqrtConstant(int d);

}  // namespace mckay::exactnum

template <>
struct std::hash<mckay::exactnum::Cyclotomic> {
  std::size_t operator()(const mckay::exactnum::Cyclotomic& c) const { return c.hash(); }
};

#endif
