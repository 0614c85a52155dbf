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

#include "exactnum/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace mckay::exactnum {

namespace {

struct Field {
  unsigned n = 1;
  std::size_t phi = 1;
  std::vector<long> poly;                 // Phi_n, length phi + 1, monic
  std::vector<std::vector<long>> powers;  // zeta^j reduced, j in [0, n)
};

std::vector<long> dividePoly(std::vector<long> num, const std::vector<long>& den) {
  // den is monic; division is exact for the cyclotomic factorization of x^n - 1.
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  return quot;
}

std::unique_ptr<Field> buildField(unsigned n, std::vector<long> poly) {
  auto field = std::make_unique<Field>();
  field->n = n;
  field->poly = std::move(poly);
  field->phi = field->poly.size() - 1;
  const std::size_t phi = field->phi;
  field->powers.assign(n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi + 1, 0);
  cur[0] = 1;
  for (unsigned j = 0; j < n; ++j) {
    std::copy(cur.begin(), cur.begin() + static_cast<long>(phi), field->powers[j].begin());
    // multiply by x and reduce the x^phi term
    std::vector<long> next(phi + 1, 0);
    for (std::size_t t = 0; t < phi; ++t) next[t + 1] = cur[t];
    const long top = next[phi];
    if (top != 0) {
      for (std::size_t t = 0; t <= phi; ++t) next[t] -= top * field->poly[t];
    }
    cur = std::move(next);
  }
  return field;
}

std::mutex& fieldMutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::unique_ptr<Field>>& fieldCache() {
  static std::map<unsigned, std::unique_ptr<Field>> cache;
  return cache;
}

const Field& fieldLocked(unsigned n);

std::vector<long> polyLocked(unsigned n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = dividePoly(std::move(p), fieldLocked(d).poly);
  }
  return p;
}

const Field& fieldLocked(unsigned n) {
  auto& cache = fieldCache();
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto field = buildField(n, polyLocked(n));
  const Field& ref = *field;
  cache.emplace(n, std::move(field));
  return ref;
}

const Field& field(unsigned n) {
  thread_local unsigned lastN = 0;
  thread_local const Field* last = nullptr;
  if (n == lastN && last != nullptr) return *last;
  std::lock_guard<std::mutex> lock(fieldMutex());
  const Field& f = fieldLocked(n);
  lastN = n;
  last = &f;
  return f;
}

void requireSameConductor(unsigned a, unsigned b) {
  if (a != b) {
    raise(ErrorCode::ConductorMismatch,
          "conductors " + std::to_string(a) + " and " + std::to_string(b));
  }
}

void addScaled(std::vector<Integer>& acc, const std::vector<long>& v, const Integer& scale) {
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] > 0) {
      mpz_addmul_ui(acc[t].get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(v[t]));
    } else if (v[t] < 0) {
      mpz_submul_ui(acc[t].get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(-v[t]));
    }
  }
}

// Polynomials over Q, low degree first, no trailing zeros (empty is zero).
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) r[shift + t] -= c * b[t];
    r.back() = 0;
    trim(r);
  }
  trim(q);
}

QPoly subMul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

std::string toString(const Rational& q) { return q.get_str(); }

unsigned long eulerPhi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned long lcm(unsigned long a, unsigned long b) { return std::lcm(a, b); }

const std::vector<long>& cyclotomicPolynomial(unsigned n) { return field(n).poly; }

Cyclotomic::Cyclotomic() : Cyclotomic(0L, 1) {}

Cyclotomic::Cyclotomic(const Rational& value, unsigned conductor)
    : n_(conductor), num_(field(conductor).phi), den_(1) {
  Rational v = value;
  v.canonicalize();
  num_[0] = v.get_num();
  den_ = v.get_den();
}

Cyclotomic::Cyclotomic(long value, unsigned conductor)
    : n_(conductor), num_(field(conductor).phi), den_(1) {
  num_[0] = value;
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Integer> num, Integer den)
    : n_(conductor), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  bool allZero = true;
  for (const auto& c : num_) {
    if (c != 0) {
      allZero = false;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (allZero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Cyclotomic Cyclotomic::root(long k, unsigned conductor) {
  const Field& f = field(conductor);
  long r = k % static_cast<long>(conductor);
  if (r < 0) r += conductor;
  std::vector<Integer> num(f.phi);
  for (std::size_t t = 0; t < f.phi; ++t) num[t] = f.powers[static_cast<std::size_t>(r)][t];
  return Cyclotomic(conductor, std::move(num), Integer(1));
}

Cyclotomic Cyclotomic::fromRootCounts(std::span<const long> counts) {
  const auto n = static_cast<unsigned>(counts.size());
  const Field& f = field(n);
  std::vector<long long> acc(f.phi, 0);
  for (unsigned a = 0; a < n; ++a) {
    if (counts[a] == 0) continue;
    for (std::size_t t = 0; t < f.phi; ++t) acc[t] += static_cast<long long>(counts[a]) * f.powers[a][t];
  }
  std::vector<Integer> num(f.phi);
  for (std::size_t t = 0; t < f.phi; ++t) num[t] = static_cast<long>(acc[t]);
  return Cyclotomic(n, std::move(num), Integer(1));
}

Rational Cyclotomic::coeff(std::size_t k) const {
  Rational q(num_.at(k), den_);
  q.canonicalize();
  return q;
}

bool Cyclotomic::isZero() const noexcept {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  requireSameConductor(n_, other.n_);
  if (den_ == other.den_) {
    for (std::size_t t = 0; t < num_.size(); ++t) num_[t] += other.num_[t];
  } else {
    for (std::size_t t = 0; t < num_.size(); ++t) {
      num_[t] *= other.den_;
      mpz_addmul(num_[t].get_mpz_t(), other.num_[t].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  requireSameConductor(n_, other.n_);
  const Field& f = field(n_);
  const std::size_t phi = f.phi;
  std::vector<Integer> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (other.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), other.num_[j].get_mpz_t());
    }
  }
  for (std::size_t d = prod.size(); d-- > phi;) {
    if (prod[d] == 0) continue;
    const Integer c = prod[d];
    for (std::size_t t = 0; t < phi; ++t) {
      const long coef = f.poly[t];
      if (coef > 0) {
        mpz_submul_ui(prod[d - phi + t].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(coef));
      } else if (coef < 0) {
        mpz_addmul_ui(prod[d - phi + t].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-coef));
      }
    }
    prod[d] = 0;
  }
  prod.resize(phi);
  num_ = std::move(prod);
  den_ *= other.den_;
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  Rational s = scalar;
  s.canonicalize();
  for (auto& c : num_) c *= s.get_num();
  den_ *= s.get_den();
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  requireSameConductor(a.n_, b.n_);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (isZero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  const Field& f = field(n_);
  QPoly r0(f.poly.begin(), f.poly.end());
  QPoly r1(num_.size());
  for (std::size_t t = 0; t < num_.size(); ++t) r1[t] = Rational(num_[t], den_);
  for (auto& c : r1) c.canonicalize();
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q;
    QPoly r;
    divmod(r0, r1, q, r);
    QPoly s2 = subMul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_N is irreducible.
  const Rational g = r0.at(0);
  Integer den = 1;
  for (auto& c : s0) {
    c /= g;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> num(f.phi);
  for (std::size_t t = 0; t < s0.size() && t < f.phi; ++t) {
    Rational scaled = s0[t] * den;
    num[t] = scaled.get_num();
  }
  return Cyclotomic(n_, std::move(num), den);
}

Cyclotomic Cyclotomic::galois(long k) const {
  const Field& f = field(n_);
  long kk = k % static_cast<long>(n_);
  if (kk < 0) kk += n_;
  if (std::gcd(static_cast<unsigned long>(kk), static_cast<unsigned long>(n_)) != 1 && n_ > 1) {
    raise(ErrorCode::InvalidParameter, "galois exponent not coprime to conductor");
  }
  std::vector<Integer> num(f.phi);
  for (std::size_t t = 0; t < f.phi; ++t) {
    if (num_[t] == 0) continue;
    const std::size_t target = (static_cast<std::size_t>(kk) * t) % n_;
    addScaled(num, f.powers[target], num_[t]);
  }
  return Cyclotomic(n_, std::move(num), den_);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::promote(unsigned conductor) const {
  if (conductor == 0 || conductor % n_ != 0) {
    raise(ErrorCode::NotAMultiple,
          std::to_string(n_) + " does not divide " + std::to_string(conductor));
  }
  if (conductor == n_) return *this;
  const Field& f = field(conductor);
  const std::size_t step = conductor / n_;
  std::vector<Integer> num(f.phi);
  for (std::size_t t = 0; t < num_.size(); ++t) {
    if (num_[t] == 0) continue;
    addScaled(num, f.powers[(t * step) % conductor], num_[t]);
  }
  return Cyclotomic(conductor, std::move(num), den_);
}

std::optional<Rational> Cyclotomic::tryRational() const {
  for (std::size_t t = 1; t < num_.size(); ++t) {
    if (num_[t] != 0) return std::nullopt;
  }
  return coeff(0);
}

std::complex<double> Cyclotomic::toComplex() const {
  std::complex<double> acc(0.0, 0.0);
  const double d = den_.get_d();
  for (std::size_t t = 0; t < num_.size(); ++t) {
    if (num_[t] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n_);
    acc += (num_[t].get_d() / d) * std::polar(1.0, angle);
  }
  return acc;
}

std::string Cyclotomic::toString() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t t = 0; t < num_.size(); ++t) {
    if (num_[t] == 0) continue;
    Rational c = coeff(t);
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    Rational mag = abs(c);
    if (t == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z";
      if (t > 1) out << "^" << t;
    }
    first = false;
  }
  if (first) out << "0";
  out << " (z = zeta_" << n_ << ")";
  return out.str();
}

std::string Cyclotomic::key() const {
  std::string out;
  for (const auto& c : num_) {
    out += c.get_str(16);
    out += ',';
  }
  out += '/';
  out += den_.get_str(16);
  out += ';';
  return out;
}

Cyclotomic root(long k, unsigned conductor) { return Cyclotomic::root(k, conductor); }
Cyclotomic inv(const Cyclotomic& a) { return a.inverse(); }
Cyclotomic conjugate(const Cyclotomic& a) { return a.conjugate(); }
Cyclotomic promote(const Cyclotomic& a, unsigned conductor) { return a.promote(conductor); }
std::optional<Rational> tryRational(const Cyclotomic& a) { return a.tryRational(); }
std::complex<double> toComplex(const Cyclotomic& a) { return a.toComplex(); }

Cyclotomic sqrtConstant(int d) {
  switch (d) {
    case 2:
      return root(1, 8) + root(7, 8);
    case 5:
      return Cyclotomic(1L, 5) + Cyclotomic(2L, 5) * (root(1, 5) + root(4, 5));
    case -3:
      return Cyclotomic(1L, 3) + Cyclotomic(2L, 3) * root(1, 3);
    case -7:
      return Cyclotomic(1L, 7) + Cyclotomic(2L, 7) * (root(1, 7) + root(2, 7) + root(4, 7));
    default:
      raise(ErrorCode::UnsupportedRadicand, std::to_string(d));
  }
}

}  // namespace mckay::exactnum
