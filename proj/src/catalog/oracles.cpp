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

// Reference constructions that do not go through the Dixon pipeline.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "catalog/expected.hpp"
#include "chartab/classes.hpp"
#include "error.hpp"

namespace mckay::catalog {

using exactnum::Cyclotomic;
using u64 = std::uint64_t;

namespace {

u64 mulMod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powMod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulMod(r, b, p);
    b = mulMod(b, b, p);
    e >>= 1;
  }
  return r;
}

bool isPrime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitiveRoot(u64 p) {
  const auto qs = chartab::primeDivisors(static_cast<unsigned long>(p - 1));
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (auto q : qs) ok = ok && powMod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
}

using Perm = std::array<int, 3>;

int sign(const Perm& s) {
  int inv = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) inv += s[i] > s[j] ? 1 : 0;
  }
  return inv % 2 == 0 ? 1 : -1;
}

Perm compose(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

// sgn(s) D(h) P_s with h0 + h1 + h2 = 0 (mod m) and (P_s) e_j = e_{s(j)}.
struct MonoElement {
  std::array<long, 3> h;
  Perm s;
};

}  // namespace

ReferenceQuiver monomialAdjacency(long m, bool withReflection) {
  if (m < 1) raise(ErrorCode::InvalidParameter, "m must be >= 1");
  std::vector<Perm> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  if (withReflection) {
    perms.push_back({0, 2, 1});
    perms.push_back({2, 1, 0});
    perms.push_back({1, 0, 2});
  }
  const std::size_t kOrder = perms.size();
  const auto permIndex = [&](const Perm& s) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), s) - perms.begin());
  };

  std::vector<MonoElement> elems;
  for (std::size_t si = 0; si < kOrder; ++si) {
    for (long a = 0; a < m; ++a) {
      for (long b = 0; b < m; ++b) elems.push_back({{a, b, ((-a - b) % m + m) % m}, perms[si]});
    }
  }
  const std::size_t n = elems.size();
  const auto indexOf = [&](const MonoElement& e) {
    return permIndex(e.s) * static_cast<std::size_t>(m * m) +
           static_cast<std::size_t>(e.h[0] * m + e.h[1]);
  };

  std::vector<std::size_t> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& a = elems[x];
      const auto& b = elems[y];
      MonoElement c{};
      for (int j = 0; j < 3; ++j) c.h[a.s[j]] = (a.h[a.s[j]] + b.h[j]) % m;
      c.s = compose(a.s, b.s);
      mul[x * n + y] = indexOf(c);
    }
  }
  const std::size_t identity = indexOf({{0, 0, 0}, perms[0]});
  std::vector<std::size_t> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul[x * n + y] == identity) inv[x] = y;
    }
  }

  const unsigned long modulus = exactnum::lcm(static_cast<unsigned long>(m), 6);
  u64 p = modulus + 1;
  while (!isPrime(p) || p <= std::max<u64>(n, 1000)) p += modulus;
  const u64 g = primitiveRoot(p);
  const u64 omega = powMod(g, (p - 1) / static_cast<u64>(m), p);
  const u64 w3 = powMod(g, (p - 1) / 3, p);
  const auto neg = [&](u64 v) { return v == 0 ? 0 : p - v; };
  const auto omegaPow = [&](long e) { return powMod(omega, static_cast<u64>(((e % m) + m) % m), p); };

  // natural character
  std::vector<u64> pi(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    u64 t = 0;
    for (int j = 0; j < 3; ++j) {
      if (elems[x].s[j] == j) t = (t + omegaPow(elems[x].h[j])) % p;
    }
    pi[x] = sign(elems[x].s) > 0 ? t : neg(t);
  }

  // H-characters c = (0, c1, c2); value omega^{c . h}.
  const auto hChar = [&](long c1, long c2, const MonoElement& e) {
    return omegaPow(c1 * e.h[1] + c2 * e.h[2]);
  };
  // c^x(h) = c(x^-1 h x): read off (c1', c2') from h = (-1,1,0), (-1,0,1).
  const auto conjugateChar = [&](long c1, long c2, std::size_t x) {
    std::array<long, 2> out{};
    const std::array<MonoElement, 2> probes = {MonoElement{{m - 1, 1 % m, 0}, perms[0]},
                                               MonoElement{{m - 1, 0, 1 % m}, perms[0]}};
    for (int t = 0; t < 2; ++t) {
      const std::size_t y = mul[mul[inv[x] * n + indexOf(probes[t])] * n + x];
      const auto& e = elems[y];
      out[t] = ((c1 * e.h[1] + c2 * e.h[2]) % m + m) % m;
    }
    return out;
  };
  const auto permElement = [&](std::size_t si) { return indexOf({{0, 0, 0}, perms[si]}); };

  std::vector<std::vector<u64>> chars;
  std::vector<long> dims;
  std::vector<bool> seen(static_cast<std::size_t>(m * m), false);
  for (long c1 = 0; c1 < m; ++c1) {
    for (long c2 = 0; c2 < m; ++c2) {
      if (seen[static_cast<std::size_t>(c1 * m + c2)]) continue;
      std::vector<std::size_t> stab;
      for (std::size_t si = 0; si < kOrder; ++si) {
        const auto c = conjugateChar(c1, c2, permElement(si));
        seen[static_cast<std::size_t>(c[0] * m + c[1])] = true;
        if (c[0] == c1 && c[1] == c2) stab.push_back(si);
      }
      // irreps of the stabiliser, as functions of the permutation index
      std::vector<std::vector<u64>> sigmas;
      const auto trivial = std::vector<u64>(kOrder, 1);
      sigmas.push_back(trivial);
      if (stab.size() == 2) {
        std::vector<u64> sg(kOrder, 0);
        for (auto si : stab) sg[si] = si == 0 ? 1 : p - 1;
        sigmas.push_back(sg);
      } else if (stab.size() == 3 || stab.size() == 6) {
        // 3-cycles are perms[1], perms[2] = perms[1]^2
        if (stab.size() == 3) {
          for (u64 k = 1; k < 3; ++k) {
            std::vector<u64> lam(kOrder, 0);
            lam[0] = 1;
            lam[1] = powMod(w3, k, p);
            lam[2] = powMod(w3, 2 * k, p);
            sigmas.push_back(lam);
          }
        } else {
          std::vector<u64> sg(kOrder), stdRep(kOrder);
          for (std::size_t si = 0; si < kOrder; ++si) {
            sg[si] = sign(perms[si]) > 0 ? 1 : p - 1;
            stdRep[si] = si == 0 ? 2 : (sign(perms[si]) > 0 ? p - 1 : 0);
          }
          sigmas.push_back(sg);
          sigmas.push_back(stdRep);
        }
      }
      for (const auto& sigma : sigmas) {
        // psi on H x| K_c, zero elsewhere
        std::vector<u64> psi(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
          const std::size_t si = permIndex(elems[x].s);
          if (std::find(stab.begin(), stab.end(), si) == stab.end()) continue;
          psi[x] = mulMod(hChar(c1, c2, elems[x]), sigma[si], p);
        }
        const u64 stabOrder = static_cast<u64>(m * m) * stab.size();
        const u64 scale = powMod(stabOrder % p, p - 2, p);
        std::vector<u64> chi(n, 0);
        for (std::size_t y = 0; y < n; ++y) {
          u64 t = 0;
          for (std::size_t x = 0; x < n; ++x) t += psi[mul[mul[x * n + y] * n + inv[x]]];
          chi[y] = mulMod(t % p, scale, p);
        }
        chars.push_back(chi);
        dims.push_back(static_cast<long>(chi[identity]));
      }
    }
  }

  const u64 invOrder = powMod(n % p, p - 2, p);
  const auto inner = [&](const std::vector<u64>& a, const std::vector<u64>& b,
                         const std::vector<u64>& weight) {
    u64 t = 0;
    for (std::size_t x = 0; x < n; ++x) {
      t = (t + mulMod(mulMod(weight[x], a[x], p), b[inv[x]], p)) % p;
    }
    return mulMod(t, invOrder, p);
  };
  const std::vector<u64> ones(n, 1);
  long sumSquares = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (inner(chars[i], chars[i], ones) != 1) {
      raise(ErrorCode::Internal, "monomial oracle: induced character is not irreducible");
    }
    sumSquares += dims[i] * dims[i];
  }
  if (static_cast<std::size_t>(sumSquares) != n) {
    raise(ErrorCode::Internal, "monomial oracle: dimensions do not account for the group order");
  }

  ReferenceQuiver q;
  q.dims = dims;
  q.m.assign(chars.size(), std::vector<long>(chars.size(), 0));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      const u64 v = inner(chars[i], chars[j], pi);
      if (v > n) raise(ErrorCode::Internal, "monomial oracle: multiplicity out of range");
      q.m[i][j] = static_cast<long>(v);
    }
  }
  q.source = withReflection ? "Clifford theory on H_{m,m} x| S3" : "Clifford theory on H_{m,m} x| A3";
  return q;
}

chartab::CharacterTable abelianTable(long m, long n) {
  if (m < 1 || n < 1) raise(ErrorCode::InvalidParameter, "m, n must be >= 1");
  const auto L = static_cast<unsigned>(exactnum::lcm(static_cast<unsigned long>(m),
                                                     static_cast<unsigned long>(n)));
  const auto size = static_cast<std::size_t>(m * n);
  auto cs = std::make_shared<chartab::ConjugacyClassSet>();
  cs->groupOrder = size;
  cs->exponent = L;
  cs->classOf.resize(size);
  cs->inverseClass.resize(size);
  const auto idx = [&](long k, long l) {
    return static_cast<std::size_t>((((k % m) + m) % m) * n + (((l % n) + n) % n));
  };
  for (long k = 0; k < m; ++k) {
    for (long l = 0; l < n; ++l) {
      chartab::ConjugacyClass c;
      c.representative = idx(k, l);
      c.members = {c.representative};
      c.size = 1;
      c.centralizerOrder = size;
      c.elementOrder = exactnum::lcm(static_cast<unsigned long>(m / std::gcd(k, m)),
                                     static_cast<unsigned long>(n / std::gcd(l, n)));
      cs->classes.push_back(c);
      cs->classOf[idx(k, l)] = idx(k, l);
      cs->inverseClass[idx(k, l)] = idx(-k, -l);
    }
  }
  for (auto prime : chartab::primeDivisors(L)) {
    std::vector<std::size_t> pm(size);
    for (long k = 0; k < m; ++k) {
      for (long l = 0; l < n; ++l) pm[idx(k, l)] = idx(k * static_cast<long>(prime), l * static_cast<long>(prime));
    }
    cs->powerMap[prime] = pm;
  }

  chartab::CharacterTable t;
  t.conductor = L;
  t.classSet = cs;
  const long sm = static_cast<long>(L) / m;
  const long sn = static_cast<long>(L) / n;
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) {
      chartab::ClassFunction row;
      for (long k = 0; k < m; ++k) {
        for (long l = 0; l < n; ++l) row.push_back(Cyclotomic::root(i * k * sm + j * l * sn, L));
      }
      t.values.push_back(row);
      t.dims.push_back(1);
    }
  }
  return t;
}

std::optional<std::pair<long, long>> abelianElementIndex(long m, long n,
                                                         const matgroup::SquareMatrix& g) {
  if (g.dim() < 2) return std::nullopt;
  for (std::size_t r = 0; r < g.dim(); ++r) {
    for (std::size_t c = 0; c < g.dim(); ++c) {
      if (r != c && !g(r, c).isZero()) return std::nullopt;
    }
  }
  const auto find = [&](const Cyclotomic& v, long order) -> std::optional<long> {
    const auto L = static_cast<unsigned>(
        exactnum::lcm(v.conductor(), static_cast<unsigned long>(order)));
    const Cyclotomic w = v.promote(L);
    for (long k = 0; k < order; ++k) {
      if (Cyclotomic::root(k * (static_cast<long>(L) / order), L) == w) return k;
    }
    return std::nullopt;
  };
  const auto k = find(g(0, 0), m);
  const auto l = find(g(1, 1), n);
  if (!k || !l) return std::nullopt;
  return std::make_pair(*k, *l);
}

}  // namespace mckay::catalog
