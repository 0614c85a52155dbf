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

#include "chartab/table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace mckay::chartab {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

constexpr u64 kPrimeLimit = u64{1} << 31;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool isPrime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitiveRoot(u64 p) {
  const auto factors = primeDivisors(static_cast<unsigned long>(p - 1));
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned long q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p == 2
}

// Row-reduces `rows` in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Mat& rows, u64 p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const u64 inv = invmod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = mulmod(x, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const u64 f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = (rows[r][k] + p - mulmod(f, rows[rank][k], p)) % p;
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Basis of {x : A x = 0} for a square A.
Mat kernel(Mat a, u64 p) {
  const std::size_t n = a.size();
  const auto pivots = rref(a, p);
  std::vector<bool> isPivot(n, false);
  for (std::size_t c : pivots) isPivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = (p - a[r][free]) % p;
    out.push_back(std::move(x));
  }
  return out;
}

std::string rowKey(const ClassFunction& row) {
  std::string key;
  for (const auto& v : row) key += v.key();
  return key;
}

}  // namespace

std::uint64_t dixonPrime(unsigned long exponent, std::size_t order) {
  for (u64 p = exponent + 1; p < kPrimeLimit; p += exponent) {
    if (p * p > 4 * static_cast<u64>(order) && isPrime(p)) return p;
  }
  raise(ErrorCode::NoSuitablePrime, "no prime = 1 mod " + std::to_string(exponent) + " below 2^31");
}

CharacterTable dixonTable(const FiniteMatrixGroup& g,
                          std::shared_ptr<const ConjugacyClassSet> classes) {
  if (!classes) classes = std::make_shared<const ConjugacyClassSet>(conjugacyClasses(g));
  const ConjugacyClassSet& cs = *classes;
  const std::size_t r = cs.size();
  const std::size_t order = g.order();
  const unsigned long e = g.exponent();
  const u64 p = dixonPrime(e, order);
  const ClassConstants a = classConstants(g, cs);

  // Simultaneous eigenspaces of the class matrices (M_j)_{ik} = a(j, i, k).
  std::vector<Mat> spaces;
  {
    Mat whole(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) whole[i][i] = 1;
    spaces.push_back(std::move(whole));
  }
  for (std::size_t j = 1; j < r && spaces.size() < r; ++j) {
    std::vector<Mat> refined;
    for (Mat& basis : spaces) {
      const std::size_t k = basis.size();
      if (k == 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      std::vector<std::size_t> pivots = rref(basis, p);
      // image[l] = M_j * basis[l]; coordinates in the RREF basis sit at the pivots
      Mat restricted(k, Vec(k, 0));
      for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t i = 0; i < k; ++i) {
          const std::size_t row = pivots[i];
          u64 acc = 0;
          for (std::size_t c = 0; c < r; ++c) {
            if (basis[l][c] == 0) continue;
            acc = (acc + mulmod(a(j, row, c) % p, basis[l][c], p)) % p;
          }
          restricted[i][l] = acc;
        }
      }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < k; ++lambda) {
        Mat shifted = restricted;
        for (std::size_t i = 0; i < k; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
        Mat coeffs = kernel(shifted, p);
        if (coeffs.empty()) continue;
        Mat sub;
        for (const Vec& c : coeffs) {
          Vec v(r, 0);
          for (std::size_t l = 0; l < k; ++l) {
            if (c[l] == 0) continue;
            for (std::size_t x = 0; x < r; ++x) v[x] = (v[x] + mulmod(c[l], basis[l][x], p)) % p;
          }
          sub.push_back(std::move(v));
        }
        rref(sub, p);
        found += sub.size();
        refined.push_back(std::move(sub));
      }
      if (found != k) raise(ErrorCode::OrthogonalityFailure, "class matrix not diagonalizable mod p");
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != r) {
    raise(ErrorCode::OrthogonalityFailure, "class matrices do not separate the characters");
  }

  // class sequences of powers g^s of each representative
  std::vector<std::vector<std::size_t>> powerClasses(r);
  for (std::size_t c = 0; c < r; ++c) {
    const std::size_t rep = cs.classes[c].representative;
    const unsigned long o = cs.classes[c].elementOrder;
    std::size_t x = 0;
    for (unsigned long s = 0; s < o; ++s) {
      powerClasses[c].push_back(cs.classOf[x]);
      x = g.multiply(x, rep);
    }
  }

  const u64 gamma = primitiveRoot(p);
  const u64 orderMod = order % p;
  std::vector<std::pair<std::string, std::size_t>> sortKeys;
  CharacterTable table;
  table.conductor = static_cast<unsigned>(e);
  table.classSet = classes;
  for (const Mat& space : spaces) {
    Vec w = space.front();
    if (w[0] == 0) raise(ErrorCode::OrthogonalityFailure, "eigenvector vanishes at the identity");
    const u64 w0inv = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, w0inv, p);

    u64 norm = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 term = mulmod(mulmod(w[k], w[cs.inverseClass[k]], p),
                              invmod(cs.classes[k].size % p, p), p);
      norm = (norm + term) % p;
    }
    if (norm == 0) raise(ErrorCode::OrthogonalityFailure, "degenerate character norm mod p");
    const u64 d2 = mulmod(orderMod, invmod(norm, p), p);
    long dim = 0;
    for (long d = 1; static_cast<std::size_t>(d * d) <= order; ++d) {
      if (static_cast<u64>(d) * static_cast<u64>(d) % p == d2) {
        dim = d;
        break;
      }
    }
    if (dim == 0) raise(ErrorCode::OrthogonalityFailure, "no integral degree for a character");

    Vec chiP(r);
    for (std::size_t k = 0; k < r; ++k) {
      chiP[k] = mulmod(mulmod(w[k], static_cast<u64>(dim) % p, p),
                       invmod(cs.classes[k].size % p, p), p);
    }

    ClassFunction row;
    row.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      const unsigned long o = cs.classes[k].elementOrder;
      const u64 zo = powmod(gamma, (p - 1) / o, p);
      const u64 zoInv = invmod(zo, p);
      const u64 oInv = invmod(o % p, p);
      std::vector<long> counts(e, 0);
      long total = 0;
      for (unsigned long t = 0; t < o; ++t) {
        const u64 step = powmod(zoInv, t, p);
        u64 acc = 0;
        u64 zpow = 1;  // z_o^{-s t}
        for (unsigned long s = 0; s < o; ++s) {
          acc = (acc + mulmod(chiP[powerClasses[k][s]], zpow, p)) % p;
          zpow = mulmod(zpow, step, p);
        }
        const u64 mu = mulmod(acc, oInv, p);
        if (mu > static_cast<u64>(dim)) {
          raise(ErrorCode::OrthogonalityFailure, "eigenvalue multiplicity out of range");
        }
        counts[t * (e / o)] += static_cast<long>(mu);
        total += static_cast<long>(mu);
      }
      if (total != dim) raise(ErrorCode::OrthogonalityFailure, "eigenvalue multiplicities do not sum to the degree");
      row.push_back(Cyclotomic::fromRootCounts(counts));
    }
    table.values.push_back(std::move(row));
    table.dims.push_back(dim);
  }

  // trivial row first, then (dim, value key)
  const Cyclotomic one = Cyclotomic::one(table.conductor);
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::string> keys(r);
  std::vector<bool> trivial(r);
  for (std::size_t i = 0; i < r; ++i) {
    keys[i] = rowKey(table.values[i]);
    trivial[i] = std::all_of(table.values[i].begin(), table.values[i].end(),
                             [&](const Cyclotomic& v) { return v == one; });
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    if (trivial[x] != trivial[y]) return static_cast<bool>(trivial[x]);
    if (table.dims[x] != table.dims[y]) return table.dims[x] < table.dims[y];
    return keys[x] < keys[y];
  });
  CharacterTable sorted;
  sorted.conductor = table.conductor;
  sorted.classSet = table.classSet;
  for (std::size_t i : perm) {
    sorted.values.push_back(std::move(table.values[i]));
    sorted.dims.push_back(table.dims[i]);
  }

  long sumSquares = 0;
  for (long d : sorted.dims) sumSquares += d * d;
  if (static_cast<std::size_t>(sumSquares) != order || !trivial[perm[0]] || !rowOrthogonal(sorted)) {
    raise(ErrorCode::OrthogonalityFailure, "character table failed the exact orthogonality check");
  }
  return sorted;
}

ClassFunction promoteAll(const ClassFunction& f, unsigned conductor) {
  ClassFunction out;
  out.reserve(f.size());
  for (const auto& v : f) out.push_back(v.promote(conductor));
  return out;
}

ClassFunction conjugateAll(const ClassFunction& f) {
  ClassFunction out;
  out.reserve(f.size());
  for (const auto& v : f) out.push_back(v.conjugate());
  return out;
}

Cyclotomic innerProduct(const ConjugacyClassSet& cs, const ClassFunction& f,
                        const ClassFunction& g) {
  if (f.size() != cs.size() || g.size() != cs.size()) {
    raise(ErrorCode::DimensionMismatch, "class function length differs from the class count");
  }
  unsigned n = 1;
  for (const auto& v : f) n = static_cast<unsigned>(exactnum::lcm(n, v.conductor()));
  for (const auto& v : g) n = static_cast<unsigned>(exactnum::lcm(n, v.conductor()));
  Cyclotomic acc = Cyclotomic::zero(n);
  for (std::size_t c = 0; c < cs.size(); ++c) {
    Cyclotomic term = f[c].promote(n) * g[cs.inverseClass[c]].promote(n);
    term *= exactnum::Rational(static_cast<long>(cs.classes[c].size),
                               static_cast<long>(cs.groupOrder));
    acc += term;
  }
  return acc;
}

ClassFunction naturalCharacter(const FiniteMatrixGroup& g, const ConjugacyClassSet& cs) {
  ClassFunction out;
  out.reserve(cs.size());
  for (const auto& cls : cs.classes) out.push_back(g.element(cls.representative).trace());
  return out;
}

std::vector<long> decomposeProduct(const CharacterTable& table, const ClassFunction& pi,
                                   std::size_t i) {
  const ConjugacyClassSet& cs = *table.classSet;
  if (i >= table.size()) raise(ErrorCode::InvalidParameter, "row index out of range");
  if (pi.size() != cs.size()) {
    raise(ErrorCode::DimensionMismatch, "class function length differs from the class count");
  }
  unsigned n = table.conductor;
  for (const auto& v : pi) n = static_cast<unsigned>(exactnum::lcm(n, v.conductor()));
  const ClassFunction piN = promoteAll(pi, n);
  ClassFunction product(cs.size());
  for (std::size_t c = 0; c < cs.size(); ++c) product[c] = piN[c] * table.values[i][c].promote(n);
  std::vector<long> out;
  out.reserve(table.size());
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Cyclotomic m = innerProduct(cs, product, table.values[j]);
    const auto q = m.tryRational();
    if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p()) {
      raise(ErrorCode::NonIntegralMultiplicity,
            "multiplicity m_" + std::to_string(i) + std::to_string(j) + " = " + m.toString());
    }
    out.push_back(q->get_num().get_si());
  }
  return out;
}

bool rowOrthogonal(const CharacterTable& table) {
  const ConjugacyClassSet& cs = *table.classSet;
  const std::size_t r = table.size();
  std::vector<ClassFunction> conj(r);
  for (std::size_t j = 0; j < r; ++j) conj[j] = conjugateAll(table.values[j]);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic acc = Cyclotomic::zero(table.conductor);
      for (std::size_t k = 0; k < r; ++k) {
        Cyclotomic term = table.values[i][k] * conj[j][k];
        term *= exactnum::Rational(static_cast<long>(cs.classes[k].size));
        acc += term;
      }
      const Cyclotomic expect(static_cast<long>(i == j ? cs.groupOrder : 0), table.conductor);
      if (!(acc == expect)) return false;
    }
  }
  return true;
}

bool columnOrthogonal(const CharacterTable& table) {
  const ConjugacyClassSet& cs = *table.classSet;
  const std::size_t r = table.size();
  std::vector<ClassFunction> conj(r);
  for (std::size_t i = 0; i < r; ++i) conj[i] = conjugateAll(table.values[i]);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic acc = Cyclotomic::zero(table.conductor);
      for (std::size_t i = 0; i < r; ++i) acc += table.values[i][k] * conj[i][l];
      const Cyclotomic expect(static_cast<long>(k == l ? cs.classes[k].centralizerOrder : 0),
                              table.conductor);
      if (!(acc == expect)) return false;
    }
  }
  return true;
}

}  // namespace mckay::chartab
