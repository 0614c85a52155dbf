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

#include "mckay/cartan.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "error.hpp"

namespace mckay::cartan {

using chartab::CharacterTable;
using chartab::ClassFunction;
using exactnum::Cyclotomic;

AdjacencyMatrix adjacency(const CharacterTable& table, const ClassFunction& pi, long n) {
  AdjacencyMatrix adj;
  adj.n = n;
  adj.dims = table.dims;
  for (std::size_t i = 0; i < table.size(); ++i) {
    adj.m.push_back(chartab::decomposeProduct(table, pi, i));
  }
  return adj;
}

bool dimensionBalanced(const AdjacencyMatrix& adj) {
  const std::size_t r = adj.size();
  for (std::size_t i = 0; i < r; ++i) {
    long row = 0;
    long col = 0;
    for (std::size_t j = 0; j < r; ++j) {
      row += adj.m[i][j] * adj.dims[j];
      col += adj.dims[j] * adj.m[j][i];
    }
    if (row != adj.n * adj.dims[i] || col != adj.n * adj.dims[i]) return false;
  }
  return true;
}

IntMatrix preCartan(const AdjacencyMatrix& adj) {
  IntMatrix b = adj.m;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) b[i][j] = (i == j ? adj.n : 0) - adj.m[i][j];
  }
  return b;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.size(), std::vector<long>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

IntMatrix genCartan(const IntMatrix& b) {
  IntMatrix a = transpose(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  }
  return a;
}

bool isSymmetric(const IntMatrix& a) { return a == transpose(a); }

std::vector<Integer> charPolyExact(const IntMatrix& a) {
  if (!isSymmetric(a)) raise(ErrorCode::NotSymmetric, "characteristic polynomial needs a symmetric matrix");
  const std::size_t r = a.size();
  std::vector<std::vector<Integer>> am(r, std::vector<Integer>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) am[i][j] = a[i][j];
  }
  std::vector<Integer> coef(r + 1);
  coef[r] = 1;
  // M_k = A M_{k-1} + c_{r-k+1} I, c_{r-k} = -tr(A M_k) / k
  std::vector<std::vector<Integer>> m(r, std::vector<Integer>(r, 0));
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<Integer>> next(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t l = 0; l < r; ++l) {
        if (am[i][l] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) next[i][j] += am[i][l] * m[l][j];
      }
      next[i][i] += coef[r - k + 1];
    }
    m = std::move(next);
    Integer trace = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t l = 0; l < r; ++l) trace += am[i][l] * m[l][i];
    }
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    coef[r - k] = -q;
  }
  return coef;
}

bool psdCheck(const IntMatrix& a) {
  const auto coef = charPolyExact(a);
  const std::size_t r = a.size();
  for (std::size_t k = 0; k <= r; ++k) {
    const Integer ek = (k % 2 == 0) ? coef[r - k] : Integer(-coef[r - k]);
    if (ek < 0) return false;
  }
  return true;
}

bool kernelDelta(const IntMatrix& a, const std::vector<long>& delta) {
  if (a.size() != delta.size()) return false;
  for (const auto& row : a) {
    long acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * delta[j];
    if (acc != 0) return false;
  }
  return true;
}

std::vector<EigenCheck> eigenvectorProp(const AdjacencyMatrix& adj, const CharacterTable& table,
                                        const ClassFunction& pi) {
  const std::size_t r = table.size();
  unsigned n = table.conductor;
  for (const auto& v : pi) n = static_cast<unsigned>(exactnum::lcm(n, v.conductor()));
  const ClassFunction piN = chartab::promoteAll(pi, n);
  std::vector<ClassFunction> vals(r);
  for (std::size_t i = 0; i < r; ++i) vals[i] = chartab::promoteAll(table.values[i], n);
  const IntMatrix b = preCartan(adj);

  std::vector<EigenCheck> out(r);
  for (std::size_t k = 0; k < r; ++k) {
    const Cyclotomic lambdaB = Cyclotomic(adj.n, n) - piN[k];
    bool okB = true;
    bool okM = true;
    for (std::size_t i = 0; i < r && (okB || okM); ++i) {
      Cyclotomic sb = Cyclotomic::zero(n);
      Cyclotomic sm = Cyclotomic::zero(n);
      for (std::size_t j = 0; j < r; ++j) {
        if (b[i][j] != 0) sb += vals[j][k] * exactnum::Rational(b[i][j]);
        if (adj.m[i][j] != 0) sm += vals[j][k] * exactnum::Rational(adj.m[i][j]);
      }
      if (okB && !(sb == lambdaB * vals[i][k])) okB = false;
      if (okM && !(sm == piN[k] * vals[i][k])) okM = false;
    }
    out[k] = EigenCheck{okB, okM};
  }
  return out;
}

bool dualTransposeCheck(const CharacterTable& table, const ClassFunction& pi, long n) {
  const AdjacencyMatrix direct = adjacency(table, pi, n);
  const AdjacencyMatrix dual = adjacency(table, chartab::conjugateAll(pi), n);
  return dual.m == transpose(direct.m);
}

namespace {

// Vertices 0..r-1 belong to graph 1, r..2r-1 to graph 2.
class IsoSearch {
 public:
  IsoSearch(const IntMatrix& m1, const IntMatrix& m2) : r_(m1.size()), m1_(m1), m2_(m2) {}

  long weight(std::size_t u, std::size_t v) const {
    return u < r_ ? m1_[u][v] : m2_[u - r_][v - r_];
  }

  // Iterated colour refinement; colour ids are assigned jointly across both
  // graphs so equal ids mean equal invariants.
  std::vector<std::size_t> refine(std::vector<std::size_t> colors) const {
    std::size_t classes = countClasses(colors);
    while (true) {
      using Sig = std::tuple<std::size_t, std::vector<std::pair<long, std::size_t>>,
                             std::vector<std::pair<long, std::size_t>>>;
      std::vector<Sig> sigs(2 * r_);
      for (std::size_t v = 0; v < 2 * r_; ++v) {
        const std::size_t base = v < r_ ? 0 : r_;
        std::vector<std::pair<long, std::size_t>> out;
        std::vector<std::pair<long, std::size_t>> in;
        for (std::size_t u = base; u < base + r_; ++u) {
          if (u == v) continue;
          const long w = weight(v, u);
          const long wi = weight(u, v);
          if (w != 0) out.emplace_back(w, colors[u]);
          if (wi != 0) in.emplace_back(wi, colors[u]);
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        sigs[v] = Sig{colors[v], std::move(out), std::move(in)};
      }
      std::vector<Sig> uniq = sigs;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      std::vector<std::size_t> next(2 * r_);
      for (std::size_t v = 0; v < 2 * r_; ++v) {
        next[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sigs[v]) -
                                           uniq.begin());
      }
      const std::size_t nextClasses = uniq.size();
      colors = std::move(next);
      if (nextClasses == classes) return colors;
      classes = nextClasses;
    }
  }

  std::optional<std::vector<std::size_t>> search(std::vector<std::size_t> colors) const {
    colors = refine(std::move(colors));
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> counts;
    for (std::size_t v = 0; v < 2 * r_; ++v) {
      auto& c = counts[colors[v]];
      (v < r_ ? c.first : c.second)++;
    }
    std::size_t pick = 0;
    std::size_t pickSize = 0;
    for (const auto& [color, c] : counts) {
      if (c.first != c.second) return std::nullopt;
      if (c.first > 1 && (pickSize == 0 || c.first < pickSize)) {
        pick = color;
        pickSize = c.first;
      }
    }
    if (pickSize == 0) {
      std::vector<std::size_t> sigma(r_);
      std::map<std::size_t, std::size_t> where;
      for (std::size_t v = r_; v < 2 * r_; ++v) where[colors[v]] = v - r_;
      for (std::size_t v = 0; v < r_; ++v) sigma[v] = where.at(colors[v]);
      for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < r_; ++j) {
          if (m2_[sigma[i]][sigma[j]] != m1_[i][j]) return std::nullopt;
        }
      }
      return sigma;
    }
    std::size_t v = 0;
    while (colors[v] != pick) ++v;
    const std::size_t fresh = 2 * r_ + 1;
    for (std::size_t u = r_; u < 2 * r_; ++u) {
      if (colors[u] != pick) continue;
      std::vector<std::size_t> trial = colors;
      trial[v] = fresh;
      trial[u] = fresh;
      if (auto found = search(std::move(trial))) return found;
    }
    return std::nullopt;
  }

 private:
  static std::size_t countClasses(std::vector<std::size_t> c) {
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::size_t r_;
  const IntMatrix& m1_;
  const IntMatrix& m2_;
};

}  // namespace

std::optional<std::vector<std::size_t>> quiverIso(const IntMatrix& m1, const std::vector<long>& dims1,
                                                  const IntMatrix& m2,
                                                  const std::vector<long>& dims2) {
  const std::size_t r = m1.size();
  if (m2.size() != r || dims1.size() != r || dims2.size() != r) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i) {
    if (m1[i].size() != r || m2[i].size() != r) return std::nullopt;
  }
  // initial colour: (dim, loop weight)
  std::vector<std::pair<long, long>> keys;
  for (std::size_t i = 0; i < r; ++i) keys.emplace_back(dims1[i], m1[i][i]);
  for (std::size_t i = 0; i < r; ++i) keys.emplace_back(dims2[i], m2[i][i]);
  std::vector<std::pair<long, long>> uniq = keys;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<std::size_t> colors(2 * r);
  for (std::size_t v = 0; v < 2 * r; ++v) {
    colors[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), keys[v]) -
                                         uniq.begin());
  }
  return IsoSearch(m1, m2).search(std::move(colors));
}

CartanReport cartanReport(const AdjacencyMatrix& adj, const CharacterTable& table,
                          const ClassFunction& pi) {
  CartanReport rep;
  rep.b = preCartan(adj);
  rep.a = genCartan(rep.b);
  rep.symmetric = isSymmetric(rep.a);
  rep.charPolyA = charPolyExact(rep.a);
  rep.psd = psdCheck(rep.a);
  rep.deltaInKernelOfA = kernelDelta(rep.a, adj.dims);
  rep.deltaInKernelOfB = kernelDelta(rep.b, adj.dims);
  rep.deltaInKernelOfBt = kernelDelta(transpose(rep.b), adj.dims);
  rep.eigenChecks = eigenvectorProp(adj, table, pi);
  rep.dualTransposeOk = dualTransposeCheck(table, pi, adj.n);
  return rep;
}

}  // namespace mckay::cartan
