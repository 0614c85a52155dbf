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

#include "chartab/classes.hpp"

#include <algorithm>
#include <limits>

namespace mckay::chartab {

std::vector<unsigned long> primeDivisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

ConjugacyClassSet conjugacyClasses(const FiniteMatrixGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> orbitOf(n, kUnset);
  std::vector<std::vector<std::size_t>> orbits;

  // Conjugation by the generators suffices: their closure is all of G.
  std::vector<std::pair<std::size_t, std::size_t>> conj;
  for (std::size_t gi : g.generatorIndices()) conj.emplace_back(gi, g.inverse(gi));

  for (std::size_t start = 0; start < n; ++start) {
    if (orbitOf[start] != kUnset) continue;
    const std::size_t id = orbits.size();
    std::vector<std::size_t> orbit{start};
    orbitOf[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const std::size_t x = orbit[head];
      for (const auto& [h, hinv] : conj) {
        const std::size_t y = g.multiply(g.multiply(h, x), hinv);
        if (orbitOf[y] == kUnset) {
          orbitOf[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  // orbits are already in order of smallest member
  std::vector<std::size_t> order(orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return orbits[a].size() < orbits[b].size();
  });

  ConjugacyClassSet cs;
  cs.groupOrder = n;
  cs.exponent = g.exponent();
  cs.classOf.assign(n, 0);
  for (std::size_t c = 0; c < order.size(); ++c) {
    ConjugacyClass cls;
    cls.members = std::move(orbits[order[c]]);
    cls.representative = cls.members.front();
    cls.size = cls.members.size();
    cls.centralizerOrder = n / cls.size;
    cls.elementOrder = g.elementOrder(cls.representative);
    for (std::size_t m : cls.members) cs.classOf[m] = c;
    cs.classes.push_back(std::move(cls));
  }

  cs.inverseClass.resize(cs.size());
  for (std::size_t c = 0; c < cs.size(); ++c) {
    cs.inverseClass[c] = cs.classOf[g.inverse(cs.classes[c].representative)];
  }
  for (unsigned long p : primeDivisors(g.exponent())) {
    std::vector<std::size_t> map(cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c) {
      map[c] = cs.classOf[g.power(cs.classes[c].representative, static_cast<long>(p))];
    }
    cs.powerMap.emplace(p, std::move(map));
  }
  return cs;
}

ClassConstants classConstants(const FiniteMatrixGroup& g, const ConjugacyClassSet& cs) {
  const std::size_t r = cs.size();
  ClassConstants a(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = cs.classes[k].representative;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t y = g.multiply(g.inverse(x), z);
      ++a(cs.classOf[x], cs.classOf[y], k);
    }
  }
  return a;
}

}  // namespace mckay::chartab
