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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "catalog/expected.hpp"
#include "catalog/generators.hpp"
#include "chartab/table.hpp"
#include "error.hpp"
#include "mckay/cartan.hpp"

using namespace mckay;
using namespace mckay::chartab;
using exactnum::Cyclotomic;

namespace {

bool isPrime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("chartab") {
  TEST_CASE("class equation") {
    for (const char* spec : {"Hmn:2,3", "Gm3:3", "Gm6:2", "SL2:2O", "G5", "G8"}) {
      CAPTURE(spec);
      const auto g = catalog::buildGroup(catalog::parseSpec(spec));
      const auto cs = conjugacyClasses(g);
      std::size_t sum = 0;
      for (const auto& c : cs.classes) {
        sum += c.size;
        CHECK(c.size * c.centralizerOrder == g.order());
        CHECK(c.members.size() == c.size);
        CHECK(c.elementOrder == g.elementOrder(c.representative));
      }
      CHECK(sum == g.order());
      CHECK(cs.classes.front().size == 1);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        CHECK(cs.inverseClass[cs.inverseClass[k]] == k);
        const auto inv = g.inverse(cs.classes[k].representative);
        CHECK(cs.classOf[inv] == cs.inverseClass[k]);
        for (const auto& [p, map] : cs.powerMap) {
          CHECK(cs.classOf[g.power(cs.classes[k].representative, static_cast<long>(p))] == map[k]);
        }
      }
    }
  }

  TEST_CASE("class constants") {
    const auto g = catalog::buildGroup(catalog::parseSpec("Gm6:2"));
    const auto cs = conjugacyClasses(g);
    const auto a = classConstants(g, cs);
    // sum_k a(i, j, k) |C_k| = |C_i| |C_j|
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < cs.size(); ++k) s += a(i, j, k) * cs.classes[k].size;
        CHECK(s == cs.classes[i].size * cs.classes[j].size);
      }
    }
    CHECK(primeDivisors(84) == std::vector<unsigned long>{2, 3, 7});
  }

  TEST_CASE("Dixon prime") {
    CHECK(dixonPrime(84, 168) == 337);
    for (unsigned long e : {1ul, 2ul, 6ul, 12ul, 30ul, 84ul}) {
      for (std::size_t n : {1ul, 24ul, 1080ul}) {
        const auto p = dixonPrime(e, n);
        CHECK(isPrime(p));
        CHECK((p - 1) % e == 0);
        CHECK(static_cast<double>(p) > 2.0 * std::sqrt(static_cast<double>(n)));
      }
    }
  }

  TEST_CASE("table properties") {
    for (const char* spec : {"Hmn:3,2", "Gm3:2", "Gm6:3", "SL2:binD:3", "SL2:2I", "G7", "G8", "G9"}) {
      CAPTURE(spec);
      const auto g = catalog::buildGroup(catalog::parseSpec(spec));
      const auto t = dixonTable(g);
      CHECK(t.size() == t.classSet->size());
      CHECK(rowOrthogonal(t));
      CHECK(columnOrthogonal(t));
      long sq = 0;
      for (long d : t.dims) sq += d * d;
      CHECK(sq == static_cast<long>(g.order()));
      CHECK(t.dims.front() == 1);
      for (const auto& v : t.values.front()) CHECK(v == Cyclotomic::one(t.conductor));
      CHECK(std::is_sorted(t.dims.begin() + 1, t.dims.end()));
      const auto pi = naturalCharacter(g, *t.classSet);
      CHECK(pi.front() == Cyclotomic(3L, g.conductor()));
      // <pi, pi> >= 1 with equality iff irreducible
      const auto ip = innerProduct(*t.classSet, pi, pi).tryRational();
      REQUIRE(ip.has_value());
      CHECK(*ip >= 1);
      // galois conjugates of a row are rows
      for (const auto& row : t.values) {
        const auto conj = conjugateAll(row);
        CHECK(std::find(t.values.begin(), t.values.end(), conj) != t.values.end());
      }
    }
  }

  TEST_CASE("abelian oracle agrees with Dixon") {
    for (long m = 1; m <= 4; ++m) {
      for (long n = 1; n <= 4; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        const auto g = catalog::buildGroup(catalog::parseSpec("Hmn:" + std::to_string(m) + "," + std::to_string(n)));
        const auto t = dixonTable(g);
        const auto oracle = catalog::abelianTable(m, n);
        REQUIRE(t.size() == oracle.size());
        // align the computed classes with g_{k,l}
        std::vector<std::size_t> col(t.size());
        for (std::size_t c = 0; c < t.size(); ++c) {
          const auto kl = catalog::abelianElementIndex(m, n, g.element(t.classSet->classes[c].representative));
          REQUIRE(kl.has_value());
          col[c] = static_cast<std::size_t>(kl->first * n + kl->second);
        }
        const unsigned big = static_cast<unsigned>(exactnum::lcm(t.conductor, oracle.conductor));
        std::vector<std::string> computed, expected;
        for (const auto& row : t.values) {
          std::vector<std::string> keys(t.size());
          for (std::size_t c = 0; c < t.size(); ++c) keys[col[c]] = row[c].promote(big).key();
          std::string joined;
          for (const auto& k : keys) joined += k + "|";
          computed.push_back(joined);
        }
        for (const auto& row : oracle.values) {
          std::string joined;
          for (const auto& v : row) joined += v.promote(big).key() + "|";
          expected.push_back(joined);
        }
        std::sort(computed.begin(), computed.end());
        std::sort(expected.begin(), expected.end());
        CHECK(computed == expected);
      }
    }
  }

  TEST_CASE("decomposition errors") {
    const auto g = catalog::buildGroup(catalog::parseSpec("Hmn:2,2"));
    const auto t = dixonTable(g);
    const auto pi = naturalCharacter(g, *t.classSet);
    try {
      decomposeProduct(t, pi, t.size());
      FAIL("index accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParameter);
    }
    try {
      decomposeProduct(t, ClassFunction(1, Cyclotomic::one(1)), 0);
      FAIL("short class function accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
    // half the natural character is not a character
    ClassFunction half;
    for (const auto& v : pi) half.push_back(v * exactnum::Rational(1, 2));
    try {
      decomposeProduct(t, half, 0);
      FAIL("non-integral multiplicity accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonIntegralMultiplicity);
    }
  }
}
