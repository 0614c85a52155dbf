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

#include <numeric>
#include <random>

#include "catalog/generators.hpp"
#include "error.hpp"
#include "matgroup/group.hpp"

using namespace mckay;
using namespace mckay::matgroup;
using exactnum::Cyclotomic;

namespace {

Cyclotomic q(long v) { return Cyclotomic(v, 1u); }

}  // namespace

TEST_SUITE("matgroup") {
  TEST_CASE("matrix arithmetic") {
    const auto t = catalog::named::T();
    const auto w = catalog::named::W();
    CHECK(det(t) == Cyclotomic::one(1));
    CHECK(matMul(matMul(t, t), t) == SquareMatrix::identity(3, 1));
    CHECK(matMul(w, matInv(w)) == SquareMatrix::identity(3, w.conductor()));
    CHECK(t.transpose() == matInv(t));
    CHECK(w.trace() == Cyclotomic(3L, 3) * Cyclotomic::root(1, 3));
    // 4x4 goes through elimination
    const auto m = SquareMatrix::fromRows(
        {{q(2), q(1), q(0), q(0)}, {q(1), q(2), q(1), q(0)}, {q(0), q(1), q(2), q(1)}, {q(0), q(0), q(1), q(2)}});
    CHECK(det(m) == q(5));
    CHECK(matMul(m, matInv(m)) == SquareMatrix::identity(4, 1));
    CHECK_THROWS_AS(matInv(SquareMatrix(3, 1)), Error);
  }

  TEST_CASE("closure orders") {
    const std::vector<SquareMatrix> t = {catalog::named::T()};
    CHECK(FiniteMatrixGroup::closure(t).order() == 3);
    const auto g = catalog::buildGroup(catalog::parseSpec("Hmn:2,3"));
    CHECK(g.order() == 6);
    CHECK(g.exponent() == 6);
  }

  TEST_CASE("closure errors") {
    const std::vector<SquareMatrix> diag = {SquareMatrix::diagonal({q(2), q(1), q(1)})};
    try {
      FiniteMatrixGroup::closure(diag, 50);
      FAIL("infinite order accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderBoundExceeded);
    }
    const std::vector<SquareMatrix> singular = {SquareMatrix(3, 1)};
    try {
      FiniteMatrixGroup::closure(singular);
      FAIL("singular generator accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SingularMatrix);
    }
    const auto gens = catalog::generators(catalog::parseSpec("G8"));
    try {
      FiniteMatrixGroup::closure(gens, 100);
      FAIL("bound ignored");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderBoundExceeded);
    }
  }

  TEST_CASE("group laws on G8 and G6") {
    for (const char* spec : {"G8", "G6", "Gm6:3"}) {
      CAPTURE(spec);
      const auto g = catalog::buildGroup(catalog::parseSpec(spec));
      const std::size_t e = *g.indexOf(SquareMatrix::identity(3, g.conductor()));
      std::mt19937 rng(11);
      std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
      for (int trial = 0; trial < 200; ++trial) {
        const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
        CHECK(g.multiply(a, g.inverse(a)) == e);
        CHECK(g.element(g.multiply(a, b)) == matMul(g.element(a), g.element(b)));
        CHECK(g.order() % g.elementOrder(a) == 0);
        CHECK(g.power(a, static_cast<long>(g.elementOrder(a))) == e);
        CHECK(g.power(a, -1) == g.inverse(a));
      }
      unsigned long ex = 1;
      for (std::size_t a = 0; a < g.order(); ++a) ex = std::lcm(ex, g.elementOrder(a));
      CHECK(ex == g.exponent());
      for (std::size_t a = 0; a < g.order(); ++a) CHECK(det(g.element(a)) == Cyclotomic::one(g.conductor()));
    }
  }

  TEST_CASE("indexOf") {
    const auto g = catalog::buildGroup(catalog::parseSpec("Gm3:2"));
    for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.indexOf(g.element(i)) == i);
    CHECK_FALSE(g.indexOf(SquareMatrix::diagonal({q(2), q(1), q(1)})).has_value());
  }
}
