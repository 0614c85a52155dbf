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

#include "catalog/expected.hpp"
#include "catalog/generators.hpp"
#include "catalog/reference.hpp"
#include "catalog/spec.hpp"
#include "error.hpp"

using namespace mckay;
using namespace mckay::catalog;
using exactnum::Cyclotomic;

namespace {

long total(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("spec grammar roundtrip over the sweep") {
    const auto all = sweep(6);
    CHECK(all.size() == 73);
    for (const auto& s : all) {
      CAPTURE(formatSpec(s));
      CHECK(parseSpec(formatSpec(s)) == s);
      CHECK(typeNumber(s) >= 1);
      CHECK(typeNumber(s) <= 12);
    }
    const auto a = parseSpec("SL2:binD:3:alpha=2");
    CHECK(a.sl2 == SL2Type::BinaryDihedral);
    CHECK(a.k == 3);
    CHECK(a.alpha == 2);
    CHECK(parseSpec(formatSpec(a)) == a);
  }

  TEST_CASE("invalid specs") {
    for (const char* bad : {"", "G4", "G13", "Hmn:0,2", "Hmn:2", "Gm3:x", "SL2:2X", "SL2:cyclic:0",
                            "SL2:binD:0", "G8:1", "hmn:2,2", "SL2:2T:alpha=0"}) {
      CAPTURE(bad);
      try {
        parseSpec(bad);
        FAIL("accepted");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidSpec);
      }
    }
  }

  TEST_CASE("generators lie in SL3") {
    for (const auto& s : sweep(6)) {
      CAPTURE(formatSpec(s));
      for (const auto& g : generators(s)) {
        CHECK(g.dim() == 3);
        CHECK(matgroup::det(g) == Cyclotomic::one(g.conductor()));
      }
    }
  }

  TEST_CASE("exceptional group orders") {
    const std::vector<std::pair<const char*, std::size_t>> orders = {
        {"G5", 108}, {"G6", 216}, {"G7", 60}, {"G8", 168}, {"G9", 180}, {"G10", 504}, {"G11", 648}};
    for (const auto& [spec, order] : orders) {
      CAPTURE(spec);
      CHECK(buildGroup(parseSpec(spec)).order() == order);
      CHECK(expectedProfile(parseSpec(spec)).expectedOrder == order);
    }
    CHECK(buildGroup(parseSpec("Gm3:4")).order() == 48);
    CHECK(buildGroup(parseSpec("Gm6:3")).order() == 54);
    CHECK(buildGroup(parseSpec("SL2:2I")).order() == 120);
    CHECK(buildGroup(parseSpec("SL2:binD:3")).order() == 12);
  }

  TEST_CASE("degenerate parameters") {
    CHECK(degenerateReason(parseSpec("Hmn:1,1")).has_value());
    CHECK(degenerateReason(parseSpec("Gm3:1")).has_value());
    CHECK(degenerateReason(parseSpec("Gm6:1")).has_value());
    CHECK(degenerateReason(parseSpec("SL2:cyclic:1")).has_value());
    CHECK_FALSE(degenerateReason(parseSpec("SL2:cyclic:1:alpha=2")).has_value());
    CHECK_FALSE(degenerateReason(parseSpec("Hmn:1,2")).has_value());
    CHECK_FALSE(degenerateReason(parseSpec("G5")).has_value());
    CHECK(buildGroup(parseSpec("Gm3:1")).order() == 3);
    CHECK(buildGroup(parseSpec("Gm6:1")).order() == 6);
  }

  TEST_CASE("monomial oracle") {
    for (long m = 1; m <= 6; ++m) {
      for (bool refl : {false, true}) {
        CAPTURE(m);
        CAPTURE(refl);
        const auto q = monomialAdjacency(m, refl);
        const long order = (refl ? 6 : 3) * m * m;
        long sq = 0;
        for (long d : q.dims) sq += d * d;
        CHECK(sq == order);
        // every row and column sums to 3 d_i against dims
        for (std::size_t i = 0; i < q.m.size(); ++i) {
          long row = 0, col = 0;
          for (std::size_t j = 0; j < q.m.size(); ++j) {
            row += q.m[i][j] * q.dims[j];
            col += q.dims[j] * q.m[j][i];
          }
          CHECK(row == 3 * q.dims[i]);
          CHECK(col == 3 * q.dims[i]);
        }
        auto dims = q.dims;
        std::sort(dims.begin(), dims.end());
        const auto prof = expectedProfile(parseSpec((refl ? "Gm6:" : "Gm3:") + std::to_string(m)));
        if (prof.expectedDimMultiset) CHECK(dims == *prof.expectedDimMultiset);
      }
    }
  }

  TEST_CASE("affine quivers") {
    const auto a0 = affineQuiverWithLoops(SL2Type::Cyclic, 1);
    CHECK(a0.m == IntMatrix{{3}});
    const auto a1 = affineQuiverWithLoops(SL2Type::Cyclic, 2);
    CHECK(a1.m == IntMatrix{{1, 2}, {2, 1}});
    const auto e8 = affineQuiverWithLoops(SL2Type::Icosahedral, 1);
    CHECK(e8.m.size() == 9);
    CHECK(total(e8.dims) == 30);
    for (std::size_t i = 0; i < e8.m.size(); ++i) CHECK(e8.m[i][i] == 1);
    const auto d4 = affineQuiverWithLoops(SL2Type::BinaryDihedral, 2);
    CHECK(d4.dims == std::vector<long>{1, 1, 1, 1, 2});
    const auto bd1 = affineQuiverWithLoops(SL2Type::BinaryDihedral, 1);
    CHECK(bd1.dims == std::vector<long>{1, 1, 1, 1});
  }

  TEST_CASE("abelian element index") {
    const auto g = buildGroup(parseSpec("Hmn:3,4"));
    std::vector<int> seen(12, 0);
    for (const auto& e : g.elements()) {
      const auto kl = abelianElementIndex(3, 4, e);
      REQUIRE(kl.has_value());
      ++seen[static_cast<std::size_t>(kl->first * 4 + kl->second)];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    CHECK_FALSE(abelianElementIndex(3, 4, named::T()).has_value());
  }

  TEST_CASE("expected adjacency coverage") {
    for (const char* spec : {"G7", "G11", "G12", "SL2:2T:alpha=2"}) {
      CAPTURE(spec);
      CHECK_FALSE(expectedAdjacency(parseSpec(spec)).has_value());
    }
    for (const char* spec : {"Hmn:2,3", "Gm3:2", "Gm6:2", "SL2:2O", "G5", "G6", "G8", "G9", "G10"}) {
      CAPTURE(spec);
      const auto q = expectedAdjacency(parseSpec(spec));
      REQUIRE(q.has_value());
      CHECK(q->m.size() == q->dims.size());
    }
    CHECK(expectedAdjacency(parseSpec("G10"))->dims.size() == 18);
  }

  TEST_CASE("printed reference data") {
    const auto h22 = reference::printedCartan(parseSpec("Hmn:2,2"));
    REQUIRE(h22.has_value());
    CHECK(h22->matrix.size() == 4);
    const auto g9 = reference::printedCartan(parseSpec("G9"));
    REQUIRE(g9.has_value());
    CHECK(g9->matrix.size() == 15);
    CHECK(g9->layout.has_value());
    CHECK(reference::printedCartan(parseSpec("G7"))->knownIssue.has_value());
    CHECK_FALSE(reference::printedCartan(parseSpec("G5")).has_value());
    CHECK(reference::g8Table().rows.size() == 6);
    CHECK(reference::g7TableAsPrinted().rows.size() == 5);
    // blocks: diagonal 6, the rest -B or -B^T
    const auto b = reference::g9BlockB();
    const reference::BlockLayout layout = {{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}};
    const auto full = reference::assembleBlocks(b, layout);
    const std::size_t r = b.size();
    CHECK(full[0][0] == 6);
    CHECK(full[0][r] == -b[0][0]);
    CHECK(full[1][2 * r] == -b[0][1]);
  }
}
