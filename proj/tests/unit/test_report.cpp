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

#include <random>

#include "catalog/spec.hpp"
#include "error.hpp"
#include "report/render.hpp"
#include "report/verify.hpp"

using namespace mckay;
using namespace mckay::report;
using exactnum::Cyclotomic;

TEST_SUITE("report") {
  TEST_CASE("cyclotomic JSON roundtrip") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> c(-5, 5);
    for (unsigned n : {1u, 3u, 7u, 12u, 84u}) {
      for (int trial = 0; trial < 5; ++trial) {
        Cyclotomic x = Cyclotomic::zero(n);
        for (unsigned k = 0; k < n; k += 2) x += Cyclotomic::root(k, n) * exactnum::Rational(c(rng), 3);
        const Json j = cyclotomicJson(x);
        CHECK(j["N"] == n);
        CHECK(cyclotomicFromJson(j) == x);
        CHECK(cyclotomicFromJson(Json::parse(j.dump())) == x);
      }
    }
    CHECK(cyclotomicJson(Cyclotomic::zero(5))["coeffs"].empty());
  }

  TEST_CASE("verify G8") {
    const auto r = verify(catalog::parseSpec("G8"), 20000);
    CHECK(r.passed());
    CHECK(r.order == 168);
    CHECK(r.classCount == 6);
    CHECK(r.dimMultiset == std::vector<long>{1, 3, 3, 6, 7, 8});
    CHECK(r.checks.size() == checkNames().size());
    for (const auto& name : checkNames()) {
      CAPTURE(name);
      const auto* c = r.find(name);
      REQUIRE(c != nullptr);
      CHECK(c->status == CheckStatus::Pass);
    }
    CHECK(r.find("nonexistent") == nullptr);
    REQUIRE(r.paperAudit.has_value());
    CHECK(r.paperAudit->status == cartan::AuditStatus::Matched);
  }

  TEST_CASE("verify outcomes for printed-data defects") {
    const auto g7 = verify(catalog::parseSpec("G7"), 20000);
    CHECK(g7.passed());
    CHECK(g7.find("paperMatrixMatch")->status == CheckStatus::Skip);
    CHECK(g7.find("expectedQuiverMatch")->status == CheckStatus::Skip);
    CHECK(g7.find("theorem") == nullptr);
    const auto h33 = verify(catalog::parseSpec("Hmn:3,3"), 20000);
    CHECK_FALSE(h33.passed());
    CHECK(h33.find("paperMatrixMatch")->status == CheckStatus::Fail);
    CHECK(h33.find("psd")->status == CheckStatus::Pass);
    const auto deg = verify(catalog::parseSpec("Gm3:1"), 20000);
    CHECK(deg.passed());
    CHECK_FALSE(deg.warnings.empty());
  }

  TEST_CASE("bound exceeded is rethrown") {
    try {
      verify(catalog::parseSpec("G12"), 100);
      FAIL("bound ignored");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderBoundExceeded);
    }
  }

  TEST_CASE("JSON shapes") {
    const auto r = verify(catalog::parseSpec("Hmn:2,2"), 20000);
    const Json j = verifyJson(r);
    for (const char* key : {"groupSpec", "order", "classCount", "dimMultiset", "passed", "checks",
                            "discrepancies", "warnings", "paperMatch", "elapsedMs"}) {
      CAPTURE(key);
      CHECK(j.contains(key));
    }
    CHECK(j["paperMatch"]["status"] == "matched");
    const Json all = verifyAllJson({r, r});
    CHECK(all["summary"]["total"] == 2);
    CHECK(all["summary"]["passed"] == 2);

    Session s(catalog::parseSpec("Gm3:2"), 20000);
    const Json info = infoJson(s);
    CHECK(info["order"] == 12);
    CHECK(info["type"] == 2);
    const Json table = tableJson(s);
    CHECK(table["values"].size() == table["irreps"].size());
    CHECK(table["classes"].size() == table["values"][0].size());
    const Json cartan = cartanJson(s, 'A');
    CHECK(cartan["print"] == "A");
    CHECK(cartan["report"]["psd"] == true);
    CHECK(cartan["report"]["paperMatch"].is_null());
    CHECK(dump(listJson()).back() == '\n');
    CHECK(listJson().size() == catalog::specKinds().size());
  }

  TEST_CASE("text renderings") {
    Session s(catalog::parseSpec("Hmn:2,2"), 20000);
    CHECK(cartanCsv(s, 'B') == "3,-1,-1,-1\n-1,3,-1,-1\n-1,-1,3,-1\n-1,-1,-1,3\n");
    CHECK(infoText(s).find("order") != std::string::npos);
    CHECK_FALSE(tableText(s).empty());
    CHECK(verifyAllText({verify(s)}).find("Hmn:2,2") != std::string::npos);
    CHECK(listText().find("Gm3:m") != std::string::npos);
  }
}
