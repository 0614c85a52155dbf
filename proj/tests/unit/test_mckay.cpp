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
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "catalog/spec.hpp"
#include "error.hpp"
#include "mckay/audit.hpp"
#include "mckay/cartan.hpp"
#include "mckay/quiver.hpp"
#include "report/session.hpp"

using namespace mckay;
using namespace mckay::cartan;
using exactnum::Integer;

namespace {

report::Session open(const char* spec) { return report::Session(catalog::parseSpec(spec), 20000); }

// Rebuilds m_ij from exportDOT output.
IntMatrix parseDot(const std::string& dot, std::size_t r) {
  IntMatrix m(r, std::vector<long>(r, 0));
  const std::regex edge(R"re(r(\d+) -> r(\d+)(?: \[(.*)\])?;)re");
  const std::regex label(R"re(label="(\d+)")re");
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    std::smatch sm;
    if (!std::regex_search(line, sm, edge)) continue;
    const auto a = std::stoul(sm[1]), b = std::stoul(sm[2]);
    const std::string attr = sm[3];
    long mult = 1;
    std::smatch lm;
    if (std::regex_search(attr, lm, label)) mult = std::stol(lm[1]);
    m[a][b] += mult;
    if (attr.find("dir=none") != std::string::npos) m[b][a] += mult;
  }
  return m;
}

std::pair<IntMatrix, std::vector<long>> relabel(const IntMatrix& m, const std::vector<long>& d,
                                                const std::vector<std::size_t>& p) {
  IntMatrix out(m.size(), std::vector<long>(m.size()));
  std::vector<long> dims(d.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    dims[p[i]] = d[i];
    for (std::size_t j = 0; j < m.size(); ++j) out[p[i]][p[j]] = m[i][j];
  }
  return {out, dims};
}

}  // namespace

TEST_SUITE("mckay") {
  TEST_CASE("Klein four group") {
    auto s = open("Hmn:2,2");
    const auto& adj = s.adjacency();
    REQUIRE(adj.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) CHECK(adj.m[i][j] == (i == j ? 0 : 1));
    }
    const auto b = preCartan(adj);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) CHECK(b[i][j] == (i == j ? 3 : -1));
    }
    // 3I - (J - I) = 4I - J
    const auto cp = charPolyExact(b);
    CHECK(cp == std::vector<Integer>{0, -64, 48, -12, 1});
    CHECK(genCartan(b)[0][0] == 6);
    CHECK(dimensionBalanced(adj));
  }

  TEST_CASE("characteristic polynomial and PSD") {
    CHECK(charPolyExact({{1, 0}, {0, 1}}) == std::vector<Integer>{1, -2, 1});
    CHECK(charPolyExact({{2, 1}, {1, 2}}) == std::vector<Integer>{3, -4, 1});
    CHECK(psdCheck({{1, 0}, {0, 1}}));
    CHECK(psdCheck({{1, 1}, {1, 1}}));
    CHECK_FALSE(psdCheck({{-1}}));
    CHECK_FALSE(psdCheck({{1, 2}, {2, 1}}));
    try {
      charPolyExact({{0, 1}, {0, 0}});
      FAIL("asymmetric accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSymmetric);
    }
    CHECK_FALSE(kernelDelta({{1}}, {1}));
    CHECK(kernelDelta({{2, -2}, {-2, 2}}, {1, 1}));
  }

  TEST_CASE("PSD agrees with Gram matrices") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> e(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 2 + trial % 4;
      IntMatrix x(r, std::vector<long>(r));
      for (auto& row : x) {
        for (auto& v : row) v = e(rng);
      }
      IntMatrix g(r, std::vector<long>(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          for (std::size_t k = 0; k < r; ++k) g[i][j] += x[k][i] * x[k][j];
        }
      }
      CHECK(psdCheck(g));
      g[0][0] -= 1 + g[0][0];  // negative diagonal entry
      CHECK_FALSE(psdCheck(g));
    }
  }

  TEST_CASE("Cartan properties of G8") {
    auto s = open("G8");
    const auto& adj = s.adjacency();
    const auto& rep = s.cartan();
    CHECK(rep.symmetric);
    CHECK(rep.psd);
    CHECK(rep.deltaInKernelOfA);
    CHECK(rep.deltaInKernelOfB);
    CHECK(rep.deltaInKernelOfBt);
    CHECK(rep.dualTransposeOk);
    CHECK(kernelDelta(rep.a, adj.dims));
    CHECK(std::all_of(rep.eigenChecks.begin(), rep.eigenChecks.end(), [](const EigenCheck& c) { return c.ok(); }));
    // constant term of det(xI - A) vanishes: A is singular
    CHECK(rep.charPolyA.front() == 0);
  }

  TEST_CASE("eigenvalue of a Klein class") {
    auto s = open("Hmn:2,2");
    const auto& pi = s.natural();
    const long minusOne = std::count_if(pi.begin(), pi.end(), [](const auto& v) {
      return v == exactnum::Cyclotomic(-1L, v.conductor());
    });
    CHECK(minusOne == 3);
    const auto checks = eigenvectorProp(s.adjacency(), s.table(), pi);
    CHECK(checks.size() == 4);
    CHECK(std::all_of(checks.begin(), checks.end(), [](const EigenCheck& c) { return c.ok(); }));
  }

  TEST_CASE("non-real natural character") {
    auto s = open("G8");
    CHECK_FALSE(isSymmetric(s.adjacency().m));
    CHECK(dualTransposeCheck(s.table(), s.natural()));
    CHECK(dimensionBalanced(s.adjacency()));
    CHECK(isSymmetric(s.cartan().a));
  }

  TEST_CASE("quiver isomorphism") {
    auto s = open("G9");
    const auto& adj = s.adjacency();
    const std::size_t r = adj.size();
    CHECK(quiverIso(adj.m, adj.dims, adj.m, adj.dims).has_value());
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> p(r);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      const auto [m2, d2] = relabel(adj.m, adj.dims, p);
      const auto sigma = quiverIso(adj.m, adj.dims, m2, d2);
      REQUIRE(sigma.has_value());
      for (std::size_t i = 0; i < r; ++i) {
        CHECK(d2[(*sigma)[i]] == adj.dims[i]);
        for (std::size_t j = 0; j < r; ++j) CHECK(m2[(*sigma)[i]][(*sigma)[j]] == adj.m[i][j]);
      }
      CHECK(quiverIso(m2, d2, adj.m, adj.dims).has_value());
      // one extra arrow
      auto bad = m2;
      bad[trial % r][(trial + 1) % r] += 1;
      CHECK_FALSE(quiverIso(adj.m, adj.dims, bad, d2).has_value());
      // dims swapped on two nodes of different dimension
      auto d3 = d2;
      const auto big = std::max_element(d3.begin(), d3.end());
      std::iter_swap(d3.begin() + static_cast<long>(p[0]), big);
      if (d3 != d2) CHECK_FALSE(quiverIso(adj.m, adj.dims, m2, d3).has_value());
    }
    CHECK_FALSE(quiverIso({{1}}, {1}, {{1}}, {2}).has_value());
  }

  TEST_CASE("DOT export") {
    {
      auto s = open("Hmn:1,1");
      const auto dot = exportDOT(makeQuiver(s.adjacency()));
      CHECK(dot.find("r0 -> r0 [label=\"3\"];") != std::string::npos);
    }
    {
      auto s = open("Hmn:2,2");
      const auto dot = exportDOT(makeQuiver(s.adjacency()));
      long undirected = 0;
      for (std::size_t p = 0; (p = dot.find("dir=none", p)) != std::string::npos; ++p) ++undirected;
      CHECK(undirected == 6);
      CHECK(parseDot(dot, 4) == s.adjacency().m);
    }
    for (const char* spec : {"SL2:2T", "G7", "Gm3:2", "G10"}) {
      CAPTURE(spec);
      auto s = open(spec);
      const auto q = makeQuiver(s.adjacency());
      CHECK(q.adjacency() == s.adjacency().m);
      CHECK(parseDot(exportDOT(q), s.adjacency().size()) == s.adjacency().m);
    }
    {
      // 2T in SL3: affine E6 plus a loop at each node
      auto s = open("SL2:2T");
      const auto q = makeQuiver(s.adjacency());
      CHECK(q.dims.size() == 7);
      for (std::size_t i = 0; i < 7; ++i) CHECK(s.adjacency().m[i][i] == 1);
      long pairs = 0;
      for (const auto& c : q.collapsed()) {
        CHECK(c.forward == 0);
        CHECK(c.backward == 0);
        pairs += c.undirected;
      }
      CHECK(pairs == 6);
    }
  }

  TEST_CASE("printed matrix audit") {
    {
      auto s = open("Hmn:2,2");
      const auto audit = auditPrintedCartan(s.spec(), s.adjacency(), s.cartan());
      REQUIRE(audit.has_value());
      CHECK(audit->status == AuditStatus::Matched);
      CHECK(audit->matchedAgainst == std::string("B"));
    }
    for (const char* spec : {"Hmn:3,2", "Hmn:3,4", "G8", "G9"}) {
      CAPTURE(spec);
      auto s = open(spec);
      const auto audit = auditPrintedCartan(s.spec(), s.adjacency(), s.cartan());
      REQUIRE(audit.has_value());
      CHECK(audit->status == AuditStatus::Matched);
      CHECK(audit->matchedAgainst == std::string("A"));
    }
    {
      auto s = open("G7");
      const auto audit = auditPrintedCartan(s.spec(), s.adjacency(), s.cartan());
      REQUIRE(audit.has_value());
      CHECK(audit->status == AuditStatus::KnownIssue);
      CHECK_FALSE(audit->matchedAgainst.has_value());
    }
    for (const char* spec : {"Hmn:3,3", "G10"}) {
      CAPTURE(spec);
      auto s = open(spec);
      const auto audit = auditPrintedCartan(s.spec(), s.adjacency(), s.cartan());
      REQUIRE(audit.has_value());
      CHECK(audit->status == AuditStatus::Mismatch);
      CHECK_FALSE(audit->discrepancies.empty());
    }
    auto s = open("G5");
    CHECK_FALSE(auditPrintedCartan(s.spec(), s.adjacency(), s.cartan()).has_value());
  }

  TEST_CASE("printed table audit") {
    {
      auto s = open("G8");
      const auto audit = auditPrintedTable(s.spec(), s.table(), s.natural());
      REQUIRE(audit.has_value());
      CHECK(audit->matched);
    }
    {
      auto s = open("G7");
      const auto audit = auditPrintedTable(s.spec(), s.table(), s.natural());
      REQUIRE(audit.has_value());
      CHECK(audit->matched);
      const bool reported = std::any_of(audit->discrepancies.begin(), audit->discrepancies.end(),
                                        [](const Discrepancy& d) { return d.kind == "order5-values"; });
      CHECK(reported);
    }
  }
}
