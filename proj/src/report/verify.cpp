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

#include "report/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "catalog/expected.hpp"
#include "catalog/generators.hpp"
#include "error.hpp"

namespace mckay::report {

const char* checkStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

const std::vector<std::string>& checkNames() {
  static const std::vector<std::string> names = {
      "orthogonality", "sumOfSquares",   "integrality",   "dimensionBalance",
      "psd",           "kernelDelta",    "eigenvectorProp", "dualTranspose",
      "profileMatch",  "expectedQuiverMatch", "paperMatrixMatch", "paperTableMatch"};
  return names;
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class Checks {
 public:
  void set(const std::string& name, CheckStatus s, std::string detail = "") {
    results_[name] = Check{name, s, std::move(detail)};
  }
  void pass(const std::string& name, bool ok, std::string failDetail = "") {
    set(name, ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : std::move(failDetail));
  }
  // Every check not yet decided fails with `detail`.
  void failRemaining(const std::string& detail) {
    for (const auto& n : checkNames()) {
      if (!results_.count(n)) set(n, CheckStatus::Fail, detail);
    }
  }
  std::vector<Check> ordered() const {
    std::vector<Check> out;
    for (const auto& n : checkNames()) {
      auto it = results_.find(n);
      out.push_back(it != results_.end() ? it->second : Check{n, CheckStatus::Skip, ""});
    }
    return out;
  }

 private:
  std::map<std::string, Check> results_;
};

std::string sizes(std::size_t got, std::size_t want, const char* what) {
  return std::string(what) + " " + std::to_string(got) + ", expected " + std::to_string(want);
}

void runChecks(Session& s, VerifyReport& rep, Checks& checks) {
  const auto& spec = s.spec();
  const auto profile = catalog::expectedProfile(spec);

  const auto& g = s.group();
  rep.order = g.order();

  const auto& table = s.table();
  rep.classCount = table.size();
  rep.dimMultiset = table.dims;
  std::sort(rep.dimMultiset.begin(), rep.dimMultiset.end());

  checks.pass("orthogonality", chartab::rowOrthogonal(table) && chartab::columnOrthogonal(table),
              "row or column orthogonality fails");
  long sum = 0;
  for (long d : table.dims) sum += d * d;
  checks.pass("sumOfSquares", static_cast<std::size_t>(sum) == g.order(),
              "sum of squared dimensions is " + std::to_string(sum));

  if (profile.expectedOrder || profile.expectedClassCount || profile.expectedDimMultiset) {
    std::string why;
    if (profile.expectedOrder && *profile.expectedOrder != g.order()) {
      why = sizes(g.order(), *profile.expectedOrder, "order");
    } else if (profile.expectedClassCount && *profile.expectedClassCount != table.size()) {
      why = sizes(table.size(), *profile.expectedClassCount, "class count");
    } else if (profile.expectedDimMultiset && *profile.expectedDimMultiset != rep.dimMultiset) {
      why = "dimension multiset differs";
    }
    checks.pass("profileMatch", why.empty(), why);
  } else {
    checks.set("profileMatch", CheckStatus::Skip, "no expected profile for this spec");
  }

  const auto& pi = s.natural();
  const cartan::AdjacencyMatrix* adj = nullptr;
  try {
    adj = &s.adjacency();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonIntegralMultiplicity) throw;
    checks.pass("integrality", false, e.what());
    checks.failRemaining("no adjacency matrix: " + std::string(e.what()));
    return;
  }
  bool nonneg = true;
  for (const auto& row : adj->m) {
    for (long v : row) nonneg = nonneg && v >= 0;
  }
  checks.pass("integrality", nonneg, "negative multiplicity");
  checks.pass("dimensionBalance", cartan::dimensionBalanced(*adj), "row or column balance fails");

  const auto& cr = s.cartan();
  checks.pass("psd", cr.symmetric && cr.psd, cr.symmetric ? "A is not PSD" : "A is not symmetric");
  checks.pass("kernelDelta", cr.deltaInKernelOfA && cr.deltaInKernelOfB && cr.deltaInKernelOfBt,
              "A delta, B delta or B^T delta is nonzero");
  std::string badClasses;
  for (std::size_t k = 0; k < cr.eigenChecks.size(); ++k) {
    if (!cr.eigenChecks[k].ok()) badClasses += (badClasses.empty() ? "" : ", ") + std::to_string(k);
  }
  checks.pass("eigenvectorProp", badClasses.empty(), "fails on classes " + badClasses);
  checks.pass("dualTranspose", cr.dualTransposeOk, "adjacency of the conjugate is not M^T");

  if (auto expected = catalog::expectedAdjacency(spec)) {
    const bool iso = expected->m.size() == adj->size() &&
                     cartan::quiverIso(adj->m, adj->dims, expected->m, expected->dims).has_value();
    checks.pass("expectedQuiverMatch", iso, "not isomorphic to " + expected->source);
  } else {
    checks.set("expectedQuiverMatch", CheckStatus::Skip, "no reference quiver for this spec");
  }

  rep.paperAudit = cartan::auditPrintedCartan(spec, *adj, cr);
  if (rep.paperAudit) {
    const auto& a = *rep.paperAudit;
    rep.discrepancies.insert(rep.discrepancies.end(), a.discrepancies.begin(), a.discrepancies.end());
    switch (a.status) {
      case cartan::AuditStatus::Matched: {
        const bool unexpected = !a.discrepancies.empty() && a.discrepancies.back().kind == "unexpected-match";
        checks.pass("paperMatrixMatch", !unexpected, unexpected ? a.discrepancies.back().detail : "");
        break;
      }
      case cartan::AuditStatus::Mismatch:
        checks.pass("paperMatrixMatch", false, a.matrixName + " does not match");
        break;
      case cartan::AuditStatus::KnownIssue:
        checks.set("paperMatrixMatch", CheckStatus::Skip,
                   a.matrixName + " has a documented inconsistency; see discrepancies");
        break;
    }
  } else {
    checks.set("paperMatrixMatch", CheckStatus::Skip, "no printed matrix for this spec");
  }

  if (auto ta = cartan::auditPrintedTable(spec, table, pi)) {
    rep.discrepancies.insert(rep.discrepancies.end(), ta->discrepancies.begin(), ta->discrepancies.end());
    checks.pass("paperTableMatch", ta->matched, ta->tableName + " does not match");
  } else {
    checks.set("paperTableMatch", CheckStatus::Skip, "no printed table for this spec");
  }
}

}  // namespace

VerifyReport verify(Session& session) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.groupSpec = catalog::formatSpec(session.spec());
  if (auto why = catalog::degenerateReason(session.spec())) rep.warnings.push_back("degenerate group: " + *why);
  Checks checks;
  try {
    runChecks(session, rep, checks);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OrderBoundExceeded) throw;
    checks.failRemaining(e.what());
  }
  rep.checks = checks.ordered();
  rep.elapsedMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerifyReport verify(const catalog::GroupSpec& spec, std::size_t maxOrder) {
  Session s(spec, maxOrder);
  return verify(s);
}

}  // namespace mckay::report
