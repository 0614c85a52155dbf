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

#ifndef MCKAY_REPORT_VERIFY_HPP
#define MCKAY_REPORT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mckay/audit.hpp"
#include "report/session.hpp"

namespace mckay::report {

enum class CheckStatus { Pass, Fail, Skip };
const char* checkStatusName(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct VerifyReport {
  std::string groupSpec;
  std::size_t order = 0;
  std::size_t classCount = 0;
  std::vector<long> dimMultiset;
  std::vector<Check> checks;
  std::vector<cartan::Discrepancy> discrepancies;
  std::vector<std::string> warnings;
  std::optional<cartan::PaperAudit> paperAudit;
  double elapsedMs = 0;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

// Check names in report order.
const std::vector<std::string>& checkNames();

// Runs every check; errors raised while computing become failed checks.
// OrderBoundExceeded is rethrown.
VerifyReport verify(Session& session);
VerifyReport verify(const catalog::GroupSpec& spec, std::size_t maxOrder);

}  // namespace mckay::report

#endif
