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

#ifndef MCKAY_MCKAY_AUDIT_HPP
#define MCKAY_MCKAY_AUDIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "catalog/reference.hpp"
#include "mckay/cartan.hpp"

// Comparison of computed results with the literal reference data.
namespace mckay::cartan {

struct Discrepancy {
  std::string kind;
  std::string detail;
};

enum class AuditStatus { Matched, Mismatch, KnownIssue };
const char* auditStatusName(AuditStatus s);

struct PaperAudit {
  std::string matrixName;
  AuditStatus status = AuditStatus::Mismatch;
  std::optional<std::string> matchedAgainst;  // "A" or "B"
  std::vector<std::size_t> permutation;       // computed irrep i -> printed row
  std::optional<catalog::reference::BlockLayout> layout;  // block pattern that matched
  std::vector<Discrepancy> discrepancies;
};

// Absent when no printed matrix exists for the spec.
std::optional<PaperAudit> auditPrintedCartan(const catalog::GroupSpec& spec,
                                             const AdjacencyMatrix& adj,
                                             const CartanReport& report);

struct TableMatch {
  std::vector<std::size_t> rowOf;  // printed row i -> computed irrep
  std::vector<std::size_t> colOf;  // printed column j -> computed class
};
// Equality up to row and column permutation, columns restricted to equal
// element orders.
std::optional<TableMatch> matchTable(const chartab::CharacterTable& table,
                                     const catalog::reference::PrintedTable& printed);

struct TableAudit {
  std::string tableName;
  bool matched = false;
  std::optional<TableMatch> match;
  std::vector<Discrepancy> discrepancies;
};

// G7 and G8 only. For G7 the order-5 entries are retried with the values of
// the natural character when the printed ones do not fit.
std::optional<TableAudit> auditPrintedTable(const catalog::GroupSpec& spec,
                                            const chartab::CharacterTable& table,
                                            const chartab::ClassFunction& pi);

}  // namespace mckay::cartan

#endif
