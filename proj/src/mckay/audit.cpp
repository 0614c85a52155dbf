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

#include "mckay/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mckay::cartan {

namespace ref = catalog::reference;
using catalog::Kind;
using exactnum::Cyclotomic;

const char* auditStatusName(AuditStatus s) {
  switch (s) {
    case AuditStatus::Matched: return "matched";
    case AuditStatus::Mismatch: return "mismatch";
    case AuditStatus::KnownIssue: return "known-issue";
  }
  return "?";
}

namespace {

std::string joinIndices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

// Rows i with sum_j m_ij d_j != target(i).
std::vector<std::size_t> badRows(const IntMatrix& m, const std::vector<long>& d,
                                 const std::function<long(std::size_t)>& target) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    long t = 0;
    for (std::size_t j = 0; j < m[i].size(); ++j) t += m[i][j] * d[j];
    if (t != target(i)) out.push_back(i);
  }
  return out;
}

void diagnose(const ref::PrintedMatrix& p, const std::vector<long>& dims, const IntMatrix& a,
              std::vector<Discrepancy>& out) {
  if (p.matrix.size() != a.size()) {
    out.push_back({"size", p.name + " is " + std::to_string(p.matrix.size()) +
                               "x" + std::to_string(p.matrix.size()) + ", computed rank is " +
                               std::to_string(a.size())});
    return;
  }
  if (!isSymmetric(p.matrix)) out.push_back({"printed-not-symmetric", p.name + " is not symmetric"});
  const auto rows = badRows(p.matrix, dims, [](std::size_t) { return 0L; });
  if (!rows.empty()) {
    out.push_back({"printed-kernel", p.name + " does not annihilate the dimension vector (rows " +
                                         joinIndices(rows) + ")"});
  }
  if (p.blockB) {
    const std::vector<long> base(dims.begin(), dims.begin() + static_cast<long>(p.blockB->size()));
    const auto r1 = badRows(*p.blockB, base, [&](std::size_t i) { return 3 * base[i]; });
    const auto r2 = badRows(transpose(*p.blockB), base, [&](std::size_t i) { return 3 * base[i]; });
    if (!r1.empty() || !r2.empty()) {
      out.push_back({"printed-block-balance",
                     "printed block B fails dimension balance (rows " + joinIndices(r1) +
                         "; columns " + joinIndices(r2) + ")"});
    }
  }
}

void checkLayout(const ref::PrintedMatrix& p, std::vector<Discrepancy>& out) {
  if (!p.layout) return;
  const auto& l = *p.layout;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (l[i][j] != l[j][i]) continue;
      const bool bSym = isSymmetric(*p.blockB);
      out.push_back({"block-layout",
                     p.name + " block (" + std::to_string(i) + "," + std::to_string(j) +
                         ") and block (" + std::to_string(j) + "," + std::to_string(i) +
                         ") are both " + (l[i][j] == 1 ? "-B" : "-B^T") +
                         "; a symmetric layout needs one of each" +
                         (bSym ? " (harmless here: B is symmetric)" : "")});
    }
  }
}

}  // namespace

std::optional<PaperAudit> auditPrintedCartan(const catalog::GroupSpec& spec,
                                             const AdjacencyMatrix& adj,
                                             const CartanReport& report) {
  const auto printed = ref::printedCartan(spec);
  if (!printed) return std::nullopt;
  const auto& p = *printed;
  PaperAudit audit;
  audit.matrixName = p.name;
  const std::vector<long> dims = p.dims ? *p.dims : adj.dims;

  if (p.knownIssue) audit.discrepancies.push_back({"known-issue", *p.knownIssue});
  if (spec.kind == Kind::G7) {
    const auto list = ref::g7FusionList();
    const auto rows = badRows(list, dims, [&](std::size_t i) { return 3 * dims[i]; });
    for (auto i : rows) {
      long t = 0;
      for (std::size_t j = 0; j < list[i].size(); ++j) t += list[i][j] * dims[j];
      audit.discrepancies.push_back(
          {"printed-fusion-list", "pi (x) chi_" + std::to_string(i + 1) + " as printed has total dimension " +
                                      std::to_string(t) + ", expected " + std::to_string(3 * dims[i])});
    }
  }
  checkLayout(p, audit.discrepancies);

  const auto tryMatch = [&](const IntMatrix& target, const IntMatrix& computed, const char* name) {
    if (target.size() != computed.size()) return false;
    if (auto sigma = quiverIso(computed, adj.dims, target, dims)) {
      audit.matchedAgainst = name;
      audit.permutation = *sigma;
      return true;
    }
    return false;
  };

  bool matched = false;
  if (p.layout) {
    // printed layout first, then every {-B, -B^T} choice per off-diagonal block
    std::vector<ref::BlockLayout> layouts = {*p.layout};
    for (int mask = 0; mask < 64; ++mask) {
      ref::BlockLayout l{};
      int bit = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) l[i][j] = i == j ? 0 : ((mask >> bit++) & 1) + 1;
      }
      if (l != *p.layout) layouts.push_back(l);
    }
    for (const auto& l : layouts) {
      if (tryMatch(ref::assembleBlocks(*p.blockB, l), report.a, "A")) {
        audit.layout = l;
        matched = true;
        break;
      }
    }
    if (matched && audit.layout != p.layout) {
      audit.discrepancies.push_back(
          {"block-layout-replaced", p.name + " matched only after changing the printed block layout"});
    }
  } else {
    matched = tryMatch(p.matrix, report.a, "A") || tryMatch(p.matrix, report.b, "B");
  }

  if (matched) {
    audit.status = AuditStatus::Matched;
    if (p.knownIssue) {
      audit.discrepancies.push_back(
          {"unexpected-match", p.name + " matched although its source is known to be inconsistent"});
    }
    return audit;
  }
  audit.status = p.knownIssue ? AuditStatus::KnownIssue : AuditStatus::Mismatch;
  audit.discrepancies.push_back(
      {"no-permutation", "no irrep permutation maps " + p.name + " onto the computed A or B"});
  diagnose(p, dims, report.a, audit.discrepancies);
  return audit;
}

std::optional<TableMatch> matchTable(const chartab::CharacterTable& table,
                                     const ref::PrintedTable& printed) {
  const std::size_t r = table.size();
  if (printed.rows.size() != r || printed.classOrders.size() != r) return std::nullopt;
  unsigned conductor = table.conductor;
  for (const auto& row : printed.rows) {
    for (const auto& v : row) {
      conductor = static_cast<unsigned>(exactnum::lcm(conductor, v.conductor()));
    }
  }
  const auto rowKey = [&](const std::vector<Cyclotomic>& row, const std::vector<std::size_t>& cols) {
    std::string key;
    for (auto c : cols) key += row[c].promote(conductor).key() + "|";
    return key;
  };
  std::vector<std::size_t> identity(r);
  for (std::size_t j = 0; j < r; ++j) identity[j] = j;
  std::map<std::string, std::vector<std::size_t>> printedRows;
  for (std::size_t i = 0; i < r; ++i) printedRows[rowKey(printed.rows[i], identity)].push_back(i);

  const auto& classes = table.classSet->classes;
  std::vector<std::size_t> colOf(r);
  std::vector<bool> used(r, false);
  std::optional<TableMatch> found;
  std::function<void(std::size_t)> assign = [&](std::size_t j) {
    if (found) return;
    if (j == r) {
      std::map<std::string, std::vector<std::size_t>> computedRows;
      for (std::size_t i = 0; i < r; ++i) computedRows[rowKey(table.values[i], colOf)].push_back(i);
      if (computedRows.size() != printedRows.size()) return;
      TableMatch m;
      m.colOf = colOf;
      m.rowOf.assign(r, 0);
      for (const auto& [key, prows] : printedRows) {
        auto it = computedRows.find(key);
        if (it == computedRows.end() || it->second.size() != prows.size()) return;
        for (std::size_t t = 0; t < prows.size(); ++t) m.rowOf[prows[t]] = it->second[t];
      }
      found = m;
      return;
    }
    for (std::size_t c = 0; c < r; ++c) {
      if (used[c] || classes[c].elementOrder != printed.classOrders[j]) continue;
      used[c] = true;
      colOf[j] = c;
      assign(j + 1);
      used[c] = false;
    }
  };
  assign(0);
  return found;
}

std::optional<TableAudit> auditPrintedTable(const catalog::GroupSpec& spec,
                                            const chartab::CharacterTable& table,
                                            const chartab::ClassFunction& pi) {
  TableAudit audit;
  if (spec.kind == Kind::G8) {
    audit.tableName = "C_G8 table";
    audit.match = matchTable(table, ref::g8Table());
  } else if (spec.kind == Kind::G7) {
    audit.tableName = "C_G7 table";
    audit.match = matchTable(table, ref::g7TableAsPrinted());
    if (!audit.match) {
      std::vector<std::size_t> order5;
      for (std::size_t c = 0; c < table.classSet->size(); ++c) {
        if (table.classSet->classes[c].elementOrder == 5) order5.push_back(c);
      }
      if (order5.size() == 2) {
        const auto printed = ref::g7TableAsPrinted();
        audit.match = matchTable(table, ref::g7Table(pi[order5[0]], pi[order5[1]]));
        audit.discrepancies.push_back(
            {"order5-values", "order-5 entries (" + printed.rows[1][3].toString() + ", " +
                                    printed.rows[1][4].toString() +
                                    ") do not fit; the natural character gives (" +
                                    pi[order5[0]].toString() + ", " + pi[order5[1]].toString() +
                                    ")"});
      }
    }
  } else {
    return std::nullopt;
  }
  audit.matched = audit.match.has_value();
  if (!audit.matched) {
    audit.discrepancies.push_back(
        {"no-permutation", "no row/column permutation maps " + audit.tableName + " onto the computed table"});
  }
  return audit;
}

}  // namespace mckay::cartan
