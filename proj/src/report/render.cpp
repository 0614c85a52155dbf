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

#include "report/render.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace mckay::report {

using exactnum::Cyclotomic;
using exactnum::Rational;

Json cyclotomicJson(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k < c.degree(); ++k) {
    const Rational q = c.coeff(k);
    if (q != 0) coeffs.push_back(Json::array({k, exactnum::toString(q)}));
  }
  return Json{{"N", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomicFromJson(const Json& j) {
  const unsigned n = j.at("N").get<unsigned>();
  if (n == 0) raise(ErrorCode::InvalidParameter, "conductor must be positive");
  Cyclotomic out = Cyclotomic::zero(n);
  for (const auto& term : j.at("coeffs")) {
    Rational q(term.at(1).get<std::string>());
    q.canonicalize();
    out += Cyclotomic::root(term.at(0).get<long>(), n) * q;
  }
  return out;
}

namespace {

Json intMatrixJson(const cartan::IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

const cartan::IntMatrix& pick(Session& s, char which) {
  switch (which) {
    case 'M': return s.adjacency().m;
    case 'B': return s.cartan().b;
    case 'A': return s.cartan().a;
    default: raise(ErrorCode::InvalidParameter, std::string("unknown matrix '") + which + "'");
  }
}

std::string joinLongs(const std::vector<long>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string dimMultisetText(const std::vector<long>& sorted) {
  std::string out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (!out.empty()) out += " ";
    out += std::to_string(sorted[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<long> sortedDims(Session& s) {
  auto d = s.table().dims;
  std::sort(d.begin(), d.end());
  return d;
}

std::string matrixText(const cartan::IntMatrix& m) {
  std::size_t width = 1;
  for (const auto& row : m) {
    for (long v : row) width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto cell = std::to_string(row[j]);
      out << (j == 0 ? "" : " ") << std::string(width - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

Json auditJson(const cartan::PaperAudit& a) {
  Json j{{"matrix", a.matrixName}, {"status", cartan::auditStatusName(a.status)}};
  j["matchedAgainst"] = a.matchedAgainst ? Json(*a.matchedAgainst) : Json(nullptr);
  j["permutation"] = a.permutation;
  if (a.layout) {
    Json rows = Json::array();
    for (const auto& r : *a.layout) rows.push_back(r);
    j["blockLayout"] = rows;
  }
  return j;
}

}  // namespace

Json groupJson(Session& s) {
  const auto& g = s.group();
  return Json{{"spec", catalog::formatSpec(s.spec())},
              {"order", g.order()},
              {"exponent", g.exponent()},
              {"conductor", g.conductor()}};
}

Json infoJson(Session& s) {
  Json j = groupJson(s);
  j["type"] = catalog::typeNumber(s.spec());
  j["classCount"] = s.table().size();
  j["dimMultiset"] = sortedDims(s);
  if (auto why = catalog::degenerateReason(s.spec())) j["warning"] = "degenerate group: " + *why;
  return j;
}

Json tableJson(Session& s) {
  const auto& t = s.table();
  Json classes = Json::array();
  for (const auto& c : t.classSet->classes) {
    classes.push_back(
        Json{{"size", c.size}, {"elementOrder", c.elementOrder}, {"centralizer", c.centralizerOrder}});
  }
  Json irreps = Json::array();
  for (long d : t.dims) irreps.push_back(Json{{"dim", d}});
  Json values = Json::array();
  for (const auto& row : t.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(cyclotomicJson(v));
    values.push_back(r);
  }
  return Json{{"group", groupJson(s)}, {"classes", classes}, {"irreps", irreps}, {"values", values}};
}

Json quiverJson(const cartan::Quiver& q) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < q.dims.size(); ++i) nodes.push_back(Json{{"id", q.labels[i]}, {"dim", q.dims[i]}});
  Json edges = Json::array();
  for (const auto& e : q.edges) {
    edges.push_back(Json{{"from", q.labels[e.from]}, {"to", q.labels[e.to]}, {"mult", e.mult}});
  }
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json cartanJson(Session& s, char which) {
  const auto& cr = s.cartan();
  Json poly = Json::array();
  for (const auto& c : cr.charPolyA) poly.push_back(c.get_str());
  Json eig = Json::array();
  for (std::size_t k = 0; k < cr.eigenChecks.size(); ++k) {
    eig.push_back(Json{{"class", k},
                       {"preCartan", cr.eigenChecks[k].preCartan},
                       {"adjacency", cr.eigenChecks[k].adjacency}});
  }
  Json report{{"dims", s.adjacency().dims},
              {"charPolyA", poly},
              {"symmetric", cr.symmetric},
              {"psd", cr.psd},
              {"deltaInKernelOfA", cr.deltaInKernelOfA},
              {"deltaInKernelOfB", cr.deltaInKernelOfB},
              {"deltaInKernelOfBt", cr.deltaInKernelOfBt},
              {"eigenChecks", eig},
              {"dualTransposeOk", cr.dualTransposeOk}};
  const auto audit = cartan::auditPrintedCartan(s.spec(), s.adjacency(), cr);
  report["paperMatch"] = audit ? auditJson(*audit) : Json(nullptr);
  return Json{{"group", groupJson(s)},
              {"print", std::string(1, which)},
              {"matrix", intMatrixJson(pick(s, which))},
              {"report", report}};
}

Json verifyJson(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"status", checkStatusName(c.status)}, {"detail", c.detail}});
  }
  Json disc = Json::array();
  for (const auto& d : r.discrepancies) disc.push_back(Json{{"kind", d.kind}, {"detail", d.detail}});
  Json j{{"groupSpec", r.groupSpec},
         {"order", r.order},
         {"classCount", r.classCount},
         {"dimMultiset", r.dimMultiset},
         {"passed", r.passed()},
         {"checks", checks},
         {"discrepancies", disc},
         {"warnings", r.warnings}};
  j["paperMatch"] = r.paperAudit ? auditJson(*r.paperAudit) : Json(nullptr);
  j["elapsedMs"] = r.elapsedMs;
  return j;
}

Json verifyAllJson(const std::vector<VerifyReport>& reports) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    list.push_back(verifyJson(r));
    passed += r.passed() ? 1 : 0;
  }
  return Json{{"reports", list},
              {"summary", Json{{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}}};
}

Json listJson() {
  Json out = Json::array();
  for (const auto& k : catalog::specKinds()) {
    out.push_back(Json{{"grammar", k.grammar}, {"type", k.type}, {"description", k.description}});
  }
  return out;
}

std::string infoText(Session& s) {
  const auto& g = s.group();
  std::ostringstream out;
  out << "group       " << catalog::formatSpec(s.spec()) << "\n"
      << "type        " << catalog::typeNumber(s.spec()) << "\n"
      << "order       " << g.order() << "\n"
      << "exponent    " << g.exponent() << "\n"
      << "conductor   " << g.conductor() << "\n"
      << "classes     " << s.table().size() << "\n"
      << "dims        " << dimMultisetText(sortedDims(s)) << "\n";
  if (auto why = catalog::degenerateReason(s.spec())) out << "warning     degenerate group: " << *why << "\n";
  return out.str();
}

std::string tableText(Session& s) {
  const auto& t = s.table();
  std::ostringstream out;
  out << "character table of " << catalog::formatSpec(s.spec()) << " (conductor " << t.conductor
      << ", z = zeta_" << t.conductor << ")\n";
  out << "classes (size/order):";
  for (const auto& c : t.classSet->classes) out << " " << c.size << "/" << c.elementOrder;
  out << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "chi_" << i << " [dim " << t.dims[i] << "]:";
    for (const auto& v : t.values[i]) {
      if (auto q = v.tryRational()) {
        out << " " << exactnum::toString(*q);
      } else {
        std::string text = v.toString();
        // drop the " (z = zeta_N)" suffix; the header names z
        if (auto cut = text.find(" (z = "); cut != std::string::npos) text.erase(cut);
        out << " [" << text << "]";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string cartanText(Session& s, char which) {
  const auto& cr = s.cartan();
  std::ostringstream out;
  out << which << " for " << catalog::formatSpec(s.spec()) << " (dims " << joinLongs(s.adjacency().dims, " ")
      << ")\n"
      << matrixText(pick(s, which));
  std::string poly;
  for (std::size_t k = cr.charPolyA.size(); k-- > 0;) {
    if (cr.charPolyA[k] == 0) continue;
    if (!poly.empty()) poly += cr.charPolyA[k] < 0 ? " - " : " + ";
    else if (cr.charPolyA[k] < 0) poly += "-";
    const exactnum::Integer mag = abs(cr.charPolyA[k]);
    if (mag != 1 || k == 0) poly += mag.get_str();
    if (k > 0) poly += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  bool eig = true;
  for (const auto& e : cr.eigenChecks) eig = eig && e.ok();
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "det(xI - A)  " << poly << "\n"
      << "symmetric    " << yes(cr.symmetric) << "\n"
      << "psd          " << yes(cr.psd) << "\n"
      << "A.delta = 0  " << yes(cr.deltaInKernelOfA) << "\n"
      << "B.delta = 0  " << yes(cr.deltaInKernelOfB && cr.deltaInKernelOfBt) << "\n"
      << "eigenvectors " << yes(eig) << "\n"
      << "dual = M^T   " << yes(cr.dualTransposeOk) << "\n";
  if (auto a = cartan::auditPrintedCartan(s.spec(), s.adjacency(), cr)) {
    out << "printed      " << a->matrixName << ": " << cartan::auditStatusName(a->status);
    if (a->matchedAgainst) out << " (as " << *a->matchedAgainst << ")";
    out << "\n";
  }
  return out.str();
}

std::string cartanCsv(Session& s, char which) {
  std::string out;
  for (const auto& row : pick(s, which)) out += joinLongs(row, ",") + "\n";
  return out;
}

std::string verifyText(const VerifyReport& r) {
  std::ostringstream out;
  out << r.groupSpec << ": " << (r.passed() ? "PASS" : "FAIL") << " (order " << r.order << ", "
      << r.classCount << " classes, dims " << dimMultisetText(r.dimMultiset) << ")\n";
  for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
  for (const auto& c : r.checks) {
    out << "  " << checkStatusName(c.status) << "  " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& d : r.discrepancies) out << "  note [" << d.kind << "] " << d.detail << "\n";
  return out.str();
}

std::string verifyAllText(const std::vector<VerifyReport>& reports) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    out += verifyText(r);
    passed += r.passed() ? 1 : 0;
  }
  out += std::to_string(passed) + "/" + std::to_string(reports.size()) + " groups passed\n";
  return out;
}

std::string listText() {
  std::ostringstream out;
  for (const auto& k : catalog::specKinds()) {
    out << "type " << k.type << (k.type < 10 ? "   " : "  ") << k.grammar
        << std::string(k.grammar.size() < 26 ? 26 - k.grammar.size() : 1, ' ') << k.description << "\n";
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mckay::report
