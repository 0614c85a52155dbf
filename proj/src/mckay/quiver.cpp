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

#include "mckay/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace mckay::cartan {

Quiver makeQuiver(const AdjacencyMatrix& adj) {
  Quiver q;
  q.dims = adj.dims;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    q.labels.push_back("r" + std::to_string(i));
    for (std::size_t j = 0; j < adj.size(); ++j) {
      if (adj.m[i][j] != 0) q.edges.push_back(QuiverEdge{i, j, adj.m[i][j]});
    }
  }
  return q;
}

IntMatrix Quiver::adjacency() const {
  IntMatrix m(dims.size(), std::vector<long>(dims.size(), 0));
  for (const auto& e : edges) m[e.from][e.to] += e.mult;
  return m;
}

std::vector<Quiver::Collapsed> Quiver::collapsed() const {
  const IntMatrix m = adjacency();
  std::vector<Collapsed> out;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (m[a][b] == 0 && m[b][a] == 0) continue;
      const long both = std::min(m[a][b], m[b][a]);
      out.push_back(Collapsed{a, b, both, m[a][b] - both, m[b][a] - both});
    }
  }
  return out;
}

namespace {

std::string attrs(bool undirected, long mult) {
  std::string out;
  if (undirected) out = "dir=none";
  if (mult > 1) {
    if (!out.empty()) out += ", ";
    out += "label=\"" + std::to_string(mult) + "\"";
  }
  return out.empty() ? "" : " [" + out + "]";
}

}  // namespace

std::string exportDOT(const Quiver& q) {
  std::ostringstream out;
  out << "digraph mckay {\n";
  for (std::size_t i = 0; i < q.dims.size(); ++i) {
    out << "  r" << i << " [label=\"r" << i << " (" << q.dims[i] << ")\"];\n";
  }
  const IntMatrix m = q.adjacency();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i][i] != 0) out << "  r" << i << " -> r" << i << attrs(false, m[i][i]) << ";\n";
  }
  for (const auto& c : q.collapsed()) {
    if (c.undirected > 0) out << "  r" << c.a << " -> r" << c.b << attrs(true, c.undirected) << ";\n";
    if (c.forward > 0) out << "  r" << c.a << " -> r" << c.b << attrs(false, c.forward) << ";\n";
    if (c.backward > 0) out << "  r" << c.b << " -> r" << c.a << attrs(false, c.backward) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mckay::cartan
