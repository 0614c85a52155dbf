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

#ifndef MCKAY_MCKAY_QUIVER_HPP
#define MCKAY_MCKAY_QUIVER_HPP

#include <string>
#include <vector>

#include "mckay/cartan.hpp"

namespace mckay::cartan {

struct QuiverEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  long mult = 0;
};

struct Quiver {
  std::vector<std::string> labels;
  std::vector<long> dims;
  std::vector<QuiverEdge> edges;  // row-major, one entry per nonzero m_ij

  // For i < j: min(m_ij, m_ji) arrow pairs drawn as undirected edges.
  struct Collapsed {
    std::size_t a = 0;
    std::size_t b = 0;
    long undirected = 0;
    long forward = 0;   // a -> b beyond the pairs
    long backward = 0;  // b -> a beyond the pairs
  };
  std::vector<Collapsed> collapsed() const;
  IntMatrix adjacency() const;
};

Quiver makeQuiver(const AdjacencyMatrix& adj);

// Graphviz digraph; node label "r<i> (<dim>)", undirected pairs with
// dir=none, multiplicity > 1 as an edge label, loops kept.
std::string exportDOT(const Quiver& q);

}  // namespace mckay::cartan

#endif
