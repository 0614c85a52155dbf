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

#ifndef MCKAY_CATALOG_EXPECTED_HPP
#define MCKAY_CATALOG_EXPECTED_HPP

#include <optional>
#include <string>
#include <vector>

#include "catalog/spec.hpp"
#include "chartab/table.hpp"
#include "matgroup/matrix.hpp"

namespace mckay::catalog {

using IntMatrix = std::vector<std::vector<long>>;

struct ReferenceQuiver {
  IntMatrix m;
  std::vector<long> dims;
  std::string source;
};

// Rule-based reference adjacency. Absent (not available) for G7, G11, G12
// and for SL2 embeddings with alpha != 1.
std::optional<ReferenceQuiver> expectedAdjacency(const GroupSpec& spec);

// Independent construction for H_{m,m} extended by the coordinate
// permutations (cyclic of order 3, or all of S3 with odd permutations
// carrying a sign): irreps by Clifford theory, characters induced from
// stabilisers, multiplicities evaluated modulo a large prime.
ReferenceQuiver monomialAdjacency(long m, bool withReflection);

// Affine ADE diagram of the SL2 subgroup plus the identity (the extra loop
// per node from the trivial summand of the embedding).
ReferenceQuiver affineQuiverWithLoops(SL2Type type, long k);

// rho_{i,j}(g_{k,l}) = zeta_m^{ik} zeta_n^{jl}; irreps ordered by (i, j),
// classes are the elements g_{k,l} in the same order.
chartab::CharacterTable abelianTable(long m, long n);
// (k, l) with g == diag(zeta_m^k, zeta_n^l, *), or absent.
std::optional<std::pair<long, long>> abelianElementIndex(long m, long n,
                                                         const matgroup::SquareMatrix& g);

}  // namespace mckay::catalog

#endif
