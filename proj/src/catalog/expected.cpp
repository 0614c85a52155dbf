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

#include "catalog/expected.hpp"

#include <array>
#include <numeric>

#include "catalog/reference.hpp"
#include "error.hpp"

namespace mckay::catalog {

namespace {

IntMatrix zeros(std::size_t r) { return IntMatrix(r, std::vector<long>(r, 0)); }

// List form: rows[i] holds the (1-based) targets of pi (x) rho_{i+1}, repeats allowed.
IntMatrix fromTargets(std::size_t r, const std::vector<std::vector<int>>& rows) {
  IntMatrix m = zeros(r);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int t : rows[i]) m[i][static_cast<std::size_t>(t - 1)] += 1;
  }
  return m;
}

ReferenceQuiver torus(long m, long n) {
  const auto idx = [&](long i, long j) {
    i = ((i % m) + m) % m;
    j = ((j % n) + n) % n;
    return static_cast<std::size_t>(i * n + j);
  };
  ReferenceQuiver q;
  q.m = zeros(static_cast<std::size_t>(m * n));
  q.dims.assign(static_cast<std::size_t>(m * n), 1);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) {
      const std::size_t from = idx(i, j);
      q.m[from][idx(i + 1, j)] += 1;
      q.m[from][idx(i, j + 1)] += 1;
      q.m[from][idx(i - 1, j - 1)] += 1;
    }
  }
  q.source = "torus rule on Z_m x Z_n";
  return q;
}

ReferenceQuiver g5List() {
  ReferenceQuiver q;
  q.m = fromTargets(14, {{5},
                         {7},
                         {9},
                         {11},
                         {6, 8, 10},
                         {1, 13, 14},
                         {6, 8, 12},
                         {2, 13, 14},
                         {6, 10, 12},
                         {3, 13, 14},
                         {8, 10, 12},
                         {4, 13, 14},
                         {5, 7, 9, 11},
                         {5, 7, 9, 11}});
  q.dims = {1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4};
  q.source = "G5 fusion list";
  return q;
}

ReferenceQuiver g6List() {
  // rho^(i,j) -> i*2+j, rho^(2+i,2+j) -> 4+..., rho^(4+i,4+j) -> 8+...,
  // rho^13..16 -> 12..15
  ReferenceQuiver q;
  q.m = zeros(16);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::size_t a = static_cast<std::size_t>(2 * i + j);
      const std::size_t flip = static_cast<std::size_t>(2 * (1 - i) + (1 - j));
      q.m[a][4 + a] += 1;
      q.m[4 + a][8 + flip] += 1;
      q.m[4 + a][13] += 1;
      q.m[8 + a][flip] += 1;
      q.m[8 + a][15] += 1;
    }
  }
  q.m[12][14] += 1;
  q.m[13][15] += 2;
  q.m[13][12] += 1;
  for (std::size_t t = 8; t < 12; ++t) q.m[14][t] += 1;
  q.m[14][13] += 1;
  for (std::size_t t = 4; t < 8; ++t) q.m[15][t] += 1;
  q.m[15][14] += 2;
  q.dims = {1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3, 2, 6, 6, 8};
  q.source = "G6 fusion list";
  return q;
}

ReferenceQuiver g8List() {
  ReferenceQuiver q;
  q.m = {{0, 0, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 1}, {0, 1, 1, 1, 0, 0},
         {0, 1, 1, 1, 1, 0}, {0, 1, 0, 0, 0, 1}, {1, 0, 0, 1, 0, 0}};
  q.dims = {1, 6, 7, 8, 3, 3};
  q.source = "G8 fusion list";
  return q;
}

// pi(g, W^k) = zeta_3^k pi(g): irreps rho_i (x) lambda_k, and pi moves
// lambda_k to lambda_{k+1}.
ReferenceQuiver withCyclicShift(const ReferenceQuiver& base) {
  const std::size_t r = base.m.size();
  ReferenceQuiver q;
  q.m = zeros(3 * r);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      q.dims.push_back(base.dims[i]);
      for (std::size_t j = 0; j < r; ++j) q.m[k * r + i][((k + 1) % 3) * r + j] = base.m[i][j];
    }
  }
  q.source = base.source + " tensored with the cyclic shift of <W>";
  return q;
}

void link(IntMatrix& m, std::size_t a, std::size_t b) {
  m[a][b] += 1;
  m[b][a] += 1;
}

}  // namespace

ReferenceQuiver affineQuiverWithLoops(SL2Type type, long k) {
  ReferenceQuiver q;
  switch (type) {
    case SL2Type::Cyclic: {
      const auto r = static_cast<std::size_t>(k);
      q.m = zeros(r);
      for (std::size_t i = 0; i < r; ++i) link(q.m, i, (i + 1) % r);
      q.dims.assign(r, 1);
      q.source = "affine A_" + std::to_string(k - 1);
      break;
    }
    case SL2Type::BinaryDihedral: {
      if (k == 1) {
        // order 4: cyclic, affine A_3
        q.m = zeros(4);
        for (std::size_t i = 0; i < 4; ++i) link(q.m, i, (i + 1) % 4);
        q.dims.assign(4, 1);
        q.source = "affine A_3";
        break;
      }
      // four ends 0..3, chain 4..k+2
      const auto chain = static_cast<std::size_t>(k - 1);
      q.m = zeros(4 + chain);
      for (std::size_t c = 0; c + 1 < chain; ++c) link(q.m, 4 + c, 5 + c);
      link(q.m, 0, 4);
      link(q.m, 1, 4);
      link(q.m, 2, 4 + chain - 1);
      link(q.m, 3, 4 + chain - 1);
      q.dims = {1, 1, 1, 1};
      q.dims.insert(q.dims.end(), chain, 2);
      q.source = "affine D_" + std::to_string(k + 2);
      break;
    }
    case SL2Type::Tetrahedral: {
      // centre 0 (3); arms 1-2, 3-4, 5-6 with dims 2-1
      q.m = zeros(7);
      for (std::size_t arm = 0; arm < 3; ++arm) {
        link(q.m, 0, 1 + 2 * arm);
        link(q.m, 1 + 2 * arm, 2 + 2 * arm);
      }
      q.dims = {3, 2, 1, 2, 1, 2, 1};
      q.source = "affine E_6";
      break;
    }
    case SL2Type::Octahedral: {
      // chain 1-2-3-4-3-2-1 with a 2 on the 4
      q.m = zeros(8);
      for (std::size_t i = 0; i + 1 < 7; ++i) link(q.m, i, i + 1);
      link(q.m, 3, 7);
      q.dims = {1, 2, 3, 4, 3, 2, 1, 2};
      q.source = "affine E_7";
      break;
    }
    case SL2Type::Icosahedral: {
      // chain 1-2-3-4-5-6-4-2 with a 3 on the 6
      q.m = zeros(9);
      for (std::size_t i = 0; i + 1 < 8; ++i) link(q.m, i, i + 1);
      link(q.m, 5, 8);
      q.dims = {1, 2, 3, 4, 5, 6, 4, 2, 3};
      q.source = "affine E_8";
      break;
    }
  }
  for (std::size_t i = 0; i < q.m.size(); ++i) q.m[i][i] += 1;
  q.source += " with a loop at every node";
  return q;
}

std::optional<ReferenceQuiver> expectedAdjacency(const GroupSpec& spec) {
  switch (spec.kind) {
    case Kind::Hmn: return torus(spec.m, spec.n);
    case Kind::Gm3: return monomialAdjacency(spec.m, false);
    case Kind::Gm6: return monomialAdjacency(spec.m, true);
    case Kind::SL2:
      if (spec.alpha != 1) return std::nullopt;
      return affineQuiverWithLoops(spec.sl2, spec.k);
    case Kind::G5: return g5List();
    case Kind::G6: return g6List();
    case Kind::G8: return g8List();
    case Kind::G9: {
      ReferenceQuiver base;
      base.m = reference::g9BlockB();
      base.dims = {1, 3, 3, 4, 5};
      base.source = "G9 block B";
      return withCyclicShift(base);
    }
    case Kind::G10: return withCyclicShift(g8List());
    case Kind::G7:
    case Kind::G11:
    case Kind::G12: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace mckay::catalog
