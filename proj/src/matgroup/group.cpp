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

#include "matgroup/group.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "error.hpp"

namespace mckay::matgroup {

namespace {

struct Pending {
  std::string key;
  SquareMatrix matrix;
  std::size_t parent;
  std::size_t gen;
};

}  // namespace

FiniteMatrixGroup FiniteMatrixGroup::closure(std::span<const SquareMatrix> generators,
                                             std::size_t maxOrder) {
  if (generators.empty()) raise(ErrorCode::InvalidParameter, "no generators");
  const std::size_t dim = generators.front().dim();
  unsigned cond = 1;
  for (const auto& g : generators) {
    if (g.dim() != dim) raise(ErrorCode::DimensionMismatch, "generators of different size");
    cond = static_cast<unsigned>(exactnum::lcm(cond, g.conductor()));
  }
  std::vector<SquareMatrix> gens;
  for (const auto& g : generators) gens.push_back(g.promote(cond));
  for (const auto& g : gens) {
    if (det(g).isZero()) raise(ErrorCode::SingularMatrix, "singular generator");
  }
  if (gens.size() > 0xFFFF) raise(ErrorCode::InvalidParameter, "too many generators");

  FiniteMatrixGroup G;
  G.dim_ = dim;
  G.conductor_ = cond;
  const std::size_t ng = gens.size();
  G.generatorCount_ = ng;

  auto addElement = [&](std::string key, SquareMatrix m, std::size_t parent, std::size_t gen) {
    if (G.elements_.size() >= maxOrder) {
      raise(ErrorCode::OrderBoundExceeded,
            "group order exceeds bound " + std::to_string(maxOrder));
    }
    const std::size_t idx = G.elements_.size();
    G.keyIndex_.emplace(std::move(key), idx);
    G.elements_.push_back(std::move(m));
    G.parent_.push_back(parent);
    G.rightMul_.resize(G.elements_.size() * ng, 0);
    if (idx == 0) {
      G.wordStart_ = {0, 0};
    } else {
      const std::uint32_t b = G.wordStart_[parent];
      const std::uint32_t e = G.wordStart_[parent + 1];
      for (std::uint32_t w = b; w < e; ++w) G.wordData_.push_back(G.wordData_[w]);
      G.wordData_.push_back(static_cast<std::uint16_t>(gen));
      G.wordStart_.push_back(static_cast<std::uint32_t>(G.wordData_.size()));
    }
    return idx;
  };

  SquareMatrix id = SquareMatrix::identity(dim, cond);
  addElement(canonicalKey(id), id, 0, 0);

  std::size_t levelBegin = 0;
  std::size_t levelEnd = 1;
  while (levelBegin < levelEnd) {
    std::vector<Pending> next;
    std::unordered_map<std::string, std::size_t> nextIndex;
    // (element, generator, slot in `next`) whose target is not yet numbered
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> unresolved;
    for (std::size_t i = levelBegin; i < levelEnd; ++i) {
      for (std::size_t s = 0; s < ng; ++s) {
        SquareMatrix prod = matMul(G.elements_[i], gens[s]);
        std::string key = canonicalKey(prod);
        if (auto it = G.keyIndex_.find(key); it != G.keyIndex_.end()) {
          G.rightMul_[i * ng + s] = static_cast<std::uint32_t>(it->second);
          continue;
        }
        auto [it, fresh] = nextIndex.emplace(key, next.size());
        if (fresh) {
          if (G.elements_.size() + next.size() >= maxOrder) {
            raise(ErrorCode::OrderBoundExceeded,
                  "group order exceeds bound " + std::to_string(maxOrder));
          }
          next.push_back(Pending{std::move(key), std::move(prod), i, s});
        }
        unresolved.emplace_back(i, s, it->second);
      }
    }
    std::vector<std::size_t> perm(next.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return next[a].key < next[b].key; });
    std::vector<std::size_t> assigned(next.size());
    for (std::size_t p : perm) {
      Pending& item = next[p];
      assigned[p] = addElement(item.key, std::move(item.matrix), item.parent, item.gen);
    }
    for (const auto& [i, s, slot] : unresolved) {
      G.rightMul_[i * ng + s] = static_cast<std::uint32_t>(assigned[slot]);
    }
    levelBegin = levelEnd;
    levelEnd = G.elements_.size();
  }

  const std::size_t n = G.elements_.size();
  for (const auto& g : gens) G.generatorIndices_.push_back(G.keyIndex_.at(canonicalKey(g)));

  std::vector<std::size_t> genInverse(ng);
  for (std::size_t s = 0; s < ng; ++s) {
    auto idx = G.indexOf(matInv(gens[s]));
    if (!idx) raise(ErrorCode::Internal, "generator inverse missing from closure");
    genInverse[s] = *idx;
  }
  // BFS order guarantees the parent is numbered first.
  G.inverse_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t s = G.wordData_[G.wordStart_[i + 1] - 1];
    G.inverse_[i] = G.multiply(genInverse[s], G.inverse_[G.parent_[i]]);
  }

  G.orders_.assign(n, 1);
  G.exponent_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned long k = 1;
    std::size_t x = i;
    while (x != 0) {
      x = G.multiply(x, i);
      ++k;
    }
    G.orders_[i] = k;
    G.exponent_ = exactnum::lcm(G.exponent_, k);
  }
  return G;
}

std::optional<std::size_t> FiniteMatrixGroup::indexOf(const SquareMatrix& m) const {
  if (m.dim() != dim_ || conductor_ % m.conductor() != 0) return std::nullopt;
  const SquareMatrix& mm = m.conductor() == conductor_ ? m : m.promote(conductor_);
  auto it = keyIndex_.find(canonicalKey(mm));
  if (it == keyIndex_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteMatrixGroup::multiply(std::size_t a, std::size_t b) const {
  const std::uint32_t e = wordStart_.at(b + 1);
  for (std::uint32_t w = wordStart_[b]; w < e; ++w) a = rightMul_[a * generatorCount_ + wordData_[w]];
  return a;
}

std::size_t FiniteMatrixGroup::power(std::size_t a, long k) const {
  const long ord = static_cast<long>(orders_.at(a));
  long e = ((k % ord) + ord) % ord;
  std::size_t result = 0;
  std::size_t base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace mckay::matgroup
