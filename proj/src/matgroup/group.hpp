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

#ifndef MCKAY_MATGROUP_GROUP_HPP
#define MCKAY_MATGROUP_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matgroup/matrix.hpp"

namespace mckay::matgroup {

inline constexpr std::size_t kDefaultMaxOrder = 20000;

// A finite matrix group held as an ordered element list. Element 0 is the
// identity; every other element i is stored as parent(i) * generator, which
// lets products of arbitrary elements be evaluated by index without touching
// the matrices.
class FiniteMatrixGroup {
 public:
  // Breadth-first closure under right multiplication by the generators. Each
  // BFS level is sorted by canonical key before it is committed, so element
  // indices depend only on the generator list.
  static FiniteMatrixGroup closure(std::span<const SquareMatrix> generators,
                                   std::size_t maxOrder = kDefaultMaxOrder);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  unsigned conductor() const noexcept { return conductor_; }
  unsigned long exponent() const noexcept { return exponent_; }

  const SquareMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<SquareMatrix>& elements() const noexcept { return elements_; }
  std::span<const std::size_t> generatorIndices() const noexcept { return generatorIndices_; }
  std::optional<std::size_t> indexOf(const SquareMatrix& m) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  std::size_t power(std::size_t a, long k) const;
  unsigned long elementOrder(std::size_t a) const { return orders_.at(a); }

 private:
  FiniteMatrixGroup() = default;

  std::size_t dim_ = 0;
  unsigned conductor_ = 1;
  unsigned long exponent_ = 1;
  std::vector<SquareMatrix> elements_;
  std::unordered_map<std::string, std::size_t> keyIndex_;
  std::vector<std::size_t> generatorIndices_;
  std::size_t generatorCount_ = 0;
  std::vector<std::size_t> parent_;
  // rightMul_[i * generatorCount_ + s] == index of element(i) * generator(s)
  std::vector<std::uint32_t> rightMul_;
  // word of element i: generator positions wordData_[wordStart_[i] .. wordStart_[i+1])
  std::vector<std::uint32_t> wordStart_;
  std::vector<std::uint16_t> wordData_;
  std::vector<std::size_t> inverse_;
  std::vector<unsigned long> orders_;
};

}  // namespace mckay::matgroup

#endif
