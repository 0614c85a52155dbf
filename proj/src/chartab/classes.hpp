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

#ifndef MCKAY_CHARTAB_CLASSES_HPP
#define MCKAY_CHARTAB_CLASSES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "matgroup/group.hpp"

namespace mckay::chartab {

using matgroup::FiniteMatrixGroup;

struct ConjugacyClass {
  std::size_t representative = 0;  // smallest member index
  std::vector<std::size_t> members;
  std::size_t size = 0;
  std::size_t centralizerOrder = 0;
  unsigned long elementOrder = 1;
};

struct ConjugacyClassSet {
  std::size_t groupOrder = 0;
  unsigned long exponent = 1;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> classOf;       // element index -> class index
  std::vector<std::size_t> inverseClass;  // class -> class of inverses
  // prime p | exponent -> (class -> class of p-th powers)
  std::map<unsigned long, std::vector<std::size_t>> powerMap;

  std::size_t size() const noexcept { return classes.size(); }
};

// Orbits under conjugation, ordered by (size, smallest member index).
ConjugacyClassSet conjugacyClasses(const FiniteMatrixGroup& g);

// a(i, j, k) = #{(x, y) in C_i x C_j : x y = z} for a fixed z in C_k.
class ClassConstants {
 public:
  ClassConstants() = default;
  explicit ClassConstants(std::size_t r) : r_(r), data_(r * r * r, 0) {}
  std::size_t rank() const noexcept { return r_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * r_ + j) * r_ + k];
  }
  std::uint64_t& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * r_ + j) * r_ + k];
  }

 private:
  std::size_t r_ = 0;
  std::vector<std::uint64_t> data_;
};

ClassConstants classConstants(const FiniteMatrixGroup& g, const ConjugacyClassSet& cs);

std::vector<unsigned long> primeDivisors(unsigned long n);

}  // namespace mckay::chartab

#endif
