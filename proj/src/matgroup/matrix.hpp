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

#ifndef MCKAY_MATGROUP_MATRIX_HPP
#define MCKAY_MATGROUP_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "exactnum/cyclotomic.hpp"

namespace mckay::matgroup {

using exactnum::Cyclotomic;

// Dense n x n matrix over Q(zeta_N); every entry carries the same conductor.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t dim, unsigned conductor);
  // Row-major entries; all must already be at `conductor`.
  SquareMatrix(std::size_t dim, unsigned conductor, std::vector<Cyclotomic> entries);

  static SquareMatrix identity(std::size_t dim, unsigned conductor);
  static SquareMatrix diagonal(std::initializer_list<Cyclotomic> diag);
  // Entries given as rows; the conductor is the lcm of the entries'.
  static SquareMatrix fromRows(const std::vector<std::vector<Cyclotomic>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  unsigned conductor() const noexcept { return conductor_; }

  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const std::vector<Cyclotomic>& entries() const noexcept { return entries_; }

  SquareMatrix promote(unsigned conductor) const;
  SquareMatrix scaled(const Cyclotomic& s) const;
  SquareMatrix transpose() const;
  Cyclotomic trace() const;

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);

 private:
  std::size_t dim_ = 0;
  unsigned conductor_ = 1;
  std::vector<Cyclotomic> entries_;
};

SquareMatrix matMul(const SquareMatrix& a, const SquareMatrix& b);
// Gauss-Jordan over the field.
SquareMatrix matInv(const SquareMatrix& a);
Cyclotomic det(const SquareMatrix& a);

// Row-major concatenation of the entry keys, prefixed by dim and conductor.
std::string canonicalKey(const SquareMatrix& a);

}  // namespace mckay::matgroup

#endif
