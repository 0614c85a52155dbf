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

#ifndef MCKAY_CATALOG_REFERENCE_HPP
#define MCKAY_CATALOG_REFERENCE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "catalog/spec.hpp"
#include "exactnum/cyclotomic.hpp"

// Literal reference data: printed Cartan-type matrices, character tables and
// fusion lists, transcribed as given (including their known defects).
namespace mckay::catalog::reference {

using IntMatrix = std::vector<std::vector<long>>;

// 3x3 block pattern: 0 -> 6E, 1 -> -B, 2 -> -B^T.
using BlockLayout = std::array<std::array<int, 3>, 3>;

struct PrintedMatrix {
  std::string name;
  // Full matrix (for block-pattern entries, built from `layout`).
  IntMatrix matrix;
  // Irrep dims in printed order when the source fixes them.
  std::optional<std::vector<long>> dims;
  // Block-pattern data (G9, G10).
  std::optional<IntMatrix> blockB;
  std::optional<BlockLayout> layout;
  // Set when the printed source is known not to describe this group.
  std::optional<std::string> knownIssue;
};

std::optional<PrintedMatrix> printedCartan(const GroupSpec& spec);

IntMatrix g9BlockB();
IntMatrix g10BlockB();
IntMatrix assembleBlocks(const IntMatrix& b, const BlockLayout& layout);

struct PrintedTable {
  std::string name;
  std::vector<unsigned long> classOrders;  // column headers (element orders)
  std::vector<std::vector<exactnum::Cyclotomic>> rows;
};

// Rows chi_1..chi_5 with the given order-5 entries of chi_2 (chi_3 swaps them).
PrintedTable g7Table(const exactnum::Cyclotomic& nuPlus, const exactnum::Cyclotomic& nuMinus);
// the stored values nu_+- = (-1 +- sqrt5)/2
PrintedTable g7TableAsPrinted();
// alpha_+- = (-1 +- sqrt-7)/2.
PrintedTable g8Table();

// G7 fusion list over the G7 table rows (chi_1..chi_5, dims 1,3,3,4,5).
IntMatrix g7FusionList();

}  // namespace mckay::catalog::reference

#endif
