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

#ifndef MCKAY_CATALOG_GENERATORS_HPP
#define MCKAY_CATALOG_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "catalog/spec.hpp"
#include "matgroup/group.hpp"

namespace mckay::catalog {

using matgroup::FiniteMatrixGroup;
using matgroup::SquareMatrix;

// Named 3x3 matrices, each at its own minimal conductor.
namespace named {
SquareMatrix W();
SquareMatrix T();
SquareMatrix R();
SquareMatrix S();
SquareMatrix V();
SquareMatrix K();
SquareMatrix E2();
SquareMatrix E3();
SquareMatrix X7();
SquareMatrix U();
SquareMatrix M();
SquareMatrix E4();
}  // namespace named

// 3x3 generators at one common minimal conductor. Throws InvalidParameter.
std::vector<SquareMatrix> generators(const GroupSpec& spec);

struct Profile {
  std::optional<std::size_t> expectedOrder;
  std::optional<std::size_t> expectedClassCount;
  // sorted ascending
  std::optional<std::vector<long>> expectedDimMultiset;
  std::vector<std::string> notes;
};

Profile expectedProfile(const GroupSpec& spec);

// Closes the generators and checks the result against expectedOrder; a
// mismatch is a load error (InvalidParameter).
FiniteMatrixGroup buildGroup(const GroupSpec& spec,
                             std::size_t maxOrder = matgroup::kDefaultMaxOrder);

}  // namespace mckay::catalog

#endif
