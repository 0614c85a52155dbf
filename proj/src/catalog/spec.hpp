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

#ifndef MCKAY_CATALOG_SPEC_HPP
#define MCKAY_CATALOG_SPEC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mckay::catalog {

enum class Kind { Hmn, Gm3, Gm6, SL2, G5, G6, G7, G8, G9, G10, G11, G12 };

enum class SL2Type { Cyclic, BinaryDihedral, Tetrahedral, Octahedral, Icosahedral };

struct GroupSpec {
  Kind kind = Kind::G5;
  long m = 0;  // Hmn, Gm3, Gm6
  long n = 0;  // Hmn
  SL2Type sl2 = SL2Type::Cyclic;
  long k = 0;      // cyclic / binary dihedral parameter
  long alpha = 1;  // order of the root of unity alpha in the SL2 embedding

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Grammar: "Hmn:m,n" | "Gm3:m" | "Gm6:m" | "SL2:cyclic:k" | "SL2:binD:k" |
// "SL2:2T" | "SL2:2O" | "SL2:2I" (SL2 forms take an optional ":alpha=k") |
// "G5" .. "G12". Throws InvalidSpec.
GroupSpec parseSpec(std::string_view text);
std::string formatSpec(const GroupSpec& spec);

// Type number 1..12 of the classification.
int typeNumber(const GroupSpec& spec);
// Set when the parameters collapse the family: the diagonal part is trivial,
// leaving the trivial group or just the permutation part.
std::optional<std::string> degenerateReason(const GroupSpec& spec);
bool isDegenerate(const GroupSpec& spec);

struct SpecKindInfo {
  std::string grammar;
  int type;
  std::string description;
};
std::vector<SpecKindInfo> specKinds();

// The catalog sweep used by `verify --all`.
std::vector<GroupSpec> sweep(long maxM);

}  // namespace mckay::catalog

#endif
