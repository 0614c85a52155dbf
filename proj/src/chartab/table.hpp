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

#ifndef MCKAY_CHARTAB_TABLE_HPP
#define MCKAY_CHARTAB_TABLE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "chartab/classes.hpp"
#include "exactnum/cyclotomic.hpp"

namespace mckay::chartab {

using exactnum::Cyclotomic;
using ClassFunction = std::vector<Cyclotomic>;

struct CharacterTable {
  unsigned conductor = 1;
  // values[i][j] = chi_i(C_j)
  std::vector<ClassFunction> values;
  std::vector<long> dims;
  std::shared_ptr<const ConjugacyClassSet> classSet;

  std::size_t size() const noexcept { return values.size(); }
};

// Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order).
std::uint64_t dixonPrime(unsigned long exponent, std::size_t order);

// Exact table via the Dixon-Burnside method. Rows: trivial character first,
// then by (dim, canonical key of the value row). Throws OrthogonalityFailure
// or NoSuitablePrime.
CharacterTable dixonTable(const FiniteMatrixGroup& g,
                          std::shared_ptr<const ConjugacyClassSet> classes = nullptr);

// sum_C |C|/|G| f(C) g(C^-1), at the lcm of the two conductors.
Cyclotomic innerProduct(const ConjugacyClassSet& cs, const ClassFunction& f,
                        const ClassFunction& g);

// Traces of the class representatives, at the group's conductor.
ClassFunction naturalCharacter(const FiniteMatrixGroup& g, const ConjugacyClassSet& cs);

ClassFunction promoteAll(const ClassFunction& f, unsigned conductor);
ClassFunction conjugateAll(const ClassFunction& f);

// m_ij = <pi * chi_i, chi_j> for all j; throws NonIntegralMultiplicity.
std::vector<long> decomposeProduct(const CharacterTable& table, const ClassFunction& pi,
                                   std::size_t i);

// sum_k |C_k| chi_i(C_k) conj(chi_j(C_k)) = |G| delta_ij
bool rowOrthogonal(const CharacterTable& table);
// sum_i chi_i(C_k) conj(chi_i(C_l)) = |C_G(g_k)| delta_kl
bool columnOrthogonal(const CharacterTable& table);

}  // namespace mckay::chartab

#endif
