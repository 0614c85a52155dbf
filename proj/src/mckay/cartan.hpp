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

#ifndef MCKAY_MCKAY_CARTAN_HPP
#define MCKAY_MCKAY_CARTAN_HPP

#include <optional>
#include <vector>

#include "chartab/table.hpp"

namespace mckay::cartan {

using exactnum::Integer;
using IntMatrix = std::vector<std::vector<long>>;

struct AdjacencyMatrix {
  IntMatrix m;
  std::vector<long> dims;
  long n = 3;

  std::size_t size() const noexcept { return m.size(); }
};

// m_ij = <pi chi_i, chi_j>. Throws NonIntegralMultiplicity.
AdjacencyMatrix adjacency(const chartab::CharacterTable& table, const chartab::ClassFunction& pi,
                          long n = 3);

// sum_j m_ij d_j = n d_i and sum_i d_i m_ij = n d_j
bool dimensionBalanced(const AdjacencyMatrix& adj);

IntMatrix preCartan(const AdjacencyMatrix& adj);  // n I - M
IntMatrix genCartan(const IntMatrix& b);          // B + B^T
IntMatrix transpose(const IntMatrix& a);
bool isSymmetric(const IntMatrix& a);

// Coefficients of det(xI - A), index k holding the coefficient of x^k.
// Fraction-free Faddeev-LeVerrier. Throws NotSymmetric.
std::vector<Integer> charPolyExact(const IntMatrix& a);
// With det(xI - A) = sum_k (-1)^k e_k x^(r-k), PSD iff every e_k >= 0.
bool psdCheck(const IntMatrix& a);

// A delta == 0
bool kernelDelta(const IntMatrix& a, const std::vector<long>& delta);

struct EigenCheck {
  bool preCartan = false;  // B p_k == (n - pi(C_k)) p_k
  bool adjacency = false;  // M p_k == pi(C_k) p_k
  bool ok() const noexcept { return preCartan && adjacency; }
};
// One entry per class, p_k the k-th column of the table.
std::vector<EigenCheck> eigenvectorProp(const AdjacencyMatrix& adj,
                                        const chartab::CharacterTable& table,
                                        const chartab::ClassFunction& pi);

// Adjacency of the conjugate character equals the transpose.
bool dualTransposeCheck(const chartab::CharacterTable& table, const chartab::ClassFunction& pi,
                        long n = 3);

// sigma with dims2[sigma i] == dims1[i] and m2[sigma i][sigma j] == m1[i][j],
// by colour refinement plus individualisation backtracking.
std::optional<std::vector<std::size_t>> quiverIso(const IntMatrix& m1, const std::vector<long>& dims1,
                                                  const IntMatrix& m2,
                                                  const std::vector<long>& dims2);

struct CartanReport {
  IntMatrix b;
  IntMatrix a;
  std::vector<Integer> charPolyA;
  bool symmetric = false;
  bool psd = false;
  bool deltaInKernelOfA = false;
  bool deltaInKernelOfB = false;
  bool deltaInKernelOfBt = false;
  std::vector<EigenCheck> eigenChecks;
  bool dualTransposeOk = false;
};

CartanReport cartanReport(const AdjacencyMatrix& adj, const chartab::CharacterTable& table,
                          const chartab::ClassFunction& pi);

}  // namespace mckay::cartan

#endif
