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

#ifndef MCKAY_REPORT_SESSION_HPP
#define MCKAY_REPORT_SESSION_HPP

#include <memory>
#include <optional>

#include "catalog/spec.hpp"
#include "chartab/table.hpp"
#include "mckay/cartan.hpp"

namespace mckay::report {

// One group and everything derived from it, computed on first use.
class Session {
 public:
  Session(catalog::GroupSpec spec, std::size_t maxOrder);

  const catalog::GroupSpec& spec() const noexcept { return spec_; }
  const matgroup::FiniteMatrixGroup& group();
  std::shared_ptr<const chartab::ConjugacyClassSet> classes();
  const chartab::CharacterTable& table();
  const chartab::ClassFunction& natural();
  const cartan::AdjacencyMatrix& adjacency();
  const cartan::CartanReport& cartan();

 private:
  catalog::GroupSpec spec_;
  std::size_t maxOrder_;
  std::optional<matgroup::FiniteMatrixGroup> group_;
  std::shared_ptr<const chartab::ConjugacyClassSet> classes_;
  std::optional<chartab::CharacterTable> table_;
  std::optional<chartab::ClassFunction> natural_;
  std::optional<cartan::AdjacencyMatrix> adjacency_;
  std::optional<cartan::CartanReport> cartan_;
};

}  // namespace mckay::report

#endif
