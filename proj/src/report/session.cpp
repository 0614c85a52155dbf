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

#include "report/session.hpp"

#include "catalog/generators.hpp"

namespace mckay::report {

Session::Session(catalog::GroupSpec spec, std::size_t maxOrder)
    : spec_(std::move(spec)), maxOrder_(maxOrder) {}

const matgroup::FiniteMatrixGroup& Session::group() {
  if (!group_) group_ = catalog::buildGroup(spec_, maxOrder_);
  return *group_;
}

std::shared_ptr<const chartab::ConjugacyClassSet> Session::classes() {
  if (!classes_) {
    classes_ = std::make_shared<const chartab::ConjugacyClassSet>(chartab::conjugacyClasses(group()));
  }
  return classes_;
}

const chartab::CharacterTable& Session::table() {
  if (!table_) table_ = chartab::dixonTable(group(), classes());
  return *table_;
}

const chartab::ClassFunction& Session::natural() {
  if (!natural_) natural_ = chartab::naturalCharacter(group(), *classes());
  return *natural_;
}

const cartan::AdjacencyMatrix& Session::adjacency() {
  if (!adjacency_) adjacency_ = cartan::adjacency(table(), natural());
  return *adjacency_;
}

const cartan::CartanReport& Session::cartan() {
  if (!cartan_) cartan_ = cartan::cartanReport(adjacency(), table(), natural());
  return *cartan_;
}

}  // namespace mckay::report
