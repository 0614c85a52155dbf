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

#ifndef MCKAY_REPORT_RENDER_HPP
#define MCKAY_REPORT_RENDER_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mckay/quiver.hpp"
#include "report/verify.hpp"

namespace mckay::report {

using Json = nlohmann::ordered_json;

// {"N": n, "coeffs": [[k, "p/q"], ...]}, zero coefficients omitted.
Json cyclotomicJson(const exactnum::Cyclotomic& c);
exactnum::Cyclotomic cyclotomicFromJson(const Json& j);

Json groupJson(Session& s);
Json infoJson(Session& s);
Json tableJson(Session& s);
Json quiverJson(const cartan::Quiver& q);
// which: 'M', 'B' or 'A'
Json cartanJson(Session& s, char which);
Json verifyJson(const VerifyReport& r);
Json verifyAllJson(const std::vector<VerifyReport>& reports);
Json listJson();

std::string infoText(Session& s);
std::string tableText(Session& s);
std::string cartanText(Session& s, char which);
std::string cartanCsv(Session& s, char which);
std::string verifyText(const VerifyReport& r);
std::string verifyAllText(const std::vector<VerifyReport>& reports);
std::string listText();

// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace mckay::report

#endif
