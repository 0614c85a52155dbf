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

#include "catalog/spec.hpp"

#include <array>
#include <charconv>

#include "error.hpp"

namespace mckay::catalog {

namespace {

constexpr long kMaxParameter = 1000;

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  raise(ErrorCode::InvalidSpec, "'" + std::string(text) + "': " + why);
}

long parsePositive(std::string_view whole, std::string_view field) {
  long value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    bad(whole, "expected an integer, got '" + std::string(field) + "'");
  }
  if (value < 1) bad(whole, "parameters must be >= 1");
  if (value > kMaxParameter) bad(whole, "parameter too large");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

GroupSpec parseSpec(std::string_view text) {
  static constexpr std::array<std::pair<std::string_view, Kind>, 8> kExceptional{{
      {"G5", Kind::G5},
      {"G6", Kind::G6},
      {"G7", Kind::G7},
      {"G8", Kind::G8},
      {"G9", Kind::G9},
      {"G10", Kind::G10},
      {"G11", Kind::G11},
      {"G12", Kind::G12},
  }};
  for (const auto& [name, kind] : kExceptional) {
    if (text == name) {
      GroupSpec spec;
      spec.kind = kind;
      return spec;
    }
  }

  auto parts = split(text, ':');
  if (parts.size() < 2) bad(text, "unknown group");
  GroupSpec spec;
  if (parts[0] == "Hmn") {
    if (parts.size() != 2) bad(text, "expected Hmn:m,n");
    auto mn = split(parts[1], ',');
    if (mn.size() != 2) bad(text, "expected Hmn:m,n");
    spec.kind = Kind::Hmn;
    spec.m = parsePositive(text, mn[0]);
    spec.n = parsePositive(text, mn[1]);
    return spec;
  }
  if (parts[0] == "Gm3" || parts[0] == "Gm6") {
    if (parts.size() != 2) bad(text, "expected " + std::string(parts[0]) + ":m");
    spec.kind = parts[0] == "Gm3" ? Kind::Gm3 : Kind::Gm6;
    spec.m = parsePositive(text, parts[1]);
    return spec;
  }
  if (parts[0] != "SL2") bad(text, "unknown group family '" + std::string(parts[0]) + "'");

  spec.kind = Kind::SL2;
  std::size_t next = 2;
  if (parts[1] == "cyclic" || parts[1] == "binD") {
    spec.sl2 = parts[1] == "cyclic" ? SL2Type::Cyclic : SL2Type::BinaryDihedral;
    if (parts.size() < 3) bad(text, "missing k");
    spec.k = parsePositive(text, parts[2]);
    next = 3;
  } else if (parts[1] == "2T") {
    spec.sl2 = SL2Type::Tetrahedral;
  } else if (parts[1] == "2O") {
    spec.sl2 = SL2Type::Octahedral;
  } else if (parts[1] == "2I") {
    spec.sl2 = SL2Type::Icosahedral;
  } else {
    bad(text, "unknown SL2 subtype '" + std::string(parts[1]) + "'");
  }
  if (parts.size() > next + 1) bad(text, "trailing fields");
  if (parts.size() == next + 1) {
    std::string_view opt = parts[next];
    constexpr std::string_view prefix = "alpha=";
    if (opt.substr(0, prefix.size()) != prefix) bad(text, "expected alpha=k");
    spec.alpha = parsePositive(text, opt.substr(prefix.size()));
  }
  return spec;
}

std::string formatSpec(const GroupSpec& spec) {
  switch (spec.kind) {
    case Kind::Hmn: return "Hmn:" + std::to_string(spec.m) + "," + std::to_string(spec.n);
    case Kind::Gm3: return "Gm3:" + std::to_string(spec.m);
    case Kind::Gm6: return "Gm6:" + std::to_string(spec.m);
    case Kind::SL2: {
      std::string out = "SL2:";
      switch (spec.sl2) {
        case SL2Type::Cyclic: out += "cyclic:" + std::to_string(spec.k); break;
        case SL2Type::BinaryDihedral: out += "binD:" + std::to_string(spec.k); break;
        case SL2Type::Tetrahedral: out += "2T"; break;
        case SL2Type::Octahedral: out += "2O"; break;
        case SL2Type::Icosahedral: out += "2I"; break;
      }
      if (spec.alpha != 1) out += ":alpha=" + std::to_string(spec.alpha);
      return out;
    }
    case Kind::G5: return "G5";
    case Kind::G6: return "G6";
    case Kind::G7: return "G7";
    case Kind::G8: return "G8";
    case Kind::G9: return "G9";
    case Kind::G10: return "G10";
    case Kind::G11: return "G11";
    case Kind::G12: return "G12";
  }
  return "?";
}

int typeNumber(const GroupSpec& spec) {
  switch (spec.kind) {
    case Kind::Hmn: return 1;
    case Kind::Gm3: return 2;
    case Kind::Gm6: return 3;
    case Kind::SL2: return 4;
    case Kind::G5: return 5;
    case Kind::G6: return 6;
    case Kind::G7: return 7;
    case Kind::G8: return 8;
    case Kind::G9: return 9;
    case Kind::G10: return 10;
    case Kind::G11: return 11;
    case Kind::G12: return 12;
  }
  return 0;
}

std::optional<std::string> degenerateReason(const GroupSpec& spec) {
  switch (spec.kind) {
    case Kind::Hmn:
      if (spec.m == 1 && spec.n == 1) return "H_{1,1} is the trivial group";
      break;
    case Kind::Gm3:
      if (spec.m == 1) return "H_{1,1} is trivial, so the group is Z_3 generated by T alone";
      break;
    case Kind::Gm6:
      if (spec.m == 1) return "H_{1,1} is trivial, so the group is S_3 generated by T and R alone";
      break;
    case Kind::SL2:
      if (spec.sl2 == SL2Type::Cyclic && spec.k == 1 && spec.alpha == 1) {
        return "cyclic of order 1 with alpha = 1 is the trivial group";
      }
      break;
    default: break;
  }
  return std::nullopt;
}

bool isDegenerate(const GroupSpec& spec) { return degenerateReason(spec).has_value(); }

std::vector<SpecKindInfo> specKinds() {
  return {
      {"Hmn:m,n", 1, "abelian diagonal group Z_m x Z_n"},
      {"Gm3:m", 2, "H_{m,m} extended by the cyclic permutation T"},
      {"Gm6:m", 3, "H_{m,m} extended by T and the signed transposition R"},
      {"SL2:cyclic:k[:alpha=a]", 4, "cyclic group of order k embedded from SL2"},
      {"SL2:binD:k[:alpha=a]", 4, "binary dihedral group of order 4k embedded from SL2"},
      {"SL2:2T[:alpha=a]", 4, "binary tetrahedral group (order 24) embedded from SL2"},
      {"SL2:2O[:alpha=a]", 4, "binary octahedral group (order 48) embedded from SL2"},
      {"SL2:2I[:alpha=a]", 4, "binary icosahedral group (order 120) embedded from SL2"},
      {"G5", 5, "order 108"},
      {"G6", 6, "order 216"},
      {"G7", 7, "A5, order 60"},
      {"G8", 8, "Klein simple group, order 168"},
      {"G9", 9, "G7 x <W>, order 180"},
      {"G10", 10, "G8 x <W>, order 504"},
      {"G11", 11, "order 648"},
      {"G12", 12, "Valentiner group, order 1080"},
  };
}

std::vector<GroupSpec> sweep(long maxM) {
  std::vector<GroupSpec> out;
  for (long m = 1; m <= maxM; ++m) {
    for (long n = 1; n <= maxM; ++n) out.push_back(GroupSpec{Kind::Hmn, m, n});
  }
  for (long m = 1; m <= maxM; ++m) out.push_back(GroupSpec{Kind::Gm3, m});
  for (long m = 1; m <= maxM; ++m) out.push_back(GroupSpec{Kind::Gm6, m});
  for (long k = 1; k <= 8; ++k) {
    GroupSpec s{Kind::SL2};
    s.sl2 = SL2Type::Cyclic;
    s.k = k;
    out.push_back(s);
  }
  for (long k = 1; k <= 6; ++k) {
    GroupSpec s{Kind::SL2};
    s.sl2 = SL2Type::BinaryDihedral;
    s.k = k;
    out.push_back(s);
  }
  for (SL2Type t : {SL2Type::Tetrahedral, SL2Type::Octahedral, SL2Type::Icosahedral}) {
    GroupSpec s{Kind::SL2};
    s.sl2 = t;
    out.push_back(s);
  }
  for (Kind kind : {Kind::G5, Kind::G6, Kind::G7, Kind::G8, Kind::G9, Kind::G10, Kind::G11,
                    Kind::G12}) {
    GroupSpec s;
    s.kind = kind;
    out.push_back(s);
  }
  return out;
}

}  // namespace mckay::catalog
