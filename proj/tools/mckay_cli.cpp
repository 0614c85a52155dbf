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

#include <CLI11.hpp>
#include <cstdio>
#include <map>
#include <string>

#include "mckay/mckay.h"

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kBound = 3 };

int exitFor(mckay_status s) {
  switch (s) {
    case MCKAY_OK: return kOk;
    case MCKAY_E_INVALID_SPEC:
    case MCKAY_E_INVALID_ARGUMENT: return kUsage;
    case MCKAY_E_ORDER_BOUND: return kBound;
    default: return kFail;
  }
}

int report(mckay_status s) {
  if (s != MCKAY_OK) std::fprintf(stderr, "mckay: %s\n", mckay_last_error());
  return exitFor(s);
}

// Prints and frees `text` on success.
int emit(mckay_status s, char* text) {
  if (s == MCKAY_OK) {
    std::fputs(text, stdout);
    mckay_string_free(text);
  }
  return report(s);
}

const std::map<std::string, mckay_format> kFormats = {
    {"text", MCKAY_FORMAT_TEXT}, {"json", MCKAY_FORMAT_JSON}, {"csv", MCKAY_FORMAT_CSV}, {"dot", MCKAY_FORMAT_DOT}};

struct GroupArgs {
  std::string spec;
  std::uint64_t maxOrder = 0;
  std::string format;
};

void addGroupOptions(CLI::App* cmd, GroupArgs& a, std::vector<std::string> formats, std::string def) {
  cmd->add_option("-g,--group", a.spec, "group spec, see `mckay list`")->required();
  cmd->add_option("--max-order", a.maxOrder, "closure bound (0 = library default)");
  a.format = std::move(def);
  cmd->add_option("-f,--format", a.format, "output format")->check(CLI::IsMember(formats));
}

template <typename F>
int withGroup(const GroupArgs& a, F&& body) {
  mckay_group* g = nullptr;
  const mckay_status s = mckay_group_open(a.spec.c_str(), a.maxOrder, &g);
  if (s != MCKAY_OK) return report(s);
  const int rc = body(g);
  mckay_group_close(g);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"McKay quivers and generalized Cartan matrices of finite subgroups of SL3(C)", "mckay"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "spec kinds with their grammar and type numbers");
  std::string listFormat = "text";
  list->add_option("-f,--format", listFormat)->check(CLI::IsMember({"text", "json"}));

  GroupArgs info, chartab, quiver, cartan;
  addGroupOptions(app.add_subcommand("info", "order, exponent, conductor, classes, dims"), info,
                  {"text", "json"}, "text");
  addGroupOptions(app.add_subcommand("chartab", "character table"), chartab, {"text", "json"}, "text");
  addGroupOptions(app.add_subcommand("quiver", "McKay quiver"), quiver, {"dot", "json"}, "dot");
  auto* cartanCmd = app.add_subcommand("cartan", "adjacency, pre-Cartan or generalized Cartan matrix");
  addGroupOptions(cartanCmd, cartan, {"text", "json", "csv"}, "text");
  std::string print = "A";
  cartanCmd->add_option("-p,--print", print, "matrix to print")->check(CLI::IsMember({"M", "B", "A"}));

  auto* verify = app.add_subcommand("verify", "run every check; nonzero exit on failure");
  std::string verifySpec;
  bool verifyAll = false;
  int maxM = 6;
  std::uint64_t verifyBound = 0;
  std::string verifyFormat = "text";
  auto* groupOpt = verify->add_option("-g,--group", verifySpec, "group spec");
  auto* allOpt = verify->add_flag("--all", verifyAll, "the whole catalog sweep");
  groupOpt->excludes(allOpt);
  verify->add_option("--max-m", maxM, "largest parameter for parametric families")->check(CLI::PositiveNumber);
  verify->add_option("--max-order", verifyBound, "closure bound (0 = library default)");
  verify->add_option("-f,--format", verifyFormat)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (list->parsed()) {
    char* out = nullptr;
    const mckay_status s = mckay_list_specs(kFormats.at(listFormat), &out);
    return emit(s, out);
  }
  if (verify->parsed()) {
    if (!verifyAll && verifySpec.empty()) {
      std::fprintf(stderr, "mckay: verify needs --group or --all\n");
      return kUsage;
    }
    char* out = nullptr;
    int passed = 0;
    const mckay_status s = verifyAll
                               ? mckay_verify_all(maxM, kFormats.at(verifyFormat), &out, &passed)
                               : mckay_verify(verifySpec.c_str(), verifyBound, kFormats.at(verifyFormat), &out, &passed);
    const int rc = emit(s, out);
    if (rc != kOk) return rc;
    return passed ? kOk : kFail;
  }

  const auto render = [](const GroupArgs& a, auto fn) {
    return withGroup(a, [&](mckay_group* g) {
      char* out = nullptr;
      const mckay_status s = fn(g, kFormats.at(a.format), &out);
      return emit(s, out);
    });
  };
  for (auto* sub : app.get_subcommands()) {
    const std::string name = sub->get_name();
    if (name == "info") return render(info, mckay_render_info);
    if (name == "chartab") return render(chartab, mckay_render_chartab);
    if (name == "quiver") return render(quiver, mckay_render_quiver);
    if (name == "cartan") {
      const mckay_matrix which = print == "M" ? MCKAY_MATRIX_M : print == "B" ? MCKAY_MATRIX_B : MCKAY_MATRIX_A;
      return render(cartan, [which](mckay_group* g, mckay_format f, char** out) {
        return mckay_render_cartan(g, which, f, out);
      });
    }
  }
  return kUsage;
}
