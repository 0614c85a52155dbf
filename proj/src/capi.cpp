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

#include "mckay/mckay.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "error.hpp"
#include "catalog/spec.hpp"
#include "report/render.hpp"

using mckay::ErrorCode;
using mckay::report::Session;

struct mckay_group {
  Session session;
};

namespace {

thread_local std::string lastError;

mckay_status statusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return MCKAY_E_INVALID_SPEC;
    case ErrorCode::InvalidParameter:
    case ErrorCode::NotAvailable:
    case ErrorCode::DimensionMismatch: return MCKAY_E_INVALID_ARGUMENT;
    case ErrorCode::OrderBoundExceeded: return MCKAY_E_ORDER_BOUND;
    case ErrorCode::ConductorMismatch:
    case ErrorCode::DivisionByZero:
    case ErrorCode::NotAMultiple:
    case ErrorCode::UnsupportedRadicand:
    case ErrorCode::SingularMatrix: return MCKAY_E_ARITHMETIC;
    case ErrorCode::OrthogonalityFailure:
    case ErrorCode::NoSuitablePrime:
    case ErrorCode::NonIntegralMultiplicity:
    case ErrorCode::NotSymmetric: return MCKAY_E_COMPUTATION;
    case ErrorCode::Internal: return MCKAY_E_INTERNAL;
  }
  return MCKAY_E_INTERNAL;
}

template <typename F>
mckay_status guarded(F&& body) {
  try {
    lastError.clear();
    body();
    return MCKAY_OK;
  } catch (const mckay::Error& e) {
    lastError = e.what();
    return statusFor(e.code());
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return MCKAY_E_INTERNAL;
  } catch (const std::exception& e) {
    lastError = e.what();
    return MCKAY_E_INTERNAL;
  }
}

mckay_status badArgument(const char* what) {
  lastError = what;
  return MCKAY_E_INVALID_ARGUMENT;
}

char* copyOut(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::size_t bound(uint64_t maxOrder) {
  return maxOrder == 0 ? mckay::matgroup::kDefaultMaxOrder : static_cast<std::size_t>(maxOrder);
}

void unsupported(mckay_format format) {
  mckay::raise(ErrorCode::InvalidParameter,
               "format " + std::to_string(static_cast<int>(format)) + " is not available here");
}

char matrixLetter(mckay_matrix which) {
  switch (which) {
    case MCKAY_MATRIX_M: return 'M';
    case MCKAY_MATRIX_B: return 'B';
    case MCKAY_MATRIX_A: return 'A';
  }
  mckay::raise(ErrorCode::InvalidParameter, "unknown matrix selector");
}

}  // namespace

extern "C" {

mckay_status mckay_group_open(const char* spec, uint64_t max_order, mckay_group** out) {
  if (spec == nullptr || out == nullptr) return badArgument("null argument");
  *out = nullptr;
  return guarded([&] {
    auto g = std::make_unique<mckay_group>(mckay_group{Session(mckay::catalog::parseSpec(spec), bound(max_order))});
    g->session.group();
    *out = g.release();
  });
}

void mckay_group_close(mckay_group* group) { delete group; }

mckay_status mckay_group_order(mckay_group* group, uint64_t* out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] { *out = group->session.group().order(); });
}

mckay_status mckay_group_exponent(mckay_group* group, uint64_t* out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] { *out = group->session.group().exponent(); });
}

mckay_status mckay_group_conductor(mckay_group* group, uint32_t* out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] { *out = group->session.group().conductor(); });
}

mckay_status mckay_group_class_count(mckay_group* group, uint64_t* out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] { *out = group->session.classes()->size(); });
}

mckay_status mckay_render_info(mckay_group* group, mckay_format format, char** out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] {
    namespace r = mckay::report;
    if (format == MCKAY_FORMAT_TEXT) *out = copyOut(r::infoText(group->session));
    else if (format == MCKAY_FORMAT_JSON) *out = copyOut(r::dump(r::infoJson(group->session)));
    else unsupported(format);
  });
}

mckay_status mckay_render_chartab(mckay_group* group, mckay_format format, char** out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] {
    namespace r = mckay::report;
    if (format == MCKAY_FORMAT_TEXT) *out = copyOut(r::tableText(group->session));
    else if (format == MCKAY_FORMAT_JSON) *out = copyOut(r::dump(r::tableJson(group->session)));
    else unsupported(format);
  });
}

mckay_status mckay_render_quiver(mckay_group* group, mckay_format format, char** out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] {
    namespace r = mckay::report;
    const auto q = mckay::cartan::makeQuiver(group->session.adjacency());
    if (format == MCKAY_FORMAT_DOT) *out = copyOut(mckay::cartan::exportDOT(q));
    else if (format == MCKAY_FORMAT_JSON) *out = copyOut(r::dump(r::quiverJson(q)));
    else unsupported(format);
  });
}

mckay_status mckay_render_cartan(mckay_group* group, mckay_matrix which, mckay_format format,
                                 char** out) {
  if (group == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] {
    namespace r = mckay::report;
    const char letter = matrixLetter(which);
    if (format == MCKAY_FORMAT_TEXT) *out = copyOut(r::cartanText(group->session, letter));
    else if (format == MCKAY_FORMAT_JSON) *out = copyOut(r::dump(r::cartanJson(group->session, letter)));
    else if (format == MCKAY_FORMAT_CSV) *out = copyOut(r::cartanCsv(group->session, letter));
    else unsupported(format);
  });
}

mckay_status mckay_verify(const char* spec, uint64_t max_order, mckay_format format, char** out,
                          int* passed) {
  if (spec == nullptr || out == nullptr) return badArgument("null argument");
  return guarded([&] {
    namespace r = mckay::report;
    const auto rep = r::verify(mckay::catalog::parseSpec(spec), bound(max_order));
    if (format == MCKAY_FORMAT_TEXT) *out = copyOut(r::verifyText(rep));
    else if (format == MCKAY_FORMAT_JSON) *out = copyOut(r::dump(r::verifyJson(rep)));
    else unsupported(format);
    if (passed != nullptr) *passed = rep.passed() ? 1 : 0;
  });
}

mckay_status mckay_verify_all(int max_m, mckay_format format, char** out, int* passed) {
  if (out == nullptr) return badArgument("null argument");
  if (max_m < 1) return badArgument("max_m must be >= 1");
  return guarded([&] {
    namespace r = mckay::report;
    std::vector<r::VerifyReport> reports;
    for (const auto& spec : mckay::catalog::sweep(max_m)) {
      try {
        reports.push_back(r::verify(spec, mckay::matgroup::kDefaultMaxOrder));
      } catch (const mckay::Error& e) {
        // bound exceeded inside the sweep: record it rather than abort the run
        r::VerifyReport failed;
        failed.groupSpec = mckay::catalog::formatSpec(spec);
        for (const auto& name : r::checkNames()) failed.checks.push_back({name, r::CheckStatus::Fail, e.what()});
        reports.push_back(failed);
      }
    }
    bool ok = true;
    for (const auto& rep : reports) ok = ok && rep.passed();
    if (format == MCKAY_FORMAT_TEXT) *out = copyOut(r::verifyAllText(reports));
    else if (format == MCKAY_FORMAT_JSON) *out = copyOut(r::dump(r::verifyAllJson(reports)));
    else unsupported(format);
    if (passed != nullptr) *passed = ok ? 1 : 0;
  });
}

mckay_status mckay_list_specs(mckay_format format, char** out) {
  if (out == nullptr) return badArgument("null argument");
  return guarded([&] {
    namespace r = mckay::report;
    if (format == MCKAY_FORMAT_TEXT) *out = copyOut(r::listText());
    else if (format == MCKAY_FORMAT_JSON) *out = copyOut(r::dump(r::listJson()));
    else unsupported(format);
  });
}

void mckay_string_free(char* s) { std::free(s); }

const char* mckay_last_error(void) { return lastError.c_str(); }

const char* mckay_status_name(mckay_status status) {
  switch (status) {
    case MCKAY_OK: return "ok";
    case MCKAY_E_INVALID_SPEC: return "invalid-spec";
    case MCKAY_E_INVALID_ARGUMENT: return "invalid-argument";
    case MCKAY_E_ORDER_BOUND: return "order-bound-exceeded";
    case MCKAY_E_ARITHMETIC: return "arithmetic";
    case MCKAY_E_COMPUTATION: return "computation";
    case MCKAY_E_INTERNAL: return "internal";
  }
  return "unknown";
}

}  // extern "C"
