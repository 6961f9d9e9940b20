#include "unilat/unilat.h"

#include <exception>
#include <string>

#include "unilat/errors.hpp"
#include "unilat/report.hpp"

struct unilat_report {
  nlohmann::json value;
  std::string json_cache;
  std::string text_cache;
};

namespace {

thread_local std::string g_last_error;

template <class Build>
unilat_status wrap(unilat_report** out, Build&& build) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return UNILAT_ERR_NULL;
  }
  *out = nullptr;
  try {
    auto* r = new unilat_report{build(), {}, {}};
    *out = r;
    g_last_error.clear();
    return UNILAT_OK;
  } catch (const unilat::ArgumentError& e) {
    g_last_error = e.what();
    return UNILAT_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UNILAT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return UNILAT_ERR_INTERNAL;
  }
}

std::string or_default(const char* s, const char* fallback) {
  return (s == nullptr || *s == '\0') ? fallback : s;
}

}  // namespace

extern "C" {

const char* unilat_version(void) { return unilat::report::kVersion; }

const char* unilat_last_error(void) { return g_last_error.c_str(); }

unilat_status unilat_verify(int rank, const char* formulation, unilat_report** out) {
  return wrap(out, [&] { return unilat::report::verify(rank, or_default(formulation, "default")); });
}

unilat_status unilat_theta(int rank, int terms, unilat_report** out) {
  return wrap(out, [&] { return unilat::report::theta(rank, terms); });
}

unilat_status unilat_system(int rank, const char* formulation, unilat_report** out) {
  return wrap(out, [&] { return unilat::report::system(rank, or_default(formulation, "default")); });
}

unilat_status unilat_oracle(const char* lattice, const char* checks, uint64_t seed, int probes,
                            unilat_report** out) {
  if (lattice == nullptr) {
    g_last_error = "lattice name is NULL";
    if (out != nullptr) *out = nullptr;
    return UNILAT_ERR_NULL;
  }
  return wrap(out, [&] {
    return unilat::report::oracle(lattice, or_default(checks, ""), seed, probes);
  });
}

const char* unilat_report_json(unilat_report* report, int indent, int include_timing) {
  if (report == nullptr) return "";
  const nlohmann::json& v =
      include_timing ? report->value : unilat::report::without_timing(report->value);
  report->json_cache = v.dump(indent < 0 ? -1 : indent);
  return report->json_cache.c_str();
}

const char* unilat_report_text(unilat_report* report) {
  if (report == nullptr) return "";
  report->text_cache = unilat::report::render_text(report->value);
  return report->text_cache.c_str();
}

int unilat_report_passed(const unilat_report* report) {
  return report != nullptr && unilat::report::passed(report->value) ? 1 : 0;
}

void unilat_report_free(unilat_report* report) { delete report; }

}  // extern "C"
