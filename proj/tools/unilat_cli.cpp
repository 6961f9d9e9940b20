// unilat: command-line front end over the C API.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage error,
// 3 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "unilat/unilat.h"

namespace {

struct ReportDeleter {
  void operator()(unilat_report* r) const { unilat_report_free(r); }
};
using ReportPtr = std::unique_ptr<unilat_report, ReportDeleter>;

int emit(unilat_status status, unilat_report* raw, const std::string& format, bool timing,
         const std::string& output) {
  ReportPtr report(raw);
  if (status != UNILAT_OK) {
    std::cerr << "unilat: " << unilat_last_error() << '\n';
    return status == UNILAT_ERR_ARGUMENT || status == UNILAT_ERR_NULL ? 2 : 3;
  }
  const char* text = format == "text" ? unilat_report_text(report.get())
                                      : unilat_report_json(report.get(), 2, timing ? 1 : 0);
  if (output.empty()) {
    std::cout << text;
    if (format != "text") std::cout << '\n';
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "unilat: cannot write " << output << '\n';
      return 3;
    }
    out << text << (format != "text" ? "\n" : "");
  }
  if (!unilat_report_passed(report.get())) {
    std::cerr << "unilat: one or more checks failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of configuration theorems for extremal even unimodular lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(unilat_version()));

  std::string format = "json";
  std::uint64_t seed = UNILAT_DEFAULT_SEED;
  bool no_timing = false;
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized probes")->capture_default_str();
  app.add_flag("--no-timing", no_timing, "Omit the timing field from JSON output");
  app.add_option("-o,--output", output, "Write the report to a file instead of stdout");

  int rank = 0;
  std::string formulation = "default";
  int terms = 0;
  std::string lattice;
  std::string checks;
  int probes = UNILAT_DEFAULT_PROBES;

  auto* verify = app.add_subcommand("verify", "Build, solve and analyze the configuration system");
  verify->add_option("--rank", rank, "32, 48, 56, 72 or 96")->required();
  verify->add_option("--formulation", formulation, "default, moment, zonal or both")
      ->check(CLI::IsMember({"default", "moment", "zonal", "both"}));

  auto* theta = app.add_subcommand("theta", "Extremal theta series and kissing number");
  theta->add_option("--rank", rank, "Rank, a multiple of 8")->required();
  theta->add_option("--terms", terms, "Number of q-terms (default m + 10)");

  auto* system = app.add_subcommand("system", "Dump the extended matrix of the configuration system");
  system->add_option("--rank", rank, "32, 48, 56, 72 or 96")->required();
  system->add_option("--formulation", formulation, "default, moment or zonal")
      ->check(CLI::IsMember({"default", "moment", "zonal"}));

  auto* oracle = app.add_subcommand("oracle", "Brute-force checks on E8 or the Leech lattice");
  oracle->add_option("--lattice", lattice, "e8 or leech")->required();
  oracle->add_option("--checks", checks, "Comma list of theta, kissing, design:<t>, profile");
  oracle->add_option("--probes", probes, "Random probes per design check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  unilat_report* report = nullptr;
  unilat_status status = UNILAT_ERR_ARGUMENT;
  if (*verify) {
    status = unilat_verify(rank, formulation.c_str(), &report);
  } else if (*theta) {
    status = unilat_theta(rank, terms, &report);
  } else if (*system) {
    status = unilat_system(rank, formulation.c_str(), &report);
  } else if (*oracle) {
    status = unilat_oracle(lattice.c_str(), checks.c_str(), seed, probes, &report);
  }
  return emit(status, report, format, !no_timing, output);
}
