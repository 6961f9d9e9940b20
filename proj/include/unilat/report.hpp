#pragma once

// Report assembly shared by the C API and the CLI. A report is a JSON object
//   {command, inputs, results, version, timing}
// where results maps a check name to {status, data}. Status is "pass",
// "fail" or "skipped"; every exact number is a decimal string.

#include <cstdint>
#include <string>

#include "json.hpp"

namespace unilat::report {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr int kDefaultProbes = 5;

/// formulation: "default" (moment rows at rank 72, zonal rows elsewhere),
/// "moment", "zonal" or "both" (default verdict plus a cross-check of the two).
nlohmann::json verify(int rank, const std::string& formulation);

/// terms <= 0 selects the default m + 10.
nlohmann::json theta(int rank, int terms);

nlohmann::json system(int rank, const std::string& formulation);

/// checks: comma-separated subset of theta, kissing, design:<t>, profile;
/// empty selects all of them with the lattice's design strength.
nlohmann::json oracle(const std::string& lattice, const std::string& checks, std::uint64_t seed,
                      int probes);

/// True iff no result has status "fail".
bool passed(const nlohmann::json& report);

/// Human-readable rendering of the same report.
std::string render_text(const nlohmann::json& report);

/// Copy without the timing field, for byte-level comparisons.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace unilat::report
