#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace chensieve::cli {

/// Parsed command-line configuration. Validation happens in run(), so
/// constructing a config never throws.
struct RunConfig {
    std::string command; // constants|count|decompose|verify-lemma|discrepancy|classify|condition31
    double x = 0;
    uint64_t a = 1;
    uint64_t q = 1;
    std::string output_format = "json"; // json|csv|text
    double tolerance = 1e-8;
    std::optional<std::string> output_path;
    unsigned shards = 1;
    uint64_t max_n = 1'000'000'000ull;
    double chen_exponent = 0.125;
    bool exclude_small_primes = false;

    // discrepancy
    double D = 0;
    std::string weight = "lambda-full";

    // condition31
    double u = 0;
    double z = 0;
    double epsilon = 0;
    uint64_t prime_count = 0; // size of the excluded set Q (first k primes)
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

/// Executes a command and writes the report to `out` (or config.output_path).
/// Returns the process exit code: 0 ok, 2 validation error, 3 resource
/// error, 1 anything else. Error text goes to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace chensieve::cli
