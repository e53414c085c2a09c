#ifndef QUOTCOH_CLI_APP_HPP
#define QUOTCOH_CLI_APP_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <quotcoh/curve.hpp>
#include <quotcoh/graded_dim.hpp>

#include "config.hpp"
#include "json_io.hpp"

namespace quotcoh::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_policy = 3;

enum class OutputFormat { json, table, latex };

OutputFormat parse_format(const std::string &name);

struct RunOptions {
    OutputFormat format = OutputFormat::json;
    std::optional<CohMode> policy;
    bool timestamps = false;
};

// Everything a run produces. `output` is only filled on success; `error`
// names the query index when a query fails.
struct RunOutcome {
    int exit_code = exit_ok;
    std::string output;
    std::string error;
};

RunOutcome run_document(const json &doc, const RunOptions &options);
RunOutcome run_file(const std::filesystem::path &config_path, const RunOptions &options);

// Result object of one query (json format), exposed for tests.
json evaluate_query(const Config &config, const Query &query, std::size_t index);

// The graded power implementations under test; swapped out by mutation tests.
struct PowerImpl {
    std::function<GradedDim(const GradedDim &, std::int64_t)> sym = sym_power;
    std::function<GradedDim(const GradedDim &, std::int64_t)> ext = ext_power;
};

struct VerifyOptions {
    std::int64_t max_dim = 5;
    std::int64_t max_k = 5;
    std::uint64_t seed = 1;
    std::int64_t random_samples = 500;
    bool oracle_only = false;
};

struct VerifyReport {
    std::size_t oracle_checks = 0;
    std::size_t identity_checks = 0;
    std::size_t consistency_checks = 0;
    std::size_t consistency_skipped = 0;
    // First failing case, serialized.
    std::optional<json> counterexample;

    bool passed() const
    {
        return !counterexample.has_value();
    }
    std::size_t total_checks() const
    {
        return oracle_checks + identity_checks + consistency_checks;
    }
};

// Exhaustive oracle equivalence over every graded dimension with total
// dimension <= max_dim and degrees in [-2, 3], for 0 <= k <= max_k; then
// seeded random Euler-characteristic and duality identities; then the
// formula consistency sweep (unless oracle_only). Stops at the first
// counterexample. Throws ConfigError when the bounds exceed the oracle guard.
VerifyReport run_verify(const VerifyOptions &options, const PowerImpl &impl = {});
std::string format_verify_report(const VerifyReport &report);

// Emits dimensions, Poincare polynomials and tautological ranks for a
// curve of the given genus and E of the given rank and degree.
RunOutcome geometry_info(std::int64_t genus, std::int64_t rank, std::int64_t degree, std::int64_t d,
                         const RunOptions &options);

} // namespace quotcoh::cli

#endif
