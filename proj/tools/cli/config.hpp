#ifndef QUOTCOH_CLI_CONFIG_HPP
#define QUOTCOH_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <quotcoh/curve.hpp>
#include <quotcoh/sweep.hpp>

#include "json_io.hpp"

namespace quotcoh::cli
{

enum class QueryKind {
    sym_coh,
    quot_coh,
    quot_ext,
    vanishing,
    conjecture,
    functor,
    twisted_coh,
    twisted_ext,
    geometry,
    consistency,
    oracle_verify,
};

std::string to_string(QueryKind k);

struct FactorRef {
    std::string bundle;
    std::int64_t k = 1;
};

// One query, with its parameters checked against the kind's schema and every
// bundle label resolved.
struct Query {
    QueryKind kind = QueryKind::sym_coh;
    json echo;

    std::int64_t d = 1;
    std::int64_t ell = 0;
    std::optional<std::string> bundle;
    std::optional<std::string> f;
    std::optional<std::string> g;
    std::optional<std::string> l;
    std::optional<std::string> m;
    std::optional<std::string> twist;
    std::optional<std::string> source_twist;
    std::optional<std::string> target_twist;
    std::vector<FactorRef> factors;
    std::optional<GradedDim> value;
    // twisted-coh: "quot" or "symmetric-product"
    std::string space = "quot";

    SweepRanges ranges;
    std::int64_t max_dim = 5;
    std::int64_t max_k = 5;
};

struct Config {
    CurveModel curve{0};
    std::map<std::string, BundleClass> bundles;
    CohPolicy policy{CohMode::strict};
    std::string e_label = "E";
    std::vector<Query> queries;

    // Defined bundles plus the built-in O_C and K_C. Throws ConfigError.
    const BundleClass &bundle(const std::string &label) const;
    bool has_e_bundle() const
    {
        return bundles.contains(e_label);
    }
};

// Schema:
//   {"curve": {"genus": int}, "policy": "strict"|"generic", "E": label?,
//    "bundles": [bundle...], "queries": [query...]}
// Throws ConfigError (with the offending query index where applicable).
Config parse_config(const json &doc);
Config load_config(const std::filesystem::path &path);

} // namespace quotcoh::cli

#endif
