#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <quotcoh/errors.hpp>
#include <quotcoh/formulas.hpp>
#include <quotcoh/oracle.hpp>

namespace quotcoh::cli
{

namespace
{

struct KindSchema {
    QueryKind kind;
    const char *name;
    std::vector<std::string> required;
    std::vector<std::string> optional;
    bool needs_e;
};

const std::vector<KindSchema> &schemas()
{
    static const std::vector<KindSchema> table{
        {QueryKind::sym_coh, "sym-coh", {"bundle", "d"}, {}, false},
        {QueryKind::quot_coh, "quot-coh", {"bundle", "d"}, {}, true},
        {QueryKind::quot_ext, "quot-ext", {"f", "g", "d"}, {}, true},
        {QueryKind::vanishing, "vanishing", {"factors", "d"}, {"twist"}, true},
        {QueryKind::conjecture, "conjecture", {"l", "ell", "d"}, {"factors"}, true},
        {QueryKind::functor, "functor", {"value", "d"}, {}, true},
        {QueryKind::twisted_coh, "twisted-coh", {"m", "d"}, {"bundle", "space"}, true},
        {QueryKind::twisted_ext, "twisted-ext", {"f", "g", "source_twist", "target_twist", "d"}, {}, true},
        {QueryKind::geometry, "geometry", {"d"}, {"bundle", "f", "g"}, false},
        {QueryKind::consistency, "consistency", {}, {"genera", "e_ranks", "max_d", "line_degrees"}, false},
        {QueryKind::oracle_verify, "oracle-verify", {}, {"max_dim", "max_k"}, false},
    };
    return table;
}

const KindSchema &schema_for(const std::string &name)
{
    for (const auto &s : schemas()) {
        if (name == s.name) {
            return s;
        }
    }
    std::string known;
    for (const auto &s : schemas()) {
        known += known.empty() ? "" : ", ";
        known += s.name;
    }
    throw ConfigError("unknown query kind '" + name + "' (known: " + known + ")");
}

std::int64_t get_int(const json &j, const std::string &key)
{
    const auto &v = j.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError("'" + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

std::string get_label(const json &j, const std::string &key)
{
    const auto &v = j.at(key);
    if (!v.is_string()) {
        throw ConfigError("'" + key + "' must be a bundle label string");
    }
    return v.get<std::string>();
}

std::vector<std::int64_t> get_int_list(const json &j, const std::string &key)
{
    const auto &v = j.at(key);
    if (!v.is_array()) {
        throw ConfigError("'" + key + "' must be an array of integers");
    }
    std::vector<std::int64_t> out;
    for (const auto &x : v) {
        if (!x.is_number_integer()) {
            throw ConfigError("'" + key + "' must be an array of integers");
        }
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

std::vector<FactorRef> get_factors(const json &j)
{
    const auto &v = j.at("factors");
    if (!v.is_array()) {
        throw ConfigError("'factors' must be an array of {\"bundle\": label, \"k\": int}");
    }
    std::vector<FactorRef> out;
    for (const auto &x : v) {
        if (!x.is_object() || x.size() != 2 || !x.contains("bundle") || !x.contains("k")) {
            throw ConfigError("each factor must be {\"bundle\": label, \"k\": int}");
        }
        out.push_back({get_label(x, "bundle"), get_int(x, "k")});
    }
    return out;
}

Query parse_query(const json &j, const Config &config)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw ConfigError("query must be an object with a string 'kind'");
    }
    const auto &schema = schema_for(j.at("kind").get<std::string>());
    for (const auto &key : schema.required) {
        if (!j.contains(key)) {
            throw ConfigError(std::string(schema.name) + " query is missing '" + key + "'");
        }
    }
    for (const auto &[key, value] : j.items()) {
        const bool known = key == "kind"
                           || std::find(schema.required.begin(), schema.required.end(), key) != schema.required.end()
                           || std::find(schema.optional.begin(), schema.optional.end(), key) != schema.optional.end();
        if (!known) {
            throw ConfigError(std::string(schema.name) + " query has unknown parameter '" + key + "'");
        }
    }

    Query q;
    q.kind = schema.kind;
    q.echo = j;
    if (j.contains("d")) {
        q.d = get_int(j, "d");
        const std::int64_t min_d = q.kind == QueryKind::geometry ? 0 : 1;
        if (q.d < min_d) {
            throw ConfigError("'d' must be >= " + std::to_string(min_d) + ", got " + std::to_string(q.d));
        }
    }
    if (j.contains("ell")) {
        q.ell = get_int(j, "ell");
    }
    const auto label_param = [&](const char *key, std::optional<std::string> &slot) {
        if (j.contains(key)) {
            slot = get_label(j, key);
            config.bundle(*slot);
        }
    };
    label_param("bundle", q.bundle);
    label_param("f", q.f);
    label_param("g", q.g);
    label_param("l", q.l);
    label_param("m", q.m);
    label_param("twist", q.twist);
    label_param("source_twist", q.source_twist);
    label_param("target_twist", q.target_twist);
    if (j.contains("factors")) {
        q.factors = get_factors(j);
        for (const auto &f : q.factors) {
            config.bundle(f.bundle);
        }
    }
    if (j.contains("value")) {
        q.value = graded_dim_from_json(j.at("value"));
    }
    if (j.contains("space")) {
        q.space = get_label(j, "space");
        if (q.space != "quot" && q.space != "symmetric-product") {
            throw ConfigError("'space' must be \"quot\" or \"symmetric-product\"");
        }
    }
    if (q.kind == QueryKind::twisted_coh && q.space == "quot" && !q.bundle) {
        throw ConfigError("twisted-coh on the Quot scheme needs 'bundle'");
    }
    if (q.kind == QueryKind::geometry && (q.f.has_value() != q.g.has_value())) {
        throw ConfigError("geometry query needs both 'f' and 'g' or neither");
    }

    if (j.contains("genera")) {
        q.ranges.genera = get_int_list(j, "genera");
    }
    if (j.contains("e_ranks")) {
        q.ranges.e_ranks = get_int_list(j, "e_ranks");
    }
    if (j.contains("max_d")) {
        q.ranges.max_d = get_int(j, "max_d");
    }
    if (j.contains("line_degrees")) {
        const auto range = get_int_list(j, "line_degrees");
        if (range.size() != 2 || range[0] > range[1]) {
            throw ConfigError("'line_degrees' must be [lo, hi] with lo <= hi");
        }
        q.ranges.min_line_degree = range[0];
        q.ranges.max_line_degree = range[1];
    }
    for (const auto g : q.ranges.genera) {
        if (g < 0) {
            throw ConfigError("'genera' must be non-negative");
        }
    }
    for (const auto r : q.ranges.e_ranks) {
        if (r < 2) {
            throw ConfigError("'e_ranks' entries violate the standing assumption rk E ≥ 2");
        }
    }
    q.ranges.policy = config.policy;

    if (j.contains("max_dim")) {
        q.max_dim = get_int(j, "max_dim");
    }
    if (j.contains("max_k")) {
        q.max_k = get_int(j, "max_k");
    }
    if (q.max_dim < 0 || q.max_dim > static_cast<std::int64_t>(oracle::max_basis_size) || q.max_k < 0
        || q.max_k > oracle::max_power) {
        throw ConfigError("oracle bounds must satisfy 0 <= max_dim <= " + std::to_string(oracle::max_basis_size)
                          + " and 0 <= max_k <= " + std::to_string(oracle::max_power));
    }

    if (schema.needs_e || (q.kind == QueryKind::geometry && !q.bundle)) {
        const bool symmetric_only = q.kind == QueryKind::twisted_coh && q.space == "symmetric-product";
        if (!symmetric_only && !config.has_e_bundle()) {
            throw ConfigError(std::string(schema.name) + " query needs the fixed bundle '" + config.e_label
                              + "', which is not defined");
        }
    }
    return q;
}

} // namespace

std::string to_string(QueryKind k)
{
    for (const auto &s : schemas()) {
        if (s.kind == k) {
            return s.name;
        }
    }
    return "?";
}

const BundleClass &Config::bundle(const std::string &label) const
{
    if (const auto it = bundles.find(label); it != bundles.end()) {
        return it->second;
    }
    throw ConfigError("bundle label '" + label + "' is not defined");
}

Config parse_config(const json &doc)
{
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (key != "curve" && key != "policy" && key != "bundles" && key != "queries" && key != "E") {
            throw ConfigError("config: unknown top-level field '" + key + "'");
        }
    }
    Config config;
    if (!doc.contains("curve") || !doc.at("curve").is_object() || !doc.at("curve").contains("genus")
        || !doc.at("curve").at("genus").is_number_integer() || doc.at("curve").size() != 1) {
        throw ConfigError("config: 'curve' must be {\"genus\": int}");
    }
    const auto genus = doc.at("curve").at("genus").get<std::int64_t>();
    if (genus < 0) {
        throw ConfigError("config: genus must be >= 0");
    }
    config.curve = CurveModel(genus);

    if (doc.contains("policy")) {
        const auto &p = doc.at("policy");
        if (p == "strict") {
            config.policy.mode = CohMode::strict;
        } else if (p == "generic") {
            config.policy.mode = CohMode::generic;
        } else {
            throw ConfigError("config: 'policy' must be \"strict\" or \"generic\"");
        }
    }
    if (doc.contains("E")) {
        if (!doc.at("E").is_string()) {
            throw ConfigError("config: 'E' must be a bundle label");
        }
        config.e_label = doc.at("E").get<std::string>();
    }

    config.bundles.emplace(std::string(structure_sheaf_label), BundleClass::structure_sheaf());
    config.bundles.emplace(std::string(canonical_label), BundleClass::canonical(config.curve));
    std::set<std::string> defined;
    if (doc.contains("bundles")) {
        if (!doc.at("bundles").is_array()) {
            throw ConfigError("config: 'bundles' must be an array");
        }
        for (const auto &b : doc.at("bundles")) {
            auto bundle = bundle_from_json(b);
            if (!defined.insert(bundle.label).second) {
                throw ConfigError("config: bundle '" + bundle.label + "' is defined more than once");
            }
            const auto builtin = config.bundles.find(bundle.label);
            if (builtin != config.bundles.end() && !same_numerics(builtin->second, bundle)) {
                throw ConfigError("config: built-in bundle '" + bundle.label + "' must have rank "
                                  + std::to_string(builtin->second.rank) + " and degree "
                                  + std::to_string(builtin->second.degree));
            }
            config.bundles.insert_or_assign(bundle.label, std::move(bundle));
        }
    }

    if (config.has_e_bundle()) {
        try {
            QuotContext(config.curve, config.bundle(config.e_label), 1, config.policy);
        } catch (const RankAssumptionViolated &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }

    if (!doc.contains("queries") || !doc.at("queries").is_array()) {
        throw ConfigError("config: 'queries' must be an array");
    }
    std::size_t index = 0;
    for (const auto &q : doc.at("queries")) {
        try {
            config.queries.push_back(parse_query(q, config));
        } catch (const ConfigError &e) {
            throw ConfigError("query " + std::to_string(index) + ": " + e.what());
        }
        ++index;
    }
    return config;
}

Config load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

} // namespace quotcoh::cli
