#include "app.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include <quotcoh/errors.hpp>
#include <quotcoh/formulas.hpp>
#include <quotcoh/geometry.hpp>
#include <quotcoh/oracle.hpp>
#include <quotcoh/sweep.hpp>

namespace quotcoh::cli
{

namespace
{

// A built-in self-check reported a failure.
class InvariantFailure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

const std::string cite_functor = "R_d o T_d = (_) (x) S^{d-1} H^*(O_C)";
const std::string cite_geometry = "dim Quot_d(E) = dim Flag_d(E) = d rk E; rk F^[[d]] = d rk F";
const std::string cite_sweep = "proven cases l = 0, (m, l) = (0, 1), (m, l) = (1, 1) of the conjectural formula";
const std::string cite_oracle = "graded S^k / wedge^k by generating series vs monomial enumeration";

json base_result(const Query &q, std::size_t index, const char *result_type)
{
    return {{"index", index},
            {"kind", to_string(q.kind)},
            {"query", q.echo},
            {"result_type", result_type},
            {"grading", "cohomological"}};
}

json merge(json into, const json &from)
{
    for (const auto &[k, v] : from.items()) {
        into[k] = v;
    }
    return into;
}

std::vector<WedgeFactor> resolve_factors(const Config &config, const Query &q)
{
    std::vector<WedgeFactor> out;
    for (const auto &f : q.factors) {
        out.push_back({config.bundle(f.bundle), f.k});
    }
    return out;
}

json checks_result(const Query &q, std::size_t index, json value)
{
    auto r = base_result(q, index, "checks");
    r["value"] = std::move(value);
    r["status"] = to_string(Status::proven);
    r["generic_tainted"] = false;
    return r;
}

// Degrees in the order the exhaustive sweep introduces them; small |degree|
// first so the first counterexample found is the simplest one.
const std::vector<Degree> sweep_degrees{0, 1, -1, 2, -2, 3};

// Calls visit(dims) for every multiset of sweep degrees of size <= max_dim,
// by size, then lexicographically in sweep order. Returns false if visit asked
// to stop.
template <typename Visit>
bool for_each_graded_dim(std::int64_t max_dim, Visit &&visit)
{
    std::vector<std::size_t> idx;
    const auto recurse = [&](auto &&self, std::size_t size, std::size_t start) -> bool {
        if (idx.size() == size) {
            GradedDim::map_type m;
            for (const auto i : idx) {
                m[sweep_degrees[i]] += 1;
            }
            return visit(GradedDim(std::move(m)));
        }
        for (std::size_t i = start; i < sweep_degrees.size(); ++i) {
            idx.push_back(i);
            const bool go_on = self(self, size, i);
            idx.pop_back();
            if (!go_on) {
                return false;
            }
        }
        return true;
    };
    for (std::int64_t size = 0; size <= max_dim; ++size) {
        if (!recurse(recurse, static_cast<std::size_t>(size), 0)) {
            return false;
        }
    }
    return true;
}

// Basis in sweep order, so the printed counterexample lists the elements as
// the sweep introduced them.
oracle::GradedBasis sweep_basis(const GradedDim &dims)
{
    std::vector<oracle::BasisElement> elements;
    for (const auto d : sweep_degrees) {
        const auto n = dims[d].convert_to<std::int64_t>();
        for (std::int64_t i = 0; i < n; ++i) {
            elements.push_back({"e" + std::to_string(d) + "_" + std::to_string(i), d});
        }
    }
    return oracle::GradedBasis(std::move(elements));
}

GradedDim random_graded_dim(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> size_dist(0, 6);
    std::uniform_int_distribution<int> degree_dist(-3, 3);
    GradedDim::map_type m;
    const int size = size_dist(rng);
    for (int i = 0; i < size; ++i) {
        m[degree_dist(rng)] += 1;
    }
    return GradedDim(std::move(m));
}

std::string render_table(const json &results)
{
    std::ostringstream os;
    for (const auto &r : results) {
        os << '#' << r.at("index").get<std::size_t>() << ' ' << r.at("kind").get<std::string>() << ": ";
        const auto type = r.at("result_type").get<std::string>();
        if (type == "prediction" || type == "value") {
            const auto value = graded_dim_from_json(r.at("value"));
            os << to_string(value) << "  P(q) = " << poincare_polynomial(value) << "  euler " << r.at("euler").dump()
               << "  total " << r.at("total").dump();
        } else if (type == "verdict") {
            os << r.at("verdict").get<std::string>();
            if (r.contains("witness")) {
                os << " " << to_string(graded_dim_from_json(r.at("witness")));
            }
            os << "  (" << r.at("reason").get<std::string>() << ")";
        } else if (type == "geometry") {
            bool first = true;
            for (const auto &s : r.at("spaces")) {
                os << (first ? "" : "; ") << s.at("name").get<std::string>() << " dim "
                   << s.at("dimension").get<std::int64_t>();
                if (!s.at("poincare").is_null()) {
                    os << " P(t) = " << poincare_polynomial(graded_dim_from_json(s.at("poincare")));
                }
                first = false;
            }
        } else {
            os << r.at("value").dump();
        }
        os << "  [" << r.at("status").get<std::string>();
        if (r.value("generic_tainted", false)) {
            os << ", generic assumption";
        }
        os << "]\n";
    }
    return os.str();
}

std::string latex_escape(const std::string &s)
{
    std::string out;
    for (const char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string render_latex(const json &results)
{
    std::ostringstream os;
    os << "\\begin{tabular}{rlll}\n";
    os << "\\# & query & result & status \\\\\n\\hline\n";
    for (const auto &r : results) {
        os << r.at("index").get<std::size_t>() << " & " << latex_escape(r.at("kind").get<std::string>()) << " & ";
        const auto type = r.at("result_type").get<std::string>();
        if (type == "prediction" || type == "value") {
            os << '$' << poincare_polynomial(graded_dim_from_json(r.at("value"))) << '$';
        } else if (type == "verdict") {
            os << r.at("verdict").get<std::string>();
            if (r.contains("witness")) {
                os << " $" << poincare_polynomial(graded_dim_from_json(r.at("witness"))) << '$';
            }
        } else if (type == "geometry") {
            bool first = true;
            for (const auto &s : r.at("spaces")) {
                os << (first ? "" : ", ") << '$' << s.at("name").get<std::string>() << "$: "
                   << s.at("dimension").get<std::int64_t>();
                first = false;
            }
        } else {
            os << latex_escape(r.at("value").dump());
        }
        os << " & " << r.at("status").get<std::string>();
        if (r.value("generic_tainted", false)) {
            os << " (generic)";
        }
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

} // namespace

OutputFormat parse_format(const std::string &name)
{
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "table") {
        return OutputFormat::table;
    }
    if (name == "latex") {
        return OutputFormat::latex;
    }
    throw ConfigError("unknown output format '" + name + "'");
}

json evaluate_query(const Config &config, const Query &q, std::size_t index)
{
    const auto &c = config.curve;
    const auto policy = config.policy;
    const auto context = [&]() { return QuotContext(c, config.bundle(config.e_label), q.d, policy); };

    switch (q.kind) {
    case QueryKind::sym_coh:
        return merge(base_result(q, index, "prediction"),
                     report_to_json(sym_product_taut_coh(c, config.bundle(*q.bundle), q.d, policy)));
    case QueryKind::quot_coh: {
        const auto ctx = context();
        const auto &f = config.bundle(*q.bundle);
        auto r = merge(base_result(q, index, "prediction"), report_to_json(quot_taut_coh(ctx, f)));
        const auto push = quot_pushforward_class(ctx, f);
        r["pushforward"] = {{"class", bundle_to_json(push.bundle)}, {"d", push.d}, {"rank", push.rank()}};
        return r;
    }
    case QueryKind::quot_ext:
        return merge(base_result(q, index, "prediction"),
                     report_to_json(quot_ext(context(), config.bundle(*q.f), config.bundle(*q.g))));
    case QueryKind::vanishing: {
        const auto factors = resolve_factors(config, q);
        const auto verdict = q.twist ? twisted_quot_vanishing(context(), factors, config.bundle(*q.twist))
                                     : dual_vanishing(context(), factors);
        return merge(base_result(q, index, "verdict"), verdict_to_json(verdict));
    }
    case QueryKind::conjecture:
        return merge(base_result(q, index, "prediction"),
                     report_to_json(conjecture_rhs(context(), config.bundle(*q.l), q.ell, resolve_factors(config, q))));
    case QueryKind::functor: {
        const auto value = functor_composition(context(), *q.value);
        auto r = base_result(q, index, "value");
        r["value"] = graded_dim_to_json(value);
        r["status"] = to_string(Status::proven);
        r["citation"] = cite_functor;
        r["generic_tainted"] = false;
        r["euler"] = integer_to_json(euler(value));
        r["total"] = integer_to_json(total(value));
        return r;
    }
    case QueryKind::twisted_coh: {
        const auto &m = config.bundle(*q.m);
        if (q.space == "symmetric-product") {
            std::optional<BundleClass> f;
            if (q.bundle) {
                f = config.bundle(*q.bundle);
            }
            return merge(base_result(q, index, "prediction"), report_to_json(twisted_sym_coh(c, f, m, q.d, policy)));
        }
        return merge(base_result(q, index, "prediction"),
                     report_to_json(twisted_quot_coh(context(), config.bundle(*q.bundle), m)));
    }
    case QueryKind::twisted_ext:
        return merge(base_result(q, index, "prediction"),
                     report_to_json(twisted_quot_ext(context(), config.bundle(*q.f), config.bundle(*q.source_twist),
                                                     config.bundle(*q.g), config.bundle(*q.target_twist))));
    case QueryKind::geometry: {
        const auto &e = config.bundle(q.bundle ? *q.bundle : config.e_label);
        auto r = base_result(q, index, "geometry");
        r["grading"] = "topological";
        r["spaces"] = json::array({space_info_to_json(geometry::quot_info(e, q.d)),
                                   space_info_to_json(geometry::flag_info(c, e, q.d)),
                                   space_info_to_json(geometry::sym_product_info(c, q.d))});
        if (q.f) {
            const auto &f = config.bundle(*q.f);
            const auto &g = config.bundle(*q.g);
            r["tautological_rank"] = {{"f", geometry::taut_rank(f, q.d)}, {"g", geometry::taut_rank(g, q.d)}};
            r["hom_rank"] = {{"quot", geometry::hom_taut_rank(f, g, q.d)},
                             {"symmetric_product", geometry::hom_sym_taut_rank(f, g, q.d)}};
        }
        r["status"] = to_string(Status::proven);
        r["citation"] = cite_geometry;
        r["generic_tainted"] = false;
        return r;
    }
    case QueryKind::consistency: {
        const auto report = consistency_sweep(q.ranges);
        json checks = json::object();
        for (const auto &[name, t] : report.checks) {
            checks[name] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
        }
        json failures = json::array();
        for (std::size_t i = 0; i < report.failures.size() && i < 10; ++i) {
            failures.push_back({{"check", report.failures[i].check}, {"detail", report.failures[i].detail}});
        }
        if (!report.all_passed()) {
            throw InvariantFailure("consistency sweep failed: " + failures.dump());
        }
        auto r = checks_result(q, index,
                               {{"passed", report.passed()},
                                {"failed", report.failed()},
                                {"skipped", report.skipped()},
                                {"checks", checks}});
        r["citation"] = cite_sweep;
        return r;
    }
    case QueryKind::oracle_verify: {
        VerifyOptions options;
        options.max_dim = q.max_dim;
        options.max_k = q.max_k;
        options.oracle_only = true;
        const auto report = run_verify(options);
        if (!report.passed()) {
            throw InvariantFailure("oracle mismatch: " + report.counterexample->dump());
        }
        auto r = checks_result(q, index, {{"passed", report.oracle_checks}, {"failed", 0}});
        r["citation"] = cite_oracle;
        return r;
    }
    }
    throw InvariantFailure("unhandled query kind");
}

RunOutcome run_document(const json &doc, const RunOptions &options)
{
    RunOutcome out;
    Config config;
    try {
        config = parse_config(doc);
    } catch (const ConfigError &e) {
        return {exit_config, "", std::string("error: ") + e.what()};
    } catch (const Error &e) {
        return {exit_config, "", std::string("error: config: ") + e.what()};
    }
    if (options.policy) {
        config.policy.mode = *options.policy;
        for (auto &q : config.queries) {
            q.ranges.policy = config.policy;
        }
    }

    json results = json::array();
    for (std::size_t i = 0; i < config.queries.size(); ++i) {
        const auto &q = config.queries[i];
        const std::string where = "error: query " + std::to_string(i) + " (" + to_string(q.kind) + "): ";
        try {
            results.push_back(evaluate_query(config, q, i));
        } catch (const AmbiguousCohomology &e) {
            return {exit_policy, "", where + e.what()};
        } catch (const PreconditionViolated &e) {
            return {exit_config, "", where + e.what()};
        } catch (const OutOfRange &e) {
            return {exit_config, "", where + e.what()};
        } catch (const InconsistentOverride &e) {
            return {exit_config, "", where + e.what()};
        } catch (const ConfigError &e) {
            return {exit_config, "", where + e.what()};
        } catch (const std::exception &e) {
            return {exit_internal, "", where + e.what()};
        }
    }

    switch (options.format) {
    case OutputFormat::json: {
        json doc_out{{"curve", {{"genus", config.curve.genus()}}},
                     {"policy", config.policy.mode == CohMode::strict ? "strict" : "generic"},
                     {"results", results}};
        if (options.timestamps) {
            const auto now = std::chrono::system_clock::now().time_since_epoch();
            doc_out["generated_at_unix"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
        }
        out.output = doc_out.dump(2) + "\n";
        break;
    }
    case OutputFormat::table:
        out.output = render_table(results);
        break;
    case OutputFormat::latex:
        out.output = render_latex(results);
        break;
    }
    return out;
}

RunOutcome run_file(const std::filesystem::path &config_path, const RunOptions &options)
{
    std::ifstream in(config_path);
    if (!in) {
        return {exit_config, "", "error: cannot open config file '" + config_path.string() + "'"};
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        return {exit_config, "", "error: config file '" + config_path.string() + "' is not valid JSON: " + e.what()};
    }
    return run_document(doc, options);
}

VerifyReport run_verify(const VerifyOptions &options, const PowerImpl &impl)
{
    if (options.max_dim < 0 || options.max_dim > static_cast<std::int64_t>(oracle::max_basis_size) || options.max_k < 0
        || options.max_k > oracle::max_power) {
        throw ConfigError("verify bounds must satisfy 0 <= max-dim <= " + std::to_string(oracle::max_basis_size)
                          + " and 0 <= max-k <= " + std::to_string(oracle::max_power));
    }
    VerifyReport report;

    for_each_graded_dim(options.max_dim, [&](const GradedDim &dims) {
        const auto basis = sweep_basis(dims);
        for (std::int64_t k = 0; k <= options.max_k; ++k) {
            const std::pair<const char *, std::pair<GradedDim, GradedDim>> cases[] = {
                {"sym", {oracle::enumerate_sym(basis, k), impl.sym(dims, k)}},
                {"ext", {oracle::enumerate_ext(basis, k), impl.ext(dims, k)}},
            };
            for (const auto &[op, values] : cases) {
                ++report.oracle_checks;
                if (values.first != values.second) {
                    report.counterexample = json{{"check", std::string("oracle ") + op},
                                                 {"basis", oracle::to_string(basis)},
                                                 {"k", k},
                                                 {"expected", graded_dim_to_json(values.first)},
                                                 {"actual", graded_dim_to_json(values.second)}};
                    return false;
                }
            }
        }
        return true;
    });
    if (!report.passed() || options.oracle_only) {
        return report;
    }

    std::mt19937_64 rng(options.seed);
    for (std::int64_t s = 0; s < options.random_samples && report.passed(); ++s) {
        const auto a = random_graded_dim(rng);
        const auto x = euler(a);
        for (std::int64_t k = 0; k <= options.max_k; ++k) {
            const auto sym = impl.sym(a, k);
            const auto ext = impl.ext(a, k);
            const std::pair<const char *, bool> checks[] = {
                {"euler of S^k is C(chi+k-1, k)", euler(sym) == binomial(x + k - 1, k)},
                {"euler of wedge^k is C(chi, k)", euler(ext) == binomial(x, k)},
                {"S^k commutes with dual", impl.sym(dual(a), k) == dual(sym)},
                {"wedge^k commutes with dual", impl.ext(dual(a), k) == dual(ext)},
                {"wedge^k is S^k of the parity shift", ext == shift(impl.sym(shift(a, 1), k), -k)},
            };
            for (const auto &[name, ok] : checks) {
                ++report.identity_checks;
                if (!ok) {
                    report.counterexample =
                        json{{"check", name}, {"value", graded_dim_to_json(a)}, {"k", k}, {"seed", options.seed}};
                    return report;
                }
            }
        }
    }

    const auto sweep = consistency_sweep();
    report.consistency_checks = sweep.passed();
    report.consistency_skipped = sweep.skipped();
    if (!sweep.all_passed()) {
        report.counterexample = json{{"check", sweep.failures.front().check}, {"detail", sweep.failures.front().detail}};
    }
    return report;
}

std::string format_verify_report(const VerifyReport &report)
{
    std::ostringstream os;
    os << "oracle: " << report.oracle_checks << " checks\n";
    os << "identities: " << report.identity_checks << " checks\n";
    os << "consistency: " << report.consistency_checks << " checks (" << report.consistency_skipped
       << " skipped as unresolvable)\n";
    if (report.passed()) {
        os << "all " << report.total_checks() << " checks passed\n";
    } else {
        os << "FAILED after " << report.total_checks() << " checks; counterexample:\n"
           << report.counterexample->dump(2) << "\n";
    }
    return os.str();
}

RunOutcome geometry_info(std::int64_t genus, std::int64_t rank, std::int64_t degree, std::int64_t d,
                         const RunOptions &options)
{
    const json doc{{"curve", {{"genus", genus}}},
                   {"bundles", json::array({{{"label", "E"}, {"rank", rank}, {"degree", degree}}})},
                   {"queries", json::array({{{"kind", "geometry"}, {"d", d}}})}};
    return run_document(doc, options);
}

} // namespace quotcoh::cli
