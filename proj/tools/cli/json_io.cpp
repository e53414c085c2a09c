#include "json_io.hpp"

#include <charconv>
#include <limits>

namespace quotcoh::cli
{

namespace
{

Degree parse_degree(const std::string &key)
{
    Degree d = 0;
    const char *first = key.data();
    const char *last = key.data() + key.size();
    const auto [ptr, ec] = std::from_chars(first, last, d);
    if (key.empty() || ec != std::errc() || ptr != last) {
        throw ConfigError("graded dimension key '" + key + "' is not a decimal integer degree");
    }
    return d;
}

std::int64_t int_field(const json &j, const char *key, const std::string &what)
{
    if (!j.contains(key)) {
        throw ConfigError(what + ": missing field '" + key + "'");
    }
    const auto &v = j.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(what + ": field '" + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

} // namespace

json integer_to_json(const Integer &x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

Integer integer_from_json(const json &j, const std::string &what)
{
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto &s = j.get_ref<const std::string &>();
        const auto body = (!s.empty() && s[0] == '-') ? s.substr(1) : s;
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) {
            throw ConfigError(what + ": '" + s + "' is not a decimal integer");
        }
        return Integer(s);
    }
    throw ConfigError(what + ": expected an integer");
}

json graded_dim_to_json(const GradedDim &a)
{
    json out = json::object();
    for (const auto &[d, v] : a.coefficients()) {
        out[std::to_string(d)] = integer_to_json(v);
    }
    return out;
}

GradedDim graded_dim_from_json(const json &j)
{
    if (!j.is_object()) {
        throw ConfigError("graded dimension must be a JSON object {\"<degree>\": <dimension>}");
    }
    GradedDim::map_type coeffs;
    for (const auto &[key, value] : j.items()) {
        const Degree d = parse_degree(key);
        const Integer v = integer_from_json(value, "dimension in degree " + key);
        if (v < 0) {
            throw ConfigError("dimension in degree " + key + " is negative");
        }
        if (coeffs.contains(d)) {
            throw ConfigError("degree " + key + " appears twice");
        }
        coeffs.emplace(d, v);
    }
    return GradedDim(std::move(coeffs));
}

json bundle_to_json(const BundleClass &f)
{
    json out{{"label", f.label}, {"rank", f.rank}, {"degree", f.degree}};
    if (f.coh_override) {
        out["h0"] = integer_to_json(f.coh_override->h0);
        out["h1"] = integer_to_json(f.coh_override->h1);
    }
    return out;
}

BundleClass bundle_from_json(const json &j)
{
    if (!j.is_object()) {
        throw ConfigError("bundle must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "label" && key != "rank" && key != "degree" && key != "h0" && key != "h1") {
            throw ConfigError("bundle: unknown field '" + key + "'");
        }
    }
    if (!j.contains("label") || !j.at("label").is_string() || j.at("label").get_ref<const std::string &>().empty()) {
        throw ConfigError("bundle: 'label' must be a non-empty string");
    }
    const auto label = j.at("label").get<std::string>();
    const std::string what = "bundle '" + label + "'";
    const auto rank = int_field(j, "rank", what);
    const auto degree = int_field(j, "degree", what);
    if (rank < 1) {
        throw ConfigError(what + ": rank must be >= 1");
    }
    if (j.contains("h0") != j.contains("h1")) {
        throw ConfigError(what + ": h0 and h1 must be given together");
    }
    std::optional<CohOverride> override_data;
    if (j.contains("h0")) {
        CohOverride o{integer_from_json(j.at("h0"), what + " h0"), integer_from_json(j.at("h1"), what + " h1")};
        if (o.h0 < 0 || o.h1 < 0) {
            throw ConfigError(what + ": h0 and h1 must be non-negative");
        }
        override_data = std::move(o);
    }
    return BundleClass(label, rank, degree, std::move(override_data));
}

json report_to_json(const PredictionReport &r)
{
    return {{"value", graded_dim_to_json(r.value)},
            {"status", to_string(r.status)},
            {"citation", r.citation},
            {"generic_tainted", r.generic_tainted},
            {"euler", integer_to_json(r.euler)},
            {"total", integer_to_json(r.total)}};
}

json verdict_to_json(const Verdict &v)
{
    json out{{"verdict", to_string(v.kind)},
             {"reason", v.reason},
             {"status", to_string(Status::proven)},
             {"citation", v.citation},
             {"generic_tainted", v.generic_tainted}};
    if (v.witness) {
        out["witness"] = graded_dim_to_json(*v.witness);
        out["euler"] = integer_to_json(euler(*v.witness));
        out["total"] = integer_to_json(total(*v.witness));
    }
    return out;
}

json space_info_to_json(const geometry::SpaceInfo &s)
{
    json out{{"name", s.name}, {"dimension", s.dimension}, {"grading", "topological"}};
    out["poincare"] = s.poincare ? graded_dim_to_json(*s.poincare) : json(nullptr);
    return out;
}

std::string poincare_polynomial(const GradedDim &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[d, v] : a.coefficients()) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string monomial;
        if (d == 0) {
            monomial = "";
        } else if (d == 1) {
            monomial = "q";
        } else if (d >= 2 && d <= 9) {
            monomial = "q^" + std::to_string(d);
        } else {
            monomial = "q^{" + std::to_string(d) + "}";
        }
        if (monomial.empty()) {
            out += v.str();
        } else if (v == 1) {
            out += monomial;
        } else {
            out += v.str() + monomial;
        }
    }
    return out;
}

} // namespace quotcoh::cli
