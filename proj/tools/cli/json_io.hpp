#ifndef QUOTCOH_CLI_JSON_IO_HPP
#define QUOTCOH_CLI_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include <quotcoh/curve.hpp>
#include <quotcoh/formulas.hpp>
#include <quotcoh/geometry.hpp>
#include <quotcoh/graded_dim.hpp>

namespace quotcoh::cli
{

using json = nlohmann::json;

// Malformed or invalid configuration / literal. Maps to exit status 2.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Numbers that fit into 64 bits are emitted as JSON integers, larger ones as
// decimal strings.
json integer_to_json(const Integer &x);
Integer integer_from_json(const json &j, const std::string &what);

// {"<degree>": <dimension>, ...}; degree keys are decimal strings so negative
// degrees stay unambiguous.
json graded_dim_to_json(const GradedDim &a);
GradedDim graded_dim_from_json(const json &j);

// {"label", "rank", "degree", "h0"?, "h1"?}
json bundle_to_json(const BundleClass &f);
BundleClass bundle_from_json(const json &j);

json report_to_json(const PredictionReport &r);
json verdict_to_json(const Verdict &v);
json space_info_to_json(const geometry::SpaceInfo &s);

// "1 + 2q + q^2"; "0" for the zero space.
std::string poincare_polynomial(const GradedDim &a);

} // namespace quotcoh::cli

#endif
