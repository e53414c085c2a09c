#include <quotcoh/geometry.hpp>

#include <algorithm>

#include <quotcoh/errors.hpp>

namespace quotcoh::geometry
{

namespace
{

void require_non_negative(std::int64_t d)
{
    if (d < 0) {
        throw OutOfRange("length d must be non-negative, got " + std::to_string(d));
    }
}

GradedDim curve_poincare(const CurveModel &c)
{
    return GradedDim{{0, 1}, {1, 2 * c.genus()}, {2, 1}};
}

GradedDim projective_space_poincare(std::int64_t n)
{
    GradedDim::map_type out;
    for (std::int64_t i = 0; i <= n; ++i) {
        out.emplace(2 * i, 1);
    }
    return GradedDim(std::move(out));
}

// Sum over all l-vectors of prod_i C(r_sub_i, k_i - l_i) C(r_quot_i, l_i).
Integer filtration_count(const std::vector<FiltrationSplit> &splits, std::size_t i)
{
    if (i == splits.size()) {
        return 1;
    }
    const auto &[r_sub, r_quot, k] = splits[i];
    Integer out = 0;
    for (std::int64_t l = 0; l <= std::min(k, r_quot); ++l) {
        out += binomial(r_sub, k - l) * binomial(r_quot, l) * filtration_count(splits, i + 1);
    }
    return out;
}

} // namespace

std::int64_t dim_quot(const BundleClass &e, std::int64_t d)
{
    require_non_negative(d);
    return d * e.rank;
}

std::int64_t dim_flag(const BundleClass &e, std::int64_t d)
{
    require_non_negative(d);
    std::int64_t dim = 0;
    for (std::int64_t step = 0; step < d; ++step) {
        dim += 1 + (e.rank - 1);
    }
    return dim;
}

std::int64_t taut_rank(const BundleClass &f, std::int64_t d)
{
    if (d < 1) {
        throw OutOfRange("tautological bundles need d >= 1, got " + std::to_string(d));
    }
    return d * f.rank;
}

std::int64_t hom_taut_rank(const BundleClass &f, const BundleClass &g, std::int64_t d)
{
    return taut_rank(f, d) * taut_rank(g, d);
}

std::int64_t hom_sym_taut_rank(const BundleClass &f, const BundleClass &g, std::int64_t d)
{
    return taut_rank(hom_class(f, g), d);
}

GradedDim poincare_flag(const CurveModel &c, const BundleClass &e, std::int64_t d)
{
    require_non_negative(d);
    const GradedDim step = tensor(curve_poincare(c), projective_space_poincare(e.rank - 1));
    GradedDim out = unit();
    for (std::int64_t i = 0; i < d; ++i) {
        out = tensor(out, step);
    }
    return out;
}

GradedDim poincare_sym(const CurveModel &c, std::int64_t d)
{
    require_non_negative(d);
    return sym_power(curve_poincare(c), d);
}

bool filtration_rank_check(const std::vector<FiltrationSplit> &splits)
{
    Integer lhs = 1;
    for (const auto &[r_sub, r_quot, k] : splits) {
        if (r_sub < 0 || r_quot < 0 || k < 1 || k > r_sub + r_quot) {
            throw OutOfRange("invalid filtration split (" + std::to_string(r_sub) + ", " + std::to_string(r_quot)
                             + ", " + std::to_string(k) + ")");
        }
        lhs *= binomial(r_sub + r_quot, k);
    }
    return lhs == filtration_count(splits, 0);
}

bool taut_ses_rank_check(const BundleClass &f, std::int64_t d)
{
    if (d < 1) {
        throw OutOfRange("tautological bundles need d >= 1, got " + std::to_string(d));
    }
    const std::int64_t previous = d == 1 ? 0 : taut_rank(f, d - 1);
    return taut_rank(f, d) == f.rank + previous;
}

SpaceInfo quot_info(const BundleClass &e, std::int64_t d)
{
    return {"Quot_" + std::to_string(d) + "(" + e.label + ")", dim_quot(e, d), std::nullopt};
}

SpaceInfo flag_info(const CurveModel &c, const BundleClass &e, std::int64_t d)
{
    return {"Flag_" + std::to_string(d) + "(" + e.label + ")", dim_flag(e, d), poincare_flag(c, e, d)};
}

SpaceInfo sym_product_info(const CurveModel &c, std::int64_t d)
{
    return {"C^(" + std::to_string(d) + ")", d, poincare_sym(c, d)};
}

bool is_palindromic(const GradedDim &p, std::int64_t dimension)
{
    for (const auto &[deg, b] : p.coefficients()) {
        if (deg < 0 || deg > 2 * dimension || p[2 * dimension - deg] != b) {
            return false;
        }
    }
    return true;
}

} // namespace quotcoh::geometry
