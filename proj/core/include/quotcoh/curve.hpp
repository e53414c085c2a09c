#ifndef QUOTCOH_CURVE_HPP
#define QUOTCOH_CURVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <quotcoh/graded_dim.hpp>
#include <quotcoh/integer.hpp>

namespace quotcoh
{

inline constexpr std::string_view structure_sheaf_label = "O_C";
inline constexpr std::string_view canonical_label = "K_C";

// A smooth projective curve, remembered only through its genus.
class CurveModel
{
public:
    // Throws OutOfRange for a negative genus.
    explicit CurveModel(std::int64_t genus);

    std::int64_t genus() const noexcept
    {
        return m_genus;
    }

    friend bool operator==(const CurveModel &, const CurveModel &) = default;

private:
    std::int64_t m_genus;
};

// Explicitly supplied h^0, h^1.
struct CohOverride {
    Integer h0;
    Integer h1;

    friend bool operator==(const CohOverride &, const CohOverride &) = default;
};

// A vector bundle on the curve, up to the numerical data the formulas use.
//
// O_C and the canonical bundle K_C are recognised by label, never by degree:
// a degree-0 line bundle is not in general trivial, and a line bundle of
// degree 2g-2 is not in general canonical.
struct BundleClass {
    std::string label;
    std::int64_t rank = 1;
    std::int64_t degree = 0;
    std::optional<CohOverride> coh_override;

    // Throws OutOfRange if rank < 1.
    BundleClass(std::string label, std::int64_t rank, std::int64_t degree,
                std::optional<CohOverride> coh_override = std::nullopt);

    static BundleClass structure_sheaf();
    static BundleClass canonical(const CurveModel &c);
    static BundleClass line(std::string label, std::int64_t degree);

    bool is_line_bundle() const noexcept
    {
        return rank == 1;
    }
    bool is_structure_sheaf() const noexcept;
    bool is_canonical() const noexcept;

    friend bool operator==(const BundleClass &, const BundleClass &) = default;
};

// Riemann-Roch rank/degree equality, ignoring label and override.
bool same_numerics(const BundleClass &a, const BundleClass &b) noexcept;

enum class CohMode { strict, generic };

struct CohPolicy {
    CohMode mode = CohMode::strict;
};

// Where a cohomology answer came from.
enum class CohSource { override_data, exact_rule, generic_assumption };

struct CohomologyResult {
    GradedDim value;
    CohSource source;

    bool generic() const noexcept
    {
        return source == CohSource::generic_assumption;
    }
};

// deg + rank (1 - g).
Integer chi(const CurveModel &c, const BundleClass &f);

// H^*(F) as a graded dimension in degrees {0, 1}.
//
// Resolution order:
//   1. coh_override, validated against Riemann-Roch (InconsistentOverride);
//   2. exact rules for line bundles: O_C, K_C, deg > 2g-2 (h^1 = 0),
//      deg < 0 (h^0 = 0);
//   3. generic mode: h^0 = max(chi, 0), h^1 = max(-chi, 0);
//   4. strict mode: AmbiguousCohomology.
CohomologyResult resolve_cohomology(const CurveModel &c, const BundleClass &f, CohPolicy policy);

inline GradedDim cohomology(const CurveModel &c, const BundleClass &f, CohPolicy policy)
{
    return resolve_cohomology(c, f, policy).value;
}

// Rank r_a r_b, degree r_a e_b + r_b e_a. Tensoring with O_C returns the
// other factor unchanged (override included); a line bundle tensored with its
// own dual gives O_C.
BundleClass tensor_class(const BundleClass &a, const BundleClass &b);
// Degree negated; dual_class(dual_class(f)) == f.
BundleClass dual_class(const BundleClass &a);
// Hom(F, G) = F^dual (x) G.
BundleClass hom_class(const BundleClass &f, const BundleClass &g);

// Ext^*(F, G) = H^*(Hom(F, G)) for vector bundles on a curve.
CohomologyResult resolve_ext_groups(const CurveModel &c, const BundleClass &f, const BundleClass &g,
                                    CohPolicy policy);
inline GradedDim ext_groups(const CurveModel &c, const BundleClass &f, const BundleClass &g, CohPolicy policy)
{
    return resolve_ext_groups(c, f, g, policy).value;
}

// wedge^k F: rank C(r, k), degree C(r-1, k-1) e. Requires 1 <= k <= r.
BundleClass ext_power_class(const BundleClass &f, std::int64_t k);
// S^k F: rank C(r+k-1, k), degree C(r+k-1, k-1) e. Requires k >= 0; S^0 = O_C.
BundleClass sym_power_class(const BundleClass &f, std::int64_t k);

std::string to_string(const BundleClass &f);

} // namespace quotcoh

#endif
