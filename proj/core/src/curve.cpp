#include <quotcoh/curve.hpp>

#include <algorithm>

#include <quotcoh/errors.hpp>

namespace quotcoh
{

namespace
{

constexpr std::string_view dual_suffix = "^v";

std::string dual_label(const std::string &label)
{
    if (label.size() > dual_suffix.size() && label.ends_with(dual_suffix)) {
        auto base = label.substr(0, label.size() - dual_suffix.size());
        if (base.size() >= 2 && base.front() == '(' && base.back() == ')') {
            base = base.substr(1, base.size() - 2);
        }
        return base;
    }
    if (label.find_first_of(" (*") != std::string::npos) {
        return "(" + label + ")" + std::string(dual_suffix);
    }
    return label + std::string(dual_suffix);
}

std::string describe(const BundleClass &f)
{
    return "'" + f.label + "' (rank " + std::to_string(f.rank) + ", degree " + std::to_string(f.degree) + ")";
}

} // namespace

CurveModel::CurveModel(std::int64_t genus) : m_genus(genus)
{
    if (genus < 0) {
        throw OutOfRange("genus must be non-negative, got " + std::to_string(genus));
    }
}

BundleClass::BundleClass(std::string label_, std::int64_t rank_, std::int64_t degree_,
                         std::optional<CohOverride> coh_override_)
    : label(std::move(label_)), rank(rank_), degree(degree_), coh_override(std::move(coh_override_))
{
    if (rank < 1) {
        throw OutOfRange("bundle '" + label + "' must have rank >= 1, got " + std::to_string(rank));
    }
    if (coh_override && (coh_override->h0 < 0 || coh_override->h1 < 0)) {
        throw OutOfRange("bundle '" + label + "' has a negative cohomology override");
    }
}

BundleClass BundleClass::structure_sheaf()
{
    return BundleClass(std::string(structure_sheaf_label), 1, 0);
}

BundleClass BundleClass::canonical(const CurveModel &c)
{
    return BundleClass(std::string(canonical_label), 1, 2 * c.genus() - 2);
}

BundleClass BundleClass::line(std::string label, std::int64_t degree)
{
    return BundleClass(std::move(label), 1, degree);
}

bool BundleClass::is_structure_sheaf() const noexcept
{
    return label == structure_sheaf_label && rank == 1 && degree == 0;
}

bool BundleClass::is_canonical() const noexcept
{
    return label == canonical_label;
}

bool same_numerics(const BundleClass &a, const BundleClass &b) noexcept
{
    return a.rank == b.rank && a.degree == b.degree;
}

Integer chi(const CurveModel &c, const BundleClass &f)
{
    return Integer(f.degree) + Integer(f.rank) * (1 - c.genus());
}

CohomologyResult resolve_cohomology(const CurveModel &c, const BundleClass &f, CohPolicy policy)
{
    const Integer euler_char = chi(c, f);
    const std::int64_t g = c.genus();

    if (f.coh_override) {
        const auto &[h0, h1] = *f.coh_override;
        if (h0 - h1 != euler_char) {
            throw InconsistentOverride("override h0=" + h0.str() + ", h1=" + h1.str() + " for " + describe(f)
                                       + " violates Riemann-Roch: h0 - h1 must be " + euler_char.str());
        }
        return {GradedDim{{0, h0}, {1, h1}}, CohSource::override_data};
    }

    if (f.is_line_bundle()) {
        if (f.is_structure_sheaf()) {
            return {GradedDim{{0, 1}, {1, g}}, CohSource::exact_rule};
        }
        if (f.is_canonical()) {
            if (f.degree != 2 * g - 2) {
                throw InconsistentOverride("canonical class " + describe(f) + " must have degree 2g-2 = "
                                           + std::to_string(2 * g - 2));
            }
            return {GradedDim{{0, g}, {1, 1}}, CohSource::exact_rule};
        }
        if (f.degree > 2 * g - 2) {
            return {GradedDim{{0, euler_char}}, CohSource::exact_rule};
        }
        if (f.degree < 0) {
            return {GradedDim{{1, -euler_char}}, CohSource::exact_rule};
        }
    }

    if (policy.mode == CohMode::generic) {
        return {GradedDim{{0, std::max(euler_char, Integer(0))}, {1, std::max(Integer(-euler_char), Integer(0))}},
                CohSource::generic_assumption};
    }
    throw AmbiguousCohomology("cohomology of " + describe(f) + " on a genus " + std::to_string(g)
                              + " curve is not determined by rank and degree; supply h0/h1 or use the generic "
                                "policy");
}

BundleClass tensor_class(const BundleClass &a, const BundleClass &b)
{
    if (b.is_structure_sheaf()) {
        return a;
    }
    if (a.is_structure_sheaf()) {
        return b;
    }
    if (a.is_line_bundle() && b.is_line_bundle() && a.degree == -b.degree && dual_label(a.label) == b.label) {
        return BundleClass::structure_sheaf();
    }
    const Integer rank = Integer(a.rank) * b.rank;
    const Integer degree = Integer(a.rank) * b.degree + Integer(b.rank) * a.degree;
    return BundleClass(a.label + "*" + b.label, to_int64(rank), to_int64(degree));
}

BundleClass dual_class(const BundleClass &a)
{
    if (a.is_structure_sheaf()) {
        return a;
    }
    return BundleClass(dual_label(a.label), a.rank, -a.degree);
}

BundleClass hom_class(const BundleClass &f, const BundleClass &g)
{
    return tensor_class(dual_class(f), g);
}

CohomologyResult resolve_ext_groups(const CurveModel &c, const BundleClass &f, const BundleClass &g,
                                    CohPolicy policy)
{
    return resolve_cohomology(c, hom_class(f, g), policy);
}

BundleClass ext_power_class(const BundleClass &f, std::int64_t k)
{
    if (k < 1 || k > f.rank) {
        throw OutOfRange("wedge power " + std::to_string(k) + " of " + describe(f) + " outside [1, rank]");
    }
    if (k == 1) {
        return f;
    }
    const Integer rank = binomial(f.rank, k);
    const Integer degree = binomial(f.rank - 1, k - 1) * f.degree;
    return BundleClass("wedge" + std::to_string(k) + "(" + f.label + ")", to_int64(rank), to_int64(degree));
}

BundleClass sym_power_class(const BundleClass &f, std::int64_t k)
{
    if (k < 0) {
        throw OutOfRange("symmetric power " + std::to_string(k) + " of " + describe(f) + " is negative");
    }
    if (k == 0) {
        return BundleClass::structure_sheaf();
    }
    if (k == 1) {
        return f;
    }
    const Integer rank = binomial(f.rank + k - 1, k);
    const Integer degree = binomial(f.rank + k - 1, k - 1) * f.degree;
    return BundleClass("S" + std::to_string(k) + "(" + f.label + ")", to_int64(rank), to_int64(degree));
}

std::string to_string(const BundleClass &f)
{
    std::string out = f.label + "(rank " + std::to_string(f.rank) + ", degree " + std::to_string(f.degree);
    if (f.coh_override) {
        out += ", h0 " + f.coh_override->h0.str() + ", h1 " + f.coh_override->h1.str();
    }
    return out + ")";
}

} // namespace quotcoh
