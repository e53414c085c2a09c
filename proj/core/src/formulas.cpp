#include <quotcoh/formulas.hpp>

#include <algorithm>

#include <quotcoh/errors.hpp>

namespace quotcoh
{

namespace
{

const std::string cite_sym_coh = "H^*(C^(d), F^[d]) = H^*(F) (x) S^{d-1} H^*(O_C)";
const std::string cite_quot_coh = "H^*(Quot_d(E), F^[[d]]) = H^*(E (x) F) (x) S^{d-1} H^*(O_C)";
const std::string cite_quot_ext = "Ext^*(F^[[d]], G^[[d]]) = Ext^*(F, G) (x) S^{d-1} H^*(O_C)";
const std::string cite_dual_vanishing = "R mu_*( (x)_i wedge^{k_i} F_i^[[d]]v ) = 0 if sum_i min{k_i, rk F_i} < rk E";
const std::string cite_sharpness = "d = 1, rk F >= k >= rk E: R mu_*(wedge^k F^[[1]]v) = (wedge^k Fv) (x) "
                                   "(S^{k - rk E} E)[-rk E + 1] != 0";
const std::string cite_conjecture = "Ext^*((x)_i wedge^{k_i} M_i^[[d]], wedge^l L^[[d]]) = (x)_i S^{k_i} Ext^*(M_i, L) "
                                    "(x) wedge^{l-k} H^*(E (x) L) (x) S^{d-l} H^*(O_C)";
const std::string cite_twisted_sym = "H^*(C^(d), M_(d)) = S^d H^*(M); H^*(C^(d), F^[d] (x) M_(d)) = H^*(F (x) M) "
                                     "(x) S^{d-1} H^*(M)";
const std::string cite_twisted_coh = "H^*(Quot_d(E), F^[[d]] (x) M_((d))) = H^*(E (x) F (x) M) (x) S^{d-1} H^*(M)";
const std::string cite_twisted_vanishing = "H^*(Quot_d(E), M_((d)) (x) (x)_i wedge^{k_i} F_i^[[d]]v) = 0 if "
                                           "sum_i min{k_i, rk F_i} < rk E";
const std::string cite_twisted_ext = "Ext^*(F^[[d]] (x) K_((d)), G^[[d]] (x) M_((d))) = Ext^*(F (x) K, G (x) M) (x) "
                                     "S^{d-1} Ext^*(K, M)";

// A graded dimension together with whether the generic assumption was used
// anywhere in producing it.
struct Tracked {
    GradedDim value;
    bool tainted = false;
};

Tracked track(const CohomologyResult &r)
{
    return {r.value, r.generic()};
}

Tracked operator*(const Tracked &a, const Tracked &b)
{
    return {tensor(a.value, b.value), a.tainted || b.tainted};
}

Tracked sym(const Tracked &a, std::int64_t k)
{
    return {sym_power(a.value, k), a.tainted};
}

Tracked structure_cohomology(const CurveModel &c)
{
    return track(resolve_cohomology(c, BundleClass::structure_sheaf(), {CohMode::strict}));
}

// S^{d-1} H^*(O_C).
Tracked sym_structure(const CurveModel &c, std::int64_t d)
{
    return sym(structure_cohomology(c), d - 1);
}

void require_line_bundle(const BundleClass &m, const char *role)
{
    if (!m.is_line_bundle()) {
        throw PreconditionViolated(std::string(role) + " '" + m.label + "' must be a line bundle, has rank "
                                   + std::to_string(m.rank));
    }
}

void check_wedge_factors(const QuotContext &ctx, const std::vector<WedgeFactor> &factors)
{
    if (factors.empty()) {
        throw PreconditionViolated("vanishing query needs at least one factor");
    }
    for (const auto &[bundle, k] : factors) {
        if (k < 1 || k > ctx.d() * bundle.rank) {
            throw OutOfRange("wedge power k = " + std::to_string(k) + " of '" + bundle.label
                             + "' outside [1, d rk F] = [1, " + std::to_string(ctx.d() * bundle.rank) + "]");
        }
    }
}

std::int64_t min_sum(const std::vector<WedgeFactor> &factors)
{
    std::int64_t s = 0;
    for (const auto &[bundle, k] : factors) {
        s += std::min(k, bundle.rank);
    }
    return s;
}

Verdict vanishes_verdict(std::int64_t s, std::int64_t rank_e, std::string citation)
{
    Verdict v;
    v.kind = VerdictKind::vanishes;
    v.reason = "sum_i min{k_i, rk F_i} = " + std::to_string(s) + " < rk E = " + std::to_string(rank_e);
    v.citation = std::move(citation);
    return v;
}

Verdict not_covered_verdict(std::string reason, std::string citation)
{
    Verdict v;
    v.kind = VerdictKind::not_covered;
    v.reason = std::move(reason);
    v.citation = std::move(citation);
    return v;
}

} // namespace

QuotContext::QuotContext(CurveModel curve, BundleClass e_bundle, std::int64_t d, CohPolicy policy)
    : m_curve(curve), m_e_bundle(std::move(e_bundle)), m_d(d), m_policy(policy)
{
    if (m_e_bundle.rank < 2) {
        throw RankAssumptionViolated("Quot scheme requires rk E ≥ 2; bundle '" + m_e_bundle.label + "' has rank "
                                     + std::to_string(m_e_bundle.rank));
    }
    if (d < 1) {
        throw PreconditionViolated("Quot scheme length d must be >= 1, got " + std::to_string(d));
    }
}

std::string to_string(Status s)
{
    return s == Status::proven ? "proven" : "conjectural";
}

std::string to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::vanishes:
        return "Vanishes";
    case VerdictKind::nonzero_witness:
        return "NonzeroWitness";
    case VerdictKind::not_covered:
        return "NotCovered";
    }
    return "?";
}

PredictionReport PredictionReport::make(GradedDim value, Status status, std::string citation, bool generic_tainted)
{
    PredictionReport r;
    r.euler = quotcoh::euler(value);
    r.total = quotcoh::total(value);
    r.value = std::move(value);
    r.status = status;
    r.citation = std::move(citation);
    r.generic_tainted = generic_tainted;
    return r;
}

Status conjecture_status(std::size_t m, std::int64_t wedge_l)
{
    if (wedge_l == 0 || (wedge_l == 1 && m <= 1)) {
        return Status::proven;
    }
    return Status::conjectural;
}

PredictionReport sym_product_taut_coh(const CurveModel &c, const BundleClass &f, std::int64_t d, CohPolicy policy)
{
    if (d < 1) {
        throw PreconditionViolated("symmetric product length d must be >= 1, got " + std::to_string(d));
    }
    const Tracked out = track(resolve_cohomology(c, f, policy)) * sym_structure(c, d);
    return PredictionReport::make(out.value, Status::proven, cite_sym_coh, out.tainted);
}

PredictionReport quot_taut_coh(const QuotContext &ctx, const BundleClass &f)
{
    const auto ef = tensor_class(ctx.e_bundle(), f);
    const Tracked out = track(resolve_cohomology(ctx.curve(), ef, ctx.policy())) * sym_structure(ctx.curve(), ctx.d());
    return PredictionReport::make(out.value, Status::proven, cite_quot_coh, out.tainted);
}

SymProductTautClass quot_pushforward_class(const QuotContext &ctx, const BundleClass &f)
{
    return {tensor_class(ctx.e_bundle(), f), ctx.d()};
}

PredictionReport quot_ext(const QuotContext &ctx, const BundleClass &f, const BundleClass &g)
{
    const Tracked out =
        track(resolve_ext_groups(ctx.curve(), f, g, ctx.policy())) * sym_structure(ctx.curve(), ctx.d());
    return PredictionReport::make(out.value, Status::proven, cite_quot_ext, out.tainted);
}

Verdict dual_vanishing(const QuotContext &ctx, const std::vector<WedgeFactor> &factors)
{
    check_wedge_factors(ctx, factors);
    const std::int64_t rank_e = ctx.e_bundle().rank;
    const std::int64_t s = min_sum(factors);
    if (s < rank_e) {
        return vanishes_verdict(s, rank_e, cite_dual_vanishing);
    }

    const bool sharp_case = ctx.d() == 1 && factors.size() == 1 && factors[0].bundle.rank >= factors[0].k
                            && factors[0].k >= rank_e;
    if (!sharp_case) {
        return not_covered_verdict("sum_i min{k_i, rk F_i} = " + std::to_string(s) + " >= rk E = "
                                       + std::to_string(rank_e)
                                       + " and the d = 1 single-factor sharpness case does not apply",
                                   cite_dual_vanishing);
    }

    const auto &[f, k] = factors[0];
    const BundleClass pushforward =
        tensor_class(ext_power_class(dual_class(f), k), sym_power_class(ctx.e_bundle(), k - rank_e));
    const std::string sheaf = "R mu_* = " + pushforward.label + " (rank " + std::to_string(pushforward.rank)
                              + ", degree " + std::to_string(pushforward.degree) + ") in degree "
                              + std::to_string(rank_e - 1);
    CohomologyResult coh;
    try {
        coh = resolve_cohomology(ctx.curve(), pushforward, ctx.policy());
    } catch (const AmbiguousCohomology &e) {
        return not_covered_verdict(sheaf + " is nonzero but its cohomology is not resolvable: " + e.what(),
                                   cite_sharpness);
    }
    Verdict v;
    v.kind = VerdictKind::nonzero_witness;
    v.reason = sheaf + "; witness is its hypercohomology";
    v.citation = cite_sharpness;
    v.witness = shift(coh.value, -(rank_e - 1));
    v.generic_tainted = coh.generic();
    return v;
}

PredictionReport conjecture_rhs(const QuotContext &ctx, const BundleClass &l_bundle, std::int64_t wedge_l,
                                const std::vector<WedgeFactor> &factors)
{
    const std::int64_t d = ctx.d();
    if (static_cast<std::int64_t>(factors.size()) >= ctx.e_bundle().rank) {
        throw PreconditionViolated("conjecture needs 0 <= m < rk E; got m = " + std::to_string(factors.size())
                                   + ", rk E = " + std::to_string(ctx.e_bundle().rank));
    }
    require_line_bundle(l_bundle, "L");
    if (wedge_l < 0 || wedge_l > d) {
        throw PreconditionViolated("wedge power l = " + std::to_string(wedge_l) + " outside [0, d]");
    }
    std::int64_t k = 0;
    for (const auto &[m, k_i] : factors) {
        require_line_bundle(m, "M_i");
        if (k_i < 0 || k_i > d) {
            throw PreconditionViolated("k_i = " + std::to_string(k_i) + " for '" + m.label + "' outside [0, d]");
        }
        k += k_i;
    }
    const Status status = conjecture_status(factors.size(), wedge_l);
    if (k > wedge_l) {
        return PredictionReport::make(GradedDim{}, status, cite_conjecture, false);
    }

    // Factors with exponent 0 are the unit and are not resolved, so an
    // unused ambiguous input cannot block the evaluation.
    Tracked out{unit(), false};
    for (const auto &[m, k_i] : factors) {
        if (k_i > 0) {
            out = out * sym(track(resolve_ext_groups(ctx.curve(), m, l_bundle, ctx.policy())), k_i);
        }
    }
    if (wedge_l - k > 0) {
        const Tracked el = track(resolve_cohomology(ctx.curve(), tensor_class(ctx.e_bundle(), l_bundle), ctx.policy()));
        out = out * Tracked{ext_power(el.value, wedge_l - k), el.tainted};
    }
    out = out * sym(structure_cohomology(ctx.curve()), d - wedge_l);
    return PredictionReport::make(out.value, status, cite_conjecture, out.tainted);
}

GradedDim functor_composition(const QuotContext &ctx, const GradedDim &v)
{
    return tensor(v, sym_structure(ctx.curve(), ctx.d()).value);
}

PredictionReport twisted_sym_coh(const CurveModel &c, const std::optional<BundleClass> &f, const BundleClass &m,
                                 std::int64_t d, CohPolicy policy)
{
    require_line_bundle(m, "M");
    if (d < 1) {
        throw PreconditionViolated("symmetric product length d must be >= 1, got " + std::to_string(d));
    }
    const Tracked hm = track(resolve_cohomology(c, m, policy));
    if (!f) {
        const Tracked out = sym(hm, d);
        return PredictionReport::make(out.value, Status::proven, cite_twisted_sym, out.tainted);
    }
    const Tracked out = track(resolve_cohomology(c, tensor_class(*f, m), policy)) * sym(hm, d - 1);
    return PredictionReport::make(out.value, Status::proven, cite_twisted_sym, out.tainted);
}

PredictionReport twisted_quot_coh(const QuotContext &ctx, const BundleClass &f, const BundleClass &m)
{
    require_line_bundle(m, "M");
    const auto efm = tensor_class(tensor_class(ctx.e_bundle(), f), m);
    const Tracked out = track(resolve_cohomology(ctx.curve(), efm, ctx.policy()))
                        * sym(track(resolve_cohomology(ctx.curve(), m, ctx.policy())), ctx.d() - 1);
    return PredictionReport::make(out.value, Status::proven, cite_twisted_coh, out.tainted);
}

Verdict twisted_quot_vanishing(const QuotContext &ctx, const std::vector<WedgeFactor> &factors,
                               const BundleClass &m)
{
    require_line_bundle(m, "M");
    check_wedge_factors(ctx, factors);
    const std::int64_t rank_e = ctx.e_bundle().rank;
    const std::int64_t s = min_sum(factors);
    if (s < rank_e) {
        return vanishes_verdict(s, rank_e, cite_twisted_vanishing);
    }
    return not_covered_verdict("sum_i min{k_i, rk F_i} = " + std::to_string(s) + " >= rk E = "
                                   + std::to_string(rank_e),
                               cite_twisted_vanishing);
}

PredictionReport twisted_quot_ext(const QuotContext &ctx, const BundleClass &f, const BundleClass &k_twist,
                                  const BundleClass &g, const BundleClass &m_twist)
{
    require_line_bundle(k_twist, "K");
    require_line_bundle(m_twist, "M");
    const auto &c = ctx.curve();
    const Tracked out =
        track(resolve_ext_groups(c, tensor_class(f, k_twist), tensor_class(g, m_twist), ctx.policy()))
        * sym(track(resolve_ext_groups(c, k_twist, m_twist, ctx.policy())), ctx.d() - 1);
    return PredictionReport::make(out.value, Status::proven, cite_twisted_ext, out.tainted);
}

} // namespace quotcoh
