#ifndef QUOTCOH_FORMULAS_HPP
#define QUOTCOH_FORMULAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <quotcoh/curve.hpp>
#include <quotcoh/graded_dim.hpp>

namespace quotcoh
{

// Curve, fixed bundle E, length d and cohomology policy for Quot_d(E).
class QuotContext
{
public:
    // Throws RankAssumptionViolated if rank E < 2 and PreconditionViolated if
    // d < 1.
    QuotContext(CurveModel curve, BundleClass e_bundle, std::int64_t d, CohPolicy policy = {});

    const CurveModel &curve() const noexcept
    {
        return m_curve;
    }
    const BundleClass &e_bundle() const noexcept
    {
        return m_e_bundle;
    }
    std::int64_t d() const noexcept
    {
        return m_d;
    }
    CohPolicy policy() const noexcept
    {
        return m_policy;
    }

    QuotContext with_d(std::int64_t d) const
    {
        return QuotContext(m_curve, m_e_bundle, d, m_policy);
    }

private:
    CurveModel m_curve;
    BundleClass m_e_bundle;
    std::int64_t m_d;
    CohPolicy m_policy;
};

enum class Status { proven, conjectural };

std::string to_string(Status s);

struct PredictionReport {
    GradedDim value;
    Status status = Status::proven;
    std::string citation;
    // Some input cohomology came from the generic h0/h1 assumption.
    bool generic_tainted = false;
    Integer euler;
    Integer total;

    static PredictionReport make(GradedDim value, Status status, std::string citation, bool generic_tainted);
};

enum class VerdictKind { vanishes, nonzero_witness, not_covered };

std::string to_string(VerdictKind k);

// Outcome of a vanishing query. `witness` is set exactly for nonzero_witness.
struct Verdict {
    VerdictKind kind = VerdictKind::not_covered;
    std::string reason;
    std::string citation;
    std::optional<GradedDim> witness;
    bool generic_tainted = false;
};

// A factor wedge^k F^{[[d]]} (or its dual) in a tensor product.
struct WedgeFactor {
    BundleClass bundle;
    std::int64_t k = 1;
};

// (E (x) F)^{[d]} on the symmetric product.
struct SymProductTautClass {
    BundleClass bundle;
    std::int64_t d = 1;

    std::int64_t rank() const
    {
        return d * bundle.rank;
    }
};

// Status of the conjectural right-hand side for m factors and wedge power l.
// Proven exactly for l = 0, (m, l) = (0, 1) and (m, l) = (1, 1).
Status conjecture_status(std::size_t m, std::int64_t wedge_l);

// H^*(C^(d), F^[d]) = H^*(F) (x) S^{d-1} H^*(O_C).
PredictionReport sym_product_taut_coh(const CurveModel &c, const BundleClass &f, std::int64_t d, CohPolicy policy);

// H^*(Quot_d(E), F^[[d]]) = H^*(E (x) F) (x) S^{d-1} H^*(O_C).
PredictionReport quot_taut_coh(const QuotContext &ctx, const BundleClass &f);

// R mu_* F^[[d]] = (E (x) F)^[d].
SymProductTautClass quot_pushforward_class(const QuotContext &ctx, const BundleClass &f);

// Ext^*(F^[[d]], G^[[d]]) = Ext^*(F, G) (x) S^{d-1} H^*(O_C).
PredictionReport quot_ext(const QuotContext &ctx, const BundleClass &f, const BundleClass &g);

/// Vanishing of R mu_* of a tensor product of wedge^{k_i} F_i^[[d]]-duals.
///
/// - sum_i min(k_i, rk F_i) < rk E: vanishes.
/// - d = 1, one factor with rk F >= k >= rk E: the push-forward is
///   (wedge^k F^dual) (x) (S^{k - rk E} E) placed in degree rk E - 1, and the
///   witness is its hypercohomology when the policy resolves it.
/// - otherwise not covered.
///
/// Throws OutOfRange unless 1 <= k_i <= d rk F_i, PreconditionViolated for an
/// empty factor list.
Verdict dual_vanishing(const QuotContext &ctx, const std::vector<WedgeFactor> &factors);

/// Right-hand side of the conjectural formula
///   Ext^*( (x)_i wedge^{k_i} M_i^[[d]], wedge^l L^[[d]] )
///     = (x)_i S^{k_i} Ext^*(M_i, L) (x) wedge^{l-k} H^*(E (x) L) (x) S^{d-l} H^*(O_C)
/// with k = sum k_i; zero whenever k > l.
///
/// Throws PreconditionViolated unless m < rk E, L and every M_i are line
/// bundles, 0 <= l <= d and 0 <= k_i <= d.
PredictionReport conjecture_rhs(const QuotContext &ctx, const BundleClass &l_bundle, std::int64_t wedge_l,
                                const std::vector<WedgeFactor> &factors);

// v (x) S^{d-1} H^*(O_C): the composite of the tautological functor with its
// right adjoint, applied on the level of graded dimensions.
GradedDim functor_composition(const QuotContext &ctx, const GradedDim &v);

// With f absent: H^*(C^(d), M_(d)) = S^d H^*(M).
// With f present: H^*(C^(d), F^[d] (x) M_(d)) = H^*(F (x) M) (x) S^{d-1} H^*(M).
PredictionReport twisted_sym_coh(const CurveModel &c, const std::optional<BundleClass> &f, const BundleClass &m,
                                 std::int64_t d, CohPolicy policy);

// H^*(Quot_d, F^[[d]] (x) M_((d))) = H^*(E (x) F (x) M) (x) S^{d-1} H^*(M).
PredictionReport twisted_quot_coh(const QuotContext &ctx, const BundleClass &f, const BundleClass &m);

// Vanishing of H^*(Quot_d, M_((d)) (x) (x)_i wedge^{k_i} F_i^[[d]]-dual) under
// the same numerical condition as dual_vanishing.
Verdict twisted_quot_vanishing(const QuotContext &ctx, const std::vector<WedgeFactor> &factors,
                               const BundleClass &m);

// Ext^*(F^[[d]] (x) K_((d)), G^[[d]] (x) M_((d)))
//   = Ext^*(F (x) K, G (x) M) (x) S^{d-1} Ext^*(K, M).
PredictionReport twisted_quot_ext(const QuotContext &ctx, const BundleClass &f, const BundleClass &k_twist,
                                  const BundleClass &g, const BundleClass &m_twist);

} // namespace quotcoh

#endif
