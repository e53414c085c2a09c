#ifndef QUOTCOH_GEOMETRY_HPP
#define QUOTCOH_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <quotcoh/curve.hpp>
#include <quotcoh/graded_dim.hpp>

// Dimension, rank and Betti-number bookkeeping. Poincare polynomials here use
// the topological grading (algebraic classes in degree 2) and are never mixed
// with the sheaf-cohomology grading used elsewhere.
namespace quotcoh::geometry
{

struct SpaceInfo {
    std::string name;
    std::int64_t dimension = 0;
    std::optional<GradedDim> poincare;
};

// dim Quot_d(E) = d rk E.
std::int64_t dim_quot(const BundleClass &e, std::int64_t d);
// dim Flag_d(E) = d rk E: each step of the iterated projective-bundle tower
// adds one curve direction and a P^{rk E - 1} fibre.
std::int64_t dim_flag(const BundleClass &e, std::int64_t d);
// rk F^[[d]] = rk F^[d] = d rk F.
std::int64_t taut_rank(const BundleClass &f, std::int64_t d);

// rk Hom(F^[[d]], G^[[d]]) on Quot_d(E).
std::int64_t hom_taut_rank(const BundleClass &f, const BundleClass &g, std::int64_t d);
// rk Hom(F, G)^[d] on C^(d).
std::int64_t hom_sym_taut_rank(const BundleClass &f, const BundleClass &g, std::int64_t d);

// Betti numbers of Flag_d(E): d-fold tensor power of P_C (x) P_{P^{rk E-1}}.
GradedDim poincare_flag(const CurveModel &c, const BundleClass &e, std::int64_t d);
// Betti numbers of C^(d): graded S^d of {0:1, 1:2g, 2:1}.
GradedDim poincare_sym(const CurveModel &c, std::int64_t d);

// Each split is (r_sub, r_quot, k). Checks
//   prod_i C(r_sub + r_quot, k) == sum over l with 0 <= l_i <= min(k_i, r_quot_i)
//                                   of prod_i C(r_sub, k_i - l_i) C(r_quot, l_i),
// the rank count of the filtration of a tensor product of wedge powers of
// extensions. Throws OutOfRange on invalid splits.
struct FiltrationSplit {
    std::int64_t r_sub = 0;
    std::int64_t r_quot = 0;
    std::int64_t k = 1;
};
bool filtration_rank_check(const std::vector<FiltrationSplit> &splits);

// rk F^<d> = rk F + rk F^<d-1> along the tautological short exact sequences
// on Flag_d, with rk F^<0> = 0.
bool taut_ses_rank_check(const BundleClass &f, std::int64_t d);

SpaceInfo quot_info(const BundleClass &e, std::int64_t d);
SpaceInfo flag_info(const CurveModel &c, const BundleClass &e, std::int64_t d);
SpaceInfo sym_product_info(const CurveModel &c, std::int64_t d);

bool is_palindromic(const GradedDim &p, std::int64_t dimension);

} // namespace quotcoh::geometry

#endif
