#include <gtest/gtest.h>

#include <quotcoh/errors.hpp>
#include <quotcoh/geometry.hpp>
#include <quotcoh/oracle.hpp>

#include <bit>
#include <random>

using namespace quotcoh;
using namespace quotcoh::geometry;

namespace
{

// Number of k-subsets of a set of r_sub + r_quot elements, counted directly.
Integer brute_subsets(const std::vector<FiltrationSplit> &splits)
{
    Integer product = 1;
    for (const auto &s : splits) {
        const std::int64_t n = s.r_sub + s.r_quot;
        std::int64_t count = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) == s.k) {
                ++count;
            }
        }
        product *= count;
    }
    return product;
}

} // namespace

TEST(Geometry, Dimensions)
{
    for (int r = 2; r <= 5; ++r) {
        for (int d = 1; d <= 6; ++d) {
            const BundleClass e("E", r, 3);
            EXPECT_EQ(dim_quot(e, d), d * r);
            EXPECT_EQ(dim_flag(e, d), dim_quot(e, d));
            EXPECT_EQ(taut_rank(BundleClass("F", r + 1, 0), d), d * (r + 1));
        }
    }
}

TEST(Geometry, FlagPoincareExamples)
{
    const BundleClass e("E", 2, 0);
    EXPECT_EQ(poincare_flag(CurveModel(0), e, 1), (GradedDim{{0, 1}, {2, 2}, {4, 1}}));
    EXPECT_EQ(poincare_flag(CurveModel(1), e, 1), (GradedDim{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}));
}

TEST(Geometry, FlagPoincareProperties)
{
    for (int g = 0; g <= 3; ++g) {
        for (int r = 2; r <= 4; ++r) {
            for (int d = 1; d <= 4; ++d) {
                const CurveModel c(g);
                const BundleClass e("E", r, 0);
                const auto p = poincare_flag(c, e, d);
                EXPECT_TRUE(is_palindromic(p, dim_flag(e, d)));
                EXPECT_EQ(p.max_degree(), 2 * dim_flag(e, d));
                Integer tot = 1;
                Integer eu = 1;
                for (int i = 0; i < d; ++i) {
                    tot *= (2 + 2 * g) * r;
                    eu *= (2 - 2 * g) * r;
                }
                EXPECT_EQ(total(p), tot);
                EXPECT_EQ(euler(p), eu);
            }
        }
    }
}

TEST(Geometry, SymmetricProductPoincare)
{
    for (int d = 1; d <= 6; ++d) {
        GradedDim projective;
        for (int i = 0; i <= d; ++i) {
            projective = direct_sum(projective, GradedDim::concentrated(2 * i, 1));
        }
        EXPECT_EQ(poincare_sym(CurveModel(0), d), projective);
    }
    EXPECT_EQ(poincare_sym(CurveModel(1), 2), (GradedDim{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}));

    // Cross-check against direct monomial counting on a basis of H^*(C).
    for (int g = 0; g <= 2; ++g) {
        const oracle::GradedBasis basis = oracle::GradedBasis::from_dims(GradedDim{{0, 1}, {1, 2 * g}, {2, 1}});
        for (int d = 1; d <= 4; ++d) {
            const auto p = poincare_sym(CurveModel(g), d);
            EXPECT_EQ(p, oracle::enumerate_sym(basis, d));
            EXPECT_TRUE(is_palindromic(p, d));
        }
    }
}

TEST(Geometry, PalindromeDetection)
{
    EXPECT_TRUE(is_palindromic(GradedDim{{0, 1}, {2, 3}, {4, 1}}, 2));
    EXPECT_FALSE(is_palindromic(GradedDim{{0, 1}, {2, 3}, {4, 2}}, 2));
    EXPECT_FALSE(is_palindromic(GradedDim{{0, 1}, {2, 1}}, 2));
}

TEST(Geometry, FiltrationRankMatchesSubsetCount)
{
    std::vector<FiltrationSplit> all;
    for (int rs = 0; rs <= 4; ++rs) {
        for (int rq = 0; rs + rq <= 4; ++rq) {
            for (int k = 1; k <= rs + rq; ++k) {
                all.push_back({rs, rq, k});
            }
        }
    }
    std::size_t checked = 0;
    for (const auto &a : all) {
        EXPECT_TRUE(filtration_rank_check({a})) << a.r_sub << "," << a.r_quot << "," << a.k;
        for (const auto &b : all) {
            ASSERT_TRUE(filtration_rank_check({a, b}));
            ++checked;
        }
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 500; ++i) {
        const std::vector<FiltrationSplit> three{all[pick(rng)], all[pick(rng)], all[pick(rng)]};
        ASSERT_TRUE(filtration_rank_check(three));
        ++checked;
    }
    EXPECT_GT(checked, all.size());
    for (const auto &a : all) {
        EXPECT_EQ(brute_subsets({a}), binomial(a.r_sub + a.r_quot, a.k));
    }
    EXPECT_EQ(brute_subsets({{2, 2, 2}, {1, 3, 3}}), 6 * 4);
}

TEST(Geometry, FiltrationRejectsInvalidSplits)
{
    EXPECT_THROW(filtration_rank_check({{-1, 2, 1}}), OutOfRange);
    EXPECT_THROW(filtration_rank_check({{1, 1, 0}}), OutOfRange);
    EXPECT_THROW(filtration_rank_check({{1, 1, 3}}), OutOfRange);
    EXPECT_TRUE(filtration_rank_check({}));
}

TEST(Geometry, TautologicalSesRanks)
{
    for (int r = 1; r <= 5; ++r) {
        for (int d = 1; d <= 6; ++d) {
            EXPECT_TRUE(taut_ses_rank_check(BundleClass("F", r, 0), d));
        }
    }
    EXPECT_THROW(taut_ses_rank_check(BundleClass::line("F", 0), 0), OutOfRange);
}

TEST(Geometry, HomRanks)
{
    const BundleClass f("F", 2, 0);
    const BundleClass g("G", 2, 0);
    EXPECT_EQ(hom_taut_rank(f, g, 2), 16);
    EXPECT_EQ(hom_sym_taut_rank(f, g, 2), 8);
    for (int d = 1; d <= 5; ++d) {
        EXPECT_EQ(hom_taut_rank(BundleClass::line("A", 0), BundleClass::line("B", 1), d), d * d);
        EXPECT_EQ(hom_sym_taut_rank(BundleClass::line("A", 0), BundleClass::line("B", 1), d), d);
    }
}

TEST(Geometry, SpaceInfo)
{
    const CurveModel c(1);
    const BundleClass e("E", 3, 0);
    const auto q = quot_info(e, 2);
    EXPECT_EQ(q.dimension, 6);
    EXPECT_FALSE(q.poincare.has_value());
    const auto fl = flag_info(c, e, 2);
    EXPECT_EQ(fl.dimension, 6);
    ASSERT_TRUE(fl.poincare.has_value());
    EXPECT_EQ(*fl.poincare, poincare_flag(c, e, 2));
    const auto s = sym_product_info(c, 3);
    EXPECT_EQ(s.dimension, 3);
    EXPECT_EQ(*s.poincare, poincare_sym(c, 3));
    EXPECT_THROW(quot_info(e, -1), OutOfRange);
}
