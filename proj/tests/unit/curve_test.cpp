#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <quotcoh/curve.hpp>
#include <quotcoh/errors.hpp>

using namespace quotcoh;

namespace
{

const CohPolicy strict{CohMode::strict};
const CohPolicy generic{CohMode::generic};

// Splitting principle by brute force: choose integer Chern roots summing to
// the degree, enumerate k-subsets (wedge) or k-multisets (sym) of roots, and
// count them / add up their root sums.
struct RankDegree {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
};

RankDegree enumerate_roots(const std::vector<std::int64_t> &roots, std::int64_t k, bool with_repetition)
{
    RankDegree out;
    std::vector<std::size_t> pick;
    const std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<std::int64_t>(pick.size()) == k) {
            ++out.rank;
            for (auto i : pick) {
                out.degree += roots[i];
            }
            return;
        }
        for (std::size_t i = start; i < roots.size(); ++i) {
            pick.push_back(i);
            rec(with_repetition ? i : i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST(Curve, RiemannRoch)
{
    EXPECT_EQ(chi(CurveModel(0), BundleClass::line("O3", 3)), 4);
    EXPECT_EQ(chi(CurveModel(2), BundleClass("F", 2, 0)), -2);
    for (int g = 0; g < 5; ++g) {
        EXPECT_EQ(chi(CurveModel(g), BundleClass::structure_sheaf()), 1 - g);
    }
    EXPECT_THROW(CurveModel(-1), OutOfRange);
    EXPECT_THROW(BundleClass("Z", 0, 0), OutOfRange);
}

TEST(Curve, CohomologyRules)
{
    for (int n = 0; n < 6; ++n) {
        EXPECT_EQ(cohomology(CurveModel(0), BundleClass::line("L", n), strict), (GradedDim{{0, n + 1}}));
    }
    for (int g = 0; g < 5; ++g) {
        const CurveModel c(g);
        EXPECT_EQ(cohomology(c, BundleClass::structure_sheaf(), strict), (GradedDim{{0, 1}, {1, g}}));
        EXPECT_EQ(cohomology(c, BundleClass::canonical(c), strict), (GradedDim{{0, g}, {1, 1}}));
    }
    EXPECT_EQ(cohomology(CurveModel(2), BundleClass::line("L", -1), strict), (GradedDim{{1, 2}}));
    // Degree 0 on genus 0 is covered by the deg > 2g-2 rule.
    EXPECT_EQ(cohomology(CurveModel(0), BundleClass::line("L", 0), strict), (GradedDim{{0, 1}}));
    EXPECT_TRUE(cohomology(CurveModel(0), BundleClass::line("L", -1), strict).is_zero());
}

TEST(Curve, StrictRefusesAndGenericGuesses)
{
    const CurveModel c(2);
    const BundleClass l = BundleClass::line("L", 1);
    EXPECT_THROW(cohomology(c, l, strict), AmbiguousCohomology);
    const auto r = resolve_cohomology(c, l, generic);
    EXPECT_TRUE(r.generic());
    EXPECT_TRUE(r.value.is_zero()); // chi = 0

    const BundleClass f("F", 2, 7);
    EXPECT_THROW(cohomology(c, f, strict), AmbiguousCohomology);
    EXPECT_EQ(cohomology(c, f, generic), (GradedDim{{0, 5}}));

    // Degree 2g-2 without the canonical label is not assumed canonical.
    EXPECT_THROW(cohomology(c, BundleClass::line("D", 2), strict), AmbiguousCohomology);
    // Higher rank never uses the line-bundle rules.
    EXPECT_THROW(cohomology(CurveModel(0), BundleClass("E", 2, 4), strict), AmbiguousCohomology);
}

TEST(Curve, Overrides)
{
    const CurveModel c(1);
    const BundleClass ok("F", 2, 1, CohOverride{2, 1});
    EXPECT_EQ(cohomology(c, ok, strict), (GradedDim{{0, 2}, {1, 1}}));
    EXPECT_FALSE(resolve_cohomology(c, ok, strict).generic());
    const BundleClass bad("F", 2, 1, CohOverride{3, 1});
    EXPECT_THROW(cohomology(c, bad, generic), InconsistentOverride);
    EXPECT_THROW(BundleClass("F", 2, 1, CohOverride{-1, 0}), OutOfRange);
    EXPECT_THROW(cohomology(c, BundleClass("K_C", 1, 3), strict), InconsistentOverride);
}

TEST(Curve, RiemannRochConsistencyEverywhere)
{
    for (int g = 0; g <= 3; ++g) {
        const CurveModel c(g);
        for (int r = 1; r <= 4; ++r) {
            for (int e = -6; e <= 6; ++e) {
                const BundleClass f("F", r, e);
                for (const auto policy : {strict, generic}) {
                    try {
                        const auto h = cohomology(c, f, policy);
                        EXPECT_EQ(h[0] - h[1], chi(c, f));
                        EXPECT_EQ(euler(h), chi(c, f));
                    } catch (const AmbiguousCohomology &) {
                        EXPECT_EQ(policy.mode, CohMode::strict);
                    }
                }
            }
        }
    }
}

TEST(Curve, SerreDualitySpotCheck)
{
    for (int g = 0; g <= 4; ++g) {
        const CurveModel c(g);
        const auto k = BundleClass::canonical(c);
        for (int e = -6; e < 0; ++e) {
            const auto l = BundleClass::line("L", e);
            const auto kl = tensor_class(k, dual_class(l));
            ASSERT_GT(kl.degree, 2 * g - 2);
            EXPECT_EQ(cohomology(c, l, strict)[1], cohomology(c, kl, strict)[0]);
        }
    }
}

TEST(Curve, TensorDualHom)
{
    const BundleClass a("A", 2, 0);
    const BundleClass b = BundleClass::line("B", 3);
    EXPECT_TRUE(same_numerics(tensor_class(a, b), BundleClass("x", 2, 6)));
    EXPECT_TRUE(same_numerics(tensor_class(BundleClass::line("U", 0), b), b));
    EXPECT_TRUE(same_numerics(tensor_class(BundleClass("P", 2, 3), BundleClass("Q", 3, -1)), BundleClass("x", 6, 7)));

    EXPECT_TRUE(same_numerics(dual_class(BundleClass("P", 2, 3)), BundleClass("x", 2, -3)));
    EXPECT_TRUE(same_numerics(dual_class(BundleClass::line("U", 0)), BundleClass::line("x", 0)));
    const BundleClass p("P", 2, 3);
    EXPECT_EQ(dual_class(dual_class(p)), p);
    const auto compound = tensor_class(p, b);
    EXPECT_EQ(dual_class(dual_class(compound)), compound);

    const BundleClass f("F", 2, 1);
    const BundleClass g("G", 2, 5);
    EXPECT_EQ(tensor_class(f, g).rank * 2, 8); // Hom(F,G)^[2] has rank 8
    EXPECT_TRUE(same_numerics(hom_class(BundleClass("F", 2, 3), BundleClass("G", 2, 0)), BundleClass("x", 4, -6)));
    EXPECT_EQ(hom_class(BundleClass::structure_sheaf(), g), g);

    // O_C is the unit on the nose, override included.
    const BundleClass e("E", 2, 0, CohOverride{2, 0});
    EXPECT_EQ(tensor_class(e, BundleClass::structure_sheaf()), e);
    // L^v (x) L = O_C for line bundles.
    EXPECT_TRUE(hom_class(b, b).is_structure_sheaf());
}

TEST(Curve, HomIsTensorOfDualExhaustive)
{
    for (int r1 = 1; r1 <= 4; ++r1) {
        for (int r2 = 1; r2 <= 4; ++r2) {
            for (int e1 = -6; e1 <= 6; ++e1) {
                for (int e2 = -6; e2 <= 6; ++e2) {
                    const BundleClass f("F", r1, e1);
                    const BundleClass g("G", r2, e2);
                    EXPECT_EQ(hom_class(f, g), tensor_class(dual_class(f), g));
                    EXPECT_EQ(hom_class(f, g).degree, r1 * e2 - r2 * e1);
                }
            }
        }
    }
}

TEST(Curve, ExtGroups)
{
    for (int g = 0; g <= 3; ++g) {
        const CurveModel c(g);
        const auto o = BundleClass::structure_sheaf();
        EXPECT_EQ(ext_groups(c, o, o, strict), (GradedDim{{0, 1}, {1, g}}));
        const BundleClass f("F", 3, 2);
        EXPECT_EQ(euler(ext_groups(c, f, f, generic)), 9 * (1 - g));
    }
    // Hom(O(1), O) = O(-1) on P^1: h0 = h1 = 0.
    EXPECT_TRUE(ext_groups(CurveModel(0), BundleClass::line("O1", 1), BundleClass::structure_sheaf(), strict).is_zero());
}

TEST(Curve, PowerClassExamples)
{
    EXPECT_TRUE(same_numerics(ext_power_class(BundleClass("F", 2, 5), 2), BundleClass("x", 1, 5)));
    const BundleClass f("F", 3, 2);
    EXPECT_EQ(ext_power_class(f, 1), f);
    EXPECT_TRUE(same_numerics(ext_power_class(f, 2), BundleClass("x", 3, 4)));
    EXPECT_THROW(ext_power_class(f, 0), OutOfRange);
    EXPECT_THROW(ext_power_class(f, 4), OutOfRange);

    EXPECT_TRUE(same_numerics(sym_power_class(BundleClass("F", 2, 1), 2), BundleClass("x", 3, 3)));
    EXPECT_EQ(sym_power_class(f, 1), f);
    EXPECT_TRUE(sym_power_class(f, 0).is_structure_sheaf());
    EXPECT_THROW(sym_power_class(f, -1), OutOfRange);
}

TEST(Curve, DeterminantIsTopWedge)
{
    for (int r = 1; r <= 4; ++r) {
        for (int e = -6; e <= 6; ++e) {
            const auto det = ext_power_class(BundleClass("F", r, e), r);
            EXPECT_EQ(det.rank, 1);
            EXPECT_EQ(det.degree, e);
        }
    }
}

TEST(Curve, PowerClassesMatchSplittingPrinciple)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> root(-3, 3);
    for (int r = 1; r <= 4; ++r) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::int64_t> roots(static_cast<std::size_t>(r));
            for (auto &x : roots) {
                x = root(rng);
            }
            const auto degree = std::accumulate(roots.begin(), roots.end(), std::int64_t{0});
            const BundleClass f("F", r, degree);
            for (int k = 0; k <= 4; ++k) {
                const auto s = enumerate_roots(roots, k, true);
                const auto sp = sym_power_class(f, k);
                EXPECT_EQ(sp.rank, s.rank) << "S^" << k << " rank " << r;
                EXPECT_EQ(sp.degree, s.degree) << "S^" << k << " rank " << r;
                if (k >= 1 && k <= r) {
                    const auto w = enumerate_roots(roots, k, false);
                    const auto wp = ext_power_class(f, k);
                    EXPECT_EQ(wp.rank, w.rank);
                    EXPECT_EQ(wp.degree, w.degree);
                }
            }
        }
    }
}
