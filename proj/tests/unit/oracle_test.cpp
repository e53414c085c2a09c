#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include <quotcoh/errors.hpp>
#include <quotcoh/oracle.hpp>

using namespace quotcoh;
using oracle::BasisElement;
using oracle::GradedBasis;

TEST(Oracle, SymExamples)
{
    EXPECT_EQ(oracle::enumerate_sym(GradedBasis({{"x", 0}}), 3), (GradedDim{{0, 1}}));
    // x^2, x*theta
    EXPECT_EQ(oracle::enumerate_sym(GradedBasis({{"x", 0}, {"theta", 1}}), 2), (GradedDim{{0, 1}, {1, 1}}));
    // theta*eta only
    EXPECT_EQ(oracle::enumerate_sym(GradedBasis({{"theta", 1}, {"eta", 1}}), 2), (GradedDim{{2, 1}}));
}

TEST(Oracle, ExtExamples)
{
    EXPECT_EQ(oracle::enumerate_ext(GradedBasis({{"x", 0}, {"y", 0}}), 2), (GradedDim{{0, 1}}));
    EXPECT_EQ(oracle::enumerate_ext(GradedBasis({{"theta", 1}}), 3), (GradedDim{{3, 1}}));
    const GradedBasis any({{"a", -2}, {"b", 1}, {"c", 3}});
    EXPECT_EQ(oracle::enumerate_ext(any, 0), (GradedDim{{0, 1}}));
    EXPECT_EQ(oracle::enumerate_sym(any, 0), (GradedDim{{0, 1}}));
    EXPECT_EQ(oracle::enumerate_sym(GradedBasis{}, 0), (GradedDim{{0, 1}}));
    EXPECT_TRUE(oracle::enumerate_sym(GradedBasis{}, 1).is_zero());
}

TEST(Oracle, Guards)
{
    std::vector<BasisElement> many;
    for (int i = 0; i < 13; ++i) {
        many.push_back({"x" + std::to_string(i), 0});
    }
    EXPECT_THROW(oracle::enumerate_sym(GradedBasis(many), 1), OracleBoundExceeded);
    EXPECT_THROW(oracle::enumerate_ext(GradedBasis({{"x", 0}}), 13), OracleBoundExceeded);
    EXPECT_THROW(oracle::enumerate_ext(GradedBasis({{"x", 0}}), -1), OutOfRange);
    EXPECT_THROW(GradedBasis({{"x", 0}, {"x", 1}}), std::invalid_argument);
}

TEST(Oracle, DimsBridge)
{
    const GradedDim dims{{-1, 2}, {0, 1}, {3, 1}};
    const auto basis = GradedBasis::from_dims(dims);
    EXPECT_EQ(basis.size(), 4u);
    EXPECT_EQ(basis.dims(), dims);
}

TEST(OracleProperties, PermutationAndLabelInvariance)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> degree(-2, 3);
    std::uniform_int_distribution<int> size(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BasisElement> elements;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) {
            elements.push_back({"v" + std::to_string(i), degree(rng)});
        }
        auto shuffled = elements;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto &e : shuffled) {
            e.label = "w_" + e.label;
        }
        const GradedBasis a(elements);
        const GradedBasis b(shuffled);
        for (int k = 0; k <= 5; ++k) {
            EXPECT_EQ(oracle::enumerate_sym(a, k), oracle::enumerate_sym(b, k));
            EXPECT_EQ(oracle::enumerate_ext(a, k), oracle::enumerate_ext(b, k));
        }
    }
}

TEST(OracleProperties, AllOddSymTerminates)
{
    const GradedBasis odd({{"a", 1}, {"b", -1}, {"c", 3}});
    for (int k = 4; k <= 8; ++k) {
        EXPECT_TRUE(oracle::enumerate_sym(odd, k).is_zero());
    }
    EXPECT_EQ(oracle::enumerate_sym(odd, 3), (GradedDim{{3, 1}}));
    // An even element keeps every symmetric power nonzero.
    const GradedBasis mixed({{"a", 1}, {"x", 2}});
    for (int k = 0; k <= 8; ++k) {
        EXPECT_FALSE(oracle::enumerate_sym(mixed, k).is_zero());
    }
}
