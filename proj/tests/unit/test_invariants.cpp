#include <gtest/gtest.h>

#include <random>

#include "pmc/error.hpp"
#include "pmc/invariants.hpp"
#include "pmc/normal_form.hpp"

using namespace pmc;

TEST(Invariants, Genus) {
    EXPECT_EQ(genus({3, 2, 1, 0}, 3), 7);
    for (long long g1 = 2; g1 <= 6; ++g1) EXPECT_EQ(genus({3, g1, 2 * g1 - 2, 0}, 3), 9 * g1 - 8);
    EXPECT_EQ(genus({4, 5, 3, 0}, 1), 5);
    EXPECT_THROW(genus({3, 2, 1, 0}, 0), RangeError);
    EXPECT_THROW(genus({3, 2, 1, 0}, 4), RangeError);
    for (int i = 2; i <= 6; ++i) {
        CurveParams cp{6, 3, 2, 0};
        EXPECT_EQ(genus(cp, i) - genus(cp, i - 1), (cp.g1 - 1) + (i - 1) * cp.delta);
    }
}

TEST(Invariants, DegreeExamples) {
    CurveParams cp{3, 2, 1, 1};
    EXPECT_EQ(deg_pure_quotient(cp, {0, 1}, 1), Rational(1));
    EXPECT_EQ(deg_pure_quotient(cp, {0, 1}, 2), Rational(1));
    EXPECT_EQ(deg_pure_quotient(cp, {0, 1}, 3), Rational(1));
    EXPECT_EQ(deg_second_filtration({2, 2, 2, 4}, {2}, 1), Rational(2));
    // Line bundles: Deg F^{(i)} = iD/n - i(n-i)delta/2.
    CurveParams c4{4, 2, 3, 5};
    for (int i = 1; i <= 3; ++i)
        EXPECT_EQ(deg_second_filtration(c4, {0, 0, 0}, i), Rational(i * 5, 4) - Rational(i * (4 - i) * 3, 2));
}

TEST(Invariants, DegreeAdditivityFuzz) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 3000; ++t) {
        CurveParams cp{2 + static_cast<int>(rng() % 7), 2, static_cast<long long>(rng() % 6),
                       static_cast<long long>(rng() % 25) - 12};
        IndexVector beta(static_cast<std::size_t>(cp.n - 1));
        int v = 0;
        for (auto& b : beta) b = v = v + static_cast<int>(rng() % 3);
        if (beta.back() > 8) continue;
        for (int i = 1; i <= cp.n - 1; ++i)
            EXPECT_EQ(deg_pure_quotient(cp, beta, i) + deg_second_filtration(cp, beta, cp.n - i), Rational(cp.D));
    }
}

TEST(Invariants, DualIndices) {
    EXPECT_EQ(dual_indices({1, 2, 3}), (IndexVector{1, 2, 3}));
    EXPECT_EQ(dual_indices({0, 2}), (IndexVector{2, 2}));
    EXPECT_EQ(dual_indices({0, 0, 0}), (IndexVector{0, 0, 0}));
    EXPECT_THROW(dual_indices({2, 1}), ShapeError);
    for (int n = 2; n <= 8; ++n)
        for (const auto& b : monotone_vectors(n - 1, n <= 5 ? 8 : 4)) {
            IndexVector d = dual_indices(b);
            EXPECT_TRUE(is_monotone(d));
            EXPECT_EQ(dual_indices(d), b);
        }
}

TEST(Invariants, SubIndices) {
    EXPECT_EQ(sub_indices({1, 2, 3}, 3), (IndexVector{1, 2}));
    EXPECT_EQ(sub_indices({1, 2}, 2), (IndexVector{1}));
    EXPECT_EQ(sub_indices({4, 4, 4, 4}, 4), (IndexVector{0, 0, 0}));
    EXPECT_THROW(sub_indices({1, 2}, 1), RangeError);
    EXPECT_THROW(sub_indices({1, 2}, 3), RangeError);
    // beta_j(F^{(i)}) = beta_{i-1}(F^dual) - beta_{i-j-1}(F^dual).
    for (int n = 3; n <= 6; ++n)
        for (const auto& b : monotone_vectors(n - 1, 4)) {
            IndexVector d = dual_indices(b);
            auto at = [&](int k) { return k <= 0 ? 0 : d[static_cast<std::size_t>(k - 1)]; };
            for (int i = 2; i <= n - 1; ++i) {
                IndexVector s = sub_indices(b, i);
                for (int j = 1; j <= i - 1; ++j) EXPECT_EQ(s[static_cast<std::size_t>(j - 1)], at(i - 1) - at(i - j - 1));
            }
        }
}

TEST(Invariants, RankDegreeConversion) {
    CurveParams cp{4, 2, 3, 0};
    RankDegree lb = rank_degree_conversion(cp, Rational(1), Rational(7));
    EXPECT_EQ(lb.Rk, Rational(4));
    EXPECT_EQ(lb.Deg, Rational(7 - 4 * 3 * 3 / 2));
    RankDegree tor = rank_degree_conversion(cp, Rational(0), Rational(5));
    EXPECT_EQ(tor.Rk, Rational(0));
    EXPECT_EQ(tor.Deg, Rational(5));
    RankDegree one = rank_degree_conversion({1, 2, 3, 0}, Rational(2), Rational(3));
    EXPECT_EQ(one.Rk, Rational(2));
    EXPECT_EQ(one.Deg, Rational(3));
}

TEST(Invariants, DegTensor) {
    CurveParams cp{3, 2, 2, 0};
    EXPECT_EQ(deg_tensor(cp, 3, 5, 1, 4), 5 + 4 + 3 * 2);
    EXPECT_EQ(deg_tensor(cp, 3, 5, 1, -3 * 2 * 2 / 2), 5);
    EXPECT_EQ(deg_tensor(cp, 0, 5, 2, 7), 10);
    EXPECT_THROW(deg_tensor(cp, 1, 0, 0, 1), DomainError);
}

TEST(Invariants, Divisibility) {
    // n | D + n(n-1)/2 delta - sum(beta).
    EXPECT_TRUE(divisibility_ok({3, 2, 1, 1}, {0, 1}));
    EXPECT_FALSE(divisibility_ok({3, 2, 1, 1}, {1, 1}));
    EXPECT_TRUE(divisibility_ok({3, 2, 1, 2}, {1, 1}));
    for (long long D = -6; D <= 6; ++D)
        for (long long delta = 1; delta <= 4; ++delta) {
            CurveParams cp{4, 2, delta, D};
            EXPECT_EQ(divisibility_ok(cp, {0, 0, 0}), ((D + 6 * delta) % 4 + 4) % 4 == 0);
        }
    EXPECT_EQ(format_rational(Rational(3, 2)), "3/2");
    EXPECT_EQ(format_rational(Rational(-4)), "-4");
}
