#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmc/error.hpp"
#include "pmc/invariants.hpp"
#include "pmc/module.hpp"
#include "pmc/normal_form.hpp"

using namespace pmc;

namespace {

ModuleRep I(int n, int N, std::uint32_t p, std::vector<std::string> gens) {
    return ideal_from_text(RingParams{n, N, p}, gens);
}

std::vector<RingElem> parse_all(const RingParams& P, const std::vector<std::string>& gens) {
    std::vector<RingElem> out;
    for (const auto& g : gens) out.push_back(parse_elem(g, P));
    return out;
}

std::vector<int> torsions(const GradedReport& r) {
    std::vector<int> t;
    for (const auto& l : r.levels) t.push_back(l.torsion);
    return t;
}

std::vector<int> ranks(const GradedReport& r) {
    std::vector<int> t;
    for (const auto& l : r.levels) t.push_back(l.rank);
    return t;
}

}  // namespace

TEST(Module, SpanLengths) {
    const int N = 10;
    EXPECT_EQ(I(3, N, 2, {"1"}).length(), 3u * N);
    EXPECT_EQ(I(2, N, 2, {"x^3", "y"}).length(), 2u * N - 3);
    EXPECT_EQ(I(3, N, 2, {"x^2", "x*y", "y^2"}).length(), 3u * N - 3);
    EXPECT_EQ(span_from_generators(RingParams{2, N, 2}, 1, {}).length(), 0u);
}

TEST(Module, SpanMatchesBruteForce) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        RingParams P{1 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 5), t % 2 ? 3u : 2u};
        std::vector<RingElem> gens;
        for (int k = 0, m = 1 + static_cast<int>(rng() % 3); k < m; ++k) {
            RingElem g = RingElem::zero(P);
            for (int i = 0; i < P.n; ++i)
                for (int a = 0; a < P.N; ++a)
                    if (rng() % 4 == 0) g.set(i, a, static_cast<std::uint32_t>(rng() % P.p));
            gens.push_back(g);
        }
        bool any = false;
        for (const auto& g : gens) any = any || !g.is_zero();
        if (!any) continue;
        EXPECT_EQ(static_cast<int>(ideal(P, gens).length()), oracle::ideal_dim(gens));
    }
}

TEST(Module, QuotientLength) {
    const int N = 12;
    ModuleRep A = I(3, N, 2, {"1"});
    EXPECT_EQ(quotient_length(A, I(3, N, 2, {"x^2", "y^2"})), 4);
    EXPECT_EQ(quotient_length(A, I(3, N, 2, {"x^2", "x*y", "y^2"})), 3);
    EXPECT_EQ(quotient_length(A, A), 0);
    EXPECT_THROW(quotient_length(I(3, N, 2, {"x"}), A), ContainmentError);
}

TEST(Module, FirstFiltrationLengths) {
    const int N = 12;
    auto f = first_filtration(I(3, N, 2, {"x^2", "x*y", "y^2"}));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].length(), 3u * N - 3);
    EXPECT_EQ(f[1].length(), 2u * N - 3);
    EXPECT_EQ(f[2].length(), 1u * N - 2);
    auto g = first_filtration(I(2, N, 2, {"x^3", "y"}));
    EXPECT_EQ(g[1].length(), 1u * N - 3);
    auto a = first_filtration(I(4, N, 2, {"1"}));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(a[static_cast<std::size_t>(i)].length(), static_cast<std::size_t>((4 - i) * N));
}

TEST(Module, SecondFiltration) {
    const int N = 12;
    auto s = second_filtration(I(2, N, 2, {"x^3", "y"}));
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].length(), 0u);
    EXPECT_EQ(s[1].length(), static_cast<std::size_t>(N));
    auto t = second_filtration(I(3, N, 2, {"x^2", "x*y", "y^2"}));
    EXPECT_EQ(t[1].length(), static_cast<std::size_t>(N));
    auto a = second_filtration(I(3, N, 2, {"1"}));
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(a[static_cast<std::size_t>(i)].length(), static_cast<std::size_t>(i * N));
    EXPECT_EQ(depth(I(3, N, 2, {"y"})), 2);
}

TEST(Module, GradedReports) {
    EXPECT_EQ(torsions(graded_report(I(3, 18, 2, {"x^2", "x*y", "y^2"}), Filtration::first)),
              (std::vector<int>{2, 1, 0}));
    for (int b = 1; b <= 3; ++b) {
        auto r = graded_report(I(3, min_precision(3, b), 2, {"x^" + std::to_string(b), "y^2"}), Filtration::first);
        EXPECT_EQ(torsions(r), (std::vector<int>{b, 0, 0}));
        EXPECT_EQ(ranks(r), (std::vector<int>{1, 1, 1}));
    }
    auto a = graded_report(I(4, 8, 3, {"1"}), Filtration::second);
    EXPECT_EQ(ranks(a), (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(torsions(a), (std::vector<int>{0, 0, 0, 0}));
}

TEST(Module, IndicesExamples) {
    EXPECT_EQ(indices(I(3, 18, 2, {"x^2", "x*y", "y^2"})), (IndexVector{1, 2}));
    EXPECT_EQ(indices(I(3, 12, 2, {"x", "y"})), (IndexVector{1, 1}));
    EXPECT_EQ(indices(I(4, 8, 2, {"1"})), (IndexVector{0, 0, 0}));
    EXPECT_EQ(indices(I(2, 16, 2, {"x^3", "y"})), (IndexVector{3}));
    EXPECT_EQ(indices_by_definition(I(2, 16, 2, {"x^3", "y"})), (IndexVector{3}));
    EXPECT_EQ(indices_by_definition(I(3, 18, 2, {"x^2", "x*y", "y^2"})), (IndexVector{1, 2}));
    EXPECT_EQ(indices_by_definition(I(3, 8, 2, {"1"})), (IndexVector{0, 0}));
}

TEST(Module, NonInvertibleIsRejected) {
    RingParams P{2, 8, 2};
    auto one = RingElem::one(P), zero = RingElem::zero(P);
    EXPECT_THROW(indices(span_from_generators(P, 2, {{one, zero}, {zero, one}})), RankError);
    EXPECT_THROW(indices(span_from_generators(P, 1, {})), RankError);
    // Modules supported on a smaller subcurve have shorter index vectors.
    EXPECT_EQ(indices(I(2, 8, 2, {"y"})), IndexVector{});
    EXPECT_EQ(indices(I(3, 12, 2, {"x*y", "y^2"})), (IndexVector{1}));
}

// Monomial staircases have indices a_0 - a_k.
TEST(Module, IndicesMatchStaircaseOracle) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<int> a(static_cast<std::size_t>(n));
        a[static_cast<std::size_t>(n - 1)] = static_cast<int>(rng() % 2);
        for (int k = n - 2; k >= 0; --k) a[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k + 1)] + static_cast<int>(rng() % 3);
        std::vector<std::string> gens;
        for (int k = 0; k < n; ++k) gens.push_back("x^" + std::to_string(a[static_cast<std::size_t>(k)]) + "*y^" + std::to_string(k));
        const IndexVector want = oracle::staircase_indices(a);
        ModuleRep M = I(n, min_precision(n, want.back()), 2, gens);
        EXPECT_EQ(indices(M), want);
        EXPECT_EQ(indices_by_definition(M), want);
    }
}

TEST(Module, LowPrecisionIsRaisedForRebuildableModules) {
    ModuleRep M = I(3, 8, 2, {"x^2", "x*y", "y^2"});
    EXPECT_EQ(indices(M), (IndexVector{1, 2}));
    ModuleRep fixed = module_from_subspace(M.ambient(), M.numerator(), std::nullopt, nullptr);
    EXPECT_THROW(indices(fixed), PrecisionError);
}

TEST(Module, PureQuotient) {
    ModuleRep M = I(3, 18, 2, {"x^2", "x*y", "y^2"});
    EXPECT_EQ(indices(pure_quotient(M, 2)), (IndexVector{1}));
    EXPECT_EQ(pure_quotient(M, 3).length(), M.length());
    EXPECT_THROW(pure_quotient(M, 0), RangeError);
    EXPECT_THROW(pure_quotient(M, 4), RangeError);
}

TEST(Module, SubIndicesMatchSecondFiltration) {
    for (int n = 3; n <= 4; ++n)
        for (const auto& nf : enumerate_normal_forms(n, 2, 2)) {
            ModuleRep M = ideal_from_indices(nf, RingParams{n, min_precision(n, nf.beta.back()), 2});
            auto second = second_filtration(M);
            for (int i = 2; i <= n - 1; ++i)
                EXPECT_EQ(indices(second[static_cast<std::size_t>(i)]), sub_indices(nf.beta, i))
                    << "beta=" << nf.beta[0] << ".. i=" << i;
        }
}

TEST(Module, DualOracle) {
    EXPECT_EQ(indices(dual_module_oracle(I(3, 8, 2, {"1"}))), (IndexVector{0, 0}));
    for (int b = 1; b <= 3; ++b)
        EXPECT_EQ(indices(dual_module_oracle(I(2, min_precision(2, b), 2, {"x^" + std::to_string(b), "y"}))),
                  (IndexVector{b}));
    EXPECT_EQ(indices(dual_module_oracle(I(3, 18, 2, {"x^2", "x*y", "y^2"}))), (IndexVector{1, 2}));
    EXPECT_EQ(indices(dual_module_oracle(I(3, 18, 3, {"x^2", "y^2"}))), (IndexVector{2, 2}));
}

TEST(Module, Isomorphism) {
    ModuleRep a = I(3, 18, 2, {"x^2", "x*y", "y^2"});
    EXPECT_EQ(is_isomorphic_oracle(a, a), IsoVerdict::yes);
    for (std::uint32_t p : {2u, 3u}) {
        EXPECT_EQ(is_isomorphic_oracle(I(2, 12, p, {"x^2 + y", "y"}), I(2, 12, p, {"x^2", "y"})), IsoVerdict::yes);
        EXPECT_EQ(is_isomorphic_oracle(I(3, 18, p, {"x^2 + y", "x*y", "y^2"}), I(3, 18, p, {"x^2", "x*y", "y^2"})),
                  IsoVerdict::no);
        // A unit multiple and a different generating set of the same ideal.
        EXPECT_EQ(is_isomorphic_oracle(I(3, 18, p, {"x^2 + x^3*y", "x*y", "y^2"}), I(3, 18, p, {"x^2", "x*y", "y^2"})),
                  IsoVerdict::yes);
    }
    EXPECT_EQ(is_isomorphic_oracle(I(3, 18, 2, {"x", "y"}), a), IsoVerdict::no);
    EXPECT_THROW(is_isomorphic_oracle(I(3, 18, 2, {"x"}), I(3, 18, 3, {"x"})), ParameterError);
}

TEST(Module, Generators) {
    ModuleRep M = I(3, 18, 2, {"x^2", "x*y", "y^2", "x^3 + x*y"});
    EXPECT_EQ(minimal_generators(M).size(), 3u);
    EXPECT_EQ(nonzerodivisor_generator(M).x_valuation(0), 2);
    EXPECT_EQ(conductor_exponent(M), 2);
    EXPECT_EQ(conductor_exponent(I(2, 10, 2, {"x^3", "y"})), 3);
    EXPECT_EQ(conductor_exponent(I(2, 10, 2, {"1"})), 0);
}

TEST(Module, PrecisionIndependence) {
    for (const auto& nf : enumerate_normal_forms(3, 2, 2)) {
        ModuleRep M = ideal_from_indices(nf, RingParams{3, min_precision(3, 2), 2});
        ModuleRep M2 = M.at_precision(M.params().N + 4);
        EXPECT_EQ(indices(M2), indices(M));
        EXPECT_EQ(graded_report(M2, Filtration::first), graded_report(M, Filtration::first));
        EXPECT_EQ(quotient_length(ideal(M.params(), {RingElem::one(M.params())}), M),
                  quotient_length(ideal(M2.params(), {RingElem::one(M2.params())}), M2));
    }
}
