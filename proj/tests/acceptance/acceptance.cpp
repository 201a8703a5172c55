// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmc/error.hpp"
#include "pmc/ext.hpp"
#include "pmc/moduli.hpp"
#include "pmc/normal_form.hpp"
#include "pmc/stability.hpp"

using namespace pmc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

void fail(Outcome& o, const std::string& why) {
    if (o.ok) o.detail = why;
    o.ok = false;
}

bool is_zero(const IndexVector& b) {
    for (int v : b)
        if (v != 0) return false;
    return true;
}

ModuleRep at_precision(const GeneralNormalForm& nf, int N) {
    return ideal_from_indices(nf, RingParams{nf.n, N, 2});
}

int n_min(const GeneralNormalForm& nf) { return min_precision(nf.n, nf.beta.empty() ? 0 : nf.beta.back()); }

Outcome ac1() {
    Outcome o;
    const std::pair<long long, IndexVector> cases[] = {{1, {0, 1}}, {2, {1, 1}}, {4, {0, 1}}, {5, {1, 1}}};
    for (const auto& [D, beta] : cases) {
        auto comps = enumerate_components({3, 2, 1, D});
        if (comps.size() != 1 || comps[0].beta != beta)
            fail(o, "D=" + std::to_string(D) + " gave " + std::to_string(comps.size()) + " components");
    }
    o.detail = o.ok ? "D=1 -> (0,1), D=2 -> (1,1)" : o.detail;
    return o;
}

Outcome ac2() {
    Outcome o;
    for (std::uint32_t p : {2u, 3u})
        for (int N : {14, 16, 18}) {
            RingParams P{3, N, p};
            ModuleRep a = ideal_from_text(P, {"x^2+y", "x*y", "y^2"});
            ModuleRep b = ideal_from_text(P, {"x^2", "x*y", "y^2"});
            IsoVerdict v = is_isomorphic_oracle(a, b);
            if (v != IsoVerdict::no) fail(o, "p=" + std::to_string(p) + " N=" + std::to_string(N) + ": " + to_string(v));
            if (indices(a) != IndexVector{1, 2} || indices(b) != IndexVector{1, 2})
                fail(o, "indices differ from (1,2)");
        }
    if (o.ok) o.detail = "verdict no at p in {2,3}, N in {14,16,18}";
    return o;
}

Outcome ac3() {
    Outcome o;
    long checked = 0;
    for (std::uint32_t p : {2u, 3u}) {
        for (int n = 2; n <= 5; ++n)
            for (int j = 1; j <= n - 1; ++j)
                for (int b = 1; b <= 3; ++b) {
                    RingParams P{n, min_precision(n, b), p};
                    SpecialNormalForm nf{n, b, j, {}};
                    std::vector<std::vector<XPoly>> zs{{}};
                    if (nf.jbar() >= 1) {
                        zs.push_back(std::vector<XPoly>(static_cast<std::size_t>(nf.jbar()), XPoly{1}));
                        std::vector<XPoly> z(static_cast<std::size_t>(nf.jbar()), XPoly{});
                        z[0] = b >= 2 ? XPoly{0, p - 1} : XPoly{p - 1};
                        zs.push_back(z);
                    }
                    for (const auto& z : zs) {
                        nf.z = z;
                        long got = local_ext1_length(special_ideal(nf, P));
                        ++checked;
                        if (got != ext1_closed_form_special(n, j, b))
                            fail(o, "n=" + std::to_string(n) + " j=" + std::to_string(j) + " b=" + std::to_string(b) +
                                        " got " + std::to_string(got));
                    }
                }
        RingParams P3{3, min_precision(3, 3), p};
        for (const auto& nf : enumerate_normal_forms(3, 3, p)) {
            if (nf.beta[1] == 0) continue;
            long got = local_ext1_length(ideal_from_indices(nf, P3));
            ++checked;
            if (got != ext1_closed_form_n3(nf.beta[0], nf.beta[1]))
                fail(o, "n=3 beta=" + format_indices(nf.beta) + " got " + std::to_string(got));
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " ideals match the closed forms";
    return o;
}

Outcome ac4() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> dn(1, 8), dD(-12, 12), dd(0, 5), dstep(0, 3);
    long checked = 0;
    for (int t = 0; t < 10000; ++t) {
        CurveParams cp{dn(rng), 2, dd(rng), dD(rng)};
        IndexVector beta(static_cast<std::size_t>(cp.n - 1));
        int v = 0;
        for (auto& b : beta) b = v = std::min(8, v + dstep(rng));
        for (int i = 1; i <= cp.n - 1; ++i) {
            ++checked;
            if (deg_pure_quotient(cp, beta, i) + deg_second_filtration(cp, beta, cp.n - i) != Rational(cp.D))
                fail(o, "n=" + std::to_string(cp.n) + " beta=" + format_indices(beta));
        }
    }
    if (o.ok) o.detail = "10000 tuples, " + std::to_string(checked) + " identities";
    return o;
}

Outcome ac5() {
    Outcome o;
    long count = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& nf : enumerate_normal_forms(n, 2, 2)) {
            const int N = n_min(nf);
            ModuleRep M = at_precision(nf, N), M2 = at_precision(nf, N + 2);
            IndexVector a = indices(M), b = indices_by_definition(M);
            ++count;
            if (a != b || a != nf.beta) fail(o, "beta=" + format_indices(nf.beta));
            if (indices(M2) != a || indices_by_definition(M2) != b)
                fail(o, "unstable under N+2 at beta=" + format_indices(nf.beta));
        }
    if (o.ok) o.detail = std::to_string(count) + " normal-form ideals";
    return o;
}

Outcome ac6() {
    Outcome o;
    long count = 0;
    for (int n = 2; n <= 4; ++n)
        for (const auto& nf : enumerate_normal_forms(n, 2, 2)) {
            ModuleRep M = at_precision(nf, n_min(nf));
            ++count;
            if (indices(dual_module_oracle(M)) != dual_indices(indices(M)))
                fail(o, "dual mismatch at beta=" + format_indices(nf.beta));
        }
    long vectors = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& b : monotone_vectors(n - 1, 8)) {
            ++vectors;
            if (dual_indices(dual_indices(b)) != b) fail(o, "involution fails at " + format_indices(b));
        }
    if (o.ok) o.detail = std::to_string(count) + " duals, " + std::to_string(vectors) + " involutions";
    return o;
}

Outcome ac7() {
    Outcome o;
    auto count = [](int n, long long delta, long long D) { return connectivity({n, 2, delta, D}).count; };
    auto tag = [](int n, long long delta, long long D, int c) {
        return "n=" + std::to_string(n) + " delta=" + std::to_string(delta) + " D=" + std::to_string(D) +
               " count=" + std::to_string(c);
    };
    int cases = 0;
    for (long long delta = 1; delta <= 4; ++delta)
        for (long long D = 0; D < 3; ++D, ++cases)
            if (int c = count(3, delta, D); c != 1) fail(o, tag(3, delta, D, c));
    for (long long D = 0; D < 4; ++D, ++cases)
        if (int c = count(4, 3, D); c != 1) fail(o, tag(4, 3, D, c));
    for (long long delta = 1; delta <= 2; ++delta)
        for (long long D = 0; D < 4; ++D, ++cases) {
            int c = count(4, delta, D);
            if (D % 2 == 1 ? c > 2 : c != 1) fail(o, tag(4, delta, D, c));
        }
    for (int n = 2; n <= 5; ++n)
        for (long long delta = 1; delta <= 3; ++delta)
            for (long long D = 0; D < n; ++D, ++cases) {
                long long bound = 1;
                for (int e = 0; e < n - 2; ++e) bound *= n;
                if (int c = count(n, delta, D); c > bound) fail(o, tag(n, delta, D, c));
            }
    if (o.ok) o.detail = std::to_string(cases) + " parameter sets";
    return o;
}

Outcome ac8() {
    Outcome o;
    long count = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& beta : monotone_vectors(n - 1, 6)) {
            CurveParams cp{n, 2, 1, 0};
            ++count;
            long long generic = tangent_dim_generic(cp, beta);
            if (tangent_dimension(cp, generic_config(n, beta)) != generic)
                fail(o, "per-point mismatch at " + format_indices(beta));
            if ((generic == genus(cp, n)) != is_zero(beta)) fail(o, "reducedness fails at " + format_indices(beta));
        }
    if (o.ok) o.detail = std::to_string(count) + " index vectors";
    return o;
}

Outcome ac9() {
    Outcome o;
    long found = 0;
    for (int n = 2; n <= 6; ++n)
        for (long long delta = 0; delta <= 3; ++delta)
            for (long long D = -n; D <= n; ++D)
                for (const auto& beta : monotone_vectors(n - 1, n <= 4 ? 3 * n : 8)) {
                    CurveParams cp{n, 2, delta, D};
                    StabilityVerdict v = check_stability(cp, beta);
                    if (!v.semistable || v.stable) continue;
                    ++found;
                    JHFiltration jh = jh_filtration(cp, beta);
                    Rational sum(0);
                    for (const auto& f : jh.graded) {
                        if (f.slope() != Rational(D, n)) fail(o, "slope at " + format_indices(beta));
                        sum += f.degree;
                    }
                    if (sum != Rational(D)) fail(o, "degree sum at " + format_indices(beta));
                    StabilityVerdict d = check_stability(cp, dual_indices(beta));
                    std::vector<int> mirrored;
                    for (auto it = d.equality_positions.rbegin(); it != d.equality_positions.rend(); ++it)
                        mirrored.push_back(n - *it);
                    if (mirrored != v.equality_positions) fail(o, "positions at " + format_indices(beta));
                }
    if (found == 0) fail(o, "no strictly semistable vectors found");
    if (o.ok) o.detail = std::to_string(found) + " strictly semistable cases";
    return o;
}

Outcome ac10() {
    Outcome o;
    if (genus({3, 2, 1, 0}, 3) != 7) fail(o, "g3(g1=2, delta=1) != 7");
    for (long long g1 = 1; g1 <= 10; ++g1)
        if (genus({3, g1, 2 * g1 - 2, 0}, 3) != 9 * g1 - 8) fail(o, "g3 != 9g1-8 at g1=" + std::to_string(g1));
    for (long long g1 = 0; g1 <= 6; ++g1)
        for (long long delta = std::max(1LL, 2 * g1 - 1); delta <= 2 * g1 + 6; ++delta)
            if (tangent_dimension_vector_bundle({3, g1, delta, 0}, std::nullopt) != 9 * delta + 1)
                fail(o, "vector-bundle tangent at g1=" + std::to_string(g1) + " delta=" + std::to_string(delta));
    if (o.ok) o.detail = "genus and vector-bundle tangent values";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "n=3 delta=1 classification", 1, ac1},
        {"AC2", "non-isomorphic ideals with equal indices", 10, ac2},
        {"AC3", "Ext oracle grid", 120, ac3},
        {"AC4", "degree additivity fuzz", 5, ac4},
        {"AC5", "two-algorithm index agreement", 180, ac5},
        {"AC6", "duality", 180, ac6},
        {"AC7", "connectivity", 60, ac7},
        {"AC8", "tangent/Abel identity", 5, ac8},
        {"AC9", "Jordan-Holder suite", 10, ac9},
        {"AC10", "genus spot checks", 1, ac10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.budget_s) {
            o.ok = false;
            o.detail += " (over time budget of " + std::to_string(static_cast<int>(c.budget_s)) + " s)";
        }
        if (!o.ok) ++failures;
        std::printf("%-4s %s  %-45s %8.3fs  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
