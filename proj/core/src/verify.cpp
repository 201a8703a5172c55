#include "pmc/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "pmc/error.hpp"
#include "pmc/ext.hpp"
#include "pmc/moduli.hpp"
#include "pmc/normal_form.hpp"
#include "pmc/stability.hpp"

namespace pmc {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

class Recorder {
public:
    explicit Recorder(SuiteResult& r) : r_(r) {}
    void check(bool ok, const std::function<std::string()>& witness) {
        ++r_.checks;
        if (ok) return;
        ++r_.failures;
        if (r_.witnesses.size() < kMaxWitnesses) r_.witnesses.push_back(witness());
    }
    // Runs f and records any thrown error as a failure.
    void guard(const std::function<void()>& f, const std::function<std::string()>& witness) {
        try {
            f();
        } catch (const std::exception& e) {
            check(false, [&] { return witness() + ": " + e.what(); });
        }
    }

private:
    SuiteResult& r_;
};

std::string nf_text(const GeneralNormalForm& nf, std::uint32_t p) {
    std::ostringstream os;
    os << "ring n=" << nf.n << " p=" << p << "; generators:";
    RingParams P{nf.n, min_precision(nf.n, nf.beta.empty() ? 0 : nf.beta.back()), p};
    for (const auto& g : normal_form_generators(nf, P)) os << " [" << g.to_string() << "]";
    return os.str();
}

std::string cp_text(const CurveParams& cp) {
    std::ostringstream os;
    os << "n=" << cp.n << " g1=" << cp.g1 << " delta=" << cp.delta << " D=" << cp.D;
    return os.str();
}

RingElem random_elem(const RingParams& P, std::mt19937_64& rng) {
    RingElem f = RingElem::zero(P);
    std::uniform_int_distribution<std::uint32_t> d(0, P.p - 1);
    for (int i = 0; i < P.n; ++i)
        for (int a = 0; a < P.N; ++a) f.set(i, a, d(rng));
    return f;
}

void suite_ring(SuiteResult& res, std::mt19937_64& rng) {
    Recorder rec(res);
    const std::uint32_t primes[] = {2, 3, 5, 7};
    for (int t = 0; t < 300; ++t) {
        RingParams P{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 8), primes[rng() % 4]};
        RingElem f = random_elem(P, rng), g = random_elem(P, rng), h = random_elem(P, rng);
        auto w = [&] { return "p=" + std::to_string(P.p) + " f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string(); };
        rec.check((f * g) * h == f * (g * h), w);
        rec.check(f * g == g * f, w);
        rec.check(f * (g + h) == f * g + f * h, w);
        rec.check((f - f).is_zero(), w);
        rec.guard([&] { rec.check(parse_elem(f.to_string(), P) == f, w); }, w);
        if (!f.is_zero()) {
            const bool unit = f.coeff(0, 0) != 0;
            rec.check((classify_element(f) == ElementClass::unit) == unit, w);
        }
    }
}

void suite_indices(SuiteResult& res, std::mt19937_64&) {
    Recorder rec(res);
    for (int n = 2; n <= 4; ++n)
        for (const auto& nf : enumerate_normal_forms(n, 2, 2)) {
            auto w = [&] { return nf_text(nf, 2); };
            rec.guard(
                [&] {
                    RingParams P{n, min_precision(n, nf.beta.back()), 2};
                    ModuleRep M = ideal_from_indices(nf, P);
                    IndexVector a = indices(M);
                    rec.check(a == nf.beta, w);
                    rec.check(indices_by_definition(M) == a, w);
                    rec.check(indices(M.at_precision(P.N + 2)) == a, w);
                },
                w);
        }
}

void suite_duality(SuiteResult& res, std::mt19937_64&) {
    Recorder rec(res);
    for (int n = 2; n <= 6; ++n)
        for (const auto& b : monotone_vectors(n - 1, 4))
            rec.check(dual_indices(dual_indices(b)) == b, [&] { return "beta=" + format_indices(b); });
    for (int n = 2; n <= 4; ++n)
        for (const auto& nf : enumerate_normal_forms(n, 2, 2)) {
            auto w = [&] { return nf_text(nf, 2); };
            rec.guard(
                [&] {
                    RingParams P{n, min_precision(n, nf.beta.back()), 2};
                    ModuleRep M = ideal_from_indices(nf, P);
                    rec.check(indices(dual_module_oracle(M)) == dual_indices(nf.beta), w);
                },
                w);
        }
}

void suite_stability(SuiteResult& res, std::mt19937_64& rng) {
    Recorder rec(res);
    for (int t = 0; t < 2000; ++t) {
        CurveParams cp{2 + static_cast<int>(rng() % 5), 2, static_cast<long long>(rng() % 4),
                       static_cast<long long>(rng() % 25) - 12};
        const auto all = monotone_vectors(cp.n - 1, 4);
        const IndexVector beta = all[rng() % all.size()];
        auto w = [&] { return cp_text(cp) + " beta=" + format_indices(beta); };
        rec.guard(
            [&] {
                for (int i = 1; i <= cp.n - 1; ++i)
                    rec.check(deg_pure_quotient(cp, beta, i) + deg_second_filtration(cp, beta, cp.n - i) ==
                                  Rational(cp.D),
                              w);
                rec.check(dual_stability_check(cp, beta) == check_stability(cp, beta).semistable, w);
                StabilityVerdict v = check_stability(cp, beta);
                if (v.semistable && !v.stable) {
                    JHFiltration jh = jh_filtration(cp, beta);
                    Rational total(0);
                    int rank = 0;
                    for (const auto& f : jh.graded) {
                        rec.check(f.slope() == Rational(cp.D, cp.n), w);
                        total += f.degree;
                        rank += f.rank;
                    }
                    rec.check(total == Rational(cp.D) && rank == cp.n, w);
                }
            },
            w);
    }
}

void suite_ext(SuiteResult& res, std::mt19937_64&) {
    Recorder rec(res);
    for (std::uint32_t p : {2u, 3u})
        for (int n = 2; n <= 5; ++n)
            for (int j = 1; j <= n - 1; ++j)
                for (int b = 1; b <= 3; ++b) {
                    SpecialNormalForm nf{n, b, j, {}};
                    auto w = [&] {
                        return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " (x^" + std::to_string(b) +
                               ", y^" + std::to_string(j) + ")";
                    };
                    rec.guard(
                        [&] {
                            RingParams P{n, min_precision(n, b), p};
                            rec.check(local_ext1_length(special_ideal(nf, P)) == ext1_closed_form_special(n, j, b), w);
                        },
                        w);
                }
    for (int b2 = 1; b2 <= 3; ++b2)
        for (int b1 = 0; b1 <= b2; ++b1) {
            GeneralNormalForm nf{3, {b1, b2}, {}};
            auto w = [&] { return nf_text(nf, 2); };
            rec.guard(
                [&] {
                    RingParams P{3, min_precision(3, b2), 2};
                    rec.check(local_ext1_length(ideal_from_indices(nf, P)) == ext1_closed_form_n3(b1, b2), w);
                },
                w);
        }
}

void suite_moduli(SuiteResult& res, std::mt19937_64&) {
    Recorder rec(res);
    for (int n = 2; n <= 6; ++n)
        for (const auto& b : monotone_vectors(n - 1, 4)) {
            CurveParams cp{n, 2, 1, 0};
            LocalConfig c = generic_config(n, b);
            auto w = [&] { return "n=" + std::to_string(n) + " beta=" + format_indices(b); };
            long long lhs = tangent_dim_generic(cp, b) - genus(cp, n);
            long long rhs = 0;
            for (int i = (n + 1) / 2; i <= n - 1; ++i) rhs += b[static_cast<std::size_t>(i - 1)];
            for (int i = 1; i <= (n - 2) / 2; ++i) rhs -= b[static_cast<std::size_t>(i - 1)];
            rec.check(lhs == rhs, w);
            rec.check(tangent_dimension(cp, c) == tangent_dim_generic(cp, b), w);
            bool zero = b.back() == 0;
            rec.check((tangent_dim_generic(cp, b) == genus(cp, n)) == zero, w);
        }
    for (int n = 2; n <= 4; ++n)
        for (long long delta = 1; delta <= 2; ++delta)
            for (long long D = 0; D < n; ++D) {
                CurveParams cp{n, 2, delta, D};
                auto w = [&] { return cp_text(cp); };
                rec.guard(
                    [&] {
                        for (const auto& c : enumerate_components(cp)) {
                            auto z = z_locus_dimension(cp, c.generic_config);
                            rec.check(z && *z == genus(cp, n), w);
                        }
                        ConnectivityResult r = connectivity(cp);
                        long long bound = 1;
                        for (int k = 0; k < n - 2; ++k) bound *= n;
                        rec.check(r.count <= bound, w);
                        if (n <= 3) rec.check(r.labels.empty() || r.count == 1, w);
                    },
                    w);
            }
}

using SuiteFn = void (*)(SuiteResult&, std::mt19937_64&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"ring", suite_ring},           {"indices", suite_indices}, {"duality", suite_duality},
        {"stability", suite_stability}, {"ext", suite_ext},         {"moduli", suite_moduli},
    };
    return r;
}

}  // namespace

bool VerifyReport::ok() const {
    for (const auto& s : suites)
        if (s.failures) return false;
    return true;
}

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

VerifyReport run_verification(const std::string& suite, std::uint64_t seed) {
    bool known = suite == "all";
    for (const auto& [name, fn] : registry()) known = known || name == suite;
    if (!known) throw ParameterError("unknown verification suite '" + suite + "'");
    VerifyReport rep;
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name) continue;
        SuiteResult r;
        r.name = name;
        std::mt19937_64 rng(seed);
        auto t0 = std::chrono::steady_clock::now();
        fn(r, rng);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.suites.push_back(std::move(r));
    }
    return rep;
}

}  // namespace pmc
