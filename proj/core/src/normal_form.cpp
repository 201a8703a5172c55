#include "pmc/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "pmc/error.hpp"

namespace pmc {

namespace {

// beta_k with beta_0 = 0.
int beta_at(const IndexVector& beta, int k) { return k <= 0 ? 0 : beta[static_cast<std::size_t>(k - 1)]; }

void validate_beta(int n, const IndexVector& beta) {
    if (n < 1) throw ParameterError("multiplicity must be >= 1");
    if (static_cast<int>(beta.size()) != n - 1) throw ShapeError("index vector must have n-1 entries");
    if (!is_monotone(beta)) throw ShapeError("index vector must be monotone and nonnegative");
}

void require_precision(const RingParams& params, int n, int B) {
    if (params.n != n) throw ParameterError("ring multiplicity does not match the normal form");
    int need = min_precision(n, B);
    if (params.N < need)
        throw PrecisionError("precision N=" + std::to_string(params.N) + " below required " + std::to_string(need));
}

}  // namespace

bool is_monotone(const IndexVector& beta) {
    int prev = 0;
    for (int b : beta) {
        if (b < prev) return false;
        prev = b;
    }
    return true;
}

std::optional<int> single_jump(const IndexVector& beta) {
    if (beta.empty() || beta.back() <= 0) return std::nullopt;
    const int top = beta.back();
    int j = 1;
    while (beta[static_cast<std::size_t>(j - 1)] == 0) ++j;
    for (std::size_t k = static_cast<std::size_t>(j - 1); k < beta.size(); ++k)
        if (beta[k] != top) return std::nullopt;
    return j;
}

int GeneralNormalForm::alpha_modulus(int j) const { return beta_at(beta, n - j) - beta_at(beta, n - j - 1); }

void GeneralNormalForm::canonicalize(std::uint32_t p) {
    std::map<std::pair<int, int>, XPoly> out;
    for (auto& [key, poly] : alpha) {
        auto [i, j] = key;
        if (i < 3 || i > n || j < 1 || j > i - 2) throw ShapeError("alpha index out of range");
        XPoly r(poly.begin(), poly.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(poly.size()), alpha_modulus(j)));
        for (auto& c : r) c %= p;
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (!r.empty()) out[key] = std::move(r);
    }
    alpha = std::move(out);
}

IndexVector SpecialNormalForm::beta() const {
    IndexVector out;
    for (int k = 1; k < n; ++k) out.push_back(k < j ? 0 : b);
    return out;
}

std::vector<RingElem> normal_form_generators(const GeneralNormalForm& nf_in, const RingParams& params) {
    validate_beta(nf_in.n, nf_in.beta);
    GeneralNormalForm nf = nf_in;
    nf.canonicalize(params.p);
    const int n = nf.n;
    // m_1 = y^{n-1}; y m_i = x^{e_i} m_{i-1} + sum_{j <= i-2} alpha(i,j) m_j.
    std::vector<RingElem> m;
    m.push_back(RingElem::y_pow(params, n - 1));
    for (int i = 2; i <= n; ++i) {
        int e = beta_at(nf.beta, n - i + 1) - beta_at(nf.beta, n - i);
        RingElem rhs = m[static_cast<std::size_t>(i - 2)].times_x_pow(e);
        for (int j = 1; j <= i - 2; ++j) {
            auto it = nf.alpha.find({i, j});
            if (it == nf.alpha.end()) continue;
            rhs += RingElem::from_x_poly(params, it->second) * m[static_cast<std::size_t>(j - 1)];
        }
        m.push_back(rhs.div_y());
    }
    return m;
}

ModuleRep ideal_from_indices(const GeneralNormalForm& nf, const RingParams& params) {
    validate_beta(nf.n, nf.beta);
    require_precision(params, nf.n, nf.beta.empty() ? 0 : nf.beta.back());
    ModuleRep base = ideal(params, normal_form_generators(nf, params));
    auto recipe = [nf, params](int N2) { return ideal_from_indices(nf, params.with_precision(N2)); };
    return ModuleRep(base.ambient(), base.numerator(), std::nullopt, recipe);
}

RingElem special_generator(const SpecialNormalForm& nf, const RingParams& params) {
    if (nf.n < 2 || nf.j < 1 || nf.j > nf.n - 1) throw ShapeError("special normal form needs 1 <= j <= n-1");
    if (nf.b < 1) throw ShapeError("special normal form needs b >= 1");
    const int jbar = nf.jbar();
    if (static_cast<int>(nf.z.size()) > std::max(jbar, 0)) throw ShapeError("too many z rows for this jump");
    RingElem s = RingElem::x_pow(params, nf.b);
    for (int h = 1; h <= static_cast<int>(nf.z.size()); ++h) {
        const XPoly& row = nf.z[static_cast<std::size_t>(h - 1)];
        if (static_cast<int>(row.size()) > nf.b) throw ShapeError("z row longer than b");
        s += RingElem::from_x_poly(params, row).times_y_pow(h);
    }
    return s;
}

ModuleRep special_ideal(const SpecialNormalForm& nf, const RingParams& params) {
    require_precision(params, nf.n, nf.b);
    ModuleRep base = ideal(params, {special_generator(nf, params), RingElem::y_pow(params, nf.j)});
    auto recipe = [nf, params](int N2) { return special_ideal(nf, params.with_precision(N2)); };
    return ModuleRep(base.ambient(), base.numerator(), std::nullopt, recipe);
}

std::optional<RingElem> element_with_leading_part(const ModuleRep& M, int b) {
    const Ambient& amb = M.ambient();
    const int N = M.params().N;
    if (b < 0 || b >= N) return std::nullopt;
    const auto& rows = M.numerator().rows();
    const std::size_t m = rows.size();
    Subspace aug(static_cast<std::size_t>(N) + m, M.params().p);
    for (std::size_t r = 0; r < m; ++r) {
        Vec v(static_cast<std::size_t>(N) + m, 0);
        for (int a = 0; a < N; ++a) v[static_cast<std::size_t>(a)] = rows[r][amb.index(0, 0, a)];
        v[static_cast<std::size_t>(N) + r] = 1;
        aug.add(v);
    }
    Vec target(static_cast<std::size_t>(N) + m, 0);
    target[static_cast<std::size_t>(b)] = 1;
    Vec rem = aug.reduce(target);
    for (int a = 0; a < N; ++a)
        if (rem[static_cast<std::size_t>(a)]) return std::nullopt;
    Fp f = M.params().field();
    Vec out(amb.dim(), 0);
    for (std::size_t r = 0; r < m; ++r) {
        std::uint32_t c = f.neg(rem[static_cast<std::size_t>(N) + r]);
        if (!c) continue;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(out[k], f.mul(c, rows[r][k]));
    }
    return amb.element(out)[0];
}

SpecialNormalForm normalize_special(const ModuleRep& M) {
    if (M.ambient_rank() != 1 || M.has_denominator()) throw ShapeError("normalize_special: ideal expected");
    const RingParams& P = M.params();
    const int n = P.n;
    IndexVector beta = indices(M);
    if (static_cast<int>(beta.size()) != n - 1) throw ShapeError("normalize_special: module not supported on the whole curve");
    auto jump = single_jump(beta);
    if (!jump) throw ShapeError("normalize_special: indices do not have a single jump");
    SpecialNormalForm out;
    out.n = n;
    out.b = beta.back();
    out.j = *jump;
    const int b = out.b, j = out.j, jbar = out.jbar();

    RingElem yj = RingElem::y_pow(P, j);
    if (!M.numerator().contains(M.ambient().coords(yj)))
        throw ShapeError("normalize_special: ideal does not contain y^" + std::to_string(j));
    auto s = element_with_leading_part(M, b);
    if (!s) throw ShapeError("normalize_special: no element with leading part x^" + std::to_string(b));
    if (!ideal(P, {*s, yj}).numerator().same_span(M.numerator()))
        throw ShapeError("normalize_special: ideal is not generated by its leading element and y^" + std::to_string(j));

    // t = s - x^b = alpha * y, kept modulo y^{jbar+1}.
    RingElem xb = RingElem::x_pow(P, b);
    RingElem t = (*s - xb).truncate_y(jbar + 1);
    const int cap = 2 * static_cast<int>(std::ceil(std::log2(std::max(jbar, 2)))) + 2;
    int rounds = 0;
    while (true) {
        bool changed = false;
        for (int h = 1; h <= jbar; ++h) {
            // beta_h = (part of the y^h coefficient of x-degree >= b) / x^b.
            RingElem high(P);
            for (int a = b; a < P.N; ++a)
                if (t.coeff(h, a)) high.set(0, a - b, t.coeff(h, a));
            if (high.is_zero()) continue;
            changed = true;
            // s <- (1 - high y^h) s, a unit multiple of s.
            RingElem step = high.times_y_pow(h) * (xb + t);
            t = (t - step).truncate_y(jbar + 1);
        }
        if (!changed) break;
        if (++rounds > cap) throw InvariantViolation("normalize_special: reduction did not reach a fixpoint");
    }
    for (int h = 1; h <= jbar; ++h) {
        XPoly row(static_cast<std::size_t>(b), 0);
        for (int a = 0; a < b; ++a) row[static_cast<std::size_t>(a)] = t.coeff(h, a);
        out.z.push_back(std::move(row));
    }
    return out;
}

std::vector<IndexVector> monotone_vectors(int len, int max) {
    std::vector<IndexVector> out;
    IndexVector cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= max; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<GeneralNormalForm> enumerate_normal_forms(int n, int beta_max, std::uint32_t p,
                                                      const std::optional<IndexVector>& only_beta) {
    std::vector<GeneralNormalForm> out;
    for (const auto& beta : monotone_vectors(n - 1, beta_max)) {
        if (only_beta && beta != *only_beta) continue;
        GeneralNormalForm base;
        base.n = n;
        base.beta = beta;
        // Free coefficient slots: (i, j, degree).
        std::vector<std::tuple<int, int, int>> slots;
        for (int i = 3; i <= n; ++i)
            for (int j = 1; j <= i - 2; ++j)
                for (int a = 0; a < base.alpha_modulus(j); ++a) slots.emplace_back(i, j, a);
        std::vector<std::uint32_t> digits(slots.size(), 0);
        while (true) {
            GeneralNormalForm nf = base;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (!digits[s]) continue;
                auto [i, j, a] = slots[s];
                XPoly& poly = nf.alpha[{i, j}];
                if (static_cast<int>(poly.size()) <= a) poly.resize(static_cast<std::size_t>(a + 1), 0);
                poly[static_cast<std::size_t>(a)] = digits[s];
            }
            out.push_back(std::move(nf));
            std::size_t s = 0;
            while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
            if (s == digits.size()) break;
        }
    }
    return out;
}

std::vector<EnumeratedModule> enumerate_invertible_modules(int n, int beta_max, const RingParams& params,
                                                           const EnumerationOptions& opts) {
    auto forms = enumerate_normal_forms(n, beta_max, params.p, opts.only_beta);
    if (forms.size() > opts.ceiling)
        throw LimitExceeded("enumeration would produce " + std::to_string(forms.size()) + " modules, above the ceiling " +
                            std::to_string(opts.ceiling));
    std::vector<EnumeratedModule> out;
    std::vector<std::size_t> reps;
    int next_class = 0;
    for (auto& nf : forms) {
        ModuleRep M = ideal_from_indices(nf, params);
        EnumeratedModule e{nf, M, -1, std::nullopt};
        if (opts.dedup)
            for (std::size_t r : reps) {
                if (out[r].nf.beta != nf.beta) continue;
                if (is_isomorphic_oracle(out[r].module, M, opts.budget) == IsoVerdict::yes) {
                    e.class_id = out[r].class_id;
                    e.duplicate_of = r;
                    break;
                }
            }
        if (!e.duplicate_of) {
            e.class_id = next_class++;
            reps.push_back(out.size());
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace pmc
