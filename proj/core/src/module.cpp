#include "pmc/module.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "pmc/error.hpp"

namespace pmc {

// ---------------------------------------------------------------- Ambient

Vec Ambient::coords(const AmbientVec& v) const {
    if (static_cast<int>(v.size()) != rank) throw ParameterError("ambient vector has wrong rank");
    Vec out(dim(), 0);
    for (int k = 0; k < rank; ++k) {
        if (!(v[k].params() == params)) throw ParameterError("generator ring parameters differ from module parameters");
        for (int i = 0; i < params.n; ++i)
            for (int a = 0; a < params.N; ++a) out[index(k, i, a)] = v[k].coeff(i, a);
    }
    return out;
}

AmbientVec Ambient::element(const Vec& v) const {
    AmbientVec out(rank, RingElem(params));
    for (int k = 0; k < rank; ++k)
        for (int i = 0; i < params.n; ++i)
            for (int a = 0; a < params.N; ++a)
                if (v[index(k, i, a)]) out[k].set(i, a, v[index(k, i, a)]);
    return out;
}

Vec Ambient::shift_x(const Vec& v, int t) const {
    Vec out(dim(), 0);
    std::size_t off = static_cast<std::size_t>(t) * width();
    if (off >= dim()) return out;
    std::copy(v.begin(), v.end() - static_cast<std::ptrdiff_t>(off), out.begin() + static_cast<std::ptrdiff_t>(off));
    return out;
}

Vec Ambient::shift_y(const Vec& v, int t) const {
    Vec out(dim(), 0);
    if (t >= params.n) return out;
    for (int a = 0; a < params.N; ++a)
        for (int k = 0; k < rank; ++k)
            for (int i = 0; i + t < params.n; ++i) out[index(k, i + t, a)] = v[index(k, i, a)];
    return out;
}

Vec Ambient::times(const Vec& v, const RingElem& f) const {
    std::vector<std::uint64_t> acc(dim(), 0);
    const std::uint64_t p = params.p;
    for (int j = 0; j < params.n; ++j) {
        Vec vy = shift_y(v, j);
        for (int b = 0; b < params.N; ++b) {
            std::uint64_t c = f.coeff(j, b);
            if (!c) continue;
            std::size_t off = static_cast<std::size_t>(b) * width();
            for (std::size_t k = 0; k + off < dim(); ++k)
                if (vy[k]) acc[k + off] = (acc[k + off] + c * vy[k]) % p;
        }
    }
    return Vec(acc.begin(), acc.end());
}

Subspace Ambient::close(std::vector<Vec> seeds, Subspace base) const {
    std::deque<Vec> queue;
    for (auto& s : seeds)
        if (base.add(s)) queue.push_back(std::move(s));
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        Vec vx = shift_x(v, 1);
        if (base.add(vx)) queue.push_back(std::move(vx));
        Vec vy = shift_y(v, 1);
        if (base.add(vy)) queue.push_back(std::move(vy));
    }
    return base;
}

bool Ambient::is_closed(const Subspace& s) const {
    for (const auto& r : s.rows())
        if (!s.contains(shift_x(r, 1)) || !s.contains(shift_y(r, 1))) return false;
    return true;
}

// ---------------------------------------------------------------- ModuleRep

ModuleRep::ModuleRep(Ambient amb, Subspace num, std::optional<Subspace> den, Recipe recipe)
    : amb_(std::move(amb)), num_(std::move(num)), den_(std::move(den)), zero_(amb_.dim(), amb_.params.p),
      recipe_(std::move(recipe)) {}

ModuleRep ModuleRep::at_precision(int N) const {
    if (N == params().N) return *this;
    if (!recipe_) throw PrecisionError("module cannot be rebuilt at another precision");
    return recipe_(N);
}

ModuleRep module_from_subspace(const Ambient& amb, Subspace num, std::optional<Subspace> den, ModuleRep::Recipe recipe) {
    if (!amb.is_closed(num)) throw InvariantViolation("subspace is not closed under x and y");
    if (den) {
        if (!amb.is_closed(*den)) throw InvariantViolation("denominator is not closed under x and y");
        if (!num.contains(*den)) throw ContainmentError("denominator is not contained in numerator");
    }
    return ModuleRep(amb, std::move(num), std::move(den), std::move(recipe));
}

ModuleRep span_from_generators(const RingParams& params, int rank, const std::vector<AmbientVec>& gens) {
    params.validate();
    if (rank < 1) throw ParameterError("ambient rank must be >= 1");
    Ambient amb{params, rank};
    std::vector<Vec> seeds;
    seeds.reserve(gens.size());
    for (const auto& g : gens) seeds.push_back(amb.coords(g));
    auto recipe = [params, rank, gens](int N2) {
        std::vector<AmbientVec> lifted;
        for (const auto& g : gens) {
            AmbientVec l;
            for (const auto& c : g) l.push_back(c.with_precision(N2));
            lifted.push_back(std::move(l));
        }
        return span_from_generators(params.with_precision(N2), rank, lifted);
    };
    return ModuleRep(amb, amb.close(std::move(seeds)), std::nullopt, recipe);
}

ModuleRep ideal(const RingParams& params, const std::vector<RingElem>& gens) {
    std::vector<AmbientVec> g;
    for (const auto& e : gens) g.push_back(AmbientVec{e});
    return span_from_generators(params, 1, g);
}

ModuleRep ideal_from_text(const RingParams& params, const std::vector<std::string>& gens) {
    std::vector<RingElem> elems;
    for (const auto& s : gens) elems.push_back(parse_elem(s, params));
    ModuleRep base = ideal(params, elems);
    auto recipe = [params, gens](int N2) { return ideal_from_text(params.with_precision(N2), gens); };
    return ModuleRep(base.ambient(), base.numerator(), std::nullopt, recipe);
}

// ---------------------------------------------------------------- lengths

namespace {

void require_plain(const ModuleRep& M, const char* what) {
    if (M.has_denominator()) throw DomainError(std::string(what) + ": subquotient input not supported");
}

long plain_quotient_length(const ModuleRep& M, const ModuleRep& Mp) {
    if (!(M.params() == Mp.params()) || M.ambient_rank() != Mp.ambient_rank())
        throw ParameterError("quotient_length: mismatched parameters");
    if (!M.numerator().contains(Mp.numerator())) throw ContainmentError("quotient_length: M' is not contained in M");
    return static_cast<long>(M.numerator().dim()) - static_cast<long>(Mp.numerator().dim());
}

}  // namespace

long quotient_length(const ModuleRep& M, const ModuleRep& Mp) {
    long v = plain_quotient_length(M, Mp);
    if (M.rebuildable() && Mp.rebuildable()) {
        int N2 = M.params().N + 2;
        long w = plain_quotient_length(M.at_precision(N2), Mp.at_precision(N2));
        if (v != w)
            throw PrecisionError("quotient length changes between N and N+2 (" + std::to_string(v) + " vs " +
                                 std::to_string(w) + "): infinite length or precision too low");
    }
    return v;
}

// ---------------------------------------------------------------- filtrations

namespace {

// Numerator subspaces y^i Num + Den for i = 0..n (the last one is Den).
std::vector<Subspace> first_subspaces(const ModuleRep& M) {
    const Ambient& amb = M.ambient();
    std::vector<Subspace> out;
    for (int i = 0; i <= M.params().n; ++i) {
        Subspace s = M.denominator();
        for (const auto& r : M.numerator().rows()) s.add(amb.shift_y(r, i));
        out.push_back(std::move(s));
    }
    return out;
}

// Numerator subspaces {v in Num : y^i v in Den} for i = 0..n.
std::vector<Subspace> second_subspaces(const ModuleRep& M) {
    const Ambient& amb = M.ambient();
    const auto& rows = M.numerator().rows();
    std::vector<Subspace> out;
    for (int i = 0; i <= M.params().n; ++i) {
        std::vector<Vec> images;
        images.reserve(rows.size());
        for (const auto& r : rows) images.push_back(M.denominator().reduce(amb.shift_y(r, i)));
        Subspace s = M.denominator();
        for (const auto& c : kernel_of(images, amb.dim(), amb.params.p)) {
            Vec v(amb.dim(), 0);
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (!c[j]) continue;
                for (std::size_t k = 0; k < v.size(); ++k)
                    v[k] = static_cast<std::uint32_t>((v[k] + static_cast<std::uint64_t>(c[j]) * rows[j][k]) % amb.params.p);
            }
            s.add(v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::optional<Subspace> den_of(const ModuleRep& M) {
    if (M.has_denominator()) return M.denominator();
    return std::nullopt;
}

struct XProfile {
    long len, xT, xT1;
};

XProfile x_profile(const Ambient& amb, const Subspace& P, const Subspace& Q, int T) {
    Subspace a = Q, b = Q;
    for (const auto& r : P.rows()) {
        a.add(amb.shift_x(r, T));
        b.add(amb.shift_x(r, T + 1));
    }
    long q = static_cast<long>(Q.dim());
    return {static_cast<long>(P.dim()) - q, static_cast<long>(a.dim()) - q, static_cast<long>(b.dim()) - q};
}

GradedLevel level_of(const Ambient& amb, const Subspace& P, const Subspace& Q) {
    const int T = amb.params.N / 2;
    XProfile pr = x_profile(amb, P, Q, T);
    GradedLevel lv;
    lv.rank = static_cast<int>(pr.xT - pr.xT1);
    lv.torsion = static_cast<int>(pr.len - pr.xT - static_cast<long>(lv.rank) * T);
    return lv;
}

}  // namespace

GradedLevel subquotient_level(const Ambient& amb, const Subspace& P, const Subspace& Q) {
    return level_of(amb, P, Q);
}

std::vector<ModuleRep> first_filtration(const ModuleRep& M) {
    auto subs = first_subspaces(M);
    std::vector<ModuleRep> out;
    for (int i = 0; i < M.params().n; ++i) {
        auto recipe = [M, i](int N2) { return first_filtration(M.at_precision(N2))[static_cast<std::size_t>(i)]; };
        out.emplace_back(M.ambient(), std::move(subs[static_cast<std::size_t>(i)]), den_of(M), recipe);
    }
    return out;
}

std::vector<ModuleRep> second_filtration(const ModuleRep& M) {
    auto subs = second_subspaces(M);
    std::vector<ModuleRep> out;
    for (int i = 0; i <= M.params().n; ++i) {
        auto recipe = [M, i](int N2) { return second_filtration(M.at_precision(N2))[static_cast<std::size_t>(i)]; };
        out.emplace_back(M.ambient(), std::move(subs[static_cast<std::size_t>(i)]), den_of(M), recipe);
    }
    return out;
}

int depth(const ModuleRep& M) {
    const Ambient& amb = M.ambient();
    for (int d = 0; d < M.params().n; ++d) {
        bool killed = true;
        for (const auto& r : M.numerator().rows())
            if (!M.denominator().contains(amb.shift_y(r, d))) {
                killed = false;
                break;
            }
        if (killed) return d;
    }
    return M.params().n;
}

GradedReport graded_report_at(const ModuleRep& M, Filtration which) {
    const Ambient& amb = M.ambient();
    const int n = M.params().n;
    GradedReport rep;
    rep.which = which;
    if (which == Filtration::first) {
        auto subs = first_subspaces(M);
        for (int i = 0; i < n; ++i) rep.levels.push_back(level_of(amb, subs[i], subs[i + 1]));
    } else {
        auto subs = second_subspaces(M);
        for (int i = 1; i <= n; ++i) rep.levels.push_back(level_of(amb, subs[i], subs[i - 1]));
    }
    return rep;
}

GradedReport graded_report(const ModuleRep& M, Filtration which) {
    GradedReport a = graded_report_at(M, which);
    if (!M.rebuildable()) return a;
    GradedReport b = graded_report_at(M.at_precision(M.params().N + 2), which);
    if (!(a == b)) throw PrecisionError("graded report differs between N and N+2; raise N");
    return a;
}

// ---------------------------------------------------------------- indices

namespace {

int required_precision(const ModuleRep& M, const IndexVector& beta) {
    int B = 0;
    for (int b : beta) B = std::max(B, b);
    return min_precision(M.params().n, B);
}

void check_index_precision(const ModuleRep& M, const IndexVector& beta) {
    int B = 0;
    for (int b : beta) B = std::max(B, b);
    int need = min_precision(M.params().n, B);
    if (M.params().N < need)
        throw PrecisionError("precision N=" + std::to_string(M.params().N) + " is below the required " +
                             std::to_string(need) + " for local indices up to " + std::to_string(B));
}

// Depth of a generalized invertible module, validated against the first graded ranks.
int invertible_depth(const GradedReport& rep) {
    int d = 0;
    while (d < static_cast<int>(rep.levels.size()) && rep.levels[d].rank == 1) ++d;
    for (int i = d; i < static_cast<int>(rep.levels.size()); ++i)
        if (rep.levels[i].rank != 0 || rep.levels[i].torsion != 0)
            throw RankError("module is not generalized invertible (first graded ranks are not all 1)");
    if (d == 0) throw RankError("zero module is not generalized invertible");
    return d;
}

IndexVector definition_indices_at(const ModuleRep& M, int d) {
    auto first = first_subspaces(M);
    auto second = second_subspaces(M);
    IndexVector beta;
    for (int k = 1; k < d; ++k) {
        Subspace s = first[k];
        s.add_all(second[d - k - 1]);
        beta.push_back(static_cast<int>(second[d - k].dim()) - static_cast<int>(s.dim()));
    }
    return beta;
}

}  // namespace

IndexVector indices(const ModuleRep& M) {
    GradedReport rep = graded_report(M, Filtration::first);
    int d = invertible_depth(rep);
    IndexVector beta;
    for (int k = 1; k < d; ++k) beta.push_back(rep.levels[d - 1 - k].torsion);
    // Indices do not depend on N once N is large enough, so a rebuildable
    // module is recomputed at the required precision.
    if (M.rebuildable() && M.params().N < required_precision(M, beta))
        return indices(M.at_precision(required_precision(M, beta)));
    check_index_precision(M, beta);
    return beta;
}

IndexVector indices_by_definition(const ModuleRep& M) {
    if (M.rebuildable()) {
        const int need = required_precision(M, indices(M));
        if (M.params().N < need) return indices_by_definition(M.at_precision(need));
    }
    int d = invertible_depth(graded_report_at(M, Filtration::first));
    IndexVector beta = definition_indices_at(M, d);
    if (M.rebuildable()) {
        IndexVector b2 = definition_indices_at(M.at_precision(M.params().N + 2), d);
        if (b2 != beta) throw PrecisionError("indices by definition differ between N and N+2; raise N");
    }
    check_index_precision(M, beta);
    return beta;
}

ModuleRep pure_quotient(const ModuleRep& M, int i) {
    const int n = M.params().n;
    if (i < 1 || i > n) throw RangeError("pure_quotient: i must lie in 1..n");
    auto subs = second_subspaces(M);
    auto recipe = [M, i](int N2) { return pure_quotient(M.at_precision(N2), i); };
    return ModuleRep(M.ambient(), M.numerator(), std::move(subs[n - i]), recipe);
}

// ---------------------------------------------------------------- generators

RingElem nonzerodivisor_generator(const ModuleRep& M) {
    require_plain(M, "nonzerodivisor_generator");
    if (M.ambient_rank() != 1) throw DomainError("nonzerodivisor_generator: ideal expected");
    const Ambient& amb = M.ambient();
    std::optional<Vec> best;
    int best_val = M.params().N;
    for (const auto& r : M.numerator().sorted_rows()) {
        for (int a = 0; a < best_val; ++a)
            if (r[amb.index(0, 0, a)]) {
                best_val = a;
                best = r;
                break;
            }
    }
    if (!best) throw DomainError("module contains no nonzerodivisor");
    return amb.element(*best)[0];
}

std::vector<Vec> minimal_generators(const ModuleRep& M) {
    const Ambient& amb = M.ambient();
    Subspace mM = M.denominator();
    for (const auto& r : M.numerator().rows()) {
        mM.add(amb.shift_x(r, 1));
        mM.add(amb.shift_y(r, 1));
    }
    std::vector<Vec> gens;
    for (const auto& r : M.numerator().sorted_rows())
        if (mM.add(r)) gens.push_back(r);
    return gens;
}

int conductor_exponent(const ModuleRep& M) {
    const Ambient& amb = M.ambient();
    for (int c = 0; c < M.params().N; ++c) {
        bool ok = true;
        for (int k = 0; k < amb.rank && ok; ++k) {
            Vec e(amb.dim(), 0);
            e[amb.index(k, 0, c)] = 1;
            ok = M.numerator().contains(e);
        }
        if (ok) return c;
    }
    return M.params().N;
}

// ---------------------------------------------------------------- dual and Hom

namespace {

// Basis (as A-coordinates) of {a in A : a * g_k in target for all k}, for a
// rank-1 ambient.
Subspace transporter(const Ambient& amb, const std::vector<Vec>& gens, const Subspace& target) {
    const RingParams& P = amb.params;
    const std::size_t D = amb.dim();
    std::vector<Vec> images;
    images.reserve(D);
    // Column j of the map is the monomial with coordinate j.
    std::vector<std::pair<int, int>> mono(D);
    for (int a = 0; a < P.N; ++a)
        for (int i = 0; i < P.n; ++i) mono[amb.index(0, i, a)] = {i, a};
    for (std::size_t j = 0; j < D; ++j) {
        Vec img;
        img.reserve(gens.size() * D);
        for (const auto& g : gens) {
            Vec t = target.reduce(amb.shift_x(amb.shift_y(g, mono[j].first), mono[j].second));
            img.insert(img.end(), t.begin(), t.end());
        }
        images.push_back(std::move(img));
    }
    Subspace out = amb.empty();
    for (const auto& c : kernel_of(images, gens.size() * D, P.p)) out.add(c);
    return out;
}

}  // namespace

ModuleRep dual_module_oracle(const ModuleRep& M) {
    require_plain(M, "dual_module_oracle");
    if (M.ambient_rank() != 1) throw DomainError("dual_module_oracle: ideal expected");
    IndexVector beta = indices(M);
    if (static_cast<int>(beta.size()) != M.params().n - 1) throw RankError("dual_module_oracle: module is not supported on the whole curve");
    const Ambient& amb = M.ambient();
    RingElem g = nonzerodivisor_generator(M);
    Subspace gA = amb.close({amb.coords(g)});
    Subspace J = transporter(amb, minimal_generators(M), gA);
    auto recipe = [M](int N2) { return dual_module_oracle(M.at_precision(N2)); };
    return module_from_subspace(amb, std::move(J), std::nullopt, recipe);
}

const char* to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::yes: return "yes";
        case IsoVerdict::no: return "no";
        case IsoVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

IsoVerdict is_isomorphic_oracle(const ModuleRep& M, const ModuleRep& Mp, const IsoBudget& budget) {
    if (!(M.params() == Mp.params())) throw ParameterError("is_isomorphic_oracle: mismatched parameters");
    require_plain(M, "is_isomorphic_oracle");
    require_plain(Mp, "is_isomorphic_oracle");
    if (M.ambient_rank() != 1 || Mp.ambient_rank() != 1) throw DomainError("is_isomorphic_oracle: ideals expected");
    const IndexVector beta = indices(M);
    if (beta != indices(Mp)) return IsoVerdict::no;
    if (M.rebuildable() && Mp.rebuildable()) {
        const int need = required_precision(M, beta);
        if (M.params().N < need) return is_isomorphic_oracle(M.at_precision(need), Mp.at_precision(need), budget);
    }

    const Ambient& amb = M.ambient();
    const std::uint32_t p = amb.params.p;
    const std::size_t D = amb.dim();
    RingElem g = nonzerodivisor_generator(M);
    std::vector<Vec> gens = minimal_generators(M);
    std::vector<Vec> gens2 = minimal_generators(Mp);

    // Hom(M, M') is {a : a M in g M'} via phi(m) = a m / g.
    std::vector<Vec> seeds, mseeds;
    for (const auto& v : gens2) {
        seeds.push_back(amb.times(v, g));
        mseeds.push_back(amb.times(amb.shift_x(v, 1), g));
        mseeds.push_back(amb.times(amb.shift_y(v, 1), g));
    }
    Subspace gMp = amb.close(seeds);
    Subspace gmMp = amb.close(mseeds);
    const std::size_t mu2 = gMp.dim() - gmMp.dim();
    const std::size_t mu = gens.size();
    if (mu < mu2) return IsoVerdict::no;

    Subspace H = transporter(amb, gens, gMp);
    // Induced maps M/mM -> M'/mM', as canonical remainders modulo g m M'.
    Subspace V(mu * D, p);
    for (const auto& h : H.rows()) {
        RingElem a = amb.element(h)[0];
        Vec phi;
        phi.reserve(mu * D);
        for (const auto& m : gens) {
            Vec t = gmMp.reduce(amb.times(m, a));
            phi.insert(phi.end(), t.begin(), t.end());
        }
        V.add(phi);
    }
    const std::size_t d = V.dim();
    const auto& basis = V.rows();

    auto surjective = [&](const std::vector<std::uint32_t>& c) {
        std::vector<std::uint64_t> acc(mu * D, 0);
        for (std::size_t l = 0; l < d; ++l)
            if (c[l])
                for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += static_cast<std::uint64_t>(c[l]) * basis[l][k];
        Subspace img(D, p);
        for (std::size_t m = 0; m < mu; ++m) {
            Vec chunk(D);
            for (std::size_t k = 0; k < D; ++k) chunk[k] = static_cast<std::uint32_t>(acc[m * D + k] % p);
            img.add(chunk);
        }
        return img.dim() == mu2;
    };

    // Size of the search space, saturating above the exhaustive limit.
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t l = 0; l < d; ++l) {
        total *= p;
        if (total > budget.exhaustive_limit) {
            small = false;
            break;
        }
    }
    std::vector<std::uint32_t> c(d, 0);
    if (small) {
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t t = code;
            for (std::size_t l = 0; l < d; ++l) {
                c[l] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (surjective(c)) return IsoVerdict::yes;
        }
        return IsoVerdict::no;
    }
    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (std::uint64_t s = 0; s < budget.samples; ++s) {
        for (auto& v : c) v = dist(rng);
        if (surjective(c)) return IsoVerdict::yes;
    }
    return IsoVerdict::inconclusive;
}

}  // namespace pmc
