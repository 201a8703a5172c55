#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmc/ring.hpp"
#include "pmc/subspace.hpp"

namespace pmc {

using IndexVector = std::vector<int>;
// An element of A^r.
using AmbientVec = std::vector<RingElem>;

// Coordinates of A^r are ordered x-degree first: index = a*(r*n) + k*n + i
// for the coefficient of x^a y^i in component k. Multiplication by x then
// moves every coordinate strictly forward.
struct Ambient {
    RingParams params;
    int rank = 1;

    int width() const { return rank * params.n; }
    std::size_t dim() const { return static_cast<std::size_t>(width()) * params.N; }
    std::size_t index(int k, int i, int a) const {
        return static_cast<std::size_t>(a) * width() + static_cast<std::size_t>(k) * params.n + i;
    }

    Vec coords(const AmbientVec& v) const;
    Vec coords(const RingElem& f) const { return coords(AmbientVec{f}); }
    AmbientVec element(const Vec& v) const;

    Vec shift_x(const Vec& v, int t) const;
    Vec shift_y(const Vec& v, int t) const;
    Vec times(const Vec& v, const RingElem& f) const;
    Subspace empty() const { return Subspace(dim(), params.p); }
    // Smallest x,y-closed subspace containing base and seeds.
    Subspace close(std::vector<Vec> seeds, Subspace base) const;
    Subspace close(std::vector<Vec> seeds) const { return close(std::move(seeds), empty()); }
    bool is_closed(const Subspace& s) const;
};

// A finitely generated A-submodule of A^r, or a subquotient Num/Den.
// The recipe rebuilds the same module at another x-precision.
class ModuleRep {
public:
    using Recipe = std::function<ModuleRep(int)>;

    ModuleRep(Ambient amb, Subspace num, std::optional<Subspace> den, Recipe recipe);

    const RingParams& params() const { return amb_.params; }
    const Ambient& ambient() const { return amb_; }
    int ambient_rank() const { return amb_.rank; }
    const Subspace& numerator() const { return num_; }
    bool has_denominator() const { return den_.has_value() && den_->dim() > 0; }
    // Zero subspace when there is no denominator.
    const Subspace& denominator() const { return den_ ? *den_ : zero_; }
    std::size_t length() const { return num_.dim() - denominator().dim(); }

    ModuleRep at_precision(int N) const;
    bool rebuildable() const { return static_cast<bool>(recipe_); }

private:
    Ambient amb_;
    Subspace num_;
    std::optional<Subspace> den_;
    Subspace zero_;
    Recipe recipe_;
};

enum class Filtration { first, second };

struct GradedLevel {
    int rank = 0;
    int torsion = 0;
    bool operator==(const GradedLevel&) const = default;
};

struct GradedReport {
    Filtration which = Filtration::first;
    // first: level i is y^i M / y^{i+1} M, i = 0..n-1.
    // second: level i is M^{(i+1)} / M^{(i)}, i = 0..n-1.
    std::vector<GradedLevel> levels;
    bool operator==(const GradedReport& o) const { return which == o.which && levels == o.levels; }
};

ModuleRep span_from_generators(const RingParams& params, int rank, const std::vector<AmbientVec>& gens);
ModuleRep ideal(const RingParams& params, const std::vector<RingElem>& gens);
ModuleRep ideal_from_text(const RingParams& params, const std::vector<std::string>& gens);
// Wraps an x,y-closed subspace; closure is verified.
ModuleRep module_from_subspace(const Ambient& amb, Subspace num, std::optional<Subspace> den, ModuleRep::Recipe recipe);

// dim M - dim M'. Throws when M' is not contained in M or when the quotient
// does not have finite length.
long quotient_length(const ModuleRep& M, const ModuleRep& Mp);

std::vector<ModuleRep> first_filtration(const ModuleRep& M);
std::vector<ModuleRep> second_filtration(const ModuleRep& M);
// Smallest d with y^d M = 0.
int depth(const ModuleRep& M);

// Single-precision report; graded_report certifies it at N and N+2.
GradedReport graded_report_at(const ModuleRep& M, Filtration which);
GradedReport graded_report(const ModuleRep& M, Filtration which);

// Rank over F_p[x] and finite-length part of P/Q, for x,y-closed Q inside P.
GradedLevel subquotient_level(const Ambient& amb, const Subspace& P, const Subspace& Q);

IndexVector indices(const ModuleRep& M);
IndexVector indices_by_definition(const ModuleRep& M);
ModuleRep pure_quotient(const ModuleRep& M, int i);

ModuleRep dual_module_oracle(const ModuleRep& M);

enum class IsoVerdict { yes, no, inconclusive };
const char* to_string(IsoVerdict v);

struct IsoBudget {
    std::uint64_t exhaustive_limit = 1u << 16;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
};

IsoVerdict is_isomorphic_oracle(const ModuleRep& M, const ModuleRep& Mp, const IsoBudget& budget = {});

// Element of an ideal whose y-degree-0 part has least x-valuation.
RingElem nonzerodivisor_generator(const ModuleRep& M);
// Minimal generators, lifted from a basis of M / mM.
std::vector<Vec> minimal_generators(const ModuleRep& M);
// Least c with x^c A^r contained in M, or N when no such c < N exists.
int conductor_exponent(const ModuleRep& M);

}  // namespace pmc
