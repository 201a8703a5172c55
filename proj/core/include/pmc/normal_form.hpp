#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pmc/module.hpp"

namespace pmc {

using XPoly = std::vector<std::uint32_t>;

// Ideal with indices beta and correction terms alpha(i,j), 3 <= i <= n, 1 <= j <= i-2.
// alpha(i,j) is a polynomial in x of degree < beta_{n-j} - beta_{n-j-1}.
struct GeneralNormalForm {
    int n = 1;
    IndexVector beta;
    std::map<std::pair<int, int>, XPoly> alpha;

    // Exponent bounding the representative of alpha(., j).
    int alpha_modulus(int j) const;
    // Reduce every alpha to its canonical representative; drops zero entries.
    void canonicalize(std::uint32_t p);
    bool operator==(const GeneralNormalForm&) const = default;
};

// (x^b + sum_h z_h(x) y^h, y^j), 1 <= h <= jbar = min(j, n-j) - 1, deg z_h < b.
struct SpecialNormalForm {
    int n = 1;
    int b = 1;
    int j = 1;
    std::vector<XPoly> z;

    int jbar() const { return std::min(j, n - j) - 1; }
    IndexVector beta() const;
    bool operator==(const SpecialNormalForm&) const = default;
};

bool is_monotone(const IndexVector& beta);
// Jump position when beta has the shape 0 = beta_{j-1} < beta_j = beta_{n-1}.
std::optional<int> single_jump(const IndexVector& beta);

// Generators m_1..m_n of the normal form ideal.
std::vector<RingElem> normal_form_generators(const GeneralNormalForm& nf, const RingParams& params);
ModuleRep ideal_from_indices(const GeneralNormalForm& nf, const RingParams& params);

RingElem special_generator(const SpecialNormalForm& nf, const RingParams& params);
ModuleRep special_ideal(const SpecialNormalForm& nf, const RingParams& params);
SpecialNormalForm normalize_special(const ModuleRep& M);

// Element of M whose y-degree-0 part is exactly x^b, if any.
std::optional<RingElem> element_with_leading_part(const ModuleRep& M, int b);

struct EnumeratedModule {
    GeneralNormalForm nf;
    ModuleRep module;
    int class_id = 0;
    // Position of an earlier entry isomorphic to this one.
    std::optional<std::size_t> duplicate_of;
};

struct EnumerationOptions {
    std::size_t ceiling = 5000;
    bool dedup = true;
    IsoBudget budget{};
    // When set, only this index vector is enumerated.
    std::optional<IndexVector> only_beta;
};

// All monotone beta with beta_{n-1} <= beta_max (lexicographic), each with
// every alpha-representative tuple over the prime field.
std::vector<GeneralNormalForm> enumerate_normal_forms(int n, int beta_max, std::uint32_t p,
                                                      const std::optional<IndexVector>& only_beta = std::nullopt);
std::vector<EnumeratedModule> enumerate_invertible_modules(int n, int beta_max, const RingParams& params,
                                                           const EnumerationOptions& opts = {});
// All monotone nonnegative vectors of length len with entries <= max.
std::vector<IndexVector> monotone_vectors(int len, int max);

}  // namespace pmc
