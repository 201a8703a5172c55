#pragma once

#include <string>
#include <vector>

#include "pmc/invariants.hpp"

namespace pmc {

struct StabilityVerdict {
    bool semistable = false;
    bool stable = false;
    std::vector<int> equality_positions;
};

struct JHFactor {
    // Multiplicity of the support (generalized rank / 1).
    int rank = 0;
    Rational degree;
    IndexVector indices;
    Rational slope() const { return degree / Rational(rank); }
};

struct JHFiltration {
    std::vector<int> positions;
    // Descriptions of the chain F^{(n-i_1)} > ... > F^{(n-i_k)}, largest first.
    std::vector<std::string> steps;
    // Factors from the top quotient F / F^{(n-i_1)} down to F^{(n-i_k)}.
    std::vector<JHFactor> graded;
};

// Left and right sides of the i-th inequality, both doubled so they are integers.
long long stability_lhs2(const CurveParams& cp, const IndexVector& beta, int i);
long long stability_rhs2(const CurveParams& cp, int i);

StabilityVerdict check_stability(const CurveParams& cp, const IndexVector& beta);
JHFiltration jh_filtration(const CurveParams& cp, const IndexVector& beta);
bool dual_stability_check(const CurveParams& cp, const IndexVector& beta);

}  // namespace pmc
