#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmc/moduli.hpp"

namespace pmc {

using RingMatrix = std::vector<std::vector<RingElem>>;

// Periodic resolution ... -> A^r -M2-> A^r -M1-> A^r -f-> I -> 0.
// Column k of M1 is a relation among the generators f.
struct ResolutionData {
    RingParams params;
    std::vector<RingElem> f;
    RingMatrix M1, M2;
    int size() const { return static_cast<int>(f.size()); }
};

// I must be an ideal with single-jump indices in standard position, or any
// ideal when n = 3.
ResolutionData build_resolution(const ModuleRep& I);
std::string format_resolution(const ResolutionData& r);

// Length of Ext^1(I, I), computed from the resolution and certified at N and N+2.
long local_ext1_length(const ModuleRep& I);

long ext1_closed_form_special(int n, int j, int b);
long ext1_closed_form_n3(int b1, int b2);

long long global_ext1_dimension(const CurveParams& cp, const LocalConfig& config, bool stable,
                                std::optional<long long> h0_blowup);

}  // namespace pmc
