#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmc/invariants.hpp"

namespace pmc {

// Local indices of a glb at one point. Jump positions use the internal
// convention: a special point with jump j has b_k = 0 for k < j and
// b_k = b_{n-1} for k >= j, i.e. local module (x^b + alpha y, y^j).
struct PointIndices {
    IndexVector b;
    // All alpha-parameters vanish.
    bool monomial = false;

    bool special() const;
    std::optional<int> jump() const;
    int top() const { return b.empty() ? 0 : b.back(); }
    auto operator<=>(const PointIndices&) const = default;
};

struct LocalConfig {
    int n = 1;
    std::vector<PointIndices> points;

    IndexVector global() const;
    bool all_special() const;
    void validate() const;
    // Sorted points, for use as a key.
    LocalConfig canonical() const;
    bool operator==(const LocalConfig&) const = default;
};

PointIndices special_point(int n, int j, int value, bool monomial);
PointIndices monomial_point(const IndexVector& b);

struct ComponentDescriptor {
    IndexVector beta;
    long long dimension = 0;
    long long tangent_dim_generic = 0;
    bool divisibility_ok = false;
    LocalConfig generic_config;
};

// Stable index vectors satisfying the divisibility condition, lexicographic.
std::vector<IndexVector> admissible_indices(const CurveParams& cp);
std::vector<ComponentDescriptor> enumerate_components(const CurveParams& cp);
LocalConfig generic_config(int n, const IndexVector& beta);
long long tangent_dim_generic(const CurveParams& cp, const IndexVector& beta);
// Empty when the divisibility condition fails (the locus is empty).
std::optional<long long> z_locus_dimension(const CurveParams& cp, const LocalConfig& config);
long long tangent_dimension(const CurveParams& cp, const LocalConfig& config);
long long tangent_dimension_vector_bundle(const CurveParams& cp, std::optional<long long> h0_end_twist);

struct BlowupFlags {
    bool direct_image_of_line_bundle = false;
    bool blowup_is_pmc = false;
};
BlowupFlags blowup_predicates(int n, const PointIndices& point);
long long blowup_genus(const CurveParams& cp, const LocalConfig& config);

enum class MoveKind { split, shrink, absorb, subtract, pair, dual_pair };
const char* to_string(MoveKind k);

struct MoveSpec {
    MoveKind kind = MoveKind::split;
    std::size_t point = 0;
    // Only for MoveKind::subtract.
    IndexVector subtract;
};

LocalConfig apply_move(const LocalConfig& config, const MoveSpec& move);
std::vector<MoveSpec> applicable_moves(const LocalConfig& config);
LocalConfig dual_config(const LocalConfig& config);

struct ConnectivityOptions {
    // 0 selects beta_max * n.
    int depth = 0;
};

struct ConnectivityResult {
    std::vector<IndexVector> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<int> component_of;
    int count = 0;
};

ConnectivityResult connectivity(const CurveParams& cp, const ConnectivityOptions& opts = {});
std::string to_dot(const ConnectivityResult& result, const CurveParams& cp);

struct RigidLocus {
    long long d0 = 0, d1 = 0;
    long long dimension = 0;
};

struct ConjectureReport {
    // Present when delta <= 2(g1-1).
    std::optional<long long> bundle_component_dimension;
    std::vector<RigidLocus> rigid_loci;
    std::vector<ComponentDescriptor> components;
};

ConjectureReport conjecture_report_n3(const CurveParams& cp);

std::string format_indices(const IndexVector& beta);

}  // namespace pmc
