#include "pmc/stability.hpp"

#include "pmc/error.hpp"
#include "pmc/normal_form.hpp"

namespace pmc {

namespace {

void validate(const CurveParams& cp, const IndexVector& beta) {
    if (cp.n < 1) throw ParameterError("multiplicity must be >= 1");
    if (static_cast<int>(beta.size()) != cp.n - 1) throw ShapeError("index vector must have n-1 entries");
    if (!is_monotone(beta)) throw ShapeError("index vector must be monotone and nonnegative");
    if (cp.delta < 0) throw DomainError("stability requires delta >= 0");
}

}  // namespace

long long stability_lhs2(const CurveParams& cp, const IndexVector& beta, int i) {
    const int n = cp.n;
    long long above = 0, below = 0;
    for (int j = 1; j <= n - 1; ++j) (j >= i ? above : below) += beta[static_cast<std::size_t>(j - 1)];
    return 2 * (i * above - (n - i) * below);
}

long long stability_rhs2(const CurveParams& cp, int i) {
    return static_cast<long long>(i) * cp.n * (cp.n - i) * cp.delta;
}

StabilityVerdict check_stability(const CurveParams& cp, const IndexVector& beta) {
    validate(cp, beta);
    StabilityVerdict v;
    v.semistable = true;
    for (int i = 1; i <= cp.n - 1; ++i) {
        long long l = stability_lhs2(cp, beta, i), r = stability_rhs2(cp, i);
        if (l > r) v.semistable = false;
        if (l == r) v.equality_positions.push_back(i);
    }
    v.stable = v.semistable && v.equality_positions.empty();
    if (!v.semistable) v.equality_positions.clear();
    return v;
}

JHFiltration jh_filtration(const CurveParams& cp, const IndexVector& beta) {
    StabilityVerdict v = check_stability(cp, beta);
    if (!v.semistable || v.stable) throw DomainError("jh_filtration: input is not strictly semistable");
    const int n = cp.n;
    JHFiltration jh;
    jh.positions = v.equality_positions;
    for (int i : jh.positions) jh.steps.push_back("F^(" + std::to_string(n - i) + ")");
    // Degree of F^{(k)}: D for k = n, 0 for k = 0.
    auto deg2 = [&](int k) -> Rational {
        if (k == n) return Rational(cp.D);
        if (k == 0) return Rational(0);
        return deg_second_filtration(cp, beta, k);
    };
    std::vector<int> cuts{0};
    cuts.insert(cuts.end(), jh.positions.begin(), jh.positions.end());
    cuts.push_back(n);
    for (std::size_t h = 0; h + 1 < cuts.size(); ++h) {
        const int lo = cuts[h], hi = cuts[h + 1];
        JHFactor f;
        f.rank = hi - lo;
        f.degree = deg2(n - lo) - deg2(n - hi);
        // Indices of F^{(n-lo)}, truncated to its pure quotient of depth hi - lo.
        if (hi - lo > 1) {
            IndexVector sub = (lo == 0) ? beta : sub_indices(beta, n - lo);
            f.indices.assign(sub.begin(), sub.begin() + (hi - lo - 1));
        }
        jh.graded.push_back(std::move(f));
    }
    return jh;
}

bool dual_stability_check(const CurveParams& cp, const IndexVector& beta) {
    StabilityVerdict a = check_stability(cp, beta);
    StabilityVerdict b = check_stability(cp, dual_indices(beta));
    if (a.semistable != b.semistable || a.stable != b.stable)
        throw InvariantViolation("stability verdict is not preserved by duality");
    if (a.semistable) {
        std::vector<int> mirrored;
        for (auto it = b.equality_positions.rbegin(); it != b.equality_positions.rend(); ++it) mirrored.push_back(cp.n - *it);
        if (mirrored != a.equality_positions) throw InvariantViolation("equality positions do not dualize as i <-> n-i");
    }
    return a.semistable;
}

}  // namespace pmc
