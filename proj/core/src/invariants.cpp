#include "pmc/invariants.hpp"

#include <numeric>

#include "pmc/error.hpp"
#include "pmc/normal_form.hpp"

namespace pmc {

namespace {

long long beta_at(const IndexVector& beta, int k) {
    if (k <= 0 || k > static_cast<int>(beta.size())) return 0;
    return beta[static_cast<std::size_t>(k - 1)];
}

void check_beta(const CurveParams& cp, const IndexVector& beta) {
    if (cp.n < 1) throw ParameterError("multiplicity must be >= 1");
    if (static_cast<int>(beta.size()) != cp.n - 1) throw ShapeError("index vector must have n-1 entries");
}

}  // namespace

long long genus(const CurveParams& cp, int i) {
    if (i < 1 || i > cp.n) throw RangeError("genus: i must lie in 1..n");
    return 1 + i * (cp.g1 - 1) + static_cast<long long>(i) * (i - 1) / 2 * cp.delta;
}

Rational deg_pure_quotient(const CurveParams& cp, const IndexVector& beta, int i) {
    check_beta(cp, beta);
    const int n = cp.n;
    if (i < 1 || i > n) throw RangeError("deg_pure_quotient: i must lie in 1..n");
    long long below = 0, above = 0;
    for (int j = 1; j < i; ++j) below += beta_at(beta, j);
    for (int j = i; j <= n - 1; ++j) above += beta_at(beta, j);
    // i n (n-i)/2 delta, kept exact by doubling.
    Rational num = Rational(i * cp.D + (n - i) * below - i * above) + Rational(static_cast<long long>(i) * n * (n - i) * cp.delta, 2);
    return num / Rational(n);
}

Rational deg_second_filtration(const CurveParams& cp, const IndexVector& beta, int i) {
    check_beta(cp, beta);
    const int n = cp.n;
    if (i < 1 || i > n - 1) throw RangeError("deg_second_filtration: i must lie in 1..n-1");
    long long low = 0, high = 0;
    for (int j = 1; j <= n - i - 1; ++j) low += beta_at(beta, j);
    for (int j = n - i; j <= n - 1; ++j) high += beta_at(beta, j);
    Rational num = Rational(i * cp.D - i * low + (n - i) * high) - Rational(static_cast<long long>(i) * n * (n - i) * cp.delta, 2);
    return num / Rational(n);
}

IndexVector dual_indices(const IndexVector& beta) {
    if (!is_monotone(beta)) throw ShapeError("dual_indices: index vector must be monotone");
    const int m = static_cast<int>(beta.size());
    IndexVector out;
    for (int i = 1; i <= m; ++i) out.push_back(static_cast<int>(beta_at(beta, m) - beta_at(beta, m - i)));
    return out;
}

IndexVector sub_indices(const IndexVector& beta, int i) {
    const int n = static_cast<int>(beta.size()) + 1;
    if (i < 2 || i > n - 1) throw RangeError("sub_indices: i must lie in 2..n-1");
    IndexVector out;
    for (int j = 1; j <= i - 1; ++j) out.push_back(static_cast<int>(beta_at(beta, n - i + j) - beta_at(beta, n - i)));
    return out;
}

RankDegree rank_degree_conversion(const CurveParams& cp, Rational rk, Rational deg) {
    const long long n = cp.n;
    return {rk * Rational(n), deg - rk * Rational(n * (n - 1) * cp.delta, 2)};
}

long long deg_tensor(const CurveParams& cp, long long R, long long DegF, long long m, long long DegE) {
    const long long n = cp.n;
    Rational v = Rational(R, n) * Rational(DegE) + Rational(m * DegF) + Rational(R * m * (n - 1) * cp.delta, 2);
    if (v.denominator() != 1) throw DomainError("deg_tensor: result " + format_rational(v) + " is not an integer");
    return v.numerator();
}

bool divisibility_ok(const CurveParams& cp, const IndexVector& beta) {
    long long s = std::accumulate(beta.begin(), beta.end(), 0LL);
    long long n = cp.n;
    long long v = cp.D + n * (n - 1) / 2 * cp.delta - s;
    return ((v % n) + n) % n == 0;
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace pmc
