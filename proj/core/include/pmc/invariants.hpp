#pragma once

#include <boost/rational.hpp>
#include <optional>

#include "pmc/module.hpp"

namespace pmc {

using Rational = boost::rational<long long>;

// n: multiplicity, g1: genus of the reduced curve, delta = -deg of the
// conormal bundle, D: generalized degree.
struct CurveParams {
    int n = 1;
    long long g1 = 0;
    long long delta = 0;
    long long D = 0;
};

long long genus(const CurveParams& cp, int i);
Rational deg_pure_quotient(const CurveParams& cp, const IndexVector& beta, int i);
Rational deg_second_filtration(const CurveParams& cp, const IndexVector& beta, int i);
IndexVector dual_indices(const IndexVector& beta);
IndexVector sub_indices(const IndexVector& beta, int i);

struct RankDegree {
    Rational Rk;
    Rational Deg;
};
RankDegree rank_degree_conversion(const CurveParams& cp, Rational ordinary_rank, Rational ordinary_deg);
long long deg_tensor(const CurveParams& cp, long long R, long long DegF, long long m, long long DegE);

// n | D + n(n-1)/2 delta - sum(beta).
bool divisibility_ok(const CurveParams& cp, const IndexVector& beta);

std::string format_rational(const Rational& r);

}  // namespace pmc
