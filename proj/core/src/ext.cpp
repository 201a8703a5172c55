#include "pmc/ext.hpp"

#include <algorithm>
#include <sstream>

#include "pmc/error.hpp"
#include "pmc/normal_form.hpp"

namespace pmc {

namespace {

RingMatrix lift(const RingMatrix& m, int N) {
    RingMatrix out = m;
    for (auto& row : out)
        for (auto& e : row) e = e.with_precision(N);
    return out;
}

bool product_vanishes(const RingMatrix& a, const RingMatrix& b) {
    const std::size_t r = a.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            RingElem s = RingElem::zero(a[0][0].params());
            for (std::size_t l = 0; l < r; ++l) s += a[i][l] * b[l][k];
            if (!s.is_zero()) return false;
        }
    return true;
}

void check_complex(const ResolutionData& r) {
    const std::size_t n = r.f.size();
    for (std::size_t k = 0; k < n; ++k) {
        RingElem s = RingElem::zero(r.params);
        for (std::size_t l = 0; l < n; ++l) s += r.f[l] * r.M1[l][k];
        if (!s.is_zero()) throw InvariantViolation("resolution: f o M1 != 0");
    }
    if (!product_vanishes(r.M1, r.M2)) throw InvariantViolation("resolution: M1 M2 != 0");
    if (!product_vanishes(r.M2, r.M1)) throw InvariantViolation("resolution: M2 M1 != 0");
}

bool is_free(const ModuleRep& I) { return I.numerator().contains(I.ambient().coords(RingElem::one(I.params()))); }

// Span of the images of f_l e_k under u -> M^T u.
Subspace image_of(const Ambient& amb, const std::vector<RingElem>& f, const RingMatrix& M) {
    const std::size_t r = f.size();
    std::vector<Vec> seeds;
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t k = 0; k < r; ++k) {
            AmbientVec v(r, RingElem::zero(amb.params));
            for (std::size_t m = 0; m < r; ++m) v[m] = f[l] * M[k][m];
            seeds.push_back(amb.coords(v));
        }
    return amb.close(std::move(seeds));
}

long ext1_at(const ResolutionData& res, int N) {
    const RingParams P = res.params.with_precision(N);
    std::vector<RingElem> f;
    for (const auto& g : res.f) f.push_back(g.with_precision(N));
    const RingMatrix M1 = lift(res.M1, N), M2 = lift(res.M2, N);
    const int r = res.size();
    Ambient amb{P, r};

    std::vector<Vec> seeds;
    for (int l = 0; l < r; ++l)
        for (int k = 0; k < r; ++k) {
            AmbientVec v(static_cast<std::size_t>(r), RingElem::zero(P));
            v[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(l)];
            seeds.push_back(amb.coords(v));
        }
    const Subspace U = amb.close(std::move(seeds));
    const Subspace im1 = image_of(amb, f, M1);
    const Subspace im2 = image_of(amb, f, M2);
    if (!U.contains(im1) || !U.contains(im2)) throw InvariantViolation("ext: image not contained in I^r");

    const int rank_u = subquotient_level(amb, U, amb.empty()).rank;
    const int rank1 = subquotient_level(amb, im1, amb.empty()).rank;
    const int rank2 = subquotient_level(amb, im2, amb.empty()).rank;
    if (rank_u != P.n * r || rank1 + rank2 != rank_u)
        throw RankError("ext: rank certificate failed (" + std::to_string(rank1) + " + " + std::to_string(rank2) +
                        " != " + std::to_string(rank_u) + ")");
    return subquotient_level(amb, U, im1).torsion;
}

}  // namespace

ResolutionData build_resolution(const ModuleRep& I) {
    if (I.ambient_rank() != 1 || I.has_denominator()) throw ShapeError("build_resolution: expected an ideal");
    if (is_free(I)) throw UnsupportedCase("build_resolution: ideal is free");
    const RingParams& P = I.params();
    const int n = P.n;
    const IndexVector beta = indices(I);
    ResolutionData r;
    r.params = P;
    auto zero = RingElem::zero(P);
    auto yp = [&](int e) { return RingElem::y_pow(P, e); };

    if (single_jump(beta)) {
        SpecialNormalForm nf = normalize_special(I);
        const RingElem s = special_generator(nf, P);
        const int j = nf.j;
        r.f = {yp(j), s};
        r.M1 = {{yp(n - j), -s}, {zero, yp(j)}};
        r.M2 = {{yp(j), s}, {zero, yp(n - j)}};
    } else if (n == 3) {
        const int b1 = beta[0], b2 = beta[1], c = b2 - b1;
        auto s = element_with_leading_part(I, b2);
        if (!s) throw ShapeError("build_resolution: no element with leading part x^" + std::to_string(b2));
        const RingElem g1 = yp(2), g2 = RingElem::x_pow(P, c).times_y_pow(1);
        if (!ideal(P, {*s, g2, g1}).numerator().same_span(I.numerator()))
            throw ShapeError("build_resolution: ideal is not (x^b2 + alpha y, x^(b2-b1) y, y^2)");
        // alpha only matters modulo (x^min(b2-b1, b1), y).
        XPoly alpha(static_cast<std::size_t>(std::min(c, b1)), 0);
        for (std::size_t a = 0; a < alpha.size(); ++a) alpha[a] = s->coeff(1, static_cast<int>(a));
        const RingElem al = RingElem::from_x_poly(P, alpha);
        const RingElem g3 = RingElem::x_pow(P, b2) + al.times_y_pow(1);
        const RingElem xc = RingElem::x_pow(P, c), xe = RingElem::x_pow(P, b1);
        r.f = {g1, g2, g3};
        r.M1 = {{yp(1), -xc, -al}, {zero, yp(1), -xe}, {zero, zero, yp(1)}};
        r.M2 = {{yp(2), xc.times_y_pow(1), g3}, {zero, yp(2), xe.times_y_pow(1)}, {zero, zero, yp(2)}};
    } else {
        throw UnsupportedCase("build_resolution: indices " + format_indices(beta) +
                              " are neither single-jump nor of multiplicity 3");
    }
    check_complex(r);
    return r;
}

std::string format_resolution(const ResolutionData& r) {
    std::ostringstream os;
    os << "f = (";
    for (std::size_t i = 0; i < r.f.size(); ++i) os << (i ? ", " : "") << r.f[i].to_string();
    os << ")\n";
    auto print = [&](const char* name, const RingMatrix& m) {
        std::vector<std::size_t> width(m.size(), 0);
        for (const auto& row : m)
            for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].to_string().size());
        os << name << " =\n";
        for (const auto& row : m) {
            os << "  [";
            for (std::size_t k = 0; k < row.size(); ++k) {
                std::string e = row[k].to_string();
                os << (k ? "  " : " ") << std::string(width[k] - e.size(), ' ') << e;
            }
            os << " ]\n";
        }
    };
    print("M1", r.M1);
    print("M2", r.M2);
    return os.str();
}

long local_ext1_length(const ModuleRep& I) {
    if (I.ambient_rank() != 1 || I.has_denominator()) throw ShapeError("local_ext1_length: expected an ideal");
    if (is_free(I)) return 0;
    const ResolutionData res = build_resolution(I);
    const int N = I.params().N;
    const long v = ext1_at(res, N);
    const long w = ext1_at(res, N + 2);
    if (v != w)
        throw PrecisionError("local_ext1_length: value changed from " + std::to_string(v) + " to " +
                             std::to_string(w) + " when raising precision");
    return v;
}

long ext1_closed_form_special(int n, int j, int b) { return 2L * std::min(j, n - j) * b; }

long ext1_closed_form_n3(int b1, int b2) { return 2L * b2 + 2L * std::min(b1, b2 - b1); }

long long global_ext1_dimension(const CurveParams& cp, const LocalConfig& config, bool stable,
                                std::optional<long long> h0_blowup) {
    if (!stable && !h0_blowup)
        throw MissingInput("global_ext1_dimension: h0 of the blow-up is required for non-stable sheaves");
    const long long h0 = stable ? 1 : *h0_blowup;
    return tangent_dimension(cp, config) + h0 - 1;
}

}  // namespace pmc
