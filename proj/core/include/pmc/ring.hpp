#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmc/field.hpp"

namespace pmc {

// A = F_p[x]/(x^N) tensor F_p[y]/(y^n).
struct RingParams {
    int n = 1;
    int N = 1;
    std::uint32_t p = 2;

    void validate() const;
    Fp field() const { return Fp{p}; }
    int size() const { return n * N; }
    RingParams with_precision(int N2) const { return RingParams{n, N2, p}; }
    bool operator==(const RingParams&) const = default;
};

// Minimal precision for length computations whose largest local index is B.
int min_precision(int n, int B);

enum class ElementClass { unit, nonzerodivisor_nonunit, zerodivisor };

class RingElem {
public:
    explicit RingElem(const RingParams& params);

    static RingElem zero(const RingParams& params) { return RingElem(params); }
    static RingElem one(const RingParams& params);
    static RingElem monomial(const RingParams& params, std::uint32_t c, int a, int i);
    static RingElem x_pow(const RingParams& params, int a) { return monomial(params, 1, a, 0); }
    static RingElem y_pow(const RingParams& params, int i) { return monomial(params, 1, 0, i); }
    // Polynomial in x only, coefficients from degree 0 upward.
    static RingElem from_x_poly(const RingParams& params, const std::vector<std::uint32_t>& c);

    const RingParams& params() const { return params_; }
    std::uint32_t coeff(int i, int a) const { return c_[static_cast<std::size_t>(i) * params_.N + a]; }
    void set(int i, int a, std::uint32_t v);
    const std::vector<std::uint32_t>& raw() const { return c_; }

    bool is_zero() const;
    int y_valuation() const;
    // Lowest x-degree in the y^i part, or N when that part vanishes.
    int x_valuation(int i) const;
    ElementClass classify() const;

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;
    RingElem scaled(std::uint32_t s) const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    bool operator==(const RingElem& o) const { return params_ == o.params_ && c_ == o.c_; }

    // f / y for f with y-valuation at least 1.
    RingElem div_y() const;
    RingElem times_x_pow(int a) const;
    RingElem times_y_pow(int i) const;
    // Drop all terms of y-degree >= i.
    RingElem truncate_y(int i) const;
    // Reinterpret at another x-precision (zero padding or truncation).
    RingElem with_precision(int N2) const;

    std::string to_string() const;

private:
    void check_compatible(const RingElem& o) const;

    RingParams params_;
    std::vector<std::uint32_t> c_;
};

RingElem multiply(const RingElem& f, const RingElem& g);
ElementClass classify_element(const RingElem& f);
int y_valuation(const RingElem& f);

const char* to_string(ElementClass c);

// Text syntax: sums of terms c*x^a*y^i.
RingElem parse_elem(const std::string& text, const RingParams& params);

}  // namespace pmc
