#include "pmc/ring.hpp"

#include <cctype>
#include <sstream>

#include "pmc/error.hpp"

namespace pmc {

void RingParams::validate() const {
    if (n < 1) throw ParameterError("multiplicity n must be >= 1");
    if (N < 1) throw ParameterError("precision N must be >= 1");
    if (p >= (1u << 16) || !is_prime(p)) throw ParameterError("p must be a prime below 2^16, got " + std::to_string(p));
}

int min_precision(int n, int B) { return 2 * n * (B + 1); }

RingElem::RingElem(const RingParams& params) : params_(params) {
    params_.validate();
    c_.assign(static_cast<std::size_t>(params_.size()), 0);
}

RingElem RingElem::one(const RingParams& params) { return monomial(params, 1, 0, 0); }

RingElem RingElem::monomial(const RingParams& params, std::uint32_t c, int a, int i) {
    RingElem r(params);
    if (a < params.N && i < params.n && a >= 0 && i >= 0) r.set(i, a, c % params.p);
    return r;
}

RingElem RingElem::from_x_poly(const RingParams& params, const std::vector<std::uint32_t>& c) {
    RingElem r(params);
    for (std::size_t a = 0; a < c.size() && static_cast<int>(a) < params.N; ++a) r.set(0, static_cast<int>(a), c[a] % params.p);
    return r;
}

void RingElem::set(int i, int a, std::uint32_t v) {
    if (i < 0 || i >= params_.n || a < 0 || a >= params_.N) throw RangeError("coefficient index out of range");
    c_[static_cast<std::size_t>(i) * params_.N + a] = v % params_.p;
}

bool RingElem::is_zero() const {
    for (auto v : c_)
        if (v) return false;
    return true;
}

int RingElem::y_valuation() const {
    for (int i = 0; i < params_.n; ++i)
        if (x_valuation(i) < params_.N) return i;
    return params_.n;
}

int RingElem::x_valuation(int i) const {
    for (int a = 0; a < params_.N; ++a)
        if (coeff(i, a)) return a;
    return params_.N;
}

ElementClass RingElem::classify() const {
    if (is_zero()) throw DomainError("classify_element: zero input");
    if (coeff(0, 0)) return ElementClass::unit;
    if (x_valuation(0) < params_.N) return ElementClass::nonzerodivisor_nonunit;
    return ElementClass::zerodivisor;
}

void RingElem::check_compatible(const RingElem& o) const {
    if (!(params_ == o.params_)) throw ParameterError("mismatched ring parameters");
}

RingElem RingElem::operator+(const RingElem& o) const {
    RingElem r = *this;
    r += o;
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
    RingElem r = *this;
    r -= o;
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    check_compatible(o);
    Fp f = params_.field();
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = f.add(c_[k], o.c_[k]);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    check_compatible(o);
    Fp f = params_.field();
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = f.sub(c_[k], o.c_[k]);
    return *this;
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    Fp f = params_.field();
    for (auto& v : r.c_) v = f.neg(v);
    return r;
}

RingElem RingElem::scaled(std::uint32_t s) const {
    RingElem r = *this;
    Fp f = params_.field();
    s %= params_.p;
    for (auto& v : r.c_) v = f.mul(v, s);
    return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
    check_compatible(o);
    const int n = params_.n, N = params_.N;
    const std::uint64_t p = params_.p;
    std::vector<std::uint64_t> acc(c_.size(), 0);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < N; ++a) {
            std::uint64_t u = coeff(i, a);
            if (!u) continue;
            for (int j = 0; i + j < n; ++j) {
                std::uint64_t* row = &acc[static_cast<std::size_t>(i + j) * N];
                const std::uint32_t* orow = &o.c_[static_cast<std::size_t>(j) * N];
                for (int b = 0; a + b < N; ++b) row[a + b] = (row[a + b] + u * orow[b]) % p;
            }
        }
    RingElem r(params_);
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<std::uint32_t>(acc[k]);
    return r;
}

RingElem RingElem::div_y() const {
    if (coeff(0, 0) || x_valuation(0) < params_.N) throw DomainError("div_y: element not divisible by y");
    RingElem r(params_);
    for (int i = 1; i < params_.n; ++i)
        for (int a = 0; a < params_.N; ++a) r.c_[static_cast<std::size_t>(i - 1) * params_.N + a] = coeff(i, a);
    return r;
}

RingElem RingElem::times_x_pow(int e) const {
    RingElem r(params_);
    for (int i = 0; i < params_.n; ++i)
        for (int a = 0; a + e < params_.N; ++a) r.c_[static_cast<std::size_t>(i) * params_.N + a + e] = coeff(i, a);
    return r;
}

RingElem RingElem::times_y_pow(int e) const {
    RingElem r(params_);
    for (int i = 0; i + e < params_.n; ++i)
        for (int a = 0; a < params_.N; ++a) r.c_[static_cast<std::size_t>(i + e) * params_.N + a] = coeff(i, a);
    return r;
}

RingElem RingElem::truncate_y(int e) const {
    RingElem r = *this;
    for (int i = e < 0 ? 0 : e; i < params_.n; ++i)
        for (int a = 0; a < params_.N; ++a) r.c_[static_cast<std::size_t>(i) * params_.N + a] = 0;
    return r;
}

RingElem RingElem::with_precision(int N2) const {
    RingElem r(params_.with_precision(N2));
    for (int i = 0; i < params_.n; ++i)
        for (int a = 0; a < params_.N && a < N2; ++a) r.c_[static_cast<std::size_t>(i) * N2 + a] = coeff(i, a);
    return r;
}

std::string RingElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < params_.n; ++i)
        for (int a = 0; a < params_.N; ++a) {
            std::uint32_t c = coeff(i, a);
            if (!c) continue;
            if (!first) os << " + ";
            first = false;
            bool need_star = false;
            if (c != 1 || (a == 0 && i == 0)) {
                os << c;
                need_star = true;
            }
            if (a > 0) {
                if (need_star) os << '*';
                os << 'x';
                if (a > 1) os << '^' << a;
                need_star = true;
            }
            if (i > 0) {
                if (need_star) os << '*';
                os << 'y';
                if (i > 1) os << '^' << i;
            }
        }
    return first ? "0" : os.str();
}

RingElem multiply(const RingElem& f, const RingElem& g) { return f * g; }
ElementClass classify_element(const RingElem& f) { return f.classify(); }
int y_valuation(const RingElem& f) { return f.y_valuation(); }

const char* to_string(ElementClass c) {
    switch (c) {
        case ElementClass::unit: return "unit";
        case ElementClass::nonzerodivisor_nonunit: return "nonzerodivisor_nonunit";
        case ElementClass::zerodivisor: return "zerodivisor";
    }
    return "?";
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char ch) {
        skip();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    long long number() {
        skip();
        if (!peek_digit()) fail("expected a number");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 2147483647LL) fail("number too large");
            ++pos;
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at column " + std::to_string(pos + 1) + " in '" + s + "'");
    }
};

}  // namespace

RingElem parse_elem(const std::string& text, const RingParams& params) {
    params.validate();
    Parser ps{text};
    Fp f = params.field();
    RingElem result(params);
    ps.skip();
    if (ps.pos >= text.size()) ps.fail("empty element");
    bool first = true;
    while (true) {
        ps.skip();
        if (ps.pos >= text.size()) break;
        long long sign = 1;
        if (ps.eat('+')) {
        } else if (ps.eat('-')) {
            sign = -1;
        } else if (!first) {
            ps.fail("expected '+' or '-'");
        }
        first = false;
        long long coef = 1;
        int xa = 0, yi = 0;
        bool any = false;
        while (true) {
            ps.skip();
            if (ps.peek_digit()) {
                coef = static_cast<long long>(f.mul(f.from_int(coef), f.from_int(ps.number())));
            } else if (ps.eat('x')) {
                xa += ps.eat('^') ? static_cast<int>(ps.number()) : 1;
            } else if (ps.eat('y')) {
                yi += ps.eat('^') ? static_cast<int>(ps.number()) : 1;
            } else {
                ps.fail("expected a coefficient, x or y");
            }
            any = true;
            if (!ps.eat('*')) break;
        }
        if (!any) ps.fail("empty term");
        result += RingElem::monomial(params, f.from_int(sign * coef), xa, yi);
    }
    return result;
}

}  // namespace pmc
