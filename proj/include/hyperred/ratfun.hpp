#pragma once

#include "hyperred/poly.hpp"

namespace hyperred {

// Rational function num/den. No multivariate gcd is performed; instead the
// denominator is kept as a list of primitive polynomial factors, so sums can
// share the common factors of their denominators and products only ever
// append factors. The numerator carries the rational scale; each factor has
// content 1 and a positive leading coefficient. Semantic equality goes
// through cross-multiplication (ratfun_equal()).
class RatFun {
public:
    RatFun() = default;
    RatFun(Poly num, Poly den);
    RatFun(Poly num, std::vector<Poly> den_factors);
    explicit RatFun(Poly num);

    static RatFun constant(const ContextPtr& ctx, const Rational& c);
    static RatFun zero(const ContextPtr& ctx) { return constant(ctx, 0); }
    static RatFun one(const ContextPtr& ctx) { return constant(ctx, 1); }
    static RatFun variable(const ContextPtr& ctx, int var_1based);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; } // expanded product of the factors
    const std::vector<Poly>& den_factors() const { return fac_; }
    const ContextPtr& context() const { return num_.context(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inverse() const;

    // Structural equality (same normalized num and den).
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();

    Poly num_, den_;
    std::vector<Poly> fac_; // den_ == product of fac_; sorted, primitive, non-constant
};

// Arbitrary total order on polynomials (used to keep factor lists sorted).
bool poly_less(const Poly& a, const Poly& b);

// Sum over a shared denominator (the multiset union of all factor lists);
// much cheaper than folding with operator+ when many terms share factors.
RatFun ratfun_sum(const ContextPtr& ctx, std::vector<RatFun> terms);

// true iff p.num*q.den - q.num*p.den is the zero polynomial.
bool ratfun_equal(const RatFun& p, const RatFun& q);

// z_i * d/dz_i applied to R (i is 1-based over the variable symbols).
RatFun theta_deriv(const RatFun& r, int var_1based);

template <typename R>
R eval_ratfun(const RatFun& f, const std::vector<R>& point) {
    R d = f.den().eval(point);
    if (d == R(0))
        fail(ErrorCode::DenominatorVanishes, "denominator vanishes at substitution point");
    return f.num().eval(point) / d;
}

Rational eval_ratfun_exact(const RatFun& f, const std::vector<Rational>& point);

RatFun parse_ratfun(const ContextPtr& ctx, const std::string& text);

} // namespace hyperred
