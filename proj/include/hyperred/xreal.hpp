#pragma once

#include <mpfr.h>

#include <string>

namespace hyperred {

// Minimal arbitrary-precision float for series evaluation near tolerance;
// fixed working precision of about 48 decimal digits.
class XReal {
public:
    static constexpr mpfr_prec_t kPrec = 160;

    XReal() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    XReal(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    XReal(int i) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, i, MPFR_RNDN); }
    XReal(long i) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, i, MPFR_RNDN); }
    XReal(const XReal& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    XReal(XReal&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    ~XReal() { mpfr_clear(v_); }

    XReal& operator=(const XReal& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    XReal& operator=(XReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend XReal operator+(const XReal& a, const XReal& b) {
        XReal r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend XReal operator-(const XReal& a, const XReal& b) {
        XReal r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend XReal operator*(const XReal& a, const XReal& b) {
        XReal r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend XReal operator/(const XReal& a, const XReal& b) {
        XReal r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    XReal operator-() const { XReal r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    XReal& operator+=(const XReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    XReal& operator-=(const XReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    XReal& operator*=(const XReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    XReal& operator/=(const XReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const XReal& a, const XReal& b) { return !(a == b); }
    friend bool operator<(const XReal& a, const XReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const XReal& a, const XReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const XReal& a, const XReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const XReal& a, const XReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

    friend XReal abs(const XReal& a) { XReal r; mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }

private:
    mpfr_t v_;
};

} // namespace hyperred
