#pragma once

#include <map>
#include <vector>

#include "hyperred/context.hpp"
#include "hyperred/rational.hpp"

namespace hyperred {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order; the symbol order of the Context (parameters
// before variables) is the lexicographic tie-break.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored; all exponent vectors have the
// context's arity.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(ContextPtr ctx, const Rational& c);

    static Poly constant(const ContextPtr& ctx, const Rational& c) { return Poly(ctx, c); }
    static Poly symbol(const ContextPtr& ctx, int sym_index, unsigned power = 1);
    static Poly variable(const ContextPtr& ctx, int var_1based, unsigned power = 1);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    void add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    unsigned total_degree() const; // 0 for the zero polynomial

    // Leading term under the fixed monomial order.
    const std::pair<const Exponents, Rational>& leading() const;

    // d/d(sym); plain partial derivative with respect to one symbol.
    Poly derivative(int sym_index) const;

    // Componentwise minimum of all exponent vectors (zero vector if empty).
    Exponents monomial_content() const;
    Poly shift_down(const Exponents& e) const; // divide by the monomial x^e

    // gcd of coefficient numerators / lcm of denominators, with the sign of
    // the leading coefficient. Zero polynomial has content 0.
    Rational content() const;

    Poly times_monomial(const Exponents& e, const Rational& c) const;

    // Sets q = n/d and returns true iff the division is exact. Gives up (and
    // returns false) beyond an internal step bound.
    static bool divide_exact(const Poly& n, const Poly& d, Poly& q);

    template <typename R>
    R eval(const std::vector<R>& point) const {
        R acc = R(0);
        for (const auto& [e, c] : terms_) {
            R t = rational_cast<R>(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    Rational eval_exact(const std::vector<Rational>& point) const;

    // Replace a subset of symbols by exact rationals (values for others are
    // ignored; mask selects which symbols to substitute).
    Poly substitute(const std::vector<bool>& mask, const std::vector<Rational>& values) const;

    std::string str() const;

private:
    ContextPtr ctx_;
    TermMap terms_;
};

Poly parse_poly(const ContextPtr& ctx, const std::string& text);

} // namespace hyperred
