#include "hyperred/theta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperred {

unsigned mono_degree(const ThetaMono& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

ThetaExpr ThetaExpr::identity(const ContextPtr& ctx) {
    ThetaExpr e(ctx);
    e.terms_.emplace(ThetaMono(ctx->num_vars(), 0), RatFun::one(ctx));
    return e;
}

ThetaExpr ThetaExpr::monomial(const ContextPtr& ctx, ThetaMono m, RatFun coeff) {
    ThetaExpr e(ctx);
    if (static_cast<int>(m.size()) != ctx->num_vars())
        fail(ErrorCode::ContextMismatch, "theta-monomial arity does not match context");
    e.add_term(m, coeff);
    return e;
}

void ThetaExpr::add_term(const ThetaMono& m, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ThetaExpr ThetaExpr::operator+(const ThetaExpr& o) const {
    check_same_context(ctx_, o.ctx_);
    ThetaExpr r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ThetaExpr ThetaExpr::operator-(const ThetaExpr& o) const {
    check_same_context(ctx_, o.ctx_);
    ThetaExpr r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ThetaExpr ThetaExpr::scaled(const RatFun& c) const {
    ThetaExpr r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

RatFun ThetaExpr::coeff(const ThetaMono& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return RatFun::zero(ctx_);
    return it->second;
}

bool ThetaExpr::operator==(const ThetaExpr& o) const { return terms_ == o.terms_; }

bool ThetaExpr::equivalent(const ThetaExpr& o) const {
    check_same_context(ctx_, o.ctx_);
    if (terms_.size() != o.terms_.size()) {
        // tolerate explicit zero coefficients on either side
        ThetaExpr d = *this - o;
        for (const auto& [m, c] : d.terms_)
            if (!c.is_zero()) return false;
        return true;
    }
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end()) return false;
        if (!ratfun_equal(c, it->second)) return false;
    }
    return true;
}

std::string ThetaExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (size_t i = 0; i < it->first.size(); ++i) {
            unsigned p = it->first[i];
            if (p == 0) continue;
            os << "*t" << (i + 1);
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

ThetaExpr apply_theta(int var_1based, const ThetaExpr& e) {
    const ContextPtr& ctx = e.context();
    if (var_1based < 1 || var_1based > ctx->num_vars())
        fail(ErrorCode::ContextMismatch, "theta variable index out of range");
    ThetaExpr r(ctx);
    for (const auto& [m, c] : e.terms()) {
        RatFun dc = theta_deriv(c, var_1based);
        if (!dc.is_zero()) r.add_term(m, dc);
        ThetaMono up = m;
        up[static_cast<size_t>(var_1based - 1)] += 1;
        r.add_term(up, c);
    }
    return r;
}

ThetaExpr compose(const ThetaExpr& outer, const ThetaExpr& inner) {
    check_same_context(outer.context(), inner.context());
    ThetaExpr r(outer.context());
    for (const auto& [m, c] : outer.terms()) {
        ThetaExpr t = inner;
        for (size_t i = 0; i < m.size(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) t = apply_theta(static_cast<int>(i) + 1, t);
        r = r + t.scaled(c);
    }
    return r;
}

namespace {

// Normalizer with per-degree linear elimination. Monomials whose one-step
// expansions reference each other at the same total degree form a small
// linear system over the rational-function field; solving it is what turns
// relations like theta1^2*theta2 into basis form despite the mutual feedback
// between the square-rule expansions.
class Rewriter {
public:
    Rewriter(const RewriteSystem& rules, long budget) : rules_(rules), budget_(budget) {}

    const ThetaExpr& nf(const ThetaMono& alpha) {
        auto it = cache_.find(alpha);
        if (it != cache_.end()) return it->second;
        if (rules_.is_basis(alpha)) {
            auto [jt, ok] = cache_.emplace(
                alpha, ThetaExpr::monomial(rules_.ctx, alpha, RatFun::one(rules_.ctx)));
            (void)ok;
            return jt->second;
        }
        solve_cluster(alpha);
        return cache_.at(alpha);
    }

private:
    ThetaExpr expand_once(const ThetaMono& alpha) {
        if (--budget_ < 0)
            fail(ErrorCode::NonTermination, "rewrite step budget exhausted");
        ThetaMono beta = rules_.choose(alpha);
        ThetaExpr e = rules_.expand(beta);
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (beta[i] > alpha[i])
                fail(ErrorCode::NonTermination, "rule target is not a sub-monomial");
            for (unsigned k = 0; k < alpha[i] - beta[i]; ++k)
                e = apply_theta(static_cast<int>(i) + 1, e);
        }
        return e;
    }

    void solve_cluster(const ThetaMono& seed) {
        const unsigned d = mono_degree(seed);
        // close the set of same-degree non-basis monomials under expansion
        std::vector<ThetaMono> unknowns;
        std::map<ThetaMono, ThetaExpr, GrlexLess> expansions;
        std::vector<ThetaMono> work{seed};
        while (!work.empty()) {
            ThetaMono g = work.back();
            work.pop_back();
            if (expansions.count(g)) continue;
            ThetaExpr e = expand_once(g);
            for (const auto& [m, c] : e.terms()) {
                if (mono_degree(m) > d)
                    fail(ErrorCode::NonTermination, "rewrite increased monomial degree");
                if (mono_degree(m) == d && !rules_.is_basis(m) && !expansions.count(m))
                    work.push_back(m);
            }
            unknowns.push_back(g);
            expansions.emplace(std::move(g), std::move(e));
        }

        const size_t k = unknowns.size();
        std::map<ThetaMono, size_t, GrlexLess> index;
        for (size_t i = 0; i < k; ++i) index.emplace(unknowns[i], i);

        // X_i = sum_j A_ij X_j + L_i  ->  (I - A) X = L
        RatFun zero = RatFun::zero(rules_.ctx);
        std::vector<std::vector<RatFun>> M(k, std::vector<RatFun>(k, zero));
        std::vector<ThetaExpr> L(k, ThetaExpr::zero(rules_.ctx));
        for (size_t i = 0; i < k; ++i) {
            M[i][i] = RatFun::one(rules_.ctx);
            for (const auto& [m, c] : expansions.at(unknowns[i]).terms()) {
                auto jt = index.find(m);
                if (jt != index.end()) {
                    M[i][jt->second] = M[i][jt->second] - c;
                } else if (rules_.is_basis(m)) {
                    L[i].add_term(m, c);
                } else {
                    L[i] = L[i] + nf(m).scaled(c); // strictly lower degree
                }
            }
        }

        // Gaussian elimination over the rational-function field
        for (size_t col = 0; col < k; ++col) {
            size_t piv = col;
            while (piv < k && M[piv][col].is_zero()) ++piv;
            if (piv == k)
                fail(ErrorCode::NonTermination, "singular rewrite cluster");
            std::swap(M[piv], M[col]);
            std::swap(L[piv], L[col]);
            RatFun inv = M[col][col].inverse();
            for (size_t j = col; j < k; ++j) M[col][j] = M[col][j] * inv;
            L[col] = L[col].scaled(inv);
            for (size_t r = 0; r < k; ++r) {
                if (r == col || M[r][col].is_zero()) continue;
                RatFun f = M[r][col];
                for (size_t j = col; j < k; ++j) M[r][j] = M[r][j] - f * M[col][j];
                L[r] = L[r] - L[col].scaled(f);
            }
        }
        for (size_t i = 0; i < k; ++i) cache_.emplace(unknowns[i], std::move(L[i]));
    }

    const RewriteSystem& rules_;
    long budget_;
    std::map<ThetaMono, ThetaExpr, GrlexLess> cache_;
};

long default_budget(const ThetaExpr& e) {
    unsigned maxdeg = 0;
    for (const auto& [m, c] : e.terms()) maxdeg = std::max(maxdeg, mono_degree(m));
    long b = 10L * static_cast<long>(maxdeg) * static_cast<long>(e.terms().size());
    return std::max(b, 200L);
}

} // namespace

ThetaExpr rewrite_to_basis(const ThetaExpr& e, const RewriteSystem& rules, long budget) {
    check_same_context(e.context(), rules.ctx);
    Rewriter rw(rules, budget < 0 ? default_budget(e) : budget);
    // gather all contributions per basis monomial and sum them in one pass
    std::map<ThetaMono, std::vector<RatFun>, GrlexLess> parts;
    for (const auto& [m, c] : e.terms()) {
        if (rules.is_basis(m)) {
            parts[m].push_back(c);
        } else {
            for (const auto& [bm, bc] : rw.nf(m).terms())
                parts[bm].push_back(bc * c);
        }
    }
    ThetaExpr r(e.context());
    for (auto& [m, cs] : parts) r.add_term(m, ratfun_sum(e.context(), std::move(cs)));
    return r;
}

ThetaExpr theta_normal_form(const ThetaMono& alpha, const RewriteSystem& rules, long budget) {
    Rewriter rw(rules, budget < 0 ? 200L + 10L * static_cast<long>(mono_degree(alpha)) : budget);
    return rw.nf(alpha);
}

} // namespace hyperred
