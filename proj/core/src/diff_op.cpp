#include "mlqm/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace mlqm {

namespace {

// Product of per-slot binomial coefficients C(a_k, j_k), exact.
Rational multi_binomial(const ExpVec& a, const ExpVec& j) {
    Rational r(1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        // C(n, m) built incrementally to stay integral.
        Rational c(1);
        for (std::uint32_t t = 1; t <= j[k]; ++t) c = c * Rational(a[k] - t + 1) / Rational(t);
        r *= c;
    }
    return r;
}

// Enumerates all multi-indices j <= a in a fixed (odometer) order.
bool next_subindex(const ExpVec& a, ExpVec& j) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (j[k] < a[k]) {
            j[k] += 1;
            for (std::size_t t = 0; t < k; ++t) j[t] = 0;
            return true;
        }
    }
    return false;
}

} // namespace

DiffOp::DiffOp(ContextPtr ctx) : ctx_(std::move(ctx)) {}

DiffOp DiffOp::identity(const ContextPtr& ctx) {
    DiffOp op(ctx);
    op.add_term(ExpVec(ctx->table->momentum_count(), 0), RationalFn::constant(ctx, GaussianRational(1)));
    return op;
}

DiffOp DiffOp::mul(const ContextPtr& ctx, MultiPoly f) {
    return mul(RationalFn(ctx, std::move(f)));
}

DiffOp DiffOp::mul(RationalFn f) {
    DiffOp op(f.context());
    op.add_term(ExpVec(op.ctx_->table->momentum_count(), 0), std::move(f));
    return op;
}

DiffOp DiffOp::derivative(const ContextPtr& ctx, std::size_t momentumIndex) {
    if (momentumIndex >= ctx->table->momentum_count())
        throw std::out_of_range("DiffOp::derivative: not a momentum symbol");
    DiffOp op(ctx);
    ExpVec d(ctx->table->momentum_count(), 0);
    d[momentumIndex] = 1;
    op.add_term(std::move(d), RationalFn::constant(ctx, GaussianRational(1)));
    return op;
}

void DiffOp::check_same_context(const DiffOp& o) const {
    if (!contexts_compatible(ctx_, o.ctx_)) throw std::logic_error("DiffOp: mixed contexts");
}

void DiffOp::add_term(const ExpVec& derivs, RationalFn coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(derivs);
    if (it == terms_.end()) {
        terms_.emplace(derivs, std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r(ctx_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_same_context(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_same_context(o);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

DiffOp DiffOp::scaled(const RationalFn& f) const {
    DiffOp r(ctx_);
    for (const auto& [d, c] : terms_) r.add_term(d, c * f);
    return r;
}

DiffOp DiffOp::scaled(const GaussianRational& c) const {
    DiffOp r(ctx_);
    for (const auto& [d, v] : terms_) r.add_term(d, v * c);
    return r;
}

DiffOp DiffOp::compose(const DiffOp& o) const {
    check_same_context(o);
    // (c_a d^a) (d_b d^b) = c_a sum_{j<=a} C(a,j) (d^j d_b) d^{a-j+b}
    DiffOp r(ctx_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, db] : o.terms_) {
            ExpVec j(a.size(), 0);
            for (;;) {
                RationalFn deriv = db;
                for (std::size_t k = 0; k < j.size(); ++k)
                    for (std::uint32_t t = 0; t < j[k]; ++t) deriv = deriv.differentiate(k);
                if (!deriv.is_zero()) {
                    ExpVec target(a.size());
                    for (std::size_t k = 0; k < a.size(); ++k) target[k] = a[k] - j[k] + b[k];
                    GaussianRational binom{multi_binomial(a, j)};
                    r.add_term(target, ca * deriv * binom);
                }
                if (!next_subindex(a, j)) break;
            }
        }
    }
    return r;
}

DiffOp DiffOp::commutator(const DiffOp& o) const {
    DiffOp r = compose(o);
    r -= o.compose(*this);
    return r;
}

RationalFn DiffOp::apply(const RationalFn& f) const {
    RationalFn acc(ctx_);
    for (const auto& [d, c] : terms_) {
        RationalFn v = f;
        for (std::size_t k = 0; k < d.size(); ++k)
            for (std::uint32_t t = 0; t < d[k]; ++t) v = v.differentiate(k);
        acc += c * v;
    }
    return acc;
}

RationalFn DiffOp::apply(const MultiPoly& f) const { return apply(RationalFn(ctx_, f)); }

DiffOp DiffOp::normalized() const {
    DiffOp r(ctx_);
    for (const auto& [d, c] : terms_) r.add_term(d, c.reduced());
    return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    a.check_same_context(b);
    DiffOp d = a;
    d -= b;
    return d.is_zero();
}

DiffOp DiffOp::conj() const {
    DiffOp r(ctx_);
    for (const auto& [d, c] : terms_) r.add_term(d, c.conj());
    return r;
}

DiffOp DiffOp::reflect_momentum(std::size_t momentumIndex) const {
    if (momentumIndex >= ctx_->table->momentum_count())
        throw std::out_of_range("DiffOp::reflect_momentum: not a momentum symbol");
    DiffOp r(ctx_);
    for (const auto& [d, c] : terms_) {
        RationalFn coeff = c.negate_symbol(momentumIndex);
        if (d[momentumIndex] % 2 == 1) coeff = -coeff;
        r.add_term(d, std::move(coeff));
    }
    return r;
}

DiffOp DiffOp::substitute(std::size_t symIndex, const GaussianRational& value) const {
    DiffOp r(ctx_);
    for (const auto& [d, c] : terms_) r.add_term(d, c.substitute(symIndex, value));
    return r;
}

DiffOp DiffOp::truncate_above(std::size_t symIndex, std::uint32_t maxDegree) const {
    DiffOp r(ctx_);
    for (const auto& [d, c] : terms_) r.add_term(d, c.truncate_above(symIndex, maxDegree));
    return r;
}

DiffOp DiffOp::with_context(const ContextPtr& ctx) const {
    if (ctx->table != ctx_->table) throw std::logic_error("DiffOp::with_context: different symbol table");
    DiffOp r(ctx);
    for (const auto& [d, c] : terms_) {
        for (auto k : c.den_pows())
            if (k != 0) throw std::logic_error("DiffOp::with_context: coefficient carries denominators");
        r.add_term(d, RationalFn(ctx, c.numerator()));
    }
    return r;
}

std::size_t DiffOp::residual_term_count() const {
    std::size_t n = 0;
    for (const auto& [d, c] : terms_) n += c.numerator().term_count();
    return n;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [d, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t k = 0; k < d.size(); ++k) {
            if (d[k] == 0) continue;
            os << " d/d" << ctx_->table->name(k);
            if (d[k] > 1) os << "^" << d[k];
        }
    }
    return os.str();
}

} // namespace mlqm
