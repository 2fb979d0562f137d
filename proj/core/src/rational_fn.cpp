#include "mlqm/rational_fn.hpp"

#include <sstream>
#include <stdexcept>

namespace mlqm {

ContextPtr make_context(SymbolTablePtr table, std::vector<MultiPoly> bases) {
    for (const auto& b : bases) {
        if (b.table() != table) throw std::logic_error("make_context: base on foreign table");
        if (b.is_zero()) throw std::logic_error("make_context: zero base polynomial");
    }
    auto ctx = std::make_shared<AlgebraContext>();
    ctx->table = std::move(table);
    ctx->bases = std::move(bases);
    return ctx;
}

RationalFn::RationalFn(ContextPtr ctx)
    : ctx_(std::move(ctx)), num_(ctx_->table), denPows_(ctx_->bases.size(), 0) {}

RationalFn::RationalFn(ContextPtr ctx, MultiPoly numerator)
    : ctx_(std::move(ctx)), num_(std::move(numerator)), denPows_(ctx_->bases.size(), 0) {
    if (num_.table() != ctx_->table) throw std::logic_error("RationalFn: numerator on foreign table");
}

RationalFn::RationalFn(ContextPtr ctx, MultiPoly numerator, std::vector<std::uint32_t> denPows)
    : ctx_(std::move(ctx)), num_(std::move(numerator)), denPows_(std::move(denPows)) {
    if (num_.table() != ctx_->table) throw std::logic_error("RationalFn: numerator on foreign table");
    if (denPows_.size() != ctx_->bases.size()) throw std::logic_error("RationalFn: denominator arity");
    *this = reduced();
}

RationalFn RationalFn::constant(const ContextPtr& ctx, const GaussianRational& c) {
    return RationalFn(ctx, MultiPoly::constant(ctx->table, c));
}

RationalFn RationalFn::symbol(const ContextPtr& ctx, std::size_t index, std::uint32_t power) {
    return RationalFn(ctx, MultiPoly::symbol(ctx->table, index, power));
}

bool contexts_compatible(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->table == b->table && a->bases == b->bases;
}

void RationalFn::check_same_context(const RationalFn& o) const {
    if (!contexts_compatible(ctx_, o.ctx_)) throw std::logic_error("RationalFn: mixed contexts");
}

MultiPoly RationalFn::denominator_poly() const {
    MultiPoly d = MultiPoly::constant(ctx_->table, GaussianRational(1));
    for (std::size_t i = 0; i < denPows_.size(); ++i)
        if (denPows_[i] > 0) d = d * ctx_->bases[i].pow(denPows_[i]);
    return d;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    check_same_context(o);
    // Common denominator per base, then numerators add.
    std::vector<std::uint32_t> target(denPows_.size());
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = std::max(denPows_[i], o.denPows_[i]);

    MultiPoly a = num_;
    MultiPoly b = o.num_;
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (target[i] > denPows_[i]) a = a * ctx_->bases[i].pow(target[i] - denPows_[i]);
        if (target[i] > o.denPows_[i]) b = b * ctx_->bases[i].pow(target[i] - o.denPows_[i]);
    }
    num_ = a + b;
    denPows_ = std::move(target);
    *this = reduced();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn RationalFn::operator*(const RationalFn& o) const {
    check_same_context(o);
    RationalFn r(ctx_);
    r.num_ = num_ * o.num_;
    for (std::size_t i = 0; i < denPows_.size(); ++i) r.denPows_[i] = denPows_[i] + o.denPows_[i];
    return r.reduced();
}

RationalFn RationalFn::operator*(const GaussianRational& c) const {
    RationalFn r = *this;
    r.num_ = r.num_ * c;
    if (r.num_.is_zero()) std::fill(r.denPows_.begin(), r.denPows_.end(), 0u);
    return r;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    a.check_same_context(b);
    RationalFn d = a;
    d -= b;
    return d.is_zero();
}

RationalFn RationalFn::over_base(std::size_t baseIndex, std::uint32_t power) const {
    RationalFn r = *this;
    r.denPows_.at(baseIndex) += power;
    return r.reduced();
}

RationalFn RationalFn::differentiate(std::size_t symIndex) const {
    // d(N / prod b_i^k_i) = [N' prod_{k_i>0} b_i - N sum_i k_i b_i' prod_{j!=i} b_j]
    //                       / prod_{k_i>0} b_i^{k_i+1}
    RationalFn r(ctx_);

    MultiPoly lead = num_.differentiate(symIndex);
    for (std::size_t i = 0; i < denPows_.size(); ++i)
        if (denPows_[i] > 0) lead = lead * ctx_->bases[i];

    for (std::size_t i = 0; i < denPows_.size(); ++i) {
        if (denPows_[i] == 0) continue;
        MultiPoly t = num_ * ctx_->bases[i].differentiate(symIndex) *
                      GaussianRational(Rational(denPows_[i]));
        for (std::size_t j = 0; j < denPows_.size(); ++j)
            if (j != i && denPows_[j] > 0) t = t * ctx_->bases[j];
        lead -= t;
    }

    r.num_ = std::move(lead);
    for (std::size_t i = 0; i < denPows_.size(); ++i)
        r.denPows_[i] = denPows_[i] > 0 ? denPows_[i] + 1 : 0;
    return r.reduced();
}

RationalFn RationalFn::reduced() const {
    RationalFn r = *this;
    if (r.num_.is_zero()) {
        std::fill(r.denPows_.begin(), r.denPows_.end(), 0u);
        return r;
    }
    for (std::size_t i = 0; i < r.denPows_.size(); ++i) {
        while (r.denPows_[i] > 0) {
            auto q = r.num_.divide_exact(ctx_->bases[i]);
            if (!q) break;
            r.num_ = std::move(*q);
            r.denPows_[i] -= 1;
        }
    }
    return r;
}

RationalFn RationalFn::conj() const {
    for (std::size_t i = 0; i < denPows_.size(); ++i)
        if (denPows_[i] > 0 && ctx_->bases[i].conj() != ctx_->bases[i])
            throw std::logic_error("RationalFn::conj: complex base polynomial");
    RationalFn r = *this;
    r.num_ = r.num_.conj();
    return r;
}

RationalFn RationalFn::substitute(std::size_t symIndex, const GaussianRational& value) const {
    for (std::size_t i = 0; i < denPows_.size(); ++i)
        if (denPows_[i] > 0 && ctx_->bases[i].degree(symIndex) > 0)
            throw std::logic_error("RationalFn::substitute: symbol occurs in an active base");
    RationalFn r = *this;
    r.num_ = r.num_.substitute(symIndex, value);
    return r.reduced();
}

RationalFn RationalFn::truncate_above(std::size_t symIndex, std::uint32_t maxDegree) const {
    for (std::size_t i = 0; i < denPows_.size(); ++i)
        if (denPows_[i] > 0 && ctx_->bases[i].degree(symIndex) > 0)
            throw std::logic_error("RationalFn::truncate_above: symbol occurs in an active base");
    RationalFn r = *this;
    r.num_ = r.num_.truncate_above(symIndex, maxDegree);
    return r.reduced();
}

RationalFn RationalFn::negate_symbol(std::size_t symIndex) const {
    for (std::size_t i = 0; i < denPows_.size(); ++i) {
        if (denPows_[i] == 0) continue;
        for (const auto& [e, c] : ctx_->bases[i].terms())
            if (e.at(symIndex) % 2 == 1)
                throw std::logic_error("RationalFn::negate_symbol: base not even in symbol");
    }
    RationalFn r = *this;
    MultiPoly flipped(ctx_->table);
    for (const auto& [e, c] : num_.terms()) {
        GaussianRational coeff = (e.at(symIndex) % 2 == 1) ? -c : c;
        flipped.add_term(e, coeff);
    }
    r.num_ = std::move(flipped);
    return r;
}

GaussianRational RationalFn::evaluate(const std::vector<Rational>& point) const {
    GaussianRational v = num_.evaluate(point);
    for (std::size_t i = 0; i < denPows_.size(); ++i) {
        if (denPows_[i] == 0) continue;
        GaussianRational b = ctx_->bases[i].evaluate(point);
        for (std::uint32_t j = 0; j < denPows_[i]; ++j) v /= b;
    }
    return v;
}

double RationalFn::evaluate_double(const std::vector<double>& point) const {
    double v = num_.evaluate_double(point);
    for (std::size_t i = 0; i < denPows_.size(); ++i) {
        if (denPows_[i] == 0) continue;
        double b = ctx_->bases[i].evaluate_double(point);
        for (std::uint32_t j = 0; j < denPows_[i]; ++j) v /= b;
    }
    return v;
}

std::string RationalFn::str() const {
    bool plain = true;
    for (auto k : denPows_)
        if (k > 0) plain = false;
    if (plain) return num_.str();

    std::ostringstream os;
    os << "(" << num_.str() << ") / [";
    bool first = true;
    for (std::size_t i = 0; i < denPows_.size(); ++i) {
        if (denPows_[i] == 0) continue;
        if (!first) os << " ";
        first = false;
        os << "(" << ctx_->bases[i].str() << ")";
        if (denPows_[i] > 1) os << "^" << denPows_[i];
    }
    os << "]";
    return os.str();
}

} // namespace mlqm
