#include "mlqm/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mlqm {

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    const auto ta = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto tb = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (ta != tb) return ta < tb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(SymbolTablePtr table, GaussianRational c) {
    MultiPoly p(std::move(table));
    if (!c.is_zero()) p.terms_.emplace(ExpVec(p.table_->size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::symbol(SymbolTablePtr table, std::size_t index, std::uint32_t power) {
    MultiPoly p(std::move(table));
    if (index >= p.table_->size()) throw std::out_of_range("MultiPoly::symbol: bad index");
    if (power == 0) return constant(p.table_, GaussianRational(1));
    ExpVec e(p.table_->size(), 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec(table_->size(), 0);
}

GaussianRational MultiPoly::constant_value() const {
    auto it = terms_.find(ExpVec(table_->size(), 0));
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::uint32_t MultiPoly::degree(std::size_t symIndex) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(symIndex));
    return d;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<std::uint32_t>(d, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
    return d;
}

void MultiPoly::check_same_table(const MultiPoly& o) const {
    if (table_ != o.table_) throw std::logic_error("MultiPoly: mixed symbol tables");
}

void MultiPoly::add_term(const ExpVec& exps, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(table_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_table(o);
    MultiPoly r(table_);
    ExpVec e(table_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const GaussianRational& c) const {
    MultiPoly r(table_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t n) const {
    MultiPoly r = constant(table_, GaussianRational(1));
    MultiPoly b = *this;
    while (n) {
        if (n & 1u) r = r * b;
        n >>= 1u;
        if (n) b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::differentiate(std::size_t symIndex) const {
    MultiPoly r(table_);
    for (const auto& [e, c] : terms_) {
        if (e.at(symIndex) == 0) continue;
        ExpVec d = e;
        d[symIndex] -= 1;
        r.add_term(d, c * GaussianRational(Rational(e[symIndex])));
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t symIndex, const GaussianRational& value) const {
    MultiPoly r(table_);
    for (const auto& [e, c] : terms_) {
        GaussianRational coeff = c;
        std::uint32_t k = e.at(symIndex);
        for (std::uint32_t j = 0; j < k; ++j) coeff *= value;
        ExpVec d = e;
        d[symIndex] = 0;
        r.add_term(d, coeff);
    }
    return r;
}

MultiPoly MultiPoly::truncate_above(std::size_t symIndex, std::uint32_t maxDegree) const {
    MultiPoly r(table_);
    for (const auto& [e, c] : terms_)
        if (e.at(symIndex) <= maxDegree) r.terms_.emplace(e, c);
    return r;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly r(table_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
}

GaussianRational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != table_->size()) throw std::invalid_argument("MultiPoly::evaluate: point size");
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational m(1);
        for (std::size_t k = 0; k < e.size(); ++k)
            for (std::uint32_t j = 0; j < e[k]; ++j) m *= point[k];
        acc += c * GaussianRational(m);
    }
    return acc;
}

double MultiPoly::evaluate_double(const std::vector<double>& point) const {
    if (point.size() != table_->size()) throw std::invalid_argument("MultiPoly::evaluate_double: point size");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        if (!c.is_real()) throw std::domain_error("MultiPoly::evaluate_double: complex coefficient");
        double m = to_double(c.re());
        for (std::size_t k = 0; k < e.size(); ++k)
            for (std::uint32_t j = 0; j < e[k]; ++j) m *= point[k];
        acc += m;
    }
    return acc;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    check_same_table(divisor);
    if (divisor.is_zero()) throw std::domain_error("MultiPoly::divide_exact: zero divisor");

    const auto& lt = *divisor.terms_.rbegin(); // leading term under graded lex
    MultiPoly rem = *this;
    MultiPoly quot(table_);

    while (!rem.is_zero()) {
        const auto& rt = *rem.terms_.rbegin();
        ExpVec q(rt.first.size());
        bool divisible = true;
        for (std::size_t k = 0; k < q.size(); ++k) {
            if (rt.first[k] < lt.first[k]) {
                divisible = false;
                break;
            }
            q[k] = rt.first[k] - lt.first[k];
        }
        // Once the leading term escapes, no later term can be cleared either:
        // the quotient would have to contain a monomial that re-creates it.
        if (!divisible) return std::nullopt;

        GaussianRational qc = rt.second / lt.second;
        MultiPoly qterm(table_);
        qterm.terms_.emplace(std::move(q), qc);
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";

    std::ostringstream os;
    bool first = true;
    // Leading monomial first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }

        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += table_->name(k);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }

        bool compositeCoeff = cs.find('+') != std::string::npos ||
                              cs.find('-', 1) != std::string::npos;
        if (mono.empty()) {
            os << (compositeCoeff ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << mono;
        } else if (compositeCoeff) {
            os << "(" << cs << ")*" << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
    return os.str();
}

} // namespace mlqm
