#pragma once

// Symbol bookkeeping shared by the whole symbolic layer. A SymbolTable is an
// ordered list of symbol names; the first momentum_count() of them are the
// differentiation variables, the rest are formal parameters. Polynomials and
// operators built over different tables never mix.

#include <memory>
#include <string>
#include <vector>

namespace mlqm {

class SymbolTable {
public:
    SymbolTable(std::vector<std::string> names, std::size_t momentumCount)
        : names_(std::move(names)), momenta_(momentumCount) {}

    std::size_t size() const { return names_.size(); }
    std::size_t momentum_count() const { return momenta_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    // Index lookup by name; throws if absent.
    std::size_t index(const std::string& name) const;

    bool is_momentum(std::size_t i) const { return i < momenta_; }

private:
    std::vector<std::string> names_;
    std::size_t momenta_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

inline SymbolTablePtr make_table(std::vector<std::string> names, std::size_t momentumCount) {
    return std::make_shared<const SymbolTable>(std::move(names), momentumCount);
}

} // namespace mlqm
