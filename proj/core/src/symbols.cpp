#include "mlqm/symbols.hpp"

#include <stdexcept>

namespace mlqm {

std::size_t SymbolTable::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw std::out_of_range("unknown symbol: " + name);
}

} // namespace mlqm
