#include "hyperred/context.hpp"

#include <set>

namespace hyperred {

Context::Context(std::vector<std::string> param_names, int num_vars)
    : num_params_(static_cast<int>(param_names.size())) {
    std::set<std::string> seen;
    for (auto& n : param_names) {
        if (!seen.insert(n).second)
            fail(ErrorCode::ContextMismatch, "duplicate symbol name: " + n);
        symbols_.push_back({std::move(n), SymbolKind::Parameter});
    }
    for (int i = 1; i <= num_vars; ++i) {
        std::string n = "z" + std::to_string(i);
        if (!seen.insert(n).second)
            fail(ErrorCode::ContextMismatch, "duplicate symbol name: " + n);
        symbols_.push_back({std::move(n), SymbolKind::Variable});
    }
}

int Context::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (symbols_[i].name == name) return i;
    return -1;
}

int Context::require(const std::string& name) const {
    int i = find(name);
    if (i < 0) fail(ErrorCode::ParseError, "unknown symbol '" + name + "'");
    return i;
}

} // namespace hyperred
