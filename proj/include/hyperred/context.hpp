#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperred/errors.hpp"

namespace hyperred {

enum class SymbolKind { Parameter, Variable };

struct Symbol {
    std::string name;
    SymbolKind kind;
};

// Fixed symbol universe for one computation: parameter atoms first, then the
// variables z1..zr. Shared immutably by every value built over it.
class Context {
public:
    Context(std::vector<std::string> param_names, int num_vars);

    int size() const { return static_cast<int>(symbols_.size()); }
    int num_params() const { return num_params_; }
    int num_vars() const { return size() - num_params_; }
    const Symbol& symbol(int i) const { return symbols_[i]; }

    // Index of the i-th variable (1-based, z_i).
    int var_index(int i) const { return num_params_ + i - 1; }

    int find(const std::string& name) const; // -1 if absent
    int require(const std::string& name) const;

    bool same(const Context& other) const { return this == &other; }

private:
    std::vector<Symbol> symbols_;
    int num_params_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(std::vector<std::string> param_names, int num_vars) {
    return std::make_shared<Context>(std::move(param_names), num_vars);
}

inline void check_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a.get() != b.get())
        fail(ErrorCode::ContextMismatch, "values built over different symbol contexts");
}

} // namespace hyperred
