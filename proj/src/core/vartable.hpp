#pragma once

/// @file vartable.hpp
/// @brief Ordered variable tables for the sparse polynomial layer.
///
/// A VarTable declares the ambient ring of a MultiPoly: variable names in a
/// fixed order, which variables are invertible (may carry negative exponents),
/// and a positive grading weight per variable.  Tables are immutable once a
/// polynomial references them; they are passed around by shared pointer.

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace mzeta {

struct VarInfo {
    std::string name;
    bool invertible = false;
    int weight = 1;
};

class VarTable {
public:
    VarTable() = default;

    /// Appends a variable; returns its index.  Names must be unique.
    int add_var(const std::string& name, bool invertible = false, int weight = 1) {
        if (name.empty()) throw usage_error("VarTable: empty variable name");
        if (weight <= 0) throw usage_error("VarTable: variable weight must be positive");
        if (index_.count(name)) throw usage_error("VarTable: duplicate variable '" + name + "'");
        vars_.push_back(VarInfo{name, invertible, weight});
        index_.emplace(name, static_cast<int>(vars_.size()) - 1);
        return static_cast<int>(vars_.size()) - 1;
    }

    /// Index of a variable, or -1 when absent.
    int find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        return it == index_.end() ? -1 : it->second;
    }

    /// Index of a variable; throws when absent.
    int var(std::string_view name) const {
        int v = find(name);
        if (v < 0) throw usage_error("VarTable: unknown variable '" + std::string(name) + "'");
        return v;
    }

    std::size_t size() const { return vars_.size(); }

    const VarInfo& info(int v) const {
        if (v < 0 || v >= static_cast<int>(vars_.size()))
            throw usage_error("VarTable: variable index out of range");
        return vars_[static_cast<std::size_t>(v)];
    }

    /// Structural equality (same names, order, invertibility, weights).
    bool same_as(const VarTable& o) const {
        if (this == &o) return true;
        if (vars_.size() != o.vars_.size()) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const VarInfo& a = vars_[i];
            const VarInfo& b = o.vars_[i];
            if (a.name != b.name || a.invertible != b.invertible || a.weight != b.weight)
                return false;
        }
        return true;
    }

private:
    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

} // namespace mzeta
