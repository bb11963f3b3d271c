#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starforge/error.hpp"

namespace starforge {

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

// A generator context: an ordered set of named variables. Canonical form is
// name-sorted, so merging two contexts by name union is deterministic and
// symmetric, and equal contexts have equal layouts.
class VarSet {
public:
    static VarSetPtr make(std::vector<std::string> names);
    static VarSetPtr empty();

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(std::string_view n) const;
    bool contains(std::string_view n) const { return index(n).has_value(); }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

    // Sorted union of the two name sets.
    static VarSetPtr merged(const VarSetPtr& a, const VarSetPtr& b);

    // For each variable of `sub`, its index in `super`. Throws if `sub` is
    // not contained in `super`.
    static std::vector<std::size_t> embedding(const VarSet& sub, const VarSet& super);

    bool disjoint(const VarSet& o) const;

private:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || *a == *b;
}

}  // namespace starforge
