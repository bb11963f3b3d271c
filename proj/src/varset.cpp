#include "starforge/varset.hpp"

#include <algorithm>

namespace starforge {

VarSetPtr VarSet::make(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    for (std::size_t i = 1; i < names.size(); ++i) {
        if (names[i] == names[i - 1])
            throw Error("VarSet: duplicate generator name '" + names[i] + "'");
    }
    return VarSetPtr(new VarSet(std::move(names)));
}

VarSetPtr VarSet::empty() {
    static const VarSetPtr e = VarSet::make({});
    return e;
}

std::optional<std::size_t> VarSet::index(std::string_view n) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), n);
    if (it != names_.end() && *it == n)
        return static_cast<std::size_t>(it - names_.begin());
    return std::nullopt;
}

VarSetPtr VarSet::merged(const VarSetPtr& a, const VarSetPtr& b) {
    if (same_vars(a, b)) return a;
    std::vector<std::string> u;
    u.reserve(a->size() + b->size());
    std::set_union(a->names_.begin(), a->names_.end(), b->names_.begin(), b->names_.end(),
                   std::back_inserter(u));
    return VarSetPtr(new VarSet(std::move(u)));
}

std::vector<std::size_t> VarSet::embedding(const VarSet& sub, const VarSet& super) {
    std::vector<std::size_t> map(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
        auto j = super.index(sub.name(i));
        if (!j) throw Error("VarSet: '" + sub.name(i) + "' missing from merged context");
        map[i] = *j;
    }
    return map;
}

bool VarSet::disjoint(const VarSet& o) const {
    for (const auto& n : names_)
        if (o.contains(n)) return false;
    return true;
}

}  // namespace starforge
