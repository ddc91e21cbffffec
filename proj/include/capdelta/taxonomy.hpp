#pragma once
// Capability taxonomy: ordered catalog of capability definitions. The
// ordered positions form the linear index set used by profiles.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "capdelta/aggregation_kind.hpp"
#include "capdelta/capability_id.hpp"

namespace capdelta {

struct CapabilityDef {
    CapabilityId id;
    std::string name;
    std::string complex_name;
    std::string definition;
    AggregationKind summativity_default = AggregationKind::NonSummative;

    bool operator==(const CapabilityDef&) const = default;
};

class Taxonomy {
public:
    void add(CapabilityDef def); // throws on duplicate id

    bool contains(const CapabilityId& id) const { return index_.count(id) != 0; }
    const CapabilityDef* find(const CapabilityId& id) const;
    const CapabilityDef& at(const CapabilityId& id) const; // throws if absent

    // 1-based position in the linear index set; throws if absent.
    std::size_t position(const CapabilityId& id) const;

    std::size_t size() const { return defs_.size(); }
    const std::vector<CapabilityDef>& defs() const { return defs_; }

private:
    std::vector<CapabilityDef> defs_;
    std::map<CapabilityId, std::size_t> index_;
};

// The built-in IMBA subset: selected top-level capabilities plus the
// detailed entries referenced alongside them. Lifting (5.01) defaults to
// summative aggregation; everything else is non-summative.
Taxonomy builtin_imba_subset();

} // namespace capdelta
