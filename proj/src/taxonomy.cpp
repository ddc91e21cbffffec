#include "capdelta/taxonomy.hpp"

#include <stdexcept>

namespace capdelta {

void Taxonomy::add(CapabilityDef def) {
    if (index_.count(def.id))
        throw std::invalid_argument("duplicate capability id " + render(def.id));
    index_.emplace(def.id, defs_.size());
    defs_.push_back(std::move(def));
}

const CapabilityDef* Taxonomy::find(const CapabilityId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &defs_[it->second];
}

const CapabilityDef& Taxonomy::at(const CapabilityId& id) const {
    const CapabilityDef* def = find(id);
    if (!def)
        throw std::invalid_argument("unknown capability " + render(id));
    return *def;
}

std::size_t Taxonomy::position(const CapabilityId& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::invalid_argument("unknown capability " + render(id));
    return it->second + 1;
}

namespace {

CapabilityId make_id(int complex_part, int top, int detailed = 0) {
    CapabilityId id;
    id.complex_part = complex_part;
    id.top_level = top;
    if (detailed > 0)
        id.detailed = detailed;
    return id;
}

} // namespace

Taxonomy builtin_imba_subset() {
    using K = AggregationKind;
    Taxonomy t;
    t.add({make_id(1, 3, 1), "Kneeling", "Body Posture",
           "Adopt and maintain a kneeling position", K::NonSummative});
    t.add({make_id(1, 5), "Bent Over/Stooped", "Body Posture",
           "Adopt and maintain a posture with a bent upper body "
           "(up to 30 degrees bent over, beyond that stooped)",
           K::NonSummative});
    t.add({make_id(3, 1), "Head/Neck", "Body Part Movement",
           "Perform movements of the head and neck", K::NonSummative});
    t.add({make_id(3, 1, 1), "Head/Neck Rotation", "Body Part Movement",
           "Perform rotation movements of the head and neck", K::NonSummative});
    t.add({make_id(3, 2), "Trunk", "Body Part Movement",
           "Perform movements of the trunk", K::NonSummative});
    t.add({make_id(3, 2, 1), "Rotation Movements While Sitting", "Body Part Movement",
           "Perform trunk rotation movements from a seated position", K::NonSummative});
    t.add({make_id(3, 2, 2), "Rotation Movements While Standing", "Body Part Movement",
           "Perform trunk rotation movements while standing", K::NonSummative});
    t.add({make_id(3, 3), "Arm", "Body Part Movement",
           "Perform movement and strength-related activities that require "
           "the use of one or both arms",
           K::NonSummative});
    t.add({make_id(3, 3, 7), "Backwards Reach", "Body Part Movement",
           "Reach behind the body with the arm", K::NonSummative});
    t.add({make_id(3, 3, 8), "Backwards Reach", "Body Part Movement",
           "Reach behind the body with the arm, extended range", K::NonSummative});
    t.add({make_id(3, 4), "Hand/Finger", "Body Part Movement",
           "Perform activities with the hands and fingers", K::NonSummative});
    t.add({make_id(3, 5), "Leg/Foot", "Body Part Movement",
           "Perform activities with the legs and feet", K::NonSummative});
    t.add({make_id(5, 1), "Lifting", "Strength",
           "Raise and hold loads against gravity", K::Summative});
    t.add({make_id(9, 5), "Stamina", "Key Qualification",
           "Work continuously on the tasks associated with the activity "
           "without interruption",
           K::NonSummative});
    return t;
}

} // namespace capdelta
