#include "clonesim/chord_overlay.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace clonesim {

namespace {

// Index of the first ring entry with point >= key, wrapping to the front.
std::size_t owner_index(const std::vector<RingEntry>& ring, RingPoint key) {
    auto it = std::lower_bound(ring.begin(), ring.end(), key,
                               [](const RingEntry& e, RingPoint k) { return e.point < k; });
    if (it == ring.end()) it = ring.begin();
    return static_cast<std::size_t>(it - ring.begin());
}

}  // namespace

const OverlayTables& Overlay::tables_for(NodeId id) const {
    auto it = index_.find(id.value);
    if (it == index_.end()) throw std::invalid_argument("tables_for: identity not in overlay");
    return it->second;
}

Overlay build_overlay_from_entries(const std::vector<std::pair<NodeId, Location>>& participants,
                                   unsigned bits, unsigned g) {
    if (bits < 1 || bits > 64) throw std::invalid_argument("build_overlay: bits must be in [1, 64]");
    if (g < 1) throw std::invalid_argument("build_overlay: g must be >= 1");
    if (participants.size() <= g) {
        throw std::invalid_argument("build_overlay: ring too small for g successors");
    }

    const std::uint64_t mask = ring_mask(bits);

    // Assign unique ring points. Coordinate collisions (relevant at small b)
    // are resolved by probing upward from the hashed point, in id order.
    std::vector<std::pair<NodeId, Location>> sorted_by_id = participants;
    std::sort(sorted_by_id.begin(), sorted_by_id.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Overlay overlay;
    overlay.bits = bits;
    overlay.g = g;

    std::unordered_set<std::uint64_t> taken;
    taken.reserve(sorted_by_id.size() * 2);
    for (const auto& [id, loc] : sorted_by_id) {
        std::uint64_t point = chord_coordinate(id, bits).value;
        while (taken.contains(point)) point = (point + 1) & mask;
        taken.insert(point);
        overlay.ring.push_back({id, RingPoint{point}, loc});
    }
    std::sort(overlay.ring.begin(), overlay.ring.end(),
              [](const RingEntry& a, const RingEntry& b) { return a.point < b.point; });

    const std::size_t count = overlay.ring.size();
    unsigned t = static_cast<unsigned>(std::bit_width(count - 1));
    overlay.t = std::min(t, bits);

    for (std::size_t i = 0; i < count; ++i) {
        const RingEntry& self = overlay.ring[i];
        OverlayTables tables;
        tables.self_id = self.id;
        tables.self_point = self.point;
        tables.bits = bits;
        tables.predecessor = overlay.ring[(i + count - 1) % count];
        tables.successors.reserve(g);
        for (unsigned k = 1; k <= g; ++k) {
            tables.successors.push_back(overlay.ring[(i + k) % count]);
        }
        tables.fingers.reserve(overlay.t);
        for (unsigned j = 1; j <= overlay.t; ++j) {
            const std::uint64_t target = (self.point.value + (1ULL << (bits - j))) & mask;
            tables.fingers.push_back(overlay.ring[owner_index(overlay.ring, RingPoint{target})]);
        }
        overlay.index_.emplace(self.id.value, std::move(tables));
    }
    return overlay;
}

Overlay build_overlay(const Network& net, unsigned bits, unsigned g, bool include_clones) {
    std::vector<std::pair<NodeId, Location>> participants;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& node : net.nodes) {
        if (node.is_clone && !include_clones) continue;
        if (!seen.insert(node.identity.value).second) continue;  // one entry per identity
        participants.emplace_back(node.identity, node.location);
    }
    return build_overlay_from_entries(participants, bits, g);
}

NodeId owner_oracle(const std::vector<RingEntry>& sorted_ring, RingPoint key) {
    if (sorted_ring.empty()) throw std::invalid_argument("owner_oracle: empty ring");
    return sorted_ring[owner_index(sorted_ring, key)].id;
}

HopDecision next_overlay_hop(const OverlayTables& tables, RingPoint key) {
    const std::uint64_t self = tables.self_point.value;
    if (in_interval(key.value, tables.predecessor.point.value, self)) {
        return {HopKind::Destination, tables.self_id};
    }
    for (const RingEntry& succ : tables.successors) {
        if (in_interval(key.value, self, succ.point.value)) {
            return {HopKind::PreDestination, succ.id};
        }
    }
    const std::uint64_t mask = ring_mask(tables.bits);
    for (std::size_t j = 1; j <= tables.fingers.size(); ++j) {
        const std::uint64_t edge = (self + (1ULL << (tables.bits - j))) & mask;
        if (in_interval(key.value, edge, self)) {
            const RingEntry& finger = tables.fingers[j - 1];
            assert(finger.id != tables.self_id);
            return {HopKind::Next, finger.id};
        }
    }
    return {HopKind::Next, tables.successors.back().id};
}

}  // namespace clonesim
