#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "clonesim/identity.hpp"
#include "clonesim/net_model.hpp"

namespace clonesim {

struct RingEntry {
    NodeId id;
    RingPoint point;
    Location loc;  // for physical forwarding toward this identity
};

// Per-identity Chord state: predecessor, the g nearest clockwise successors,
// and a finger ladder of t = ceil(log2(participants)) entries where
// fingers[j-1] is the first identity whose point succeeds self + 2^(b-j).
struct OverlayTables {
    NodeId self_id;
    RingPoint self_point;
    RingEntry predecessor;
    std::vector<RingEntry> successors;
    std::vector<RingEntry> fingers;
    unsigned bits = 0;
};

struct Overlay {
    std::vector<RingEntry> ring;  // sorted by point; points are unique
    unsigned bits = 0;
    unsigned g = 0;
    unsigned t = 0;

    bool participates(NodeId id) const { return index_.contains(id.value); }
    const OverlayTables& tables_for(NodeId id) const;

    std::unordered_map<std::uint64_t, OverlayTables> index_;
};

// Globally consistent tables from the full sorted ring (the construction
// protocol itself is not simulated). Identities whose chord coordinates
// collide at small b are separated by deterministic linear probing, in id
// order, so ring points stay unique. Throws when g >= participant count.
Overlay build_overlay_from_entries(const std::vector<std::pair<NodeId, Location>>& participants,
                                   unsigned bits, unsigned g);

// Participants are all legitimate identities; cloned identities are excluded
// when include_clones is false (the adversary opting out of construction).
Overlay build_overlay(const Network& net, unsigned bits, unsigned g, bool include_clones);

// Linear-scan reference: the first identity clockwise from key, i.e. the one
// whose segment (predecessor, self] contains it.
NodeId owner_oracle(const std::vector<RingEntry>& sorted_ring, RingPoint key);

enum class HopKind : std::uint8_t {
    Destination,     // key in (predecessor, self]; current node inspects
    PreDestination,  // destination is the returned successor; current node inspects too
    Next,            // plain overlay relay
};

struct HopDecision {
    HopKind kind = HopKind::Destination;
    NodeId next;  // meaningful for PreDestination and Next
};

HopDecision next_overlay_hop(const OverlayTables& tables, RingPoint key);

}  // namespace clonesim
