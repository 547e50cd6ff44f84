#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "clonesim/geometry.hpp"
#include "clonesim/rng.hpp"

namespace clonesim {

// Identity carried by a node. Unique among legitimate nodes; a cloned
// identity is one NodeId held by two or more physical nodes.
struct NodeId {
    std::uint64_t value = 0;

    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

// Identity of the trusted round initiator (not a deployed node).
inline constexpr NodeId kInitiatorId{0};

enum class Behavior : std::uint8_t {
    Honest,
    Dropper,  // discards every detection message it processes
};

using PhysIndex = std::uint32_t;

struct PhysicalNode {
    PhysIndex physical_index = 0;
    NodeId identity;
    Location location;
    bool is_clone = false;
    Behavior behavior = Behavior::Honest;
};

struct DeploymentConfig {
    std::uint32_t n = 0;              // legitimate node count
    double side = 1000.0;             // square region edge, meters
    double radio_range = 0.0;         // ignored when target_degree is set
    std::optional<double> target_degree;
    std::uint64_t rng_seed = 1;
};

struct NeighborRef {
    PhysIndex phys = 0;
    NodeId id;
    Location loc;  // the neighbor's true location (nodes are stationary)
};

// Immutable deployed topology. Adjacency is symmetric at the physical level:
// u hears v iff distance(u, v) <= radio_range.
struct Network {
    std::vector<PhysicalNode> nodes;
    std::vector<std::vector<NeighborRef>> adjacency;  // indexed by physical node
    double radio_range = 0.0;
    double side = 0.0;

    std::size_t physical_count() const { return nodes.size(); }

    const std::vector<PhysIndex>& replicas_of(NodeId id) const;
    // Replica of `id` geographically nearest to `from` (ties: lowest index).
    PhysIndex nearest_replica(NodeId id, const Location& from) const;

    double mean_degree() const;
    // Canonical byte string of the whole topology; used by determinism checks.
    std::string canonical_bytes() const;

    void rebuild_indexes();  // adjacency + identity index from nodes

  private:
    std::unordered_map<std::uint64_t, std::vector<PhysIndex>> identity_index_;
};

// Radio range giving expected degree d under uniform density in the square.
inline double range_for_degree(double target_degree, std::uint32_t n, double side) {
    return side * std::sqrt(target_degree / (std::numbers::pi * static_cast<double>(n)));
}

// Places cfg.n nodes uniformly at random and computes radio adjacency.
// Deterministic for a fixed cfg.rng_seed. Throws on n < 2. A configuration
// with expected degree < 1 still runs but appends a warning.
Network deploy_network(const DeploymentConfig& cfg,
                       std::vector<std::string>* warnings = nullptr);

struct RouteResult {
    std::vector<PhysIndex> path;  // starts at src; includes every hop taken
    bool delivered = false;       // false: stuck at a local minimum (VOID_REGION)

    std::size_t hops() const { return path.empty() ? 0 : path.size() - 1; }
};

// Greedy geographic forwarding: repeatedly hand the message to the neighbor
// strictly closest to dst_loc. Fails at a local minimum; hops taken before
// the failure are still part of the path (they were transmitted).
RouteResult greedy_geo_route(const Network& net, PhysIndex src, const Location& dst_loc);

}  // namespace clonesim

template <>
struct std::hash<clonesim::NodeId> {
    std::size_t operator()(const clonesim::NodeId& id) const noexcept {
        return std::hash<std::uint64_t>{}(id.value);
    }
};
