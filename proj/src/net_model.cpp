#include "clonesim/net_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace clonesim {

namespace {

// Uniform grid bucketing with cell size = radio range keeps neighbor
// discovery near-linear instead of O(n^2).
struct Grid {
    double cell;
    int cols;
    std::unordered_map<std::uint64_t, std::vector<PhysIndex>> buckets;

    Grid(double side, double range) : cell(range > 0 ? range : side), cols(0) {
        cols = std::max(1, static_cast<int>(side / cell) + 1);
    }

    std::uint64_t key(int cx, int cy) const {
        return static_cast<std::uint64_t>(cx) << 32 | static_cast<std::uint32_t>(cy);
    }

    void insert(const Location& loc, PhysIndex idx) {
        buckets[key(static_cast<int>(loc.x / cell), static_cast<int>(loc.y / cell))].push_back(idx);
    }

    template <typename Fn>
    void for_near(const Location& loc, Fn&& fn) const {
        const int cx = static_cast<int>(loc.x / cell);
        const int cy = static_cast<int>(loc.y / cell);
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find(key(cx + dx, cy + dy));
                if (it == buckets.end()) continue;
                for (PhysIndex idx : it->second) fn(idx);
            }
        }
    }
};

void append_u64(std::string& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_f64(std::string& out, double v) {
    append_u64(out, std::bit_cast<std::uint64_t>(v));
}

}  // namespace

const std::vector<PhysIndex>& Network::replicas_of(NodeId id) const {
    static const std::vector<PhysIndex> empty;
    auto it = identity_index_.find(id.value);
    return it == identity_index_.end() ? empty : it->second;
}

PhysIndex Network::nearest_replica(NodeId id, const Location& from) const {
    const auto& reps = replicas_of(id);
    if (reps.empty()) throw std::invalid_argument("nearest_replica: unknown identity");
    PhysIndex best = reps.front();
    double best_d = distance_sq(nodes[best].location, from);
    for (std::size_t i = 1; i < reps.size(); ++i) {
        const double d = distance_sq(nodes[reps[i]].location, from);
        if (d < best_d) {
            best_d = d;
            best = reps[i];
        }
    }
    return best;
}

double Network::mean_degree() const {
    if (nodes.empty()) return 0.0;
    std::size_t total = 0;
    for (const auto& nbrs : adjacency) total += nbrs.size();
    return static_cast<double>(total) / static_cast<double>(nodes.size());
}

std::string Network::canonical_bytes() const {
    std::string out;
    append_u64(out, nodes.size());
    append_f64(out, radio_range);
    append_f64(out, side);
    for (const auto& node : nodes) {
        append_u64(out, node.physical_index);
        append_u64(out, node.identity.value);
        append_f64(out, node.location.x);
        append_f64(out, node.location.y);
        out.push_back(node.is_clone ? 1 : 0);
        out.push_back(static_cast<char>(node.behavior));
    }
    for (const auto& nbrs : adjacency) {
        append_u64(out, nbrs.size());
        for (const auto& nb : nbrs) append_u64(out, nb.phys);
    }
    return out;
}

void Network::rebuild_indexes() {
    const std::size_t count = nodes.size();
    adjacency.assign(count, {});
    identity_index_.clear();

    Grid grid(side, radio_range);
    for (const auto& node : nodes) grid.insert(node.location, node.physical_index);

    const double range_sq = radio_range * radio_range;
    for (PhysIndex i = 0; i < count; ++i) {
        grid.for_near(nodes[i].location, [&](PhysIndex j) {
            if (j <= i) return;
            if (distance_sq(nodes[i].location, nodes[j].location) <= range_sq) {
                adjacency[i].push_back({j, nodes[j].identity, nodes[j].location});
                adjacency[j].push_back({i, nodes[i].identity, nodes[i].location});
            }
        });
        identity_index_[nodes[i].identity.value].push_back(i);
    }
    // Bucket visitation order is hash-map dependent; sort for reproducibility.
    for (auto& nbrs : adjacency) {
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const NeighborRef& a, const NeighborRef& b) { return a.phys < b.phys; });
    }
}

Network deploy_network(const DeploymentConfig& cfg, std::vector<std::string>* warnings) {
    if (cfg.n < 2) throw std::invalid_argument("deploy_network: n must be >= 2");
    if (!(cfg.side > 0.0)) throw std::invalid_argument("deploy_network: side must be > 0");

    double range = cfg.radio_range;
    if (cfg.target_degree) {
        if (*cfg.target_degree < 1.0) {
            throw std::invalid_argument("deploy_network: target_degree must be >= 1");
        }
        range = range_for_degree(*cfg.target_degree, cfg.n, cfg.side);
    }
    if (!(range > 0.0)) throw std::invalid_argument("deploy_network: radio_range must be > 0");

    const double expected_degree =
        std::numbers::pi * range * range * static_cast<double>(cfg.n) / (cfg.side * cfg.side);
    if (expected_degree < 1.0 && warnings) {
        warnings->push_back("expected degree " + std::to_string(expected_degree) +
                            " < 1; network is likely disconnected");
    }

    Network net;
    net.radio_range = range;
    net.side = cfg.side;
    net.nodes.reserve(cfg.n);

    Rng rng(cfg.rng_seed);
    for (std::uint32_t i = 0; i < cfg.n; ++i) {
        PhysicalNode node;
        node.physical_index = i;
        node.identity = NodeId{i + 1};  // id 0 is the initiator
        node.location = {rng.uniform(0.0, cfg.side), rng.uniform(0.0, cfg.side)};
        net.nodes.push_back(node);
    }
    net.rebuild_indexes();
    return net;
}

RouteResult greedy_geo_route(const Network& net, PhysIndex src, const Location& dst_loc) {
    constexpr double kArrivalEps = 1e-9;

    RouteResult result;
    result.path.push_back(src);

    PhysIndex cur = src;
    double cur_dist = distance(net.nodes[cur].location, dst_loc);
    if (cur_dist <= kArrivalEps) {
        result.delivered = true;
        return result;
    }

    const std::size_t max_hops = net.physical_count();
    for (std::size_t hop = 0; hop < max_hops; ++hop) {
        const NeighborRef* best = nullptr;
        double best_dist = cur_dist;
        for (const NeighborRef& nb : net.adjacency[cur]) {
            const double d = distance(nb.loc, dst_loc);
            if (d < best_dist) {
                best_dist = d;
                best = &nb;
            }
        }
        if (!best) return result;  // local minimum: VOID_REGION

        cur = best->phys;
        cur_dist = best_dist;
        result.path.push_back(cur);
        if (cur_dist <= kArrivalEps) {
            result.delivered = true;
            return result;
        }
    }
    return result;  // unreachable with strictly decreasing distance; kept as a guard
}

}  // namespace clonesim
