#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "campnet/topology.hpp"

namespace campnet::devices {

inline constexpr int kMinFrameBytes = 64;
inline constexpr int kMaxFrameBytes = 1518;
inline constexpr int kDefaultQueueCapacity = 100;
// Signal speed on fiber/copper, ~2/3 c.
inline constexpr double kPropagationMps = 2.0e8;
// Store-and-forward processing latency at routers, SONET muxes and the DWDM hub.
inline constexpr double kRouterProcessingS = 10e-6;

struct Frame {
    std::uint64_t frame_id = 0;
    int src = -1; // workstation node index
    int dst = -1;
    int size_bytes = 0;
    double created_at = 0.0;
    double delivered_at = -1.0; // < 0 while undelivered
    int hop_count = 0;
};

inline double transmission_time_s(std::int64_t size_bytes, std::int64_t rate_bps) {
    return static_cast<double>(size_bytes) * 8.0 / static_cast<double>(rate_bps);
}

inline double propagation_delay_s(double length_km) {
    return length_km * 1000.0 / kPropagationMps;
}

inline double link_delay_s(topology::LinkKind kind, double length_km, std::int64_t size_bytes) {
    return transmission_time_s(size_bytes, topology::rate_bps(kind)) +
           propagation_delay_s(length_km);
}

// Drop-tail FIFO with time-weighted occupancy bookkeeping (queue length
// integral, waits) so Little's-law checks can read it back.
class PortQueue {
  public:
    explicit PortQueue(int capacity = kDefaultQueueCapacity) : capacity_(capacity) {}

    bool try_push(const Frame& f, double now); // false = dropped (counter bumped)
    std::optional<Frame> pop(double now);
    std::size_t size() const { return q_.size(); }
    bool empty() const { return q_.empty(); }
    int capacity() const { return capacity_; }

    // advances the occupancy integral to `now`
    void advance(double now);

    std::uint64_t drops = 0;
    std::uint64_t pushed = 0;
    std::uint64_t popped = 0;
    double wait_sum_s = 0.0; // summed queueing delay of popped frames
    double area = 0.0;       // integral of queue length over time

    const std::deque<std::pair<Frame, double>>& items() const { return q_; }

  private:
    int capacity_;
    std::deque<std::pair<Frame, double>> q_; // frame, enqueue time
    double last_change_ = 0.0;
};

// Transparent-bridge forwarding table: workstation -> port, learned from
// frame sources on every ingress.
class MacTable {
  public:
    void learn(int station, int port) { port_of_[station] = port; }
    std::optional<int> lookup(int station) const {
        auto it = port_of_.find(station);
        if (it == port_of_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return port_of_.size(); }

  private:
    std::unordered_map<int, int> port_of_;
};

// Static hop-count shortest-path routes: next_hop[node][workstation ordinal].
// Ties pick the lexicographically smallest next-hop node id.
struct RoutingTable {
    std::vector<int> workstations;            // ordinal -> node index
    std::vector<int> ws_ordinal;              // node index -> ordinal or -1
    std::vector<std::vector<int>> next_hop;   // [node][ordinal] -> node index (-1 at dst itself)

    int next_hop_for(int node, int dst_node) const {
        return next_hop[node][ws_ordinal[dst_node]];
    }
};

// Throws PlanError naming a (node, workstation) pair that cannot reach.
RoutingTable compute_routes(const topology::NetworkModel& model);

} // namespace campnet::devices
