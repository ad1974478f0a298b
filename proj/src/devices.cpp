#include "campnet/devices.hpp"

#include <limits>
#include <queue>

#include "campnet/errors.hpp"

namespace campnet::devices {

bool PortQueue::try_push(const Frame& f, double now) {
    advance(now);
    if (static_cast<int>(q_.size()) >= capacity_) {
        ++drops;
        return false;
    }
    q_.emplace_back(f, now);
    ++pushed;
    return true;
}

std::optional<Frame> PortQueue::pop(double now) {
    advance(now);
    if (q_.empty()) return std::nullopt;
    auto [f, enq] = q_.front();
    q_.pop_front();
    ++popped;
    wait_sum_s += now - enq;
    return f;
}

void PortQueue::advance(double now) {
    area += static_cast<double>(q_.size()) * (now - last_change_);
    last_change_ = now;
}

RoutingTable compute_routes(const topology::NetworkModel& model) {
    const int n = static_cast<int>(model.nodes.size());

    std::vector<std::vector<int>> adj(n);
    for (const auto& l : model.links) {
        int a = model.node_index(l.a);
        int b = model.node_index(l.b);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    RoutingTable t;
    t.ws_ordinal.assign(n, -1);
    for (int i = 0; i < n; ++i)
        if (model.nodes[i].kind == topology::DeviceKind::Workstation) {
            t.ws_ordinal[i] = static_cast<int>(t.workstations.size());
            t.workstations.push_back(i);
        }

    t.next_hop.assign(n, std::vector<int>(t.workstations.size(), -1));

    // One BFS per destination workstation gives hop distances; each node's
    // next hop is its distance-minimizing neighbor, smallest id on ties.
    for (std::size_t w = 0; w < t.workstations.size(); ++w) {
        const int dst = t.workstations[w];
        std::vector<int> dist(n, std::numeric_limits<int>::max());
        std::queue<int> q;
        dist[dst] = 0;
        q.push(dst);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (dist[u] == std::numeric_limits<int>::max()) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (v == dst) continue;
            if (dist[v] == std::numeric_limits<int>::max())
                throw PlanError("no route from '" + model.nodes[v].id + "' to workstation '" +
                                model.nodes[dst].id + "'");
            int best = -1;
            for (int u : adj[v]) {
                if (dist[u] != dist[v] - 1) continue;
                if (best < 0 || model.nodes[u].id < model.nodes[best].id) best = u;
            }
            t.next_hop[v][w] = best;
        }
    }
    return t;
}

} // namespace campnet::devices
