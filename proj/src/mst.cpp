#include "campnet/mst.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>

#include "campnet/errors.hpp"

namespace campnet::mst {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Union-find over n vertices.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

WeightedGraph WeightedGraph::from_vertices(std::vector<std::string> ids) {
    std::set<std::string> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second) throw PlanError("duplicate vertex id '" + id + "'");
    WeightedGraph g;
    g.vertices = std::move(ids);
    return g;
}

int WeightedGraph::index_of(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        if (vertices[i] == id) return i;
    return -1;
}

void WeightedGraph::add_edge(const std::string& u, const std::string& v, double w) {
    const int iu = index_of(u);
    const int iv = index_of(v);
    if (iu < 0) throw PlanError("edge endpoint '" + u + "' is not a vertex");
    if (iv < 0) throw PlanError("edge endpoint '" + v + "' is not a vertex");
    if (iu == iv) throw PlanError("self-loop on '" + u + "'");
    if (w < 0.0) throw PlanError("negative edge weight on (" + u + "," + v + ")");
    for (const auto& e : edges)
        if ((e.u == iu && e.v == iv) || (e.u == iv && e.v == iu))
            throw PlanError("duplicate edge (" + u + "," + v + ")");
    edges.push_back(Edge{iu, iv, w});
}

WeightedGraph graph_from_sites(const std::vector<geodesy::Site>& sites) {
    if (sites.empty()) throw PlanError("no sites to plan over");
    std::vector<std::string> ids;
    ids.reserve(sites.size());
    for (const auto& s : sites) ids.push_back(s.id);
    WeightedGraph g = WeightedGraph::from_vertices(std::move(ids));
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = i + 1; j < sites.size(); ++j)
            g.edges.push_back(Edge{static_cast<int>(i), static_cast<int>(j),
                                   geodesy::haversine_km(sites[i].location, sites[j].location)});
    return g;
}

SpanningTree prim_mst(const WeightedGraph& g, const std::string& start) {
    const int n = g.vertex_count();
    const int s = g.index_of(start);
    if (s < 0) throw PlanError("start vertex '" + start + "' is not in the graph");

    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.u].emplace_back(e.v, e.weight);
        adj[e.v].emplace_back(e.u, e.weight);
    }

    SpanningTree t;
    t.vertices = g.vertices;
    t.root = s;
    t.parent.assign(n, -1);
    t.distance_key.assign(n, kInf);
    t.distance_key[s] = 0.0;

    std::vector<bool> in_tree(n, false);

    // Lazy-deletion heap keyed by (distance, vertex-list position); the
    // position component realizes the equal-key tie rule.
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(0.0, s);

    int extracted = 0;
    while (!heap.empty()) {
        auto [key, u] = heap.top();
        heap.pop();
        if (in_tree[u] || key != t.distance_key[u]) continue; // stale entry
        in_tree[u] = true;
        ++extracted;
        if (u != s) {
            t.edges.push_back(TreeEdge{t.parent[u], u, t.distance_key[u]});
            t.total_weight += t.distance_key[u];
        }
        for (auto [z, w] : adj[u]) {
            if (!in_tree[z] && w < t.distance_key[z]) {
                t.distance_key[z] = w;
                t.parent[z] = u;
                heap.emplace(w, z);
            }
        }
    }

    if (extracted != n) {
        for (int v = 0; v < n; ++v)
            if (!in_tree[v])
                throw PlanError("graph is disconnected: vertex '" + g.vertices[v] +
                                "' is unreachable from '" + start + "'");
    }
    return t;
}

std::vector<int> SpanningTree::dfs_preorder() const {
    const int n = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) children[parent[v]].push_back(v); // ascending: v iterated in order

    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
    }
    return order;
}

double brute_force_mst_weight(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw PlanError("brute_force_mst_weight refuses graphs with more than 8 vertices");
    if (n == 1) return 0.0;

    const int m = static_cast<int>(g.edges.size());
    const int need = n - 1;
    if (m < need) throw PlanError("graph is disconnected: too few edges");

    double best = kInf;
    std::vector<int> pick(need);
    for (int i = 0; i < need; ++i) pick[i] = i;

    // Walk all C(m, n-1) edge subsets in lexicographic order.
    while (true) {
        Dsu dsu(n);
        bool acyclic = true;
        double w = 0.0;
        for (int idx : pick) {
            const auto& e = g.edges[idx];
            if (!dsu.unite(e.u, e.v)) {
                acyclic = false;
                break;
            }
            w += e.weight;
        }
        if (acyclic) {
            // n-1 acyclic edges over n vertices always span.
            best = std::min(best, w);
        }

        int i = need - 1;
        while (i >= 0 && pick[i] == m - need + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }

    if (best == kInf) throw PlanError("graph is disconnected: no spanning tree exists");
    return best;
}

} // namespace campnet::mst
