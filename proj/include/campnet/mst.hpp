#pragma once

#include <string>
#include <vector>

#include "campnet/geodesy.hpp"

namespace campnet::mst {

struct Edge {
    int u = -1;
    int v = -1;
    double weight = 0.0;
};

// Undirected weighted graph. Vertices keep their insertion order; Prim's
// tie-breaking and the DFS ring ordering downstream both key off that order.
struct WeightedGraph {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    static WeightedGraph from_vertices(std::vector<std::string> ids); // PlanError on duplicates
    void add_edge(const std::string& u, const std::string& v, double w);
    int index_of(const std::string& id) const; // -1 when absent
    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

struct TreeEdge {
    int parent = -1;
    int child = -1;
    double weight = 0.0;
};

struct SpanningTree {
    std::vector<std::string> vertices; // copy of the source graph's vertex list
    int root = -1;
    std::vector<TreeEdge> edges;        // in Prim extraction order
    std::vector<int> parent;            // -1 for the root
    std::vector<double> distance_key;   // final key per vertex
    double total_weight = 0.0;

    // Vertices in depth-first preorder from the root; children are visited
    // in vertex-list order.
    std::vector<int> dfs_preorder() const;
};

// Complete graph over the sites, weighted by great-circle distance.
WeightedGraph graph_from_sites(const std::vector<geodesy::Site>& sites);

// Prim's algorithm from `start`. Among equal keys the vertex earliest in the
// vertex list is extracted first. Disconnected input raises PlanError naming
// an unreachable vertex.
SpanningTree prim_mst(const WeightedGraph& g, const std::string& start);

// Exhaustive minimum spanning-tree weight, usable up to 8 vertices.
double brute_force_mst_weight(const WeightedGraph& g);

} // namespace campnet::mst
