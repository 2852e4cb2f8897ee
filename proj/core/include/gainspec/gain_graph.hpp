#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gainspec/gain_angle.hpp"

namespace gainspec {

// One stored edge, kept with u < v. The gain is the value of the oriented
// edge u -> v; traversing v -> u uses the conjugate, which is never stored.
struct GainEdge {
    int u;
    int v;
    GainAngle gain;

    friend bool operator==(const GainEdge& a, const GainEdge& b) {
        return a.u == b.u && a.v == b.v && a.gain == b.gain;
    }
};

// Simple graph with a unit gain per edge. Immutable after construction and
// safe to share across threads. Vertices are dense 0-based indices.
class GainGraph {
public:
    struct Neighbor {
        int vertex;
        int edge; // index into edges()
    };

    // Validates: indices in range, no loops, no duplicate pairs. Edges given
    // as (u, v) with u > v are stored as (v, u) with the conjugate gain.
    GainGraph(int n, std::vector<GainEdge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<GainEdge>& edges() const { return edges_; }
    const std::vector<Neighbor>& neighbors(int v) const { return adjacency_.at(v); }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

    bool adjacent(int u, int v) const;

    // Gain of the oriented edge u -> v, or nullopt if not adjacent.
    std::optional<GainAngle> gain(int u, int v) const;

    friend bool operator==(const GainGraph& a, const GainGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const GainGraph& a, const GainGraph& b) { return !(a == b); }

private:
    int n_;
    std::vector<GainEdge> edges_;                  // sorted by (u, v)
    std::vector<std::vector<Neighbor>> adjacency_; // per-vertex, sorted by vertex
};

struct DegreeProfile {
    std::vector<int> degrees;
    int max_degree;
};

DegreeProfile degree_profile(const GainGraph& g);

// Breadth-first reachability on the underlying graph.
bool is_connected(const GainGraph& g);

// Subgraph induced by `keep` (deduplicated, must be non-empty and in range);
// vertices are reindexed in ascending original order, gains preserved.
GainGraph induced_subgraph(const GainGraph& g, const std::vector<int>& keep);

// --- Shape queries on the underlying graph (gains ignored) ---

// Proper 2-coloring with colors 0/1, component by component (vertex 0 of each
// component gets color 0), or nullopt if an odd cycle exists.
std::optional<std::vector<int>> bipartition(const GainGraph& g);

bool is_complete(const GainGraph& g);

// Connected and 2-regular with n >= 3.
bool is_cycle_graph(const GainGraph& g);

// Vertex sequence around the cycle starting at vertex 0; requires
// is_cycle_graph(g).
std::vector<int> cycle_sequence(const GainGraph& g);

// Part sizes (a, b) with a >= b if g is connected and complete bipartite.
std::optional<std::pair<int, int>> complete_bipartite_parts(const GainGraph& g);

} // namespace gainspec
