#include "gainspec/gain_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gainspec {

GainGraph::GainGraph(int n, std::vector<GainEdge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("GainGraph: vertex count must be >= 1");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("GainGraph: loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            e.gain = e.gain.conjugate();
        }
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("GainGraph: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range");
    }
    std::sort(edges.begin(), edges.end(), [](const GainEdge& a, const GainEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw std::invalid_argument("GainGraph: duplicate edge (" + std::to_string(edges[i].u) +
                                        "," + std::to_string(edges[i].v) + ")");
    edges_ = std::move(edges);
    adjacency_.assign(n_, {});
    for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
        adjacency_[edges_[idx].u].push_back({edges_[idx].v, idx});
        adjacency_[edges_[idx].v].push_back({edges_[idx].u, idx});
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

bool GainGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    const auto& nbrs = adjacency_.at(u);
    return std::any_of(nbrs.begin(), nbrs.end(),
                       [v](const Neighbor& x) { return x.vertex == v; });
}

std::optional<GainAngle> GainGraph::gain(int u, int v) const {
    const auto& nbrs = adjacency_.at(u);
    for (const auto& x : nbrs) {
        if (x.vertex != v) continue;
        const GainEdge& e = edges_[x.edge];
        return u == e.u ? e.gain : e.gain.conjugate();
    }
    return std::nullopt;
}

DegreeProfile degree_profile(const GainGraph& g) {
    DegreeProfile p;
    p.degrees.resize(g.order());
    p.max_degree = 0;
    for (int v = 0; v < g.order(); ++v) {
        p.degrees[v] = g.degree(v);
        p.max_degree = std::max(p.max_degree, p.degrees[v]);
    }
    return p;
}

bool is_connected(const GainGraph& g) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& nb : g.neighbors(v)) {
            if (!seen[nb.vertex]) {
                seen[nb.vertex] = 1;
                ++count;
                stack.push_back(nb.vertex);
            }
        }
    }
    return count == g.order();
}

GainGraph induced_subgraph(const GainGraph& g, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    if (sorted.front() < 0 || sorted.back() >= g.order())
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> remap(g.order(), -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) remap[sorted[i]] = i;
    std::vector<GainEdge> edges;
    for (const auto& e : g.edges())
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            edges.push_back({remap[e.u], remap[e.v], e.gain});
    return GainGraph(static_cast<int>(sorted.size()), std::move(edges));
}

std::optional<std::vector<int>> bipartition(const GainGraph& g) {
    std::vector<int> color(g.order(), -1);
    std::vector<int> queue;
    for (int root = 0; root < g.order(); ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        queue.assign(1, root);
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            for (const auto& nb : g.neighbors(v)) {
                if (color[nb.vertex] < 0) {
                    color[nb.vertex] = 1 - color[v];
                    queue.push_back(nb.vertex);
                } else if (color[nb.vertex] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_complete(const GainGraph& g) {
    const long long n = g.order();
    return 2LL * g.edge_count() == n * (n - 1);
}

bool is_cycle_graph(const GainGraph& g) {
    if (g.order() < 3 || g.edge_count() != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

std::vector<int> cycle_sequence(const GainGraph& g) {
    if (!is_cycle_graph(g)) throw std::invalid_argument("cycle_sequence: not a cycle graph");
    std::vector<int> seq;
    seq.reserve(g.order());
    int prev = -1, v = 0;
    for (int step = 0; step < g.order(); ++step) {
        seq.push_back(v);
        const auto& nbrs = g.neighbors(v);
        const int next = (nbrs[0].vertex != prev) ? nbrs[0].vertex : nbrs[1].vertex;
        prev = v;
        v = next;
    }
    return seq;
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const GainGraph& g) {
    if (!is_connected(g)) return std::nullopt;
    const auto coloring = bipartition(g);
    if (!coloring) return std::nullopt;
    long long a = 0;
    for (int c : *coloring) a += (c == 0);
    const long long b = g.order() - a;
    if (static_cast<long long>(g.edge_count()) != a * b) return std::nullopt;
    return std::make_pair(static_cast<int>(std::max(a, b)), static_cast<int>(std::min(a, b)));
}

} // namespace gainspec
