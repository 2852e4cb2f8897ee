#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gainspec/gain_graph.hpp"
#include "gainspec/rational.hpp"

namespace gainspec {

using VertexSet = std::vector<int>; // ascending, unique

// Color-change propagation engine: a black vertex with exactly one white
// neighbor forces that neighbor black. Maintains white-neighbor counts
// incrementally behind a force queue, so running to the fixed point costs
// O(n + m). Zero forcing of a gain graph is defined on its underlying graph;
// gains never enter here.
class ColoringState {
public:
    ColoringState(const GainGraph& g, const VertexSet& black);

    // Applies the color-change rule until no more forces are possible. The
    // fixed point (the derived coloring) is unique regardless of force order.
    void run();

    bool is_black(int v) const { return black_.at(v) != 0; }
    bool all_black() const { return black_count_ == graph_->order(); }
    VertexSet black_vertices() const;

private:
    void force(int v);

    const GainGraph* graph_;
    std::vector<char> black_;
    std::vector<int> white_neighbors_;
    std::vector<int> queue_;
    int black_count_ = 0;
};

// Derived coloring of `initial`: the unique fixed point of the color-change
// rule.
VertexSet closure(const GainGraph& g, const VertexSet& initial);

bool is_zero_forcing_set(const GainGraph& g, const VertexSet& z);

struct ZfResult {
    int number;
    VertexSet witness; // lexicographically smallest minimum set
    std::uint64_t nodes_searched;
};

// Thrown when an exact search exceeds its instance-size or work budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exact Z(G) by exhaustive enumeration of candidate sets in increasing size;
// within each size, sets are tried in lexicographic order, so the first
// success is the lexicographically smallest minimum witness. Guarded at
// n <= 24 and 5e7 closure evaluations.
ZfResult zero_forcing_number(const GainGraph& g);

// ((delta-2)n + 2) / (delta-1), exact; requires delta >= 2.
Rational zf_bound_general(int n, int delta);

// (delta-2)n / (delta-1), exact; requires delta >= 3.
Rational zf_bound_strict(int n, int delta);

} // namespace gainspec
