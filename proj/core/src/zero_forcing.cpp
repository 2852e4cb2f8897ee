#include "gainspec/zero_forcing.hpp"

#include <algorithm>
#include <bit>

namespace gainspec {

namespace {
constexpr int kMaxExactOrder = 24;
constexpr std::uint64_t kClosureBudget = 50'000'000;
} // namespace

ColoringState::ColoringState(const GainGraph& g, const VertexSet& black)
    : graph_(&g), black_(g.order(), 0), white_neighbors_(g.order(), 0) {
    for (int v = 0; v < g.order(); ++v) white_neighbors_[v] = g.degree(v);
    for (int v : black) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("ColoringState: vertex out of range");
        if (black_[v]) continue;
        force(v);
    }
}

void ColoringState::force(int v) {
    black_[v] = 1;
    ++black_count_;
    for (const auto& nb : graph_->neighbors(v)) {
        if (--white_neighbors_[nb.vertex] == 1 && black_[nb.vertex]) queue_.push_back(nb.vertex);
    }
    if (white_neighbors_[v] == 1) queue_.push_back(v);
}

void ColoringState::run() {
    while (!queue_.empty()) {
        const int v = queue_.back();
        queue_.pop_back();
        if (white_neighbors_[v] != 1) continue; // stale entry
        for (const auto& nb : graph_->neighbors(v)) {
            if (!black_[nb.vertex]) {
                force(nb.vertex);
                break;
            }
        }
    }
}

VertexSet ColoringState::black_vertices() const {
    VertexSet out;
    for (int v = 0; v < graph_->order(); ++v)
        if (black_[v]) out.push_back(v);
    return out;
}

VertexSet closure(const GainGraph& g, const VertexSet& initial) {
    ColoringState state(g, initial);
    state.run();
    return state.black_vertices();
}

bool is_zero_forcing_set(const GainGraph& g, const VertexSet& z) {
    ColoringState state(g, z);
    state.run();
    return state.all_black();
}

namespace {

// Bitmask closure for the exact search (n <= 24).
std::uint32_t closure_mask(const std::vector<std::uint32_t>& adj, std::uint32_t black) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::uint32_t scan = black;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const std::uint32_t white = adj[v] & ~black;
            if (white != 0 && (white & (white - 1)) == 0) {
                black |= white;
                changed = true;
            }
        }
    }
    return black;
}

} // namespace

ZfResult zero_forcing_number(const GainGraph& g) {
    const int n = g.order();
    if (n > kMaxExactOrder)
        throw BudgetExceeded("zero_forcing_number: order " + std::to_string(n) +
                             " exceeds the exact-search limit of " +
                             std::to_string(kMaxExactOrder));
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::uint64_t searched = 0;

    for (int k = 1; k <= n; ++k) {
        // Lexicographically ascending k-combinations of {0..n-1}.
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int v : comb) mask |= 1u << v;
            if (++searched > kClosureBudget)
                throw BudgetExceeded("zero_forcing_number: closure budget exceeded");
            if (closure_mask(adj, mask) == full)
                return {k, comb, searched};
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    // n >= 1 and the full set always forces, so this is unreachable.
    throw std::logic_error("zero_forcing_number: exhausted all sizes");
}

Rational zf_bound_general(int n, int delta) {
    if (delta < 2) throw std::invalid_argument("zf_bound_general: requires delta >= 2");
    return Rational(static_cast<std::int64_t>(delta - 2) * n + 2, delta - 1);
}

Rational zf_bound_strict(int n, int delta) {
    if (delta < 3) throw std::invalid_argument("zf_bound_strict: requires delta >= 3");
    return Rational(static_cast<std::int64_t>(delta - 2) * n, delta - 1);
}

} // namespace gainspec
