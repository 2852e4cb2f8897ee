#include "gainspec/gain_theory.hpp"

#include <stdexcept>

namespace gainspec {

std::string to_string(CycleType t) {
    switch (t) {
        case CycleType::A: return "Type A";
        case CycleType::B: return "Type B";
        case CycleType::C: return "Type C";
        case CycleType::D: return "Type D";
        case CycleType::E: return "Type E";
    }
    throw std::logic_error("to_string: bad CycleType");
}

GainAngle cycle_gain(const GainGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle_gain: need at least 3 vertices");
    std::vector<char> seen(g.order(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("cycle_gain: vertex out of range");
        if (seen[v]) throw std::invalid_argument("cycle_gain: repeated vertex " + std::to_string(v));
        seen[v] = 1;
    }
    GainAngle product = GainAngle::one();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % cycle.size()];
        const auto gain = g.gain(u, v);
        if (!gain)
            throw std::invalid_argument("cycle_gain: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge");
        product = product * *gain;
    }
    return product;
}

CycleType classify_cycle(const GainGraph& g) {
    if (!is_cycle_graph(g))
        throw std::invalid_argument("classify_cycle: underlying graph is not a cycle");
    const int n = g.order();
    const GainAngle total = cycle_gain(g, cycle_sequence(g));
    if (n % 2 == 0) {
        const GainAngle target = (n / 2) % 2 == 0 ? GainAngle::one() : GainAngle::minus_one();
        return total == target ? CycleType::A : CycleType::B;
    }
    // Sign of Re((-1)^((n-1)/2) * total), exact.
    GainAngle u = total;
    if (((n - 1) / 2) % 2 == 1) u = u.negated();
    const int sign = u.real_sign();
    if (sign > 0) return CycleType::C;
    if (sign < 0) return CycleType::D;
    return CycleType::E;
}

int cycle_rank_formula(CycleType t, int n) {
    if (n < 3) throw std::invalid_argument("cycle_rank_formula: n must be >= 3");
    switch (t) {
        case CycleType::A: return n - 2;
        case CycleType::B:
        case CycleType::C:
        case CycleType::D: return n;
        case CycleType::E: return n - 1;
    }
    throw std::logic_error("cycle_rank_formula: bad CycleType");
}

std::optional<SwitchingFunction> find_balance_witness(const GainGraph& g) {
    const int n = g.order();
    SwitchingFunction zeta;
    zeta.zeta.assign(n, GainAngle::one());
    std::vector<char> visited(n, 0);
    std::vector<char> tree_edge(g.edge_count(), 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        stack.assign(1, root);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& nb : g.neighbors(u)) {
                if (visited[nb.vertex]) continue;
                visited[nb.vertex] = 1;
                tree_edge[nb.edge] = 1;
                // Tree edge u -> v switches to 1 when zeta(v) = gain(u,v)^(-1) zeta(u).
                const GainAngle guv = *g.gain(u, nb.vertex);
                zeta.zeta[nb.vertex] = guv.conjugate() * zeta.zeta[u];
                stack.push_back(nb.vertex);
            }
        }
    }
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        if (tree_edge[idx]) continue;
        const GainEdge& e = g.edges()[idx];
        const GainAngle switched = zeta.zeta[e.u].conjugate() * e.gain * zeta.zeta[e.v];
        if (!switched.is_one()) return std::nullopt;
    }
    return zeta;
}

bool is_balanced(const GainGraph& g) { return find_balance_witness(g).has_value(); }

GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& zeta) {
    if (static_cast<int>(zeta.zeta.size()) != g.order())
        throw std::invalid_argument("apply_switching: zeta must cover every vertex");
    std::vector<GainEdge> edges = g.edges();
    for (auto& e : edges) e.gain = zeta.zeta[e.u].conjugate() * e.gain * zeta.zeta[e.v];
    return GainGraph(g.order(), std::move(edges));
}

TypePhiSample sample_type_phi(const GainGraph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    HermitianMatrix m(g.order());
    for (const auto& e : g.edges()) {
        const double magnitude = rng.next_in(0.5, 2.0);
        m.set(e.u, e.v, magnitude * e.gain.value());
    }
    for (int v = 0; v < g.order(); ++v) m.set(v, v, rng.next_in(-2.0, 2.0));
    return {std::move(m), seed};
}

GainAngle random_unit_gain(SplitMix64& rng) {
    static constexpr int kDens[] = {1, 2, 3, 4, 6};
    const int den = kDens[rng.next_below(5)];
    const auto num = static_cast<std::int64_t>(rng.next_below(2 * den));
    return GainAngle(num, den);
}

SwitchingFunction random_switching(const GainGraph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SwitchingFunction zeta;
    zeta.zeta.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) zeta.zeta.push_back(random_unit_gain(rng));
    return zeta;
}

} // namespace gainspec
