#include "gainspec/families.hpp"

#include <stdexcept>

#include "gainspec/gain_theory.hpp"
#include "gainspec/prng.hpp"

namespace gainspec {

GainGraph gen_cycle(int n, GainAngle total_gain) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
    std::vector<GainEdge> edges;
    edges.reserve(n);
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, GainAngle::one()});
    // Stored as (0, n-1); traversal n-1 -> 0 must contribute total_gain.
    edges.push_back({0, n - 1, total_gain.conjugate()});
    return GainGraph(n, std::move(edges));
}

namespace {

GainGraph complete_with(int n, GainAngle (*next_gain)(SplitMix64&), SplitMix64* rng) {
    if (n < 1) throw std::invalid_argument("gen_complete: n must be >= 1");
    std::vector<GainEdge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v, rng ? next_gain(*rng) : GainAngle::one()});
    return GainGraph(n, std::move(edges));
}

GainGraph bipartite_with(int a, int b, SplitMix64* rng, bool flip_first) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("gen_complete_bipartite: part sizes must be >= 1");
    std::vector<GainEdge> edges;
    edges.reserve(static_cast<std::size_t>(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) {
            GainAngle gain = rng ? random_unit_gain(*rng) : GainAngle::one();
            if (flip_first && u == 0 && v == a) gain = GainAngle::minus_one();
            edges.push_back({u, v, gain});
        }
    return GainGraph(a + b, std::move(edges));
}

} // namespace

GainGraph gen_complete(int n) { return complete_with(n, nullptr, nullptr); }

GainGraph gen_complete(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return complete_with(n, &random_unit_gain, &rng);
}

GainGraph gen_complete_bipartite(int a, int b) { return bipartite_with(a, b, nullptr, false); }

GainGraph gen_complete_bipartite(int a, int b, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return bipartite_with(a, b, &rng, false);
}

GainGraph gen_complete_bipartite_flipped(int a, int b) { return bipartite_with(a, b, nullptr, true); }

GainGraph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n must be >= 1");
    std::vector<GainEdge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, GainAngle::one()});
    return GainGraph(n, std::move(edges));
}

GainGraph gen_random_connected(int n, int max_degree, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_connected: n must be >= 2");
    const int needed = n == 2 ? 1 : 2;
    if (max_degree < needed)
        throw std::invalid_argument("gen_random_connected: degree cap " +
                                    std::to_string(max_degree) + " cannot connect " +
                                    std::to_string(n) + " vertices");
    SplitMix64 rng(seed);
    std::vector<GainEdge> edges;
    std::vector<int> degree(n, 0);

    // Random spanning tree: attach each vertex to an earlier one with spare
    // degree. Such a vertex always exists (a tree on v vertices has total
    // degree 2(v-1) < 2v <= v * max_degree).
    std::vector<int> candidates;
    for (int v = 1; v < n; ++v) {
        candidates.clear();
        for (int u = 0; u < v; ++u)
            if (degree[u] < max_degree) candidates.push_back(u);
        const int u = candidates[rng.next_below(candidates.size())];
        edges.push_back({u, v, random_unit_gain(rng)});
        ++degree[u];
        ++degree[v];
    }

    // Random extra edges under the cap; attempt count fixed for determinism.
    auto has_edge = [&edges](int u, int v) {
        for (const auto& e : edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
        return false;
    };
    const std::uint64_t extras = rng.next_below(static_cast<std::uint64_t>(n));
    std::uint64_t added = 0;
    for (int attempt = 0; attempt < 4 * n && added < extras; ++attempt) {
        const int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v || degree[u] >= max_degree || degree[v] >= max_degree || has_edge(u, v))
            continue;
        edges.push_back({std::min(u, v), std::max(u, v), random_unit_gain(rng)});
        ++degree[u];
        ++degree[v];
        ++added;
    }
    return GainGraph(n, std::move(edges));
}

GainGraph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Cycle:
            return gen_cycle(spec.n, spec.gains == FamilySpec::Gains::FixedCycleGain
                                         ? spec.cycle_gain
                                         : GainAngle::one());
        case FamilySpec::Kind::Complete:
            return spec.gains == FamilySpec::Gains::Random ? gen_complete(spec.n, spec.seed)
                                                           : gen_complete(spec.n);
        case FamilySpec::Kind::CompleteBipartite:
            if (spec.gains == FamilySpec::Gains::Random)
                return gen_complete_bipartite(spec.a, spec.b, spec.seed);
            if (spec.gains == FamilySpec::Gains::OneFlipped)
                return gen_complete_bipartite_flipped(spec.a, spec.b);
            return gen_complete_bipartite(spec.a, spec.b);
        case FamilySpec::Kind::Path:
            return gen_path(spec.n);
        case FamilySpec::Kind::RandomConnected:
            return gen_random_connected(spec.n, spec.max_degree, spec.seed);
    }
    throw std::logic_error("generate: bad FamilySpec kind");
}

} // namespace gainspec
