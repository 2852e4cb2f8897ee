#pragma once

#include <cstdint>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

// Cycle v0-v1-...-v(n-1)-v0 whose total gain in that orientation is exactly
// total_gain: interior edges carry gain 1, the closing edge carries the rest.
// Cycles with equal total gain are switching equivalent, so concentrating the
// gain on one edge loses nothing.
GainGraph gen_cycle(int n, GainAngle total_gain);

GainGraph gen_complete(int n);                     // all gains 1
GainGraph gen_complete(int n, std::uint64_t seed); // seeded random gains

GainGraph gen_complete_bipartite(int a, int b);                     // all gains 1
GainGraph gen_complete_bipartite(int a, int b, std::uint64_t seed); // random gains
// All gains 1 except the first edge (0, a), which carries gain -1.
GainGraph gen_complete_bipartite_flipped(int a, int b);

GainGraph gen_path(int n); // all gains 1

// Random spanning tree plus random extra edges, never exceeding the degree
// cap; connected by construction and identical for identical seeds.
GainGraph gen_random_connected(int n, int max_degree, std::uint64_t seed);

// Parameter record for generator dispatch (CLI and corpus construction).
struct FamilySpec {
    enum class Kind { Cycle, Complete, CompleteBipartite, Path, RandomConnected };
    enum class Gains { AllOnes, FixedCycleGain, Random, OneFlipped };

    Kind kind = Kind::Cycle;
    int n = 0;
    int a = 0, b = 0;        // bipartite part sizes
    Gains gains = Gains::AllOnes;
    GainAngle cycle_gain;    // for FixedCycleGain
    std::uint64_t seed = 0;  // for Random
    int max_degree = 0;      // for RandomConnected
};

GainGraph generate(const FamilySpec& spec);

} // namespace gainspec
