#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gainspec/gain_graph.hpp"
#include "gainspec/hermitian.hpp"
#include "gainspec/prng.hpp"

namespace gainspec {

// Classification of a gain cycle by the parity of n and exact value /
// real-part-sign tests on its total gain:
//   A: n even, gain = (-1)^(n/2)          (rank n-2)
//   B: n even, gain != (-1)^(n/2)         (rank n)
//   C: n odd,  Re((-1)^((n-1)/2) gain) > 0 (rank n)
//   D: n odd,  Re((-1)^((n-1)/2) gain) < 0 (rank n)
//   E: n odd,  Re((-1)^((n-1)/2) gain) = 0 (rank n-1)
// All tests are decided in exact angle arithmetic; Type E in particular
// requires an exact zero real part.
enum class CycleType { A, B, C, D, E };

std::string to_string(CycleType t); // "Type A"

// Product of oriented edge gains along the closed walk cycle[0] -> cycle[1]
// -> ... -> cycle[0]. Vertices must be distinct and consecutive pairs
// adjacent.
GainAngle cycle_gain(const GainGraph& g, const std::vector<int>& cycle);

// Requires the underlying graph to be a single cycle.
CycleType classify_cycle(const GainGraph& g);

// Rank of the gain adjacency matrix of a classified cycle on n vertices.
int cycle_rank_formula(CycleType t, int n);

// Per-vertex unit gains; switching conjugates each edge gain by its endpoint
// values and leaves all spectra unchanged.
struct SwitchingFunction {
    std::vector<GainAngle> zeta;
};

// Spanning-forest gauge: fixes zeta so every tree edge switches to gain 1;
// the graph is balanced iff every non-tree edge then has gain exactly 1.
// Returns the gauge as a witness (switching by it yields the all-ones gain)
// or nullopt when some cycle has gain != 1.
std::optional<SwitchingFunction> find_balance_witness(const GainGraph& g);

bool is_balanced(const GainGraph& g);

// New gains: zeta(u)^(-1) * gain(u, v) * zeta(v), exact.
GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& zeta);

// Hermitian matrix whose off-diagonal phase pattern equals the gain adjacency
// matrix: entry (i, j) = r_ij * gain(i, j) with r_ij in [0.5, 2.0] for
// adjacent pairs, zero otherwise; diagonal free in [-2, 2]. Draw order:
// magnitudes per edge in stored (u, v) order, then diagonal entries by
// vertex, all from one SplitMix64 stream, so a seed pins the matrix exactly.
struct TypePhiSample {
    HermitianMatrix matrix;
    std::uint64_t seed;
};

TypePhiSample sample_type_phi(const GainGraph& g, std::uint64_t seed);

// Uniform draw from the roots of unity with denominator in {1, 2, 3, 4, 6}.
GainAngle random_unit_gain(SplitMix64& rng);

// Uniform random switching function over the same root-of-unity pool.
SwitchingFunction random_switching(const GainGraph& g, std::uint64_t seed);

} // namespace gainspec
