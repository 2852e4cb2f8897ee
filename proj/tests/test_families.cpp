#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gainspec/families.hpp"
#include "gainspec/gain_theory.hpp"
#include "gainspec/ggr_io.hpp"
#include "gainspec/prng.hpp"

using namespace gainspec;

namespace {

// The type definition restated directly on (n, theta), independent of the
// classifier's angle plumbing.
CycleType expected_type(int n, GainAngle theta) {
    if (n % 2 == 0) {
        const bool target_is_one = (n / 2) % 2 == 0;
        const bool is_target = target_is_one ? theta.is_one() : theta.is_minus_one();
        return is_target ? CycleType::A : CycleType::B;
    }
    const double re = (((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * theta.value().real();
    if (std::abs(re) < 1e-12) return CycleType::E;
    return re > 0 ? CycleType::C : CycleType::D;
}

} // namespace

TEST_CASE("gen_cycle realizes the requested total gain exactly") {
    for (int n = 3; n <= 12; ++n)
        for (std::int64_t den = 1; den <= 6; ++den)
            for (std::int64_t num = 0; num < 2 * den; ++num) {
                const GainAngle theta(num, den);
                const GainGraph g = gen_cycle(n, theta);
                CHECK(is_cycle_graph(g));
                std::vector<int> forward(n);
                for (int v = 0; v < n; ++v) forward[v] = v;
                CHECK(cycle_gain(g, forward) == theta);
            }
    CHECK_THROWS_AS(gen_cycle(2, GainAngle::one()), std::invalid_argument);
}

TEST_CASE("gen_cycle types match the definition across small denominators") {
    for (int n = 3; n <= 12; ++n)
        for (std::int64_t den = 1; den <= 6; ++den)
            for (std::int64_t num = 0; num < 2 * den; ++num) {
                const GainAngle theta(num, den);
                CHECK(classify_cycle(gen_cycle(n, theta)) == expected_type(n, theta));
            }
}

TEST_CASE("named spec cases") {
    CHECK(classify_cycle(gen_cycle(4, GainAngle(0, 1))) == CycleType::A);
    CHECK(classify_cycle(gen_cycle(6, GainAngle(1, 1))) == CycleType::A);
    CHECK(classify_cycle(gen_cycle(3, GainAngle(1, 2))) == CycleType::E);
}

TEST_CASE("complete graphs") {
    const GainGraph k4 = gen_complete(4);
    CHECK(is_complete(k4));
    for (const auto& e : k4.edges()) CHECK(e.gain.is_one());

    CHECK(gen_complete(1).edge_count() == 0);
    CHECK(gen_complete(2).edge_count() == 1);

    const GainGraph a = gen_complete(6, 99);
    CHECK(a == gen_complete(6, 99));
    CHECK(a != gen_complete(6, 100));
    for (const auto& e : a.edges()) {
        CHECK(e.gain.den() <= 6);
        CHECK(e.gain.den() != 5);
    }
}

TEST_CASE("complete bipartite graphs") {
    const GainGraph k33 = gen_complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    CHECK(is_balanced(k33));
    const auto parts = complete_bipartite_parts(k33);
    REQUIRE(parts.has_value());
    CHECK(*parts == std::pair<int, int>{3, 3});

    // K_{2,1} is the path on 3 vertices.
    const GainGraph p3 = gen_complete_bipartite(2, 1);
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(degree_profile(p3).max_degree == 2);

    // One flipped edge turns balanced K_{2,2} into a Type B 4-cycle.
    const GainGraph flipped = gen_complete_bipartite_flipped(2, 2);
    CHECK_FALSE(is_balanced(flipped));
    CHECK(classify_cycle(flipped) == CycleType::B);

    CHECK(gen_complete_bipartite(3, 2, 7) == gen_complete_bipartite(3, 2, 7));
    CHECK_THROWS_AS(gen_complete_bipartite(0, 2), std::invalid_argument);
}

TEST_CASE("paths") {
    const GainGraph p1 = gen_path(1);
    CHECK(p1.order() == 1);
    const GainGraph p5 = gen_path(5);
    CHECK(p5.edge_count() == 4);
    CHECK(is_connected(p5));
    CHECK_FALSE(is_cycle_graph(p5));
}

TEST_CASE("random connected graphs respect their contract across 500 seeds") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        SplitMix64 rng(seed);
        const int n = 2 + static_cast<int>(rng.next_below(11));
        const int cap = 2 + static_cast<int>(rng.next_below(4));
        const GainGraph g = gen_random_connected(n, cap, seed);
        CHECK(g.order() == n);
        CHECK(is_connected(g));
        CHECK(degree_profile(g).max_degree <= cap);
        CHECK(g == gen_random_connected(n, cap, seed));
        // Construction already validated (no loops, no duplicates); a
        // round-trip exercises serializer output on it too.
        CHECK(parse_gain_graph(serialize_gain_graph(g)) == g);
    }
}

TEST_CASE("random generator edge cases") {
    const GainGraph k2 = gen_random_connected(2, 2, 1);
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(gen_random_connected(2, 1, 5).edge_count() == 1);
    CHECK_THROWS_AS(gen_random_connected(3, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_connected(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_connected(5, 0, 0), std::invalid_argument);
}

TEST_CASE("generate dispatch") {
    FamilySpec cycle;
    cycle.kind = FamilySpec::Kind::Cycle;
    cycle.n = 5;
    cycle.gains = FamilySpec::Gains::FixedCycleGain;
    cycle.cycle_gain = GainAngle(1, 2);
    CHECK(generate(cycle) == gen_cycle(5, GainAngle(1, 2)));

    FamilySpec complete;
    complete.kind = FamilySpec::Kind::Complete;
    complete.n = 4;
    CHECK(generate(complete) == gen_complete(4));

    FamilySpec random;
    random.kind = FamilySpec::Kind::RandomConnected;
    random.n = 8;
    random.max_degree = 3;
    random.seed = 11;
    CHECK(generate(random) == gen_random_connected(8, 3, 11));

    FamilySpec flip;
    flip.kind = FamilySpec::Kind::CompleteBipartite;
    flip.a = 2;
    flip.b = 3;
    flip.gains = FamilySpec::Gains::OneFlipped;
    CHECK(generate(flip) == gen_complete_bipartite_flipped(2, 3));
}
