#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gainspec/gain_angle.hpp"
#include "gainspec/gain_graph.hpp"
#include "gainspec/rational.hpp"

namespace gainspec {

// One checked statement per tag:
//   MULT_BOUND    m_alpha(Phi, lambda) <= ((D-2)n+2)/(D-1), connected, D >= 2
//   RANK_N2_D1    r(Phi) >= (n-2)/(D-1), connected, D >= 2
//   RANK_N_D1     r(Phi) >= n/(D-1), connected, D >= 3, two expected
//                 balanced complete-bipartite exceptions
//   RANK_N_D      r(Phi) >= n/D, any graph
//   RANK_N1_D     r(Phi) >= (n+1)/D, only when 2D does not divide n
//   CYCLE_ALPHA   eigensolver vs closed-form cycle spectrum, <= 1e-8
//   CYCLE_MULT2   every A_alpha multiplicity of a cycle <= 2
//   BIPARTITE_SYM spectrum symmetric about origin, <= 1e-8
//   SANDWICH      eta(B) <= Z for B = A_alpha - lambda*I and type samples
//   KN_SHIFT      complete graphs: mu of multiplicity n-1 in A iff
//                 alpha(n-1)+(1-alpha)mu of multiplicity n-1 in A_alpha
enum class TheoremTag {
    MultBound,
    RankN2D1,
    RankND1,
    RankND,
    RankN1D,
    CycleAlpha,
    CycleMult2,
    BipartiteSym,
    Sandwich,
    KnShift,
};

std::string to_string(TheoremTag tag);

// One verification outcome. For inequality rows, slack is oriented so that
// slack >= 0 exactly when the inequality holds (bound - measured for upper
// bounds, measured - bound for lower bounds, tolerance - deviation for
// numerical agreement rows). A row with non-empty skip_reason records a
// checker that was not run because a stated precondition failed; it counts as
// neither pass nor fail.
struct ReportRow {
    std::string instance_id;
    TheoremTag tag = TheoremTag::MultBound;
    double measured = 0.0;
    Rational bound;
    double slack = 0.0;
    std::string equality_case; // empty = no equality detected
    bool pass = false;
    std::string note;        // flagged discrepancies, vacuous-pass reasons
    std::string skip_reason; // non-empty = skip marker

    bool skipped() const { return !skip_reason.empty(); }
};

// Checkers. Each evaluates one theorem on one instance and never mutates the
// graph. Preconditions are enforced with std::invalid_argument; the suite
// turns those into skip rows instead of calling out of contract.

// One row per alpha; alphas must lie in [0, 1). Requires connected, max
// degree >= 2. On equality the row is classified into exactly one of the
// cases: complete ("complete_mu_shift"), cycle with gain +1 / -1
// ("cycle_cosine_plus" / "cycle_cosine_minus"), balanced K_{n/2,n/2}
// ("balanced_bipartite_half"). Precedence in that order; an unclassified
// equality row fails loudly.
std::vector<ReportRow> check_multiplicity_bound(const GainGraph& g,
                                                const std::vector<double>& alphas,
                                                const std::string& instance_id);

// Max deviation between the eigensolver spectrum of A_alpha(gen_cycle(n,
// theta)) and the sorted closed-form values 2a+2(1-a)cos((theta+2pi j)/n),
// and the multiplicity-at-most-2 corollary on every cluster.
ReportRow check_cycle_alpha_spectrum(int n, GainAngle theta, double alpha,
                                     const std::string& instance_id);

// All applicable rank bounds; rank is computed by both oracles and a
// disagreement throws std::logic_error. Inapplicable bounds come back as
// skip rows.
std::vector<ReportRow> check_rank_bounds(const GainGraph& g, const std::string& instance_id);

// Requires a bipartite underlying graph; measured = max |s[k] + s[n-1-k]|.
ReportRow check_bipartite_symmetry(const GainGraph& g, const std::string& instance_id);

// measured = max multiplicity over the alpha grid (eta(A_alpha - lambda I)
// at every cluster) and over num_seeds type samples; bound = Z of the
// underlying graph.
ReportRow check_sandwich(const GainGraph& g, int num_seeds, const std::string& instance_id,
                         const std::vector<double>& alphas = {0.0, 0.25, 0.5, 0.75});

// Complete underlying graph: the multiplicity-(n-1) shift biconditional.
ReportRow check_kn_shift(const GainGraph& g, double alpha, const std::string& instance_id);
ReportRow check_kn_shift(int n, std::optional<std::uint64_t> seed, double alpha,
                         const std::string& instance_id);

// --- Suite ---

struct Instance {
    std::string id;
    GainGraph graph;
};

// Every equality family and exception named by the theorems, at exact-Z
// scale: cycles n in 3..12 with gains 1, -1, i, exp(i pi/3); complete graphs
// n in 2..8 all-ones plus 3 seeds; complete bipartite a <= b <= 4 balanced
// and one-flipped; 20 seeded random connected graphs with n <= 10, max
// degree <= 4.
std::vector<Instance> builtin_paper_families();

// "builtin:paper-families", a .ggr file, or a directory of .ggr files.
std::vector<Instance> load_corpus(const std::string& spec);

struct SuiteOptions {
    std::vector<double> alphas{0.0, 0.25, 0.5, 0.75}; // MULT_BOUND / SANDWICH grid
    std::vector<double> cycle_alphas{0.0, 0.5};       // CYCLE_ALPHA grid
    int sandwich_seeds = 50;
    int jobs = 1;
};

struct SuiteSummary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct SuiteResult {
    std::vector<ReportRow> rows; // ordered by (instance id, theorem tag)
    SuiteSummary summary;
};

// Runs every applicable checker on every instance. Deterministic row order
// independent of the number of worker threads.
SuiteResult run_suite(const std::vector<Instance>& instances, const SuiteOptions& options = {});

std::string report_row_json(const ReportRow& row);
void write_jsonl(std::ostream& out, const std::vector<ReportRow>& rows);
void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);

} // namespace gainspec
