#include "gainspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "gainspec/families.hpp"
#include "gainspec/gain_theory.hpp"
#include "gainspec/ggr_io.hpp"
#include "gainspec/prng.hpp"
#include "gainspec/spectral.hpp"
#include "gainspec/zero_forcing.hpp"

namespace gainspec {

namespace {

constexpr double kMatchTol = 1e-8;
const Rational kMatchTolRational(1, 100'000'000);

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void require_alpha_range(double alpha) {
    require(alpha >= 0.0 && alpha < 1.0, "alpha must lie in [0, 1)");
}

// Closed-form A_alpha spectrum of a cycle with total gain e^{i theta},
// ascending.
std::vector<double> cycle_closed_form(int n, double theta, double alpha) {
    std::vector<double> values(n);
    for (int j = 0; j < n; ++j)
        values[j] = 2.0 * alpha + 2.0 * (1.0 - alpha) * std::cos((theta + 2.0 * M_PI * j) / n);
    std::sort(values.begin(), values.end());
    return values;
}

bool in_value_set(double lambda, const std::vector<double>& values) {
    return std::any_of(values.begin(), values.end(),
                       [lambda](double v) { return std::abs(v - lambda) <= kMatchTol; });
}

// The equality-case cosine sets of the multiplicity theorem.
std::vector<double> plus_one_cosine_set(int n, double alpha) {
    std::vector<double> values;
    for (int j = 0; j < (n + 1) / 2; ++j)
        values.push_back(2.0 * alpha + 2.0 * (1.0 - alpha) * std::cos(2.0 * M_PI * j / n));
    return values;
}

std::vector<double> minus_one_cosine_set(int n, double alpha) {
    std::vector<double> values;
    for (int j = 0; j < n / 2; ++j)
        values.push_back(2.0 * alpha + 2.0 * (1.0 - alpha) * std::cos((2.0 * j + 1.0) * M_PI / n));
    return values;
}

bool is_balanced_half_bipartite(const GainGraph& g) {
    const auto parts = complete_bipartite_parts(g);
    return parts && parts->first == parts->second && is_balanced(g);
}

// Equality-case classification, precedence: complete, cycle(+1), cycle(-1),
// balanced K_{n/2,n/2}. Returns empty when nothing matches.
std::string classify_mult_equality(const GainGraph& g, double alpha, double lambda) {
    const int n = g.order();
    if (is_complete(g)) {
        const Spectrum spec_a = hermitian_eigenvalues(adjacency_matrix(g));
        for (const auto& [mu, mult] : spec_a.clusters) {
            if (mult != n - 1) continue;
            if (std::abs(lambda - (alpha * (n - 1) + (1.0 - alpha) * mu)) <= kMatchTol)
                return "complete_mu_shift";
        }
    }
    if (is_cycle_graph(g)) {
        const GainAngle total = cycle_gain(g, cycle_sequence(g));
        if (total.is_one() && in_value_set(lambda, plus_one_cosine_set(n, alpha)))
            return "cycle_cosine_plus";
        if (total.is_minus_one() && in_value_set(lambda, minus_one_cosine_set(n, alpha)))
            return "cycle_cosine_minus";
    }
    if (n % 2 == 0 && is_balanced_half_bipartite(g) &&
        std::abs(lambda - alpha * n / 2.0) <= kMatchTol)
        return "balanced_bipartite_half";
    return "";
}

} // namespace

std::string to_string(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::MultBound: return "MULT_BOUND";
        case TheoremTag::RankN2D1: return "RANK_N2_D1";
        case TheoremTag::RankND1: return "RANK_N_D1";
        case TheoremTag::RankND: return "RANK_N_D";
        case TheoremTag::RankN1D: return "RANK_N1_D";
        case TheoremTag::CycleAlpha: return "CYCLE_ALPHA";
        case TheoremTag::CycleMult2: return "CYCLE_MULT2";
        case TheoremTag::BipartiteSym: return "BIPARTITE_SYM";
        case TheoremTag::Sandwich: return "SANDWICH";
        case TheoremTag::KnShift: return "KN_SHIFT";
    }
    throw std::logic_error("to_string: bad TheoremTag");
}

std::vector<ReportRow> check_multiplicity_bound(const GainGraph& g,
                                                const std::vector<double>& alphas,
                                                const std::string& instance_id) {
    require(is_connected(g), "disconnected input");
    const int n = g.order();
    const int delta = degree_profile(g).max_degree;
    require(delta >= 2, "max degree < 2");
    const Rational bound(static_cast<std::int64_t>(delta - 2) * n + 2, delta - 1);

    std::vector<ReportRow> rows;
    for (double alpha : alphas) {
        require_alpha_range(alpha);
        const Spectrum spec = hermitian_eigenvalues(a_alpha_matrix(g, alpha));
        int max_mult = 0;
        for (const auto& [value, mult] : spec.clusters) max_mult = std::max(max_mult, mult);

        ReportRow row;
        row.instance_id = instance_id;
        row.tag = TheoremTag::MultBound;
        row.measured = max_mult;
        row.bound = bound;
        row.slack = bound.to_double() - max_mult;
        row.pass = int_leq(max_mult, bound);
        row.note = "alpha=" + std::to_string(alpha);
        if (row.pass && int_eq(max_mult, bound)) {
            // Classify every cluster that attains the bound.
            for (const auto& [value, mult] : spec.clusters) {
                if (mult != max_mult) continue;
                const std::string tag = classify_mult_equality(g, alpha, value);
                if (tag.empty()) {
                    row.pass = false;
                    row.equality_case = "UNCLASSIFIED";
                    row.note += "; equality at lambda=" + std::to_string(value) +
                                " matches no equality family";
                    break;
                }
                if (row.equality_case.empty()) row.equality_case = tag;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ReportRow check_cycle_alpha_spectrum(int n, GainAngle theta, double alpha,
                                     const std::string& instance_id) {
    require(n >= 3, "cycle needs n >= 3");
    require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
    const GainGraph g = gen_cycle(n, theta);
    const Spectrum spec = hermitian_eigenvalues(a_alpha_matrix(g, alpha));
    const std::vector<double> closed = cycle_closed_form(n, theta.radians(), alpha);

    double deviation = 0.0;
    for (int k = 0; k < n; ++k)
        deviation = std::max(deviation, std::abs(spec.eigenvalues[k] - closed[k]));

    ReportRow row;
    row.instance_id = instance_id;
    row.tag = TheoremTag::CycleAlpha;
    row.measured = deviation;
    row.bound = kMatchTolRational;
    row.slack = kMatchTol - deviation;
    row.pass = deviation <= kMatchTol;
    row.note = "alpha=" + std::to_string(alpha);
    for (const auto& [value, mult] : spec.clusters) {
        if (mult > 2) {
            row.pass = false;
            row.note += "; multiplicity " + std::to_string(mult) + " above 2 at lambda=" +
                        std::to_string(value);
        }
    }
    return row;
}

std::vector<ReportRow> check_rank_bounds(const GainGraph& g, const std::string& instance_id) {
    const HermitianMatrix a = adjacency_matrix(g);
    const int by_spectrum = rank_by_spectrum(a);
    const int by_elimination = rank_by_elimination(a);
    if (by_spectrum != by_elimination)
        throw std::logic_error("check_rank_bounds: rank oracles disagree on " + instance_id +
                               " (" + std::to_string(by_spectrum) + " vs " +
                               std::to_string(by_elimination) + ")");
    const int r = by_spectrum;
    const int n = g.order();
    const int delta = degree_profile(g).max_degree;
    const bool connected = is_connected(g);

    auto base_row = [&](TheoremTag tag) {
        ReportRow row;
        row.instance_id = instance_id;
        row.tag = tag;
        row.measured = r;
        return row;
    };
    auto skip_row = [&](TheoremTag tag, const std::string& reason) {
        ReportRow row = base_row(tag);
        row.skip_reason = reason;
        return row;
    };

    std::vector<ReportRow> rows;

    // r >= (n-2)/(delta-1), connected, delta >= 2.
    if (!connected) {
        rows.push_back(skip_row(TheoremTag::RankN2D1, "requires connected input"));
    } else if (delta < 2) {
        rows.push_back(skip_row(TheoremTag::RankN2D1, "requires max degree >= 2"));
    } else {
        ReportRow row = base_row(TheoremTag::RankN2D1);
        row.bound = Rational(n - 2, delta - 1);
        row.slack = r - row.bound.to_double();
        row.pass = int_geq(r, row.bound);
        if (is_cycle_graph(g) && n % 2 == 0) {
            const GainAngle total = cycle_gain(g, cycle_sequence(g));
            if ((total.is_one() || total.is_minus_one()) && classify_cycle(g) != CycleType::A)
                row.note = "gain " + total.to_string() +
                           " satisfies the literal +-1 equality condition but the cycle is "
                           "not Type A (rank n, no equality); the (-1)^(n/2) reading applies";
        }
        if (row.pass && int_eq(r, row.bound)) {
            if (is_balanced_half_bipartite(g)) {
                row.equality_case = "balanced_bipartite_half";
            } else if (is_cycle_graph(g) && n % 2 == 0 && classify_cycle(g) == CycleType::A) {
                row.equality_case = "type_a_even_cycle";
            } else {
                row.equality_case = "UNCLASSIFIED";
                row.pass = false;
                row.note += (row.note.empty() ? "" : "; ");
                row.note += "equality matches no known family";
            }
        }
        rows.push_back(std::move(row));
    }

    // r >= n/(delta-1), connected, delta >= 3, with the two expected balanced
    // complete-bipartite exceptions.
    if (!connected) {
        rows.push_back(skip_row(TheoremTag::RankND1, "requires connected input"));
    } else if (delta < 3) {
        rows.push_back(skip_row(TheoremTag::RankND1, "requires max degree >= 3"));
    } else {
        ReportRow row = base_row(TheoremTag::RankND1);
        row.bound = Rational(n, delta - 1);
        row.slack = r - row.bound.to_double();
        const bool holds = int_geq(r, row.bound);
        const auto parts = complete_bipartite_parts(g);
        const bool exception = parts && (parts->first - parts->second <= 1) && is_balanced(g);
        if (exception) {
            row.equality_case = "expected_exception_balanced_bipartite";
            row.pass = !holds;
            row.note = holds ? "exception family unexpectedly satisfies the bound"
                             : "bound fails as expected for this balanced complete bipartite graph";
        } else {
            row.pass = holds;
            if (!holds) row.note = "bound violated outside the exception families";
        }
        rows.push_back(std::move(row));
    }

    // r >= n/delta, any graph with an edge.
    if (delta < 1) {
        rows.push_back(skip_row(TheoremTag::RankND, "graph has no edges"));
    } else {
        ReportRow row = base_row(TheoremTag::RankND);
        row.bound = Rational(n, delta);
        row.slack = r - row.bound.to_double();
        row.pass = int_geq(r, row.bound);
        rows.push_back(std::move(row));
    }

    // r >= (n+1)/delta, only under the 2*delta does-not-divide-n hypothesis.
    if (delta < 1) {
        rows.push_back(skip_row(TheoremTag::RankN1D, "graph has no edges"));
    } else if (n % (2 * delta) == 0) {
        rows.push_back(skip_row(TheoremTag::RankN1D, "hypothesis 2*Delta does not divide n fails"));
    } else {
        ReportRow row = base_row(TheoremTag::RankN1D);
        row.bound = Rational(n + 1, delta);
        row.slack = r - row.bound.to_double();
        row.pass = int_geq(r, row.bound);
        rows.push_back(std::move(row));
    }
    return rows;
}

ReportRow check_bipartite_symmetry(const GainGraph& g, const std::string& instance_id) {
    require(bipartition(g).has_value(), "not bipartite");
    const Spectrum spec = hermitian_eigenvalues(adjacency_matrix(g));
    const int n = g.order();
    double deviation = 0.0;
    for (int k = 0; k < n; ++k)
        deviation = std::max(deviation,
                             std::abs(spec.eigenvalues[k] + spec.eigenvalues[n - 1 - k]));

    ReportRow row;
    row.instance_id = instance_id;
    row.tag = TheoremTag::BipartiteSym;
    row.measured = deviation;
    row.bound = kMatchTolRational;
    row.slack = kMatchTol - deviation;
    row.pass = deviation <= kMatchTol;
    return row;
}

ReportRow check_sandwich(const GainGraph& g, int num_seeds, const std::string& instance_id,
                         const std::vector<double>& alphas) {
    const ZfResult zf = zero_forcing_number(g);

    int measured = nullity_by_spectrum(adjacency_matrix(g));
    for (double alpha : alphas) {
        require_alpha_range(alpha);
        // eta(A_alpha - lambda I) at a cluster representative is exactly that
        // cluster's multiplicity, and A_alpha - lambda I is of type Phi.
        const Spectrum spec = hermitian_eigenvalues(a_alpha_matrix(g, alpha));
        for (const auto& [value, mult] : spec.clusters) measured = std::max(measured, mult);
    }
    for (int s = 1; s <= num_seeds; ++s)
        measured = std::max(measured,
                            nullity_by_spectrum(sample_type_phi(g, static_cast<std::uint64_t>(s))
                                                    .matrix));

    ReportRow row;
    row.instance_id = instance_id;
    row.tag = TheoremTag::Sandwich;
    row.measured = measured;
    row.bound = Rational(zf.number);
    row.slack = zf.number - measured;
    row.pass = measured <= zf.number;
    row.note = "seeds=" + std::to_string(num_seeds);
    return row;
}

ReportRow check_kn_shift(const GainGraph& g, double alpha, const std::string& instance_id) {
    require(is_complete(g), "underlying graph is not complete");
    const int n = g.order();
    require(n >= 2, "requires n >= 2");
    require_alpha_range(alpha);

    const Spectrum spec_a = hermitian_eigenvalues(adjacency_matrix(g));
    const Spectrum spec_alpha = hermitian_eigenvalues(a_alpha_matrix(g, alpha));

    bool consistent = true;
    bool hypothesis_met = false;
    for (const auto& [mu, mult] : spec_a.clusters) {
        if (mult != n - 1) continue;
        hypothesis_met = true;
        consistent = consistent &&
                     cluster_multiplicity(spec_alpha, alpha * (n - 1) + (1.0 - alpha) * mu) ==
                         n - 1;
    }
    for (const auto& [lambda, mult] : spec_alpha.clusters) {
        if (mult != n - 1) continue;
        hypothesis_met = true;
        const double mu = (lambda - alpha * (n - 1)) / (1.0 - alpha);
        consistent = consistent && cluster_multiplicity(spec_a, mu) == n - 1;
    }

    ReportRow row;
    row.instance_id = instance_id;
    row.tag = TheoremTag::KnShift;
    row.measured = hypothesis_met ? n - 1 : 0;
    row.bound = Rational(n - 1);
    row.slack = 0.0;
    row.pass = consistent;
    row.note = "alpha=" + std::to_string(alpha);
    if (!hypothesis_met)
        row.note += "; hypothesis not met (no eigenvalue of multiplicity n-1), vacuous pass";
    return row;
}

ReportRow check_kn_shift(int n, std::optional<std::uint64_t> seed, double alpha,
                         const std::string& instance_id) {
    const GainGraph g = seed ? gen_complete(n, *seed) : gen_complete(n);
    return check_kn_shift(g, alpha, instance_id);
}

namespace {

std::string pad2(int v) { return v < 10 ? "0" + std::to_string(v) : std::to_string(v); }

} // namespace

std::vector<Instance> builtin_paper_families() {
    std::vector<Instance> out;
    const std::pair<const char*, GainAngle> cycle_gains[] = {
        {"gain_0_1", GainAngle(0, 1)}, // +1
        {"gain_1_1", GainAngle(1, 1)}, // -1
        {"gain_1_2", GainAngle(1, 2)}, // i
        {"gain_1_3", GainAngle(1, 3)}, // exp(i pi/3)
    };
    for (int n = 3; n <= 12; ++n)
        for (const auto& [name, gain] : cycle_gains)
            out.push_back({"cycle_n" + pad2(n) + "_" + name, gen_cycle(n, gain)});

    for (int n = 2; n <= 8; ++n) {
        out.push_back({"complete_n" + pad2(n) + "_allones", gen_complete(n)});
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            out.push_back({"complete_n" + pad2(n) + "_seed" + std::to_string(seed),
                           gen_complete(n, seed)});
    }

    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) {
            const std::string stem = "bipartite_a" + std::to_string(a) + "_b" + std::to_string(b);
            out.push_back({stem + "_balanced", gen_complete_bipartite(a, b)});
            out.push_back({stem + "_flip", gen_complete_bipartite_flipped(a, b)});
        }

    for (int i = 0; i < 20; ++i) {
        const std::uint64_t seed = 0xFACE0000ULL + static_cast<std::uint64_t>(i);
        SplitMix64 rng(seed);
        const int n = 4 + static_cast<int>(rng.next_below(7));       // 4..10
        const int cap = 2 + static_cast<int>(rng.next_below(3));     // 2..4
        out.push_back({"random_i" + pad2(i) + "_n" + pad2(n) + "_d" + std::to_string(cap),
                       gen_random_connected(n, cap, seed)});
    }
    return out;
}

std::vector<Instance> load_corpus(const std::string& spec) {
    if (spec == "builtin:paper-families") return builtin_paper_families();
    if (spec.rfind("builtin:", 0) == 0)
        throw std::invalid_argument("load_corpus: unknown builtin corpus '" + spec + "'");
    namespace fs = std::filesystem;
    const fs::path path(spec);
    auto load_file = [](const fs::path& p) {
        std::ifstream in(p);
        if (!in) throw std::invalid_argument("load_corpus: cannot open '" + p.string() + "'");
        return Instance{p.stem().string(), parse_gain_graph(in)};
    };
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() == ".ggr")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        std::vector<Instance> out;
        out.reserve(files.size());
        for (const auto& f : files) out.push_back(load_file(f));
        return out;
    }
    if (fs::is_regular_file(path)) return {load_file(path)};
    throw std::invalid_argument("load_corpus: no such corpus '" + spec + "'");
}

namespace {

std::vector<ReportRow> instance_rows(const Instance& inst, const SuiteOptions& options) {
    std::vector<ReportRow> rows;
    const GainGraph& g = inst.graph;

    try {
        auto mult_rows = check_multiplicity_bound(g, options.alphas, inst.id);
        rows.insert(rows.end(), mult_rows.begin(), mult_rows.end());
    } catch (const std::invalid_argument& e) {
        ReportRow skip;
        skip.instance_id = inst.id;
        skip.tag = TheoremTag::MultBound;
        skip.skip_reason = e.what();
        rows.push_back(std::move(skip));
    }

    if (is_cycle_graph(g)) {
        const int n = g.order();
        const GainAngle theta = cycle_gain(g, cycle_sequence(g));
        for (double alpha : options.cycle_alphas)
            rows.push_back(check_cycle_alpha_spectrum(n, theta, alpha, inst.id));
        for (double alpha : options.alphas) {
            const Spectrum spec = hermitian_eigenvalues(a_alpha_matrix(g, alpha));
            int max_mult = 0;
            for (const auto& [value, mult] : spec.clusters) max_mult = std::max(max_mult, mult);
            ReportRow row;
            row.instance_id = inst.id;
            row.tag = TheoremTag::CycleMult2;
            row.measured = max_mult;
            row.bound = Rational(2);
            row.slack = 2.0 - max_mult;
            row.pass = max_mult <= 2;
            row.note = "alpha=" + std::to_string(alpha);
            rows.push_back(std::move(row));
        }
    }

    auto rank_rows = check_rank_bounds(g, inst.id);
    rows.insert(rows.end(), rank_rows.begin(), rank_rows.end());

    if (bipartition(g)) rows.push_back(check_bipartite_symmetry(g, inst.id));

    try {
        rows.push_back(check_sandwich(g, options.sandwich_seeds, inst.id, options.alphas));
    } catch (const BudgetExceeded& e) {
        ReportRow skip;
        skip.instance_id = inst.id;
        skip.tag = TheoremTag::Sandwich;
        skip.skip_reason = e.what();
        rows.push_back(std::move(skip));
    }

    if (is_complete(g) && g.order() >= 2)
        for (double alpha : options.alphas)
            rows.push_back(check_kn_shift(g, alpha, inst.id));

    return rows;
}

} // namespace

SuiteResult run_suite(const std::vector<Instance>& instances, const SuiteOptions& options) {
    std::vector<std::vector<ReportRow>> per_instance(instances.size());
    const int jobs = std::max(1, options.jobs);

    if (jobs == 1 || instances.size() <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            per_instance[i] = instance_rows(instances[i], options);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= instances.size()) return;
                try {
                    per_instance[i] = instance_rows(instances[i], options);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    SuiteResult result;
    for (auto& rows : per_instance)
        for (auto& row : rows) result.rows.push_back(std::move(row));
    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                         if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
                         return to_string(a.tag) < to_string(b.tag);
                     });
    for (const auto& row : result.rows) {
        if (row.skipped())
            ++result.summary.skipped;
        else if (row.pass)
            ++result.summary.passed;
        else
            ++result.summary.failed;
    }
    return result;
}

std::string report_row_json(const ReportRow& row) {
    nlohmann::ordered_json j;
    j["instance"] = row.instance_id;
    j["theorem"] = to_string(row.tag);
    if (row.skipped()) {
        j["skip"] = row.skip_reason;
        return j.dump();
    }
    j["measured"] = row.measured;
    j["bound"] = row.bound.to_string();
    j["slack"] = row.slack;
    if (!row.equality_case.empty()) j["equality_case"] = row.equality_case;
    j["pass"] = row.pass;
    if (!row.note.empty()) j["note"] = row.note;
    return j.dump();
}

void write_jsonl(std::ostream& out, const std::vector<ReportRow>& rows) {
    for (const auto& row : rows) out << report_row_json(row) << "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "instance,theorem,measured,bound,slack,equality_case,pass,note,skip_reason\n";
    for (const auto& row : rows) {
        out << csv_quote(row.instance_id) << "," << to_string(row.tag) << ",";
        if (!row.skipped())
            out << row.measured << "," << row.bound.to_string() << "," << row.slack << ","
                << csv_quote(row.equality_case) << "," << (row.pass ? "true" : "false") << ","
                << csv_quote(row.note) << ",";
        else
            out << ",,,,,,";
        out << csv_quote(row.skip_reason) << "\n";
    }
}

} // namespace gainspec
