#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gainspec/families.hpp"
#include "gainspec/gain_theory.hpp"
#include "gainspec/ggr_io.hpp"
#include "gainspec/spectral.hpp"
#include "gainspec/verify.hpp"
#include "gainspec/zero_forcing.hpp"

namespace gainspec::cli {
namespace {

GainGraph read_graph(const std::string& file, std::istream& in) {
    if (file == "-") return parse_gain_graph(in);
    std::ifstream stream(file);
    if (!stream) throw std::runtime_error("cannot open '" + file + "'");
    return parse_gain_graph(stream);
}

GainAngle parse_gain_flag(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        throw std::runtime_error("gain must be <num>/<den>, got '" + text + "'");
    return GainAngle(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

void print_summary(std::ostream& out, const SuiteResult& result, std::size_t instances) {
    out << "instances: " << instances << "\n";
    out << "rows: " << result.rows.size() << "  pass: " << result.summary.passed
        << "  fail: " << result.summary.failed << "  skip: " << result.summary.skipped << "\n";
    std::map<std::string, std::array<int, 3>> by_tag;
    for (const auto& row : result.rows) {
        auto& counts = by_tag[to_string(row.tag)];
        if (row.skipped())
            ++counts[2];
        else if (row.pass)
            ++counts[0];
        else
            ++counts[1];
    }
    for (const auto& [tag, counts] : by_tag)
        out << "  " << tag << ": " << counts[0] << " pass, " << counts[1] << " fail, "
            << counts[2] << " skip\n";
    for (const auto& row : result.rows)
        if (!row.skipped() && !row.pass) out << "FAIL " << report_row_json(row) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Spectra, rank, zero forcing, and balance of complex unit gain graphs"};
    app.name("gainspec");
    app.require_subcommand(1);

    std::string file = "-";
    bool json = false;
    double alpha = 0.0;

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of A_alpha as JSON");
    spectrum->add_option("file", file, ".ggr file (default: stdin)");
    spectrum->add_option("--alpha", alpha, "alpha in [0, 1]")->check(CLI::Range(0.0, 1.0));

    auto* rank = app.add_subcommand("rank", "Rank of the gain adjacency matrix, both oracles");
    rank->add_option("file", file, ".ggr file (default: stdin)");
    rank->add_flag("--json", json, "machine-readable output");

    auto* zf = app.add_subcommand("zf", "Exact zero forcing number of the underlying graph");
    zf->add_option("file", file, ".ggr file (default: stdin)");
    zf->add_flag("--json", json, "machine-readable output");

    auto* classify = app.add_subcommand("classify", "Cycle type (cycle graphs only)");
    classify->add_option("file", file, ".ggr file (default: stdin)");
    classify->add_flag("--json", json, "machine-readable output");

    auto* balance = app.add_subcommand("balance", "Balance verdict with switching witness");
    balance->add_option("file", file, ".ggr file (default: stdin)");
    balance->add_flag("--json", json, "machine-readable output");

    std::string kind;
    std::vector<int> params;
    std::string gain_text = "0/1";
    std::optional<std::uint64_t> seed;
    bool flip_one = false;
    int max_deg = 3;
    auto* gen = app.add_subcommand("gen", "Generate a family member as .ggr");
    gen->add_option("kind", kind, "cycle | complete | bipartite | path | random")->required();
    gen->add_option("params", params, "size parameters (n, or a b)");
    gen->add_option("--gain", gain_text, "total cycle gain <num>/<den> (cycle)");
    gen->add_option("--seed", seed, "random gains with this seed");
    gen->add_flag("--flip-one", flip_one, "bipartite: flip the first edge to gain -1");
    gen->add_option("--max-deg", max_deg, "random: degree cap");

    std::string corpus = "builtin:paper-families";
    std::string out_path, csv_path;
    int jobs = 1;
    int seeds = 50;
    auto* verify = app.add_subcommand("verify", "Run the verification suite over a corpus");
    verify->add_option("--corpus", corpus, "builtin:paper-families, a .ggr file, or a directory");
    verify->add_option("--out", out_path, "write JSON-lines report here");
    verify->add_option("--csv", csv_path, "write CSV report here");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--seeds", seeds, "type-sample seeds per instance")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", json, "print JSON-lines rows to stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(spectrum)) {
            const GainGraph g = read_graph(file, in);
            out << spectrum_to_json(hermitian_eigenvalues(a_alpha_matrix(g, alpha))) << "\n";
        } else if (app.got_subcommand(rank)) {
            const GainGraph g = read_graph(file, in);
            const HermitianMatrix a = adjacency_matrix(g);
            const int rs = rank_by_spectrum(a);
            const int re = rank_by_elimination(a);
            if (json) {
                nlohmann::ordered_json j{{"spectrum", rs}, {"elimination", re}};
                out << j.dump() << "\n";
            } else {
                out << "rank " << rs << " (spectrum) / " << re << " (elimination)\n";
            }
        } else if (app.got_subcommand(zf)) {
            const GainGraph g = read_graph(file, in);
            const ZfResult result = zero_forcing_number(g);
            if (json) {
                nlohmann::ordered_json j{{"number", result.number},
                                         {"witness", result.witness},
                                         {"nodes_searched", result.nodes_searched}};
                out << j.dump() << "\n";
            } else {
                out << "Z = " << result.number << "\nwitness =";
                for (int v : result.witness) out << " " << v;
                out << "\nsets searched = " << result.nodes_searched << "\n";
            }
        } else if (app.got_subcommand(classify)) {
            const GainGraph g = read_graph(file, in);
            const CycleType type = classify_cycle(g);
            if (json) {
                const GainAngle total = cycle_gain(g, cycle_sequence(g));
                nlohmann::ordered_json j{{"type", to_string(type)},
                                         {"cycle_gain", total.to_string()}};
                out << j.dump() << "\n";
            } else {
                out << to_string(type) << "\n";
            }
        } else if (app.got_subcommand(balance)) {
            const GainGraph g = read_graph(file, in);
            const auto witness = find_balance_witness(g);
            if (json) {
                nlohmann::ordered_json j;
                j["balanced"] = witness.has_value();
                if (witness) {
                    auto zetas = nlohmann::ordered_json::array();
                    for (const auto& z : witness->zeta) zetas.push_back(z.to_string());
                    j["witness"] = zetas;
                }
                out << j.dump() << "\n";
            } else if (witness) {
                out << "balanced\n";
                for (int v = 0; v < g.order(); ++v)
                    out << "zeta(" << v << ") = " << witness->zeta[v].to_string() << "\n";
            } else {
                out << "unbalanced\n";
            }
        } else if (app.got_subcommand(gen)) {
            FamilySpec spec;
            auto need_params = [&](std::size_t count) {
                if (params.size() != count)
                    throw std::runtime_error("gen " + kind + " expects " + std::to_string(count) +
                                             " size parameter(s)");
            };
            if (kind == "cycle") {
                need_params(1);
                spec.kind = FamilySpec::Kind::Cycle;
                spec.n = params[0];
                spec.gains = FamilySpec::Gains::FixedCycleGain;
                spec.cycle_gain = parse_gain_flag(gain_text);
            } else if (kind == "complete") {
                need_params(1);
                spec.kind = FamilySpec::Kind::Complete;
                spec.n = params[0];
                if (seed) { spec.gains = FamilySpec::Gains::Random; spec.seed = *seed; }
            } else if (kind == "bipartite") {
                need_params(2);
                spec.kind = FamilySpec::Kind::CompleteBipartite;
                spec.a = params[0];
                spec.b = params[1];
                if (flip_one)
                    spec.gains = FamilySpec::Gains::OneFlipped;
                else if (seed) {
                    spec.gains = FamilySpec::Gains::Random;
                    spec.seed = *seed;
                }
            } else if (kind == "path") {
                need_params(1);
                spec.kind = FamilySpec::Kind::Path;
                spec.n = params[0];
            } else if (kind == "random") {
                need_params(1);
                spec.kind = FamilySpec::Kind::RandomConnected;
                spec.n = params[0];
                spec.max_degree = max_deg;
                spec.seed = seed.value_or(0);
            } else {
                throw std::runtime_error("unknown family kind '" + kind + "'");
            }
            serialize_gain_graph(generate(spec), out);
        } else if (app.got_subcommand(verify)) {
            const auto instances = load_corpus(corpus);
            SuiteOptions options;
            options.jobs = jobs;
            options.sandwich_seeds = seeds;
            const SuiteResult result = run_suite(instances, options);
            if (!out_path.empty()) {
                std::ofstream file_out(out_path);
                if (!file_out) throw std::runtime_error("cannot write '" + out_path + "'");
                write_jsonl(file_out, result.rows);
            }
            if (!csv_path.empty()) {
                std::ofstream file_out(csv_path);
                if (!file_out) throw std::runtime_error("cannot write '" + csv_path + "'");
                write_csv(file_out, result.rows);
            }
            if (json && out_path.empty()) write_jsonl(out, result.rows);
            print_summary(out, result, instances.size());
            return result.summary.failed == 0 ? 0 : 1;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gainspec::cli
