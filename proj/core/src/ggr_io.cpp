#include "gainspec/ggr_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gainspec {
namespace {

[[noreturn]] void fail(int line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::int64_t parse_int(const std::string& token, int line, const char* what) {
    try {
        std::size_t pos = 0;
        const std::int64_t value = std::stoll(token, &pos);
        if (pos != token.size()) fail(line, std::string("malformed ") + what + " '" + token + "'");
        return value;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, std::string("malformed ") + what + " '" + token + "'");
    }
}

GainAngle parse_angle(const std::string& token, int line) {
    const auto slash = token.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == token.size())
        fail(line, "malformed gain '" + token + "' (expected <num>/<den>)");
    const std::int64_t num = parse_int(token.substr(0, slash), line, "gain numerator");
    const std::int64_t den = parse_int(token.substr(slash + 1), line, "gain denominator");
    if (den <= 0) fail(line, "gain denominator must be positive in '" + token + "'");
    return GainAngle(num, den);
}

} // namespace

GainGraph parse_gain_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<GainEdge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "n") {
            if (n >= 0) fail(line_no, "duplicate vertex-count line");
            std::string tok;
            if (!(ls >> tok)) fail(line_no, "missing vertex count");
            const std::int64_t value = parse_int(tok, line_no, "vertex count");
            if (value < 1) fail(line_no, "vertex count must be >= 1");
            n = static_cast<int>(value);
        } else if (head == "e") {
            if (n < 0) fail(line_no, "edge before vertex-count line");
            std::string ut, vt, gt;
            if (!(ls >> ut >> vt >> gt)) fail(line_no, "malformed edge line");
            const std::int64_t u = parse_int(ut, line_no, "vertex index");
            const std::int64_t v = parse_int(vt, line_no, "vertex index");
            if (u < 0 || v < 0 || u >= n || v >= n)
                fail(line_no, "vertex index out of range on edge (" + ut + "," + vt + ")");
            if (u == v) fail(line_no, "loop at vertex " + ut);
            edges.push_back({static_cast<int>(u), static_cast<int>(v), parse_angle(gt, line_no)});
        } else {
            fail(line_no, "unknown directive '" + head + "'");
        }
        std::string extra;
        if (ls >> extra) fail(line_no, "trailing token '" + extra + "'");
    }
    if (n < 0) throw ParseError("missing vertex-count line");
    try {
        return GainGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

GainGraph parse_gain_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_gain_graph(in);
}

void serialize_gain_graph(const GainGraph& g, std::ostream& out) {
    out << "n " << g.order() << "\n";
    for (const auto& e : g.edges())
        out << "e " << e.u << " " << e.v << " " << e.gain.to_string() << "\n";
}

std::string serialize_gain_graph(const GainGraph& g) {
    std::ostringstream out;
    serialize_gain_graph(g, out);
    return out.str();
}

} // namespace gainspec
