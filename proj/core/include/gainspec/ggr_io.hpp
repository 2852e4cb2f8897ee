#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

// Parse error with a 1-based line number, e.g. "line 3: duplicate edge (0,1)".
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// .ggr text format, UTF-8, line oriented, whitespace separated:
//   # comment
//   n <count>
//   e <u> <v> <num>/<den>
// where the gain of the oriented edge u -> v is exp(i*pi*num/den). The `n`
// line must appear once, before any `e` line. num may be negative and the
// fraction need not be reduced; it is normalized on input.
GainGraph parse_gain_graph(std::istream& in);
GainGraph parse_gain_graph(const std::string& text);

// Emits normalized angles, edges sorted by (u, v). parse(serialize(g)) == g.
void serialize_gain_graph(const GainGraph& g, std::ostream& out);
std::string serialize_gain_graph(const GainGraph& g);

} // namespace gainspec
