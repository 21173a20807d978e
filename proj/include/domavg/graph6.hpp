#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domavg/graph.hpp"

namespace domavg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

// Decodes one graph6 line (McKay's format: length header, then the upper
// triangle packed 6 bits per character, each offset by 63). An optional
// ">>graph6<<" prefix is stripped. Throws ParseError with the byte offset
// of the first bad character.
Graph parse_graph6(std::string_view line);

std::string encode_graph6(const Graph& g);

// Reads "n m" followed by m lines "u v".
Graph parse_edge_list_text(std::string_view text);

// One graph per nonempty line; 1-based line numbers accompany parse errors.
std::vector<Graph> read_graph6_stream(std::istream& in);

struct Graph6Line {
    std::size_t line_number; // 1-based
    std::string text;
};

// Raw nonempty lines with line numbers, for callers that want per-line
// error handling (batch reports in strict/lenient mode).
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

} // namespace domavg
