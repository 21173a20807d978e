#include "domavg/graph6.hpp"

#include <istream>
#include <sstream>

namespace domavg {

namespace {

constexpr std::string_view kHeaderPrefix = ">>graph6<<";
constexpr int kBias = 63;

int data_value(std::string_view line, std::size_t pos) {
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 character out of range 63..126", pos);
    return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.substr(0, kHeaderPrefix.size()) == kHeaderPrefix) pos = kHeaderPrefix.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (pos >= line.size()) throw ParseError("empty graph6 line", pos);

    // Order: one byte for n <= 62, '~' + 3 bytes for n <= 258047 (we only
    // accept up to the 64-vertex kernel limit), '~~' is out of range here.
    long long n;
    if (data_value(line, pos) < 63) {
        n = data_value(line, pos);
        pos += 1;
    } else {
        if (pos + 1 < line.size() && data_value(line, pos + 1) == 63)
            throw ParseError("graph6 order beyond supported range", pos);
        if (pos + 4 > line.size()) throw ParseError("truncated graph6 order header", pos);
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | data_value(line, pos + i);
        pos += 4;
    }
    if (n > VertexSet::max_vertices)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds the " +
                             std::to_string(VertexSet::max_vertices) + "-vertex limit",
                         pos);

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos < nbytes)
        throw ParseError("graph6 body shorter than n(n-1)/2 bits", line.size());
    if (line.size() - pos > nbytes)
        throw ParseError("trailing garbage after graph6 body", pos + nbytes);

    const auto bit_at = [&](long long b) {
        const int val = data_value(line, pos + static_cast<std::size_t>(b / 6));
        return (val >> (5 - b % 6)) & 1;
    };

    // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (bit_at(bit)) {
                adj[static_cast<std::size_t>(row)].add(col);
                adj[static_cast<std::size_t>(col)].add(row);
            }
        }
    }
    for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b)
        if (bit_at(b))
            throw ParseError("nonzero padding bits in graph6 body",
                             pos + static_cast<std::size_t>(b / 6));
    return Graph::from_adjacency(std::move(adj));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kBias);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 0x3f) + kBias);
        out += static_cast<char>(((n >> 6) & 0x3f) + kBias);
        out += static_cast<char>((n & 0x3f) + kBias);
    }
    int acc = 0;
    int nacc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nacc == 6) {
                out += static_cast<char>(acc + kBias);
                acc = 0;
                nacc = 0;
            }
        }
    }
    if (nacc > 0) out += static_cast<char>((acc << (6 - nacc)) + kBias);
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edge list must start with \"n m\"", 0);
    if (n < 0 || n > VertexSet::max_vertices)
        throw ParseError("edge-list order out of supported range", 0);
    if (m < 0) throw ParseError("negative edge count", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list ends after " + std::to_string(i) + " of " +
                                 std::to_string(m) + " edges",
                             0);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw ParseError("trailing tokens after the declared edge count", 0);
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
    std::vector<Graph6Line> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(Graph6Line{number, line});
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    for (const Graph6Line& l : read_graph6_lines(in)) {
        try {
            out.push_back(parse_graph6(l.text));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(l.line_number) + ": " + e.what(), e.offset);
        }
    }
    return out;
}

} // namespace domavg
