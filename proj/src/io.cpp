#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "distinguo/graph.hpp"

namespace distinguo {

namespace {

// Strips comments and carriage returns, returns the surviving lines.
std::vector<std::string> clean_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                blank = false;
        if (!blank)
            lines.push_back(line);
    }
    return lines;
}

SimpleGraph parse_edge_list(const std::string& text) {
    auto lines = clean_lines(text);
    long declared_n = -1, declared_m = -1;
    std::size_t start = 0;
    if (!lines.empty()) {
        std::istringstream head(lines[0]);
        std::string tag;
        if (head >> tag && tag == "p") {
            if (!(head >> declared_n >> declared_m) || declared_n < 0 || declared_m < 0)
                throw ParseError("edge list: malformed header '" + lines[0] + "'");
            if (declared_n > 100000)
                throw ParseError("edge list: vertex count above the supported 100000");
            std::string extra;
            if (head >> extra)
                throw ParseError("edge list: malformed header '" + lines[0] + "'");
            start = 1;
        }
    }
    std::vector<std::pair<int, int>> edges;
    long max_label = 0;
    for (std::size_t i = start; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        long u, v;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra))
            throw ParseError("edge list: malformed line '" + lines[i] + "'");
        if (u < 1 || v < 1)
            throw ParseError("edge list: vertex labels are 1-indexed, got '" + lines[i] + "'");
        if (u > 100000 || v > 100000)
            throw ParseError("edge list: vertex label above the supported 100000");
        if (declared_n >= 0 && (u > declared_n || v > declared_n))
            throw ParseError("edge list: vertex index out of range in '" + lines[i] + "'");
        max_label = std::max({max_label, u, v});
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (declared_m >= 0 && declared_m != static_cast<long>(edges.size()))
        throw ParseError("edge list: header declares " + std::to_string(declared_m) +
                         " edges, found " + std::to_string(edges.size()));
    const int n = declared_n >= 0 ? static_cast<int>(declared_n) : static_cast<int>(max_label);
    try {
        return SimpleGraph(n, std::move(edges));
    } catch (const InputError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

SimpleGraph parse_graph6(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0)
        s = s.substr(header.size());
    if (s.empty())
        throw ParseError("graph6: empty input");
    const int n = static_cast<int>(s[0]) - 63;
    if (n < 0 || n > 62)
        throw ParseError("graph6: only single-byte sizes (n <= 62) are supported");
    const int bits = n * (n - 1) / 2;
    const int expect = (bits + 5) / 6;
    if (static_cast<int>(s.size()) - 1 != expect)
        throw ParseError("graph6: length mismatch, expected " + std::to_string(expect) +
                         " data bytes, found " + std::to_string(s.size() - 1));
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit) {
            const char byte = s[1 + bit / 6];
            if (byte < 63 || byte > 126)
                throw ParseError("graph6: byte out of range");
            if ((byte - 63) >> (5 - bit % 6) & 1)
                edges.emplace_back(row, col);
        }
    for (int pad = bit; pad < expect * 6; ++pad) {
        const char byte = s[1 + pad / 6];
        if (byte < 63 || byte > 126)
            throw ParseError("graph6: byte out of range");
        if ((byte - 63) >> (5 - pad % 6) & 1)
            throw ParseError("graph6: nonzero padding bits");
    }
    return SimpleGraph(n, std::move(edges));
}

} // namespace

SimpleGraph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
    case GraphFormat::EdgeList:
        return parse_edge_list(text);
    case GraphFormat::Graph6:
        return parse_graph6(text);
    }
    throw ParseError("parse_graph: unknown format");
}

std::string emit_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string emit_graph6(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw InputError("graph6: only n <= 62 is supported");
    std::string s(1, static_cast<char>(63 + n));
    const int bits = n * (n - 1) / 2;
    std::vector<int> packed((bits + 5) / 6, 0);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if (g.adjacent(row, col))
                packed[bit / 6] |= 1 << (5 - bit % 6);
    for (int x : packed)
        s += static_cast<char>(63 + x);
    return s;
}

} // namespace distinguo
