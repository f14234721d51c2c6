#include "distinguo/colouring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace distinguo {

std::string emit_colouring(const ArcColouring& c) {
    const SimpleGraph& g = c.graph();
    std::ostringstream out;
    out << "c " << g.vertex_count() << " " << c.palette_size() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbours(u))
            out << "a " << u + 1 << " " << v + 1 << " " << c.colour(u, v) << "\n";
    return out.str();
}

ArcColouring parse_colouring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long n = -1, k = -1;
    std::map<std::pair<int, int>, int> arcs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                blank = false;
        if (blank)
            continue;
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "c" && n < 0) {
            std::string extra;
            if (!(row >> n >> k) || (row >> extra) || n < 1 || k < 1)
                throw ParseError("colouring: malformed header at line " +
                                 std::to_string(lineno));
            if (n > 100000 || k > 100000)
                throw ParseError("colouring: size above the supported 100000");
        } else if (tag == "a") {
            long u, v, col;
            std::string extra;
            if (!(row >> u >> v >> col) || (row >> extra))
                throw ParseError("colouring: malformed arc line " + std::to_string(lineno));
            if (n < 0)
                throw ParseError("colouring: missing 'c n k' header");
            if (u < 1 || u > n || v < 1 || v > n || u == v)
                throw ParseError("colouring: arc endpoints out of range at line " +
                                 std::to_string(lineno));
            if (col < 1 || col > k)
                throw ParseError("colouring: colour out of range at line " +
                                 std::to_string(lineno));
            auto key = std::make_pair(static_cast<int>(u - 1), static_cast<int>(v - 1));
            if (arcs.count(key))
                throw ParseError("colouring: duplicate arc at line " + std::to_string(lineno));
            arcs[key] = static_cast<int>(col);
        } else {
            throw ParseError("colouring: unexpected line " + std::to_string(lineno));
        }
    }
    if (n < 0)
        throw ParseError("colouring: missing 'c n k' header");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [arc, col] : arcs) {
        auto rev = std::make_pair(arc.second, arc.first);
        if (!arcs.count(rev))
            throw ParseError("colouring: arc " + std::to_string(arc.first + 1) + "->" +
                             std::to_string(arc.second + 1) + " has no opposite arc");
        if (arc.first < arc.second)
            edges.push_back(arc);
    }
    SimpleGraph g(static_cast<int>(n), std::move(edges));
    ArcColouring c(std::move(g), static_cast<int>(k));
    for (const auto& [arc, col] : arcs)
        c.set_colour(arc.first, arc.second, col);
    return c;
}

} // namespace distinguo
