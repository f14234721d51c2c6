#include "distinguo/dot.hpp"

#include <array>
#include <sstream>

namespace distinguo {

namespace {

constexpr std::array<const char*, 16> kPalette = {
    "red",     "blue", "forestgreen", "orange", "purple", "brown",   "cyan3",  "magenta",
    "gold3",   "gray40", "darkred",   "navy",   "olivedrab", "teal", "salmon", "black"};

} // namespace

int dot_palette_size() {
    return static_cast<int>(kPalette.size());
}

std::string dot_emit(const SimpleGraph& g, const ArcColouring* c, std::optional<int> highlight) {
    if (c && c->palette_size() > dot_palette_size())
        throw InputError("dot: palette supports at most " +
                         std::to_string(dot_palette_size()) + " colours");
    if (highlight && !c)
        throw InputError("dot: highlight needs a colouring");
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v + 1 << ";\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbours(u)) {
            if (!c) {
                out << "  " << u + 1 << " -> " << v + 1 << ";\n";
                continue;
            }
            const int col = c->colour(u, v);
            if (highlight && col != *highlight)
                continue;
            out << "  " << u + 1 << " -> " << v + 1 << " [color=\""
                << (col >= 1 ? kPalette[col - 1] : "gray80") << "\" label=\"" << col
                << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace distinguo
