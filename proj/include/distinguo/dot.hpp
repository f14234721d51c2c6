#pragma once

#include <optional>
#include <string>

#include "distinguo/colouring.hpp"
#include "distinguo/graph.hpp"

namespace distinguo {

// One directed edge statement per arc, deterministic order, colours from a
// fixed 16-entry palette. With highlight set, only arcs of that colour are
// emitted.
std::string dot_emit(const SimpleGraph& g, const ArcColouring* c = nullptr,
                     std::optional<int> highlight = {});

int dot_palette_size();

} // namespace distinguo
