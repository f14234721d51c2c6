"""Proper and distinguishing arc colourings of symmetric digraphs."""

from _distinguo import (  # noqa: F401
    ArcColouring,
    BudgetError,
    InputError,
    ParseError,
    SimpleGraph,
    bfs_order,
    central_binomial,
    chromatic_number,
    colour_automorphisms,
    colour_budget,
    colour_distinguishing_type1,
    colour_distinguishing_type2_complete,
    colour_family_distinguishing,
    colour_type1_minimum,
    colour_type2_complete,
    dot_emit,
    emit_colouring,
    emit_edge_list,
    emit_graph6,
    exact_index,
    generate_family,
    is_distinguishing,
    list_inequality_holds,
    min_k_threshold,
    monochromatic_two_cycles,
    monochromatic_two_paths,
    parse_colouring,
    parse_graph,
    search_colouring,
)
