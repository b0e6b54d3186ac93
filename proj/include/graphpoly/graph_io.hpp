#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graphpoly/multigraph.hpp"
#include "graphpoly/planar.hpp"

namespace graphpoly {

/// Parsed graph file: the multigraph, plus the validated embedding when the
/// file carries one.
struct GraphFile {
    Multigraph graph;
    std::optional<PlaneGraph> plane;
};

/// Line-oriented UTF-8 format, '#' starts a comment:
///
///   graph <n> <m>
///   e <tail> <head>          (m lines, edge ids 0..m-1 in order)
///   embedding                (optional section)
///   rot <v> <dart>...        (one line per vertex; +<eid> tail side,
///                             -<eid> head side, counterclockwise order)
GraphFile parse_graph_file(std::string_view text);
GraphFile load_graph_file(const std::string& path);

std::string render_graph_file(const Multigraph& g);
std::string render_graph_file(const PlaneGraph& pg);

} // namespace graphpoly
