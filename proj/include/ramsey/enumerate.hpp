#pragma once

#include <ramsey/graph.hpp>

#include <optional>
#include <vector>

namespace ramsey {

struct EnumFilter {
    int q = 1;
    bool require_isolate_free = true;
    bool require_connected = false;
    /// Defaults to 2q, the most vertices an isolate-free graph with q edges can have.
    std::optional<int> max_vertices;
};

/// One canonical representative per isomorphism class of graphs with
/// exactly f.q edges passing the filter, sorted by (order, graph6).
/// Throws GraphError on an invalid filter.
auto enumerate_graphs(const EnumFilter &f) -> std::vector<Graph>;

} // namespace ramsey
