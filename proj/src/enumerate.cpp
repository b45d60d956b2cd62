#include <ramsey/enumerate.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ramsey {

namespace {

// Isolate-free classes with q edges, keyed by canonical graph6, grown one
// edge at a time from the (q-1)-edge classes. Deleting any edge from an
// isolate-free graph and dropping the isolated vertices this creates gives
// an isolate-free graph with one fewer edge, so the growth is complete.
auto isolate_free_classes(int q, int vertex_cap) -> std::vector<Graph>
{
    std::map<std::string, Graph> layer;
    if (vertex_cap >= 2) {
        Graph k2 = canonical_form(Graph::from_edges(2, {{0, 1}}));
        layer.emplace(to_graph6(k2), k2);
    }
    for (int edges = 2; edges <= q; ++edges) {
        std::map<std::string, Graph> next;
        auto add = [&](const Graph &base, int extra, Edge e) {
            int n = base.order() + extra;
            if (n > vertex_cap)
                return;
            auto old = base.edges();
            old.push_back(e);
            Graph c = canonical_form(Graph::from_edges(n, old));
            auto key = to_graph6(c);
            next.try_emplace(std::move(key), std::move(c));
        };
        for (const auto &[key, g] : layer) {
            int n = g.order();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (! g.adjacent(u, v))
                        add(g, 0, {u, v});
            for (int u = 0; u < n; ++u)
                add(g, 1, {u, n});
            add(g, 2, {n, n + 1});
        }
        layer = std::move(next);
    }
    std::vector<Graph> out;
    for (auto &[key, g] : layer)
        out.push_back(g);
    return out;
}

} // namespace

auto enumerate_graphs(const EnumFilter &f) -> std::vector<Graph>
{
    if (f.q < 1)
        throw GraphError("enumeration needs q >= 1");
    int cap = f.max_vertices.value_or(std::min(2 * f.q, max_vertices));
    if (cap < 0 || cap > max_vertices)
        throw GraphError("max_vertices must lie in 0.." + std::to_string(max_vertices));

    std::vector<Graph> result;
    for (const auto &core : isolate_free_classes(f.q, cap)) {
        if (f.require_isolate_free) {
            result.push_back(core);
            continue;
        }
        for (int n = core.order(); n <= cap; ++n)
            result.push_back(canonical_form(disjoint_union(core, Graph::empty(n - core.order()))));
    }
    if (f.require_connected)
        std::erase_if(result, [](const Graph &g) { return component_count(g) != 1; });

    std::vector<std::pair<std::string, Graph>> keyed;
    for (auto &g : result)
        keyed.emplace_back(to_graph6(g), g);
    std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
        if (a.second.order() != b.second.order())
            return a.second.order() < b.second.order();
        return a.first < b.first;
    });
    result.clear();
    for (auto &[k, g] : keyed)
        result.push_back(g);
    return result;
}

} // namespace ramsey
