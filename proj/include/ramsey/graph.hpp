#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// Bitmask over vertex indices; bit v set means vertex v is a member.
using VertexSet = std::uint32_t;

inline constexpr int max_vertices = 32;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// The set {0, ..., n-1}.
inline constexpr VertexSet prefix_set(int n) { return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Raised for malformed graph construction or decoding.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int u;
    int v;

    auto operator<=>(const Edge &) const = default;
};

/// Small simple undirected graph. Immutable once built; one neighbour
/// bitmask per vertex.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on loops, duplicates or out-of-range endpoints.
    static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
    static auto from_edges(int n, std::initializer_list<Edge> edges) -> Graph
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// n isolated vertices.
    static auto empty(int n) -> Graph;

    /// Build from raw neighbour rows. Throws GraphError unless the rows
    /// are symmetric, loop-free and confined to {0..n-1}.
    static auto from_rows(int n, std::span<const VertexSet> rows) -> Graph;

    auto order() const -> int { return n_; }
    auto size() const -> int { return edge_count_; }

    auto neighbours(int v) const -> VertexSet { return adj_[v]; }
    auto adjacent(int u, int v) const -> bool { return (adj_[u] >> v) & 1U; }
    auto degree(int v) const -> int { return popcount(adj_[v]); }
    auto vertices() const -> VertexSet { return prefix_set(n_); }

    /// All edges (u < v) in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto rows() const -> std::span<const VertexSet> { return {adj_.data(), static_cast<std::size_t>(n_)}; }

    friend auto operator==(const Graph &a, const Graph &b) -> bool
    {
        return a.n_ == b.n_ && a.rows().size() == b.rows().size()
            && std::equal(a.rows().begin(), a.rows().end(), b.rows().begin());
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::array<VertexSet, max_vertices> adj_{};
};

struct DegreeProfile {
    int max_degree = 0;
    int min_degree = 0;
    bool has_isolated = false;
    bool connected = true;

    auto operator==(const DegreeProfile &) const -> bool = default;
};

auto degree_profile(const Graph &g) -> DegreeProfile;

/// Number of connected components (isolated vertices count as components).
auto component_count(const Graph &g) -> int;

/// Vertex sets of the connected components, ordered by smallest member.
auto components(const Graph &g) -> std::vector<VertexSet>;

/// Remove v and re-index the remaining vertices preserving their order.
auto delete_vertex(const Graph &g, int v) -> Graph;

/// Keep only the vertices in `keep`, re-indexed in increasing order.
auto induced_subgraph(const Graph &g, VertexSet keep) -> Graph;

/// Drop every isolated vertex.
auto remove_isolated(const Graph &g) -> Graph;

/// Vertices of b are shifted by a.order(). Throws GraphError past 32 vertices.
auto disjoint_union(const Graph &a, const Graph &b) -> Graph;

/// perm[v] is the new label of vertex v; perm must be a permutation of 0..n-1.
auto relabel(const Graph &g, std::span<const int> perm) -> Graph;

/// Labelling-invariant representative of g's isomorphism class. Two graphs
/// are isomorphic iff their canonical forms are equal.
auto canonical_form(const Graph &g) -> Graph;

/// Like canonical_form, but returns the relabelling: perm[v] is v's
/// position in the canonical graph.
auto canonical_labelling(const Graph &g) -> std::vector<int>;

auto is_isomorphic(const Graph &a, const Graph &b) -> bool;

/// True iff h is isomorphic to a (not necessarily induced) subgraph of g.
auto embeds(const Graph &h, const Graph &g) -> bool;

auto to_graph6(const Graph &g) -> std::string;

/// Strict decoder: rejects bad header, characters outside '?'..'~', wrong
/// length, trailing bytes, non-zero padding bits and n > 32.
auto from_graph6(std::string_view text) -> Graph;

} // namespace ramsey
