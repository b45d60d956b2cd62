#pragma once

#include <ramsey/graph.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ramsey {

enum class FamilyKind {
    path,              // P_n, n vertices
    cycle,             // C_n, n >= 3
    complete,          // K_n
    complete_bipartite,// K_{a,b}; K_{1,m} is the star
    book,              // B_k: k triangles on a shared edge
    paw,               // K_{1,3} + e
    spider,            // T3: 5-vertex tree with exactly one vertex of degree 3
    literal,           // graph6 payload
};

/// One summand of a name such as "3K2": `multiplier` disjoint copies of a base graph.
struct FamilyTerm {
    int multiplier = 1;
    FamilyKind kind = FamilyKind::complete;
    int a = 1;
    int b = 0;            // second part for K_{a,b}
    std::string graph6;   // literal payload

    auto operator==(const FamilyTerm &) const -> bool = default;
};

/// Symbolic graph name: disjoint union of its terms.
struct FamilySpec {
    std::vector<FamilyTerm> terms;

    auto operator==(const FamilySpec &) const -> bool = default;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string &what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    auto position() const -> std::size_t { return position_; }

private:
    std::size_t position_;
};

auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto complete_bipartite_graph(int a, int b) -> Graph;
auto star_graph(int leaves) -> Graph;
auto matching_graph(int m) -> Graph;
auto book_graph(int k) -> Graph;
auto paw_graph() -> Graph;
auto spider_graph() -> Graph;

/// Throws GraphError on invalid parameters or more than 32 vertices.
auto realize(const FamilySpec &spec) -> Graph;

/// Grammar (whitespace-insensitive, letters case-sensitive):
///   NAME := TERM (("u" | "+") TERM)*
///   TERM := [m] BASE
///   BASE := "P"n | "C"n | "K"n | "K"a","b | "B"k | "paw" | "K1,3+e" | "T3" | "g6:"<graph6>
auto parse_name(std::string_view text) -> FamilySpec;

/// Canonical spelling; parse_name(render_name(s)) == s.
auto render_name(const FamilySpec &spec) -> std::string;

/// A name for g in the grammar above, with components grouped and named by
/// family where one matches (g6 literal otherwise). realize(parse_name(describe(g)))
/// is isomorphic to g. Isolated vertices appear as K1 terms.
auto describe(const Graph &g) -> std::string;

/// parse_name followed by realize.
auto graph_from_name(std::string_view text) -> Graph;

} // namespace ramsey
