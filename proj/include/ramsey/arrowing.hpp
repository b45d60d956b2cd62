#pragma once

#include <ramsey/coloring.hpp>
#include <ramsey/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace ramsey {

using Clock = std::chrono::steady_clock;

/// Limits for one search. Zero nodes means no node limit.
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    std::optional<Clock::time_point> deadline;

    static auto unlimited() -> SearchBudget { return {}; }
    static auto seconds(double s) -> SearchBudget
    {
        return {0, Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s))};
    }
};

struct SearchOptions {
    SearchBudget budget;
    /// Worker threads; the tree is split on its first edge assignments.
    int jobs = 1;
    /// Extra symmetry breaking: within each run of vertices that agree on all
    /// earlier rows, the current row is coloured red-before-blue. When false,
    /// only vertex 0's row is forced red-before-blue.
    bool full_symmetry_breaking = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RamseyCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True iff c is total, has no red copy of red_avoid and no blue copy of
/// blue_avoid. Uses the generic subgraph test only, so it is independent of
/// the search engine. Throws GraphError on a partial colouring.
auto verify_coloring(const EdgeColoring &c, const Graph &red_avoid, const Graph &blue_avoid) -> bool;

/// Tri-state search for a colouring of K_n with no red red_avoid and no blue
/// blue_avoid. The returned witness is the first in depth-first order (edges
/// lexicographic, red tried first), independent of the number of jobs.
auto search_good_coloring(int n, const Graph &red_avoid, const Graph &blue_avoid, const SearchOptions &opts = {})
    -> SearchResult;

/// As search_good_coloring; absent means none exists. Throws BudgetExceeded.
auto find_good_coloring(int n, const Graph &red_avoid, const Graph &blue_avoid, const SearchOptions &opts = {})
    -> std::optional<EdgeColoring>;

struct ArrowingOutcome {
    bool arrows = false;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
};

/// Decides K_n -> (red_avoid, blue_avoid). Throws BudgetExceeded.
auto arrows(int n, const Graph &red_avoid, const Graph &blue_avoid, const SearchOptions &opts = {}) -> ArrowingOutcome;

struct RamseyResult {
    int value = 0;
    /// Good colouring of K_{value-1}.
    EdgeColoring witness;
    SearchStats stats;
};

/// Least n with K_n -> (red_avoid, blue_avoid). Throws RamseyCapExceeded if
/// K_{n_max} does not arrow, BudgetExceeded if the budget runs out.
auto ramsey_number(const Graph &red_avoid, const Graph &blue_avoid, int n_max = max_vertices,
    const SearchOptions &opts = {}) -> RamseyResult;

/// K_{2q} with the red graph a star centred at vertex 0; a good colouring
/// for (C4, qK2). Throws GraphError for q < 2.
auto star_witness(int q) -> EdgeColoring;

} // namespace ramsey
