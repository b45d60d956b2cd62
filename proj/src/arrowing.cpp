#include <ramsey/arrowing.hpp>

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <mutex>
#include <thread>

namespace ramsey {

auto verify_coloring(const EdgeColoring &c, const Graph &red_avoid, const Graph &blue_avoid) -> bool
{
    if (! c.is_total())
        throw GraphError("verify_coloring needs a total colouring");
    return ! embeds(red_avoid, c.red_graph()) && ! embeds(blue_avoid, c.blue_graph());
}

namespace {

// A forbidden graph prepared for "does a copy use this edge?" queries. One
// search plan per orbit of oriented edges under the pattern's automorphisms:
// any copy through edge (u,v) maps some orbit representative (x,y) onto
// (u,v) in that orientation.
class AnchoredPattern {
public:
    explicit AnchoredPattern(const Graph &p) : order_(p.order()), edge_count_(p.size())
    {
        std::vector<Plan> all;
        for (auto [x, y] : p.edges()) {
            all.push_back(make_plan(p, x, y));
            all.push_back(make_plan(p, y, x));
        }
        for (auto &candidate : all) {
            bool covered = std::any_of(plans_.begin(), plans_.end(), [&](const Plan &rep) {
                return search(rep, p.rows(), p.order(), candidate.steps[0].vertex, candidate.steps[1].vertex);
            });
            if (! covered)
                plans_.push_back(std::move(candidate));
        }
    }

    auto order() const -> int { return order_; }
    auto edge_count() const -> int { return edge_count_; }
    auto plan_count() const -> std::size_t { return plans_.size(); }

    /// True iff rows (a graph on n vertices) has a copy of the pattern
    /// using the edge (u,v), which must be present in rows.
    auto contains_through(std::span<const VertexSet> rows, int n, int u, int v) const -> bool
    {
        if (n < order_)
            return false;
        for (const auto &plan : plans_)
            if (search(plan, rows, n, u, v))
                return true;
        return false;
    }

private:
    struct Step {
        int vertex = 0;
        VertexSet back = 0;  // positions of earlier-placed neighbours
        int degree = 0;
        int after = -1;      // position whose image must be smaller, or -1
    };

    struct Plan {
        std::vector<Step> steps;
    };

    int order_;
    int edge_count_;
    std::vector<Plan> plans_;

    static auto make_plan(const Graph &p, int x, int y) -> Plan
    {
        Plan plan;
        std::vector<int> position(p.order(), -1);
        VertexSet placed = 0;
        auto place = [&](int v, int after) {
            Step s;
            s.vertex = v;
            s.degree = p.degree(v);
            s.after = after;
            for (VertexSet nb = p.neighbours(v) & placed; nb; nb &= nb - 1)
                s.back |= bit(position[std::countr_zero(nb)]);
            position[v] = static_cast<int>(plan.steps.size());
            placed |= bit(v);
            plan.steps.push_back(s);
        };
        auto grow = [&](VertexSet component) {
            for (VertexSet todo = component & ~placed; todo; todo = component & ~placed) {
                int best = -1, best_links = -1;
                for (VertexSet s = todo; s; s &= s - 1) {
                    int v = std::countr_zero(s);
                    int links = popcount(p.neighbours(v) & placed);
                    if (links > best_links || (links == best_links && p.degree(v) > p.degree(best))) {
                        best = v;
                        best_links = links;
                    }
                }
                place(best, -1);
            }
        };

        auto comps = components(p);
        VertexSet anchor_comp = 0;
        for (auto c : comps)
            if (c & bit(x))
                anchor_comp = c;
        place(x, -1);
        place(y, -1);
        grow(anchor_comp);

        // Remaining non-trivial components, isomorphic ones adjacent. Each
        // starts at its canonical first vertex so that swapping two
        // isomorphic components maps start to start; that licenses ordering
        // their start images.
        std::vector<std::tuple<std::string, VertexSet, int>> rest;
        for (auto c : comps) {
            if (c == anchor_comp || popcount(c) < 2)
                continue;
            Graph sub = induced_subgraph(p, c);
            auto perm = canonical_labelling(sub);
            int local_first = static_cast<int>(std::find(perm.begin(), perm.end(), 0) - perm.begin());
            int first = -1;
            for (VertexSet s = c; s; s &= s - 1)
                if (local_first-- == 0)
                    first = std::countr_zero(s);
            rest.emplace_back(to_graph6(relabel(sub, perm)), c, first);
        }
        std::stable_sort(rest.begin(), rest.end(),
            [](const auto &a, const auto &b) { return std::get<0>(a) < std::get<0>(b); });
        for (std::size_t i = 0; i < rest.size(); ++i) {
            auto &[key, comp, first] = rest[i];
            int after = -1;
            if (i > 0 && std::get<0>(rest[i - 1]) == key)
                after = position[std::get<2>(rest[i - 1])];
            place(first, after);
            grow(comp);
        }
        return plan;
    }

    static auto search(const Plan &plan, std::span<const VertexSet> rows, int n, int u, int v) -> bool
    {
        const auto &st = plan.steps;
        if (popcount(rows[u]) < st[0].degree || popcount(rows[v]) < st[1].degree)
            return false;
        std::array<int, max_vertices> image{};
        image[0] = u;
        image[1] = v;
        return extend(plan, rows, prefix_set(n), image, 2, bit(u) | bit(v));
    }

    static auto extend(const Plan &plan, std::span<const VertexSet> rows, VertexSet all,
        std::array<int, max_vertices> &image, std::size_t depth, VertexSet used) -> bool
    {
        if (depth == plan.steps.size())
            return true;
        const Step &s = plan.steps[depth];
        VertexSet cand = all & ~used;
        for (VertexSet b = s.back; b; b &= b - 1)
            cand &= rows[image[std::countr_zero(b)]];
        if (s.after >= 0)
            cand &= ~prefix_set(image[s.after] + 1);
        for (; cand; cand &= cand - 1) {
            int t = std::countr_zero(cand);
            if (popcount(rows[t]) < s.degree)
                continue;
            image[depth] = t;
            if (extend(plan, rows, all, image, depth + 1, used | bit(t)))
                return true;
        }
        return false;
    }
};

struct SharedState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> first_found{INT_MAX};
};

struct Problem {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    AnchoredPattern red;
    AnchoredPattern blue;
    bool red_live;
    bool blue_live;
    bool full_symmetry;
    SearchBudget budget;

    Problem(int order, const Graph &r, const Graph &b, const SearchOptions &opts)
        : n(order), red(r), blue(b), red_live(r.size() > 0 && r.order() <= order),
          blue_live(b.size() > 0 && b.order() <= order), full_symmetry(opts.full_symmetry_breaking),
          budget(opts.budget)
    {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
    }
};

// Depth-first colouring of the edges of K_n in lexicographic order.
class Searcher {
public:
    Searcher(const Problem &p, SharedState &shared, int task) : p_(p), shared_(shared), task_(task)
    {
        colors_.assign(p.edges.size(), Color::unset);
    }

    void apply_prefix(const std::vector<Color> &prefix)
    {
        for (std::size_t e = 0; e < prefix.size(); ++e)
            assign(static_cast<int>(e), prefix[e]);
    }

    /// First complete good colouring below edge e in DFS order.
    auto run(int e) -> bool { return dfs(e); }

    /// Partial colourings of the first `depth` edges that survive pruning, in DFS order.
    void collect(int e, int depth, std::vector<std::vector<Color>> &out)
    {
        if (e == depth || e == static_cast<int>(p_.edges.size())) {
            out.emplace_back(colors_.begin(), colors_.begin() + e);
            return;
        }
        for (Color c : {Color::red, Color::blue}) {
            if (! allowed(e, c))
                continue;
            assign(e, c);
            if (! completes_pattern(e, c))
                collect(e + 1, depth, out);
            unassign(e, c);
        }
    }

    auto witness() const -> EdgeColoring
    {
        EdgeColoring c(p_.n);
        for (std::size_t e = 0; e < colors_.size(); ++e)
            c.set_index(static_cast<int>(e), colors_[e]);
        return c;
    }

    auto aborted() const -> bool { return aborted_; }

    void flush_nodes()
    {
        shared_.nodes += local_nodes_;
        local_nodes_ = 0;
    }

private:
    const Problem &p_;
    SharedState &shared_;
    int task_;
    std::array<VertexSet, max_vertices> red_{};
    std::array<VertexSet, max_vertices> blue_{};
    std::vector<Color> colors_;
    std::uint64_t local_nodes_ = 0;
    bool aborted_ = false;

    void assign(int e, Color c)
    {
        auto [i, j] = p_.edges[e];
        auto &rows = c == Color::red ? red_ : blue_;
        rows[i] |= bit(j);
        rows[j] |= bit(i);
        colors_[e] = c;
    }

    void unassign(int e, Color c)
    {
        auto [i, j] = p_.edges[e];
        auto &rows = c == Color::red ? red_ : blue_;
        rows[i] &= ~bit(j);
        rows[j] &= ~bit(i);
        colors_[e] = Color::unset;
    }

    // Vertices j-1 and j (both beyond row i) in the same run, meaning their
    // colours to 0..i-1 agree: then edge (i,j) may not be red when (i,j-1)
    // is blue. Every colouring can be brought into this form by permuting
    // vertices inside runs, one row at a time, without disturbing earlier rows.
    auto allowed(int e, Color c) const -> bool
    {
        if (c != Color::red)
            return true;
        auto [i, j] = p_.edges[e];
        if (j <= i + 1 || colors_[e - 1] != Color::blue)
            return true;
        if (i > 0 && ! p_.full_symmetry)
            return true;
        return ((red_[j - 1] ^ red_[j]) & prefix_set(i)) != 0;
    }

    auto completes_pattern(int e, Color c) const -> bool
    {
        auto [i, j] = p_.edges[e];
        if (c == Color::red)
            return p_.red_live && p_.red.contains_through(red_, p_.n, i, j);
        return p_.blue_live && p_.blue.contains_through(blue_, p_.n, i, j);
    }

    auto check_budget() -> bool
    {
        if (shared_.out_of_budget.load(std::memory_order_relaxed) || shared_.first_found.load(std::memory_order_relaxed) < task_)
            return false;
        if ((++local_nodes_ & 0x3ff) == 0) {
            std::uint64_t total = (shared_.nodes += local_nodes_);
            local_nodes_ = 0;
            if ((p_.budget.max_nodes && total > p_.budget.max_nodes) || (p_.budget.deadline && Clock::now() > *p_.budget.deadline)) {
                shared_.out_of_budget = true;
                return false;
            }
        }
        return true;
    }

    auto dfs(int e) -> bool
    {
        if (e == static_cast<int>(p_.edges.size()))
            return true;
        if (! check_budget()) {
            aborted_ = true;
            return false;
        }
        for (Color c : {Color::red, Color::blue}) {
            if (! allowed(e, c))
                continue;
            assign(e, c);
            if (! completes_pattern(e, c) && dfs(e + 1))
                return true;
            unassign(e, c);
            if (aborted_)
                return false;
        }
        return false;
    }
};

// Split depth aimed at a few dozen tasks per worker.
auto split_depth(int edge_count, int jobs) -> int
{
    int depth = 0;
    while (depth < edge_count && (1 << depth) < 64 * jobs && depth < 20)
        ++depth;
    return depth;
}

} // namespace

auto search_good_coloring(int n, const Graph &red_avoid, const Graph &blue_avoid, const SearchOptions &opts)
    -> SearchResult
{
    if (n < 0 || n > max_vertices)
        throw GraphError("search order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    auto start = Clock::now();
    SearchResult result;
    auto finish = [&](SearchStatus status) {
        result.status = status;
        result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    };

    // An edgeless pattern appears in every colouring with enough vertices.
    if ((red_avoid.size() == 0 && red_avoid.order() <= n) || (blue_avoid.size() == 0 && blue_avoid.order() <= n))
        return finish(SearchStatus::exhausted);

    Problem problem(n, red_avoid, blue_avoid, opts);
    SharedState shared;
    int edge_count = static_cast<int>(problem.edges.size());
    int jobs = std::max(1, opts.jobs);

    if (jobs == 1) {
        Searcher s(problem, shared, 0);
        bool found = s.run(0);
        s.flush_nodes();
        result.stats.nodes = shared.nodes;
        if (found) {
            result.witness = s.witness();
            return finish(SearchStatus::found);
        }
        return finish(s.aborted() ? SearchStatus::budget_exceeded : SearchStatus::exhausted);
    }

    int depth = split_depth(edge_count, jobs);
    std::vector<std::vector<Color>> prefixes;
    {
        Searcher s(problem, shared, 0);
        s.collect(0, depth, prefixes);
    }

    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::map<int, EdgeColoring> found;
    bool any_aborted = false;
    auto worker = [&]() {
        while (true) {
            std::size_t t = next++;
            if (t >= prefixes.size() || shared.out_of_budget)
                return;
            int task = static_cast<int>(t);
            if (shared.first_found.load() < task)
                return;
            Searcher s(problem, shared, task);
            s.apply_prefix(prefixes[t]);
            bool ok = s.run(static_cast<int>(prefixes[t].size()));
            s.flush_nodes();
            std::lock_guard guard(lock);
            if (ok) {
                found.emplace(task, s.witness());
                int cur = shared.first_found.load();
                while (task < cur && ! shared.first_found.compare_exchange_weak(cur, task)) {
                }
            }
            else if (s.aborted() && shared.out_of_budget)
                any_aborted = true;
        }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
        threads.emplace_back(worker);
    for (auto &t : threads)
        t.join();

    result.stats.nodes = shared.nodes;
    if (! found.empty()) {
        // Tasks before the first hit ran to completion unless the budget
        // ran out; either way the colouring is a valid witness.
        result.witness = found.begin()->second;
        return finish(SearchStatus::found);
    }
    if (any_aborted || shared.out_of_budget)
        return finish(SearchStatus::budget_exceeded);
    return finish(SearchStatus::exhausted);
}

auto find_good_coloring(int n, const Graph &red_avoid, const Graph &blue_avoid, const SearchOptions &opts)
    -> std::optional<EdgeColoring>
{
    auto r = search_good_coloring(n, red_avoid, blue_avoid, opts);
    if (r.status == SearchStatus::budget_exceeded)
        throw BudgetExceeded("search budget exceeded at n=" + std::to_string(n) + " after "
            + std::to_string(r.stats.nodes) + " nodes");
    return r.witness;
}

auto arrows(int n, const Graph &red_avoid, const Graph &blue_avoid, const SearchOptions &opts) -> ArrowingOutcome
{
    auto r = search_good_coloring(n, red_avoid, blue_avoid, opts);
    if (r.status == SearchStatus::budget_exceeded)
        throw BudgetExceeded("search budget exceeded at n=" + std::to_string(n) + " after "
            + std::to_string(r.stats.nodes) + " nodes");
    return {r.status == SearchStatus::exhausted, std::move(r.witness), r.stats};
}

auto ramsey_number(const Graph &red_avoid, const Graph &blue_avoid, int n_max, const SearchOptions &opts)
    -> RamseyResult
{
    if (n_max < 0 || n_max > max_vertices)
        throw GraphError("n_max must lie in 0.." + std::to_string(max_vertices));

    // All-blue K_{|V(blue)|-1} and all-red K_{|V(red)|-1} are good, so the
    // value is at least the larger order (given edges on the other side).
    int lower = 1;
    if (red_avoid.size() > 0)
        lower = std::max(lower, blue_avoid.order());
    if (blue_avoid.size() > 0)
        lower = std::max(lower, red_avoid.order());

    RamseyResult result;
    result.witness = EdgeColoring(0);
    int start = std::max(1, lower - 1);
    for (int n = start; n <= n_max; ++n) {
        auto outcome = arrows(n, red_avoid, blue_avoid, opts);
        result.stats.nodes += outcome.stats.nodes;
        result.stats.seconds += outcome.stats.seconds;
        if (outcome.arrows) {
            result.value = n;
            if (n == start && n > 1)
                throw std::logic_error("K_" + std::to_string(n) + " arrows below the order lower bound");
            return result;
        }
        result.witness = std::move(*outcome.witness);
    }
    throw RamseyCapExceeded("no arrowing found up to n=" + std::to_string(n_max));
}

auto star_witness(int q) -> EdgeColoring
{
    if (q < 2)
        throw GraphError("star_witness needs q >= 2");
    int n = 2 * q;
    if (n > max_vertices)
        throw GraphError("star_witness order exceeds " + std::to_string(max_vertices));
    EdgeColoring c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            c.set(i, j, i == 0 ? Color::red : Color::blue);
    return c;
}

} // namespace ramsey
