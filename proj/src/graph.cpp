#include <ramsey/graph.hpp>

#include <algorithm>
#include <numeric>
#include <optional>

namespace ramsey {

namespace {

void check_order(int n)
{
    if (n < 0 || n > max_vertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
}

} // namespace

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    check_order(n);
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (u == v)
            throw GraphError("loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v))
            throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
        ++g.edge_count_;
    }
    return g;
}

auto Graph::empty(int n) -> Graph
{
    check_order(n);
    Graph g;
    g.n_ = n;
    return g;
}

auto Graph::from_rows(int n, std::span<const VertexSet> rows) -> Graph
{
    check_order(n);
    if (static_cast<int>(rows.size()) != n)
        throw GraphError("row count does not match vertex count");
    Graph g;
    g.n_ = n;
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        VertexSet r = rows[v];
        if (r & ~prefix_set(n))
            throw GraphError("neighbour outside vertex range at row " + std::to_string(v));
        if (r & bit(v))
            throw GraphError("loop at vertex " + std::to_string(v));
        g.adj_[v] = r;
        degree_sum += popcount(r);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u))
                throw GraphError("asymmetric rows");
    g.edge_count_ = degree_sum / 2;
    return g;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (VertexSet s = adj_[u] & ~prefix_set(u + 1); s; s &= s - 1)
            result.push_back({u, std::countr_zero(s)});
    return result;
}

auto components(const Graph &g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    VertexSet unseen = g.vertices();
    while (unseen) {
        VertexSet comp = bit(std::countr_zero(unseen)), frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            VertexSet fresh = g.neighbours(v) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        unseen &= ~comp;
        result.push_back(comp);
    }
    return result;
}

auto component_count(const Graph &g) -> int
{
    return static_cast<int>(components(g).size());
}

auto degree_profile(const Graph &g) -> DegreeProfile
{
    DegreeProfile p;
    if (g.order() == 0)
        return p;
    p.max_degree = 0;
    p.min_degree = max_vertices;
    for (int v = 0; v < g.order(); ++v) {
        p.max_degree = std::max(p.max_degree, g.degree(v));
        p.min_degree = std::min(p.min_degree, g.degree(v));
    }
    p.has_isolated = p.min_degree == 0;
    p.connected = component_count(g) == 1;
    return p;
}

auto induced_subgraph(const Graph &g, VertexSet keep) -> Graph
{
    keep &= g.vertices();
    std::array<int, max_vertices> index{};
    int m = 0;
    for (int v = 0; v < g.order(); ++v)
        if (keep & bit(v))
            index[v] = m++;
    std::vector<VertexSet> rows(m, 0);
    for (int v = 0; v < g.order(); ++v) {
        if (!(keep & bit(v)))
            continue;
        for (VertexSet s = g.neighbours(v) & keep; s; s &= s - 1)
            rows[index[v]] |= bit(index[std::countr_zero(s)]);
    }
    return Graph::from_rows(m, rows);
}

auto delete_vertex(const Graph &g, int v) -> Graph
{
    if (v < 0 || v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    return induced_subgraph(g, g.vertices() & ~bit(v));
}

auto remove_isolated(const Graph &g) -> Graph
{
    VertexSet keep = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbours(v))
            keep |= bit(v);
    return induced_subgraph(g, keep);
}

auto disjoint_union(const Graph &a, const Graph &b) -> Graph
{
    int n = a.order() + b.order();
    if (n > max_vertices)
        throw GraphError("disjoint union has " + std::to_string(n) + " vertices, more than " + std::to_string(max_vertices));
    std::vector<VertexSet> rows(n, 0);
    for (int v = 0; v < a.order(); ++v)
        rows[v] = a.neighbours(v);
    for (int v = 0; v < b.order(); ++v)
        rows[a.order() + v] = b.neighbours(v) << a.order();
    return Graph::from_rows(n, rows);
}

auto relabel(const Graph &g, std::span<const int> perm) -> Graph
{
    int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw GraphError("permutation size does not match graph order");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || (seen & bit(p)))
            throw GraphError("not a permutation");
        seen |= bit(p);
    }
    std::vector<VertexSet> rows(n, 0);
    for (int v = 0; v < n; ++v)
        for (VertexSet s = g.neighbours(v); s; s &= s - 1)
            rows[perm[v]] |= bit(perm[std::countr_zero(s)]);
    return Graph::from_rows(n, rows);
}

namespace {

// Canonical labelling by individualisation-refinement. The certificate of a
// vertex ordering is the column-major upper triangle of the relabelled
// adjacency matrix; the canonical ordering maximises it. Columns are stored
// with row 0 in the most significant bit so that integer comparison is
// lexicographic comparison.
class Canoniser {
public:
    explicit Canoniser(const Graph &g) : g_(g), n_(g.order()) {}

    auto run() -> std::vector<int>
    {
        std::vector<std::vector<int>> root;
        if (n_ > 0) {
            std::vector<int> all(n_);
            std::iota(all.begin(), all.end(), 0);
            root.push_back(std::move(all));
        }
        search(std::move(root));
        std::vector<int> perm(n_);
        for (int pos = 0; pos < n_; ++pos)
            perm[best_order_[pos]] = pos;
        return perm;
    }

private:
    using Partition = std::vector<std::vector<int>>;

    const Graph &g_;
    int n_;
    bool have_best_ = false;
    std::vector<VertexSet> best_cert_;
    std::vector<int> best_order_;
    static constexpr std::size_t max_automorphisms = 256;
    std::vector<std::vector<int>> automorphisms_;

    // Trying v is redundant when an automorphism fixing the prefix maps it
    // onto a vertex already tried in this cell. Twins swap by transposition.
    auto equivalent_to_tried(int v, const std::vector<int> &tried, const std::vector<int> &prefix) const -> bool
    {
        if (tried.empty())
            return false;
        for (int u : tried)
            if ((g_.neighbours(u) & ~bit(v)) == (g_.neighbours(v) & ~bit(u)))
                return true;
        std::vector<int> root(n_);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x)
                x = root[x] = root[root[x]];
            return x;
        };
        bool any = false;
        for (auto &gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int x) { return gamma[x] == x; });
            if (! fixes)
                continue;
            any = true;
            for (int x = 0; x < n_; ++x)
                root[find(x)] = find(gamma[x]);
        }
        if (! any)
            return false;
        for (int u : tried)
            if (find(u) == find(v))
                return true;
        return false;
    }

    static auto cell_mask(const std::vector<int> &cell) -> VertexSet
    {
        VertexSet m = 0;
        for (int v : cell)
            m |= bit(v);
        return m;
    }

    void refine(Partition &p) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < p.size() && ! changed; ++w) {
                VertexSet splitter = cell_mask(p[w]);
                for (std::size_t x = 0; x < p.size(); ++x) {
                    if (p[x].size() < 2)
                        continue;
                    auto count = [&](int v) { return popcount(g_.neighbours(v) & splitter); };
                    auto &cell = p[x];
                    std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
                    if (count(cell.front()) == count(cell.back()))
                        continue;
                    Partition pieces;
                    for (int v : cell) {
                        if (pieces.empty() || count(pieces.back().front()) != count(v))
                            pieces.emplace_back();
                        pieces.back().push_back(v);
                    }
                    p.erase(p.begin() + x);
                    p.insert(p.begin() + x, pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    auto column(const std::vector<int> &order, int j) const -> VertexSet
    {
        VertexSet c = 0;
        for (int i = 0; i < j; ++i)
            if (g_.adjacent(order[i], order[j]))
                c |= VertexSet{1} << (31 - i);
        return c;
    }

    void search(Partition p)
    {
        refine(p);

        std::vector<int> prefix;
        for (auto &cell : p) {
            if (cell.size() != 1)
                break;
            prefix.push_back(cell.front());
        }

        // -1: worse than best on the fixed prefix, +1 better, 0 tied.
        int verdict = have_best_ ? 0 : 1;
        for (int j = 1; j < static_cast<int>(prefix.size()) && verdict == 0; ++j) {
            VertexSet c = column(prefix, j);
            if (c != best_cert_[j])
                verdict = c < best_cert_[j] ? -1 : 1;
        }
        if (verdict < 0)
            return;

        if (static_cast<int>(prefix.size()) == n_) {
            if (verdict == 0 && automorphisms_.size() < max_automorphisms) {
                std::vector<int> gamma(n_);
                for (int i = 0; i < n_; ++i)
                    gamma[best_order_[i]] = prefix[i];
                automorphisms_.push_back(std::move(gamma));
            }
            if (verdict > 0 || ! have_best_) {
                best_cert_.assign(n_, 0);
                for (int j = 1; j < n_; ++j)
                    best_cert_[j] = column(prefix, j);
                best_order_ = prefix;
                have_best_ = true;
            }
            return;
        }

        std::size_t target = prefix.size();
        std::vector<int> tried;
        for (int v : p[target]) {
            if (equivalent_to_tried(v, tried, prefix))
                continue;
            tried.push_back(v);
            Partition child = p;
            auto &cell = child[target];
            cell.erase(std::find(cell.begin(), cell.end(), v));
            child.insert(child.begin() + target, std::vector<int>{v});
            search(std::move(child));
        }
    }
};

// Backtracking monomorphism test. Pattern vertices are visited in a
// connectivity-first order; candidates for each vertex are the target
// vertices adjacent to the images of its already-placed neighbours.
class Monomorphism {
public:
    Monomorphism(const Graph &h, const Graph &g) : h_(h), g_(g)
    {
        VertexSet placed = 0;
        VertexSet todo = 0;
        for (int v = 0; v < h.order(); ++v)
            if (h.degree(v) > 0)
                todo |= bit(v);
        while (todo) {
            int best = -1, best_links = -1, best_deg = -1;
            for (VertexSet s = todo; s; s &= s - 1) {
                int v = std::countr_zero(s);
                int links = popcount(h.neighbours(v) & placed);
                if (links > best_links || (links == best_links && h.degree(v) > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = h.degree(v);
                }
            }
            order_.push_back(best);
            placed |= bit(best);
            todo &= ~bit(best);
        }
        image_.assign(h.order(), -1);
    }

    auto run() -> bool { return extend(0, 0); }

private:
    const Graph &h_;
    const Graph &g_;
    std::vector<int> order_;
    std::vector<int> image_;

    auto extend(std::size_t depth, VertexSet used) -> bool
    {
        if (depth == order_.size())
            return true;
        int v = order_[depth];
        VertexSet cand = g_.vertices() & ~used;
        for (VertexSet s = h_.neighbours(v); s; s &= s - 1) {
            int w = image_[std::countr_zero(s)];
            if (w >= 0)
                cand &= g_.neighbours(w);
        }
        for (; cand; cand &= cand - 1) {
            int t = std::countr_zero(cand);
            if (g_.degree(t) < h_.degree(v))
                continue;
            image_[v] = t;
            if (extend(depth + 1, used | bit(t)))
                return true;
        }
        image_[v] = -1;
        return false;
    }
};

} // namespace

auto canonical_labelling(const Graph &g) -> std::vector<int>
{
    return Canoniser(g).run();
}

auto canonical_form(const Graph &g) -> Graph
{
    auto perm = canonical_labelling(g);
    return relabel(g, perm);
}

auto is_isomorphic(const Graph &a, const Graph &b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

auto embeds(const Graph &h, const Graph &g) -> bool
{
    if (h.order() > g.order() || h.size() > g.size())
        return false;
    std::vector<int> hd, gd;
    for (int v = 0; v < h.order(); ++v)
        hd.push_back(h.degree(v));
    for (int v = 0; v < g.order(); ++v)
        gd.push_back(g.degree(v));
    std::sort(hd.rbegin(), hd.rend());
    std::sort(gd.rbegin(), gd.rend());
    for (std::size_t i = 0; i < hd.size(); ++i)
        if (hd[i] > gd[i])
            return false;
    // A component of h lands inside one component of g at least as large.
    auto sizes = [](const Graph &x) {
        std::vector<int> s;
        for (VertexSet c : components(x))
            s.push_back(popcount(c));
        std::sort(s.rbegin(), s.rend());
        return s;
    };
    auto hs = sizes(h), gs = sizes(g);
    for (std::size_t i = 0, j = 0, hsum = 0, gsum = 0; i < hs.size(); ++i) {
        hsum += hs[i];
        while (j < gs.size() && gs[j] >= hs[i])
            gsum += gs[j++];
        if (hsum > gsum)
            return false;
    }
    return Monomorphism(h, g).run();
}

auto to_graph6(const Graph &g) -> std::string
{
    int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

auto from_graph6(std::string_view text) -> Graph
{
    if (text.empty())
        throw GraphError("graph6: empty string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw GraphError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) + " outside printable range");
    }
    int n = text[0] - 63;
    if (n > max_vertices)
        throw GraphError("graph6: order " + std::string(n == 63 ? ">= 63" : std::to_string(n)) + " exceeds " + std::to_string(max_vertices));
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() < expected)
        throw GraphError("graph6: truncated, expected " + std::to_string(expected) + " bytes");
    if (text.size() > expected)
        throw GraphError("graph6: trailing garbage after " + std::to_string(expected) + " bytes");

    std::vector<VertexSet> rows(n, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = text[1 + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    if (bits % 6 != 0) {
        int last = text.back() - 63;
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw GraphError("graph6: non-zero padding bits");
    }
    return Graph::from_rows(n, rows);
}

} // namespace ramsey
