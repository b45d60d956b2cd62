#include <ramsey/bounds.hpp>

#include <ramsey/enumerate.hpp>
#include <ramsey/families.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ramsey {

namespace {

void require(bool ok, const std::string &what)
{
    if (! ok)
        throw std::invalid_argument(what);
}

auto status_name(ReportStatus s) -> std::string
{
    switch (s) {
    case ReportStatus::ok: return "ok";
    case ReportStatus::violation: return "violation";
    case ReportStatus::budget_exceeded: return "budget_exceeded";
    }
    return "ok";
}

auto parse_status(const std::string &s) -> ReportStatus
{
    if (s == "ok")
        return ReportStatus::ok;
    if (s == "violation")
        return ReportStatus::violation;
    if (s == "budget_exceeded")
        return ReportStatus::budget_exceeded;
    throw std::invalid_argument("unknown report status '" + s + "'");
}

auto is_path_star_or_triangle(const Graph &g) -> bool
{
    auto dp = degree_profile(g);
    if (! dp.connected)
        return false;
    int n = g.order(), q = g.size();
    bool path = q == n - 1 && dp.max_degree <= 2;
    bool star = q == n - 1 && dp.max_degree == q;
    bool triangle = n == 3 && q == 3;
    return path || star || triangle;
}

auto min_q(Theorem t) -> int { return t == Theorem::t3 ? 1 : 2; }

} // namespace

auto bound_t1(int q) -> int
{
    require(q >= 2, "bound_t1 needs q >= 2");
    return 2 * q + 1;
}

auto bound_t2(int p, int q) -> int
{
    require(p >= 3 && q >= 2, "bound_t2 needs p >= 3 and q >= 2");
    return 2 * p + q - 2;
}

auto bound_l32(int k, int q) -> int
{
    require(k >= 2 && q >= 2, "bound_l32 needs k >= 2 and q >= 2");
    return k * q + 1;
}

auto bound_t3(int k, int q) -> int
{
    require(k >= 3 && q >= 1, "bound_t3 needs k >= 3 and q >= 1");
    return k * q + 2;
}

auto theorem_name(Theorem t) -> std::string_view
{
    switch (t) {
    case Theorem::t1: return "t1";
    case Theorem::t2: return "t2";
    case Theorem::l31: return "l31";
    case Theorem::l32: return "l32";
    case Theorem::t3: return "t3";
    }
    return "t1";
}

auto parse_theorem(std::string_view s) -> Theorem
{
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto t : {Theorem::t1, Theorem::t2, Theorem::l31, Theorem::l32, Theorem::t3})
        if (theorem_name(t) == lower)
            return t;
    throw std::invalid_argument("unknown theorem '" + std::string(s) + "' (expected t1, t2, l31, l32 or t3)");
}

auto default_k(Theorem t) -> int
{
    return (t == Theorem::t1 || t == Theorem::t2 || t == Theorem::l31) ? 2 : 3;
}

auto to_json(const BoundReport &r) -> nlohmann::json
{
    nlohmann::json j;
    j["graph"] = r.graph;
    j["name"] = r.name;
    j["p"] = r.p;
    j["q"] = r.q;
    j["k"] = r.k;
    j["exact"] = r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr);
    j["bound"] = r.bound;
    j["slack"] = r.slack ? nlohmann::json(*r.slack) : nlohmann::json(nullptr);
    j["equality"] = r.equality;
    j["runtime"] = r.runtime;
    j["status"] = status_name(r.status);
    j["witness_verified"] = r.witness_verified;
    return j;
}

auto report_from_json(const nlohmann::json &j) -> BoundReport
{
    BoundReport r;
    r.graph = j.at("graph").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.p = j.at("p").get<int>();
    r.q = j.at("q").get<int>();
    r.k = j.at("k").get<int>();
    if (! j.at("exact").is_null())
        r.exact = j.at("exact").get<int>();
    r.bound = j.at("bound").get<int>();
    if (! j.at("slack").is_null())
        r.slack = j.at("slack").get<int>();
    r.equality = j.at("equality").get<bool>();
    r.runtime = j.at("runtime").get<double>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.witness_verified = j.value("witness_verified", false);
    return r;
}

auto ExactCache::key(const Graph &red, const Graph &blue) -> std::pair<std::string, std::string>
{
    return {to_graph6(canonical_form(red)), to_graph6(canonical_form(blue))};
}

auto ExactCache::find(const Graph &red, const Graph &blue) const -> const RamseyResult *
{
    auto it = table_.find(key(red, blue));
    return it == table_.end() ? nullptr : &it->second;
}

void ExactCache::store(const Graph &red, const Graph &blue, RamseyResult r)
{
    table_.insert_or_assign(key(red, blue), std::move(r));
}

// A cached witness stays valid for any relabelling of either graph, since
// containing a copy does not depend on labels.
auto ExactCache::get(const Graph &red, const Graph &blue, int n_max, const SearchOptions &opts) -> const RamseyResult &
{
    auto k = key(red, blue);
    auto it = table_.find(k);
    if (it != table_.end() && it->second.value <= n_max)
        return it->second;
    if (it != table_.end())
        throw RamseyCapExceeded("no arrowing found up to n=" + std::to_string(n_max));
    auto r = ramsey_number(red, blue, n_max, opts);
    return table_.insert_or_assign(std::move(k), std::move(r)).first->second;
}

auto SweepResult::violations() const -> std::vector<const BoundReport *>
{
    std::vector<const BoundReport *> out;
    for (const auto &r : reports)
        if (r.status == ReportStatus::violation || (r.slack && *r.slack < 0))
            out.push_back(&r);
    return out;
}

auto SweepResult::incomplete() const -> std::vector<const BoundReport *>
{
    std::vector<const BoundReport *> out;
    for (const auto &r : reports)
        if (r.status == ReportStatus::budget_exceeded)
            out.push_back(&r);
    return out;
}

auto SweepResult::equality_set() const -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto &r : reports)
        if (r.equality)
            out.push_back(r.name);
    return out;
}

auto SweepResult::max_slack() const -> std::optional<int>
{
    std::optional<int> best;
    for (const auto &r : reports)
        if (r.slack)
            best = std::max(best.value_or(*r.slack), *r.slack);
    return best;
}

auto SweepResult::passed() const -> bool
{
    if (! violations().empty() || ! incomplete().empty())
        return false;
    return std::all_of(reports.begin(), reports.end(), [](const BoundReport &r) { return r.witness_verified; });
}

auto SweepResult::summary_json() const -> nlohmann::json
{
    nlohmann::json s;
    s["theorem"] = std::string(theorem_name(theorem));
    s["k"] = k;
    s["q_max"] = q_max;
    s["reports"] = reports.size();
    s["violations"] = violations().size();
    s["incomplete"] = incomplete().size();
    s["equality"] = equality_set();
    auto m = max_slack();
    s["max_slack"] = m ? nlohmann::json(*m) : nlohmann::json(nullptr);
    s["passed"] = passed();
    return nlohmann::json{{"summary", s}};
}

auto sweep_domain(Theorem t, int q) -> std::vector<Graph>
{
    require(q >= 1, "sweep needs q >= 1");
    auto graphs = enumerate_graphs({.q = q, .require_isolate_free = true, .require_connected = false, .max_vertices = std::nullopt});
    if (t == Theorem::t2)
        std::erase_if(graphs, [](const Graph &g) { return g.order() < 3; });
    if (t == Theorem::l31)
        std::erase_if(graphs, [](const Graph &g) { return ! is_path_star_or_triangle(g); });
    return graphs;
}

auto theorem_bound(Theorem t, int k, const Graph &g) -> int
{
    switch (t) {
    case Theorem::t1: return bound_t1(g.size());
    case Theorem::t2: return bound_t2(g.order(), g.size());
    case Theorem::l31:
    case Theorem::l32: return bound_l32(k, g.size());
    case Theorem::t3: return bound_t3(k, g.size());
    }
    return 0;
}

auto sweep(const SweepOptions &opts) -> SweepResult
{
    Theorem t = opts.theorem;
    int k = opts.k.value_or(default_k(t));
    if (t == Theorem::t1 || t == Theorem::t2)
        require(k == 2, std::string(theorem_name(t)) + " is stated for C4 (k = 2)");
    require(k >= 2, "k must be at least 2");
    if (t == Theorem::t3)
        require(k >= 3, "t3 needs k >= 3");
    require(opts.q_max >= min_q(t), "q_max below the theorem's smallest q");
    require(opts.q_max <= 8, "q_max above 8 is outside desk scale");

    SweepResult result;
    result.theorem = t;
    result.k = k;
    result.q_max = opts.q_max;
    Graph red = complete_bipartite_graph(2, k);

    for (int q = min_q(t); q <= opts.q_max; ++q) {
        for (const auto &g : sweep_domain(t, q)) {
            std::string key = to_graph6(g);
            if (auto it = opts.resume.find(key); it != opts.resume.end()) {
                result.reports.push_back(it->second);
                if (opts.on_report)
                    opts.on_report(result.reports.back());
                continue;
            }
            BoundReport r;
            r.graph = key;
            r.name = describe(g);
            r.p = g.order();
            r.q = g.size();
            r.k = k;
            r.bound = theorem_bound(t, k, g);
            auto start = Clock::now();
            try {
                int cap = std::min(r.bound, max_vertices);
                const RamseyResult *res = nullptr;
                RamseyResult local;
                if (opts.cache)
                    res = &opts.cache->get(red, g, cap, opts.search);
                else {
                    local = ramsey_number(red, g, cap, opts.search);
                    res = &local;
                }
                r.exact = res->value;
                r.slack = r.bound - res->value;
                r.equality = *r.slack == 0;
                r.witness_verified = verify_coloring(res->witness, red, g);
            }
            catch (const RamseyCapExceeded &) {
                r.status = ReportStatus::violation;
            }
            catch (const BudgetExceeded &) {
                r.status = ReportStatus::budget_exceeded;
            }
            r.runtime = std::chrono::duration<double>(Clock::now() - start).count();
            result.reports.push_back(r);
            if (opts.on_report)
                opts.on_report(r);
        }
    }
    return result;
}

auto check_cited_inequalities(const CitedInequalityOptions &opts) -> std::vector<InequalityCheck>
{
    require(opts.path_n_max <= 12 && opts.union_q_max <= 6 && opts.tree_q_max <= 6, "cited inequality checks limited to desk scale");
    ExactCache local;
    ExactCache &cache = opts.cache ? *opts.cache : local;
    Graph c4 = cycle_graph(4);
    auto r = [&](const Graph &g) { return cache.get(c4, g, max_vertices, opts.search).value; };

    std::vector<InequalityCheck> out;
    for (int n = 4; n <= opts.path_n_max; ++n) {
        int rp = r(path_graph(n)), rc = r(cycle_graph(n));
        auto ns = std::to_string(n);
        out.push_back({"r(C4,P" + ns + ") <= r(C4,C" + ns + ")", rp <= rc, rp, rc});
        out.push_back({"r(C4,C" + ns + ") <= " + std::to_string(n + 2), rc <= n + 2, rc, n + 2});
    }

    std::vector<std::vector<Graph>> by_q(opts.union_q_max + 1);
    for (int q = 1; q < opts.union_q_max; ++q)
        by_q[q] = enumerate_graphs({.q = q, .require_isolate_free = true, .require_connected = false, .max_vertices = std::nullopt});
    for (int q1 = 1; 2 * q1 <= opts.union_q_max; ++q1) {
        for (int q2 = q1; q1 + q2 <= opts.union_q_max; ++q2) {
            for (std::size_t a = 0; a < by_q[q1].size(); ++a) {
                for (std::size_t b = (q1 == q2 ? a : 0); b < by_q[q2].size(); ++b) {
                    const Graph &g1 = by_q[q1][a], &g2 = by_q[q2][b];
                    int lhs = r(disjoint_union(g1, g2));
                    int rhs = r(g1) + r(g2) - 1;
                    out.push_back({"r(C4," + describe(disjoint_union(g1, g2)) + ") <= r(C4," + describe(g1) + ") + r(C4,"
                            + describe(g2) + ") - 1",
                        lhs <= rhs, lhs, rhs});
                }
            }
        }
    }

    for (int q = 1; q <= opts.tree_q_max; ++q) {
        int star = r(star_graph(q));
        for (const auto &t : enumerate_graphs({.q = q, .require_isolate_free = true, .require_connected = true, .max_vertices = std::nullopt})) {
            if (t.order() != q + 1)
                continue;
            int lhs = r(t);
            int rhs = std::max({4, q + 2, star});
            out.push_back({"r(C4," + describe(t) + ") <= max{4, " + std::to_string(q + 2) + ", r(C4,K1," + std::to_string(q) + ")}",
                lhs <= rhs, lhs, rhs});
        }
    }
    return out;
}

} // namespace ramsey
