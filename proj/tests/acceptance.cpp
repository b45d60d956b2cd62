// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fail.

#include "oracles.hpp"

#include <ramsey/arrowing.hpp>
#include <ramsey/bounds.hpp>
#include <ramsey/enumerate.hpp>
#include <ramsey/families.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace ramsey;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

auto g(const char *name) -> Graph { return graph_from_name(name); }

auto contains(const std::vector<std::string> &v, const std::string &s) -> bool
{
    return std::find(v.begin(), v.end(), s) != v.end();
}

auto exact_table() -> Outcome
{
    struct Row {
        const char *blue;
        int value;
    };
    const Row rows[] = {
        {"P3", 4}, {"K3", 7}, {"C4", 6}, {"3K2", 7}, {"K1,3", 6},
        {"K2 u P3", 6}, {"2P3", 7}, {"2K2", 5}, {"K1,4", 7}, {"K2 u C3", 7},
        {"K2 u K1,3", 7}, {"2K2 u P3", 8}, {"K1,3+e", 7}, {"T3", 6}, {"4K2", 9},
    };
    SearchOptions opts;
    opts.jobs = 4;
    int good = 0;
    double slowest = 0;
    std::ostringstream bad;
    for (const auto &row : rows) {
        auto r = ramsey_number(g("C4"), g(row.blue), max_vertices, opts);
        slowest = std::max(slowest, r.stats.seconds);
        bool ok = r.value == row.value && verify_coloring(r.witness, g("C4"), g(row.blue)) && r.stats.seconds <= 600;
        if (ok)
            ++good;
        else
            bad << " " << row.blue << "=" << r.value;
    }
    std::ostringstream d;
    d << good << "/15 exact, slowest value " << slowest << " s" << bad.str();
    return {good == 15, d.str()};
}

auto sweep_t1() -> Outcome
{
    auto res = sweep({.theorem = Theorem::t1, .q_max = 4, .k = std::nullopt, .search = {}, .on_report = {}, .resume = {}, .cache = nullptr});
    auto eq = res.equality_set();
    bool ok = res.passed() && contains(eq, "2K2") && contains(eq, "3K2") && contains(eq, "4K2") && contains(eq, "K3");
    std::ostringstream d;
    d << res.reports.size() << " graphs, " << res.violations().size() << " violations, equality {";
    for (std::size_t i = 0; i < eq.size(); ++i)
        d << (i ? ", " : "") << eq[i];
    d << "}";
    return {ok, d.str()};
}

auto sweep_t2() -> Outcome
{
    auto res = sweep({.theorem = Theorem::t2, .q_max = 4, .k = std::nullopt, .search = {}, .on_report = {}, .resume = {}, .cache = nullptr});
    auto eq = res.equality_set();
    bool ok = res.passed() && eq == std::vector<std::string>{"K3"};
    std::ostringstream d;
    d << res.reports.size() << " graphs, " << res.violations().size() << " violations, slack 0 at {";
    for (std::size_t i = 0; i < eq.size(); ++i)
        d << (i ? ", " : "") << eq[i];
    d << "}";
    return {ok, d.str()};
}

auto book_anchor() -> Outcome
{
    int a = ramsey_number(g("K2,3"), g("K2")).value;
    int b = ramsey_number(g("K2,4"), g("K2")).value;
    return {a == 5 && b == 6, "r(K2,3,K2)=" + std::to_string(a) + " r(K2,4,K2)=" + std::to_string(b)};
}

auto lemma_spot() -> Outcome
{
    bool m = arrows(7, g("K2,3"), g("2K2")).arrows;
    bool p = arrows(7, g("K2,3"), g("P3")).arrows;
    int rm = ramsey_number(g("K2,3"), g("2K2")).value;
    int rp = ramsey_number(g("K2,3"), g("P3")).value;
    std::ostringstream d;
    d << "K7 arrows (K2,3, 2K2): " << (m ? "yes" : "no") << ", (K2,3, P3): " << (p ? "yes" : "no")
      << "; exact r(K2,3,2K2)=" << rm << " r(K2,3,P3)=" << rp;
    return {m && p && rm <= 7 && rp <= 7, d.str()};
}

auto star_witnesses() -> Outcome
{
    bool ok = true;
    for (int q = 2; q <= 6; ++q) {
        auto c = star_witness(q);
        ok = ok && c.order() == 2 * q && verify_coloring(c, g("C4"), matching_graph(q))
            && is_isomorphic(c.red_graph(), star_graph(2 * q - 1));
    }
    return {ok, "q = 2..6, red graph K1,2q-1 on 2q vertices"};
}

auto property_suite() -> Outcome
{
    std::vector<Graph> fx;
    for (int q = 1; q <= 6; ++q)
        for (auto &h : enumerate_graphs({.q = q, .require_isolate_free = false, .require_connected = false, .max_vertices = 4}))
            fx.push_back(h);

    SearchOptions weak;
    weak.full_symmetry_breaking = false;
    long triples = 0, mismatches = 0, witnesses = 0, bad_witnesses = 0, order_faults = 0;
    for (const auto &f : fx)
        for (const auto &h : fx) {
            bool prev = false;
            for (int n = 1; n <= 5; ++n) {
                bool brute = oracle::good_coloring_brute(n, f, h).has_value();
                auto strong = search_good_coloring(n, f, h);
                auto basic = search_good_coloring(n, f, h, weak);
                auto dual = search_good_coloring(n, h, f);
                bool found = strong.status == SearchStatus::found;
                mismatches += found != brute;
                mismatches += (basic.status == SearchStatus::found) != brute;
                mismatches += (dual.status == SearchStatus::found) != found;
                order_faults += prev && found;
                prev = ! found;
                for (auto *r : {&strong, &basic}) {
                    if (! r->witness)
                        continue;
                    ++witnesses;
                    bad_witnesses += oracle::embeds(f, r->witness->red_graph()) || oracle::embeds(h, r->witness->blue_graph());
                }
                if (dual.witness) {
                    ++witnesses;
                    bad_witnesses += oracle::embeds(h, dual.witness->red_graph()) || oracle::embeds(f, dual.witness->blue_graph());
                }
                ++triples;
            }
        }
    std::ostringstream d;
    d << fx.size() << " fixtures, " << triples << " triples, " << mismatches << " oracle/duality mismatches, " << order_faults
      << " monotonicity faults, " << witnesses - bad_witnesses << "/" << witnesses << " witnesses valid";
    return {mismatches == 0 && order_faults == 0 && bad_witnesses == 0 && fx.size() == 14, d.str()};
}

auto cited() -> Outcome
{
    ExactCache cache;
    CitedInequalityOptions o;
    o.path_n_max = 6;
    o.union_q_max = 4;
    o.cache = &cache;
    auto checks = check_cited_inequalities(o);
    long held = std::count_if(checks.begin(), checks.end(), [](const InequalityCheck &c) { return c.holds; });
    bool paths = true;
    for (int n = 4; n <= 6; ++n) {
        std::string want = "r(C4,C" + std::to_string(n) + ") <= " + std::to_string(n + 2);
        paths = paths && std::any_of(checks.begin(), checks.end(), [&](const InequalityCheck &c) { return c.description == want && c.holds; });
    }
    std::ostringstream d;
    d << held << "/" << checks.size() << " inequalities hold";
    for (const auto &c : checks)
        if (! c.holds)
            d << "; fails: " << c.description;
    return {paths && held == static_cast<long>(checks.size()), d.str()};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char *title;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "exact-value table for r(C4, G)", 1800, exact_table},
        {2, "2q+1 bound over isolate-free G, q <= 4", 3600, sweep_t1},
        {3, "2p+q-2 bound over isolate-free G with p >= 3, q <= 4", 3600, sweep_t2},
        {4, "r(K2,k, K2) = k+2 for k = 3, 4", 60, book_anchor},
        {5, "kq+1 spot check at k=3, q=2", 1800, lemma_spot},
        {6, "star lower-bound witnesses", 1, star_witnesses},
        {7, "engine property suite", 600, property_suite},
        {8, "cited inequalities at small scale", 1800, cited},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        }
        catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = out.ok && secs <= c.limit_seconds;
        failures += ! ok;
        std::printf("%s [%d] %s: %s (%.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, out.detail.c_str(), secs,
            c.limit_seconds);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
