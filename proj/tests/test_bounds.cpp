#include <ramsey/bounds.hpp>
#include <ramsey/families.hpp>

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace ramsey;

namespace {

auto g(const char *name) -> Graph { return graph_from_name(name); }

auto names(const std::vector<BoundReport> &rs, int q) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto &r : rs)
        if (r.q == q && r.equality)
            out.push_back(r.name);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("bound formulas")
{
    CHECK(bound_t1(2) == 5);
    CHECK(bound_t1(4) == 9);
    CHECK(bound_t2(3, 3) == 7);
    CHECK(bound_t2(8, 4) == 18);
    CHECK(bound_l32(3, 4) == 13);
    CHECK(bound_t3(3, 1) == 5);
    CHECK(bound_t3(4, 2) == 10);
    for (int q = 2; q <= 8; ++q)
        CHECK(bound_l32(2, q) == bound_t1(q));

    CHECK_THROWS_AS(bound_t1(1), std::invalid_argument);
    CHECK_THROWS_AS(bound_t2(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_t2(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(bound_l32(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_t3(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_t3(3, 0), std::invalid_argument);
}

TEST_CASE("theorem names")
{
    for (auto t : {Theorem::t1, Theorem::t2, Theorem::l31, Theorem::l32, Theorem::t3})
        CHECK(parse_theorem(theorem_name(t)) == t);
    CHECK(parse_theorem("T2") == Theorem::t2);
    CHECK_THROWS_AS(parse_theorem("t4"), std::invalid_argument);
    CHECK(default_k(Theorem::t1) == 2);
    CHECK(default_k(Theorem::l31) == 2);
    CHECK(default_k(Theorem::t3) == 3);
    CHECK(theorem_bound(Theorem::t2, 2, g("K3")) == 7);
    CHECK(theorem_bound(Theorem::t3, 3, g("K2")) == 5);
}

TEST_CASE("sweep domains")
{
    CHECK(sweep_domain(Theorem::t1, 2).size() == 2);
    CHECK(sweep_domain(Theorem::t1, 3).size() == 5);
    CHECK(sweep_domain(Theorem::t2, 1).empty());
    CHECK(sweep_domain(Theorem::t3, 1).size() == 1);
    for (const auto &h : sweep_domain(Theorem::l31, 4)) {
        auto d = describe(h);
        bool ok = d == "P5" || d == "K1,4";
        CHECK_MESSAGE(ok, d);
    }
    CHECK(sweep_domain(Theorem::l31, 3).size() == 3);
}

TEST_CASE("T1 sweep up to three edges")
{
    auto res = sweep({.theorem = Theorem::t1, .q_max = 3, .k = std::nullopt, .search = {}, .on_report = {}, .resume = {}, .cache = nullptr});
    CHECK(res.reports.size() == 7);
    CHECK(res.passed());
    CHECK(res.violations().empty());
    CHECK(names(res.reports, 2) == std::vector<std::string>{"2K2"});
    CHECK(names(res.reports, 3) == std::vector<std::string>{"3K2", "K3"});
    for (const auto &r : res.reports) {
        REQUIRE(r.exact);
        CHECK(*r.slack == r.bound - *r.exact);
        CHECK(r.bound == 2 * r.q + 1);
        CHECK(r.status == ReportStatus::ok);
        CHECK(r.witness_verified);
    }
    CHECK(res.max_slack() == 2);
}

TEST_CASE("T2 sweep is tight only at the triangle")
{
    auto res = sweep({.theorem = Theorem::t2, .q_max = 3, .k = std::nullopt, .search = {}, .on_report = {}, .resume = {}, .cache = nullptr});
    CHECK(res.passed());
    CHECK(res.equality_set() == std::vector<std::string>{"K3"});
    for (const auto &r : res.reports)
        CHECK(r.p >= 3);
}

TEST_CASE("lemma sweeps")
{
    auto l31 = sweep({.theorem = Theorem::l31, .q_max = 4, .k = 2, .search = {}, .on_report = {}, .resume = {}, .cache = nullptr});
    CHECK(l31.passed());
    CHECK(l31.reports.size() == 6);

    auto l32 = sweep({.theorem = Theorem::l32, .q_max = 2, .k = 3, .search = {}, .on_report = {}, .resume = {}, .cache = nullptr});
    CHECK(l32.passed());
    CHECK(l32.k == 3);

    auto t3 = sweep({.theorem = Theorem::t3, .q_max = 2, .k = 3, .search = {}, .on_report = {}, .resume = {}, .cache = nullptr});
    CHECK(t3.passed());
    CHECK(t3.equality_set() == std::vector<std::string>{"K2"});
}

TEST_CASE("sweep parameter checks")
{
    SweepOptions o;
    o.theorem = Theorem::t1;
    o.k = 3;
    CHECK_THROWS_AS(sweep(o), std::invalid_argument);
    o.k = std::nullopt;
    o.q_max = 1;
    CHECK_THROWS_AS(sweep(o), std::invalid_argument);
    o.q_max = 9;
    CHECK_THROWS_AS(sweep(o), std::invalid_argument);
    o.theorem = Theorem::t3;
    o.q_max = 2;
    o.k = 2;
    CHECK_THROWS_AS(sweep(o), std::invalid_argument);
}

TEST_CASE("reports stream, round-trip and resume")
{
    std::vector<BoundReport> seen;
    SweepOptions o;
    o.theorem = Theorem::t1;
    o.q_max = 3;
    o.on_report = [&](const BoundReport &r) { seen.push_back(r); };
    auto first = sweep(o);
    REQUIRE(seen.size() == first.reports.size());

    for (const auto &r : first.reports) {
        auto back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
        CHECK(back.graph == r.graph);
        CHECK(back.name == r.name);
        CHECK(back.exact == r.exact);
        CHECK(back.slack == r.slack);
        CHECK(back.equality == r.equality);
        CHECK(back.status == r.status);
        CHECK(back.witness_verified == r.witness_verified);
    }

    // A planted resume entry is reused verbatim rather than recomputed.
    auto planted = first.reports.front();
    planted.runtime = 123.0;
    o.on_report = {};
    o.resume[planted.graph] = planted;
    auto second = sweep(o);
    CHECK(second.reports.front().runtime == 123.0);
    for (std::size_t i = 0; i < first.reports.size(); ++i)
        CHECK(second.reports[i].exact == first.reports[i].exact);

    auto s = second.summary_json().at("summary");
    CHECK(s.at("reports") == 7);
    CHECK(s.at("violations") == 0);
    CHECK(s.at("passed") == true);
}

TEST_CASE("violation and incomplete reports fail the sweep")
{
    SweepResult res;
    BoundReport bad;
    bad.status = ReportStatus::violation;
    bad.bound = 5;
    res.reports.push_back(bad);
    CHECK(res.violations().size() == 1);
    CHECK_FALSE(res.passed());
    CHECK(to_json(bad).at("exact").is_null());
    CHECK(to_json(bad).at("status") == "violation");

    SweepResult pending;
    BoundReport late;
    late.status = ReportStatus::budget_exceeded;
    pending.reports.push_back(late);
    CHECK(pending.incomplete().size() == 1);
    CHECK_FALSE(pending.passed());
    CHECK(report_from_json(to_json(late)).status == ReportStatus::budget_exceeded);
}

TEST_CASE("exact cache")
{
    ExactCache cache;
    CHECK(cache.find(g("C4"), g("K3")) == nullptr);
    auto &r = cache.get(g("C4"), g("K3"), 12, {});
    CHECK(r.value == 7);
    // Keys are canonical, so any labelling of the blue graph hits.
    auto tri = Graph::from_edges(3, {{0, 2}, {2, 1}, {1, 0}});
    REQUIRE(cache.find(g("C4"), tri) != nullptr);
    CHECK(cache.find(g("C4"), tri)->value == 7);
}

TEST_CASE("cited inequalities on small cases")
{
    ExactCache cache;
    CitedInequalityOptions o;
    o.cache = &cache;
    auto checks = check_cited_inequalities(o);
    CHECK(checks.size() > 10);
    for (const auto &c : checks)
        CHECK_MESSAGE(c.holds, c.description << " : " << c.lhs << " vs " << c.rhs);
    auto it = std::find_if(checks.begin(), checks.end(), [](const InequalityCheck &c) { return c.description == "r(C4,C6) <= 8"; });
    REQUIRE(it != checks.end());
    CHECK(it->lhs == 7);
}
