#include "oracles.hpp"

#include <ramsey/enumerate.hpp>
#include <ramsey/families.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ramsey;

namespace {

auto isolate_free(int q) -> std::vector<Graph>
{
    return enumerate_graphs({.q = q, .require_isolate_free = true, .require_connected = false, .max_vertices = std::nullopt});
}

auto contains_class(const std::vector<Graph> &list, const Graph &g) -> bool
{
    return std::any_of(list.begin(), list.end(), [&](const Graph &h) { return oracle::isomorphic(h, g); });
}

} // namespace

TEST_CASE("enumerate q=2 and q=3")
{
    auto two = isolate_free(2);
    REQUIRE(two.size() == 2);
    CHECK(contains_class(two, matching_graph(2)));
    CHECK(contains_class(two, path_graph(3)));

    auto three = isolate_free(3);
    REQUIRE(three.size() == 5);
    for (const char *name : {"3K2", "K2 u P3", "P4", "K1,3", "K3"})
        CHECK(contains_class(three, graph_from_name(name)));

    auto one = enumerate_graphs({.q = 1, .require_isolate_free = true, .require_connected = true, .max_vertices = std::nullopt});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == complete_graph(2));
}

TEST_CASE("enumeration matches the brute-force oracle for q <= 4")
{
    for (int q = 1; q <= 4; ++q) {
        auto fast = isolate_free(q);
        auto slow = oracle::isolate_free_graphs(q);
        CHECK(fast.size() == slow.size());
        for (const auto &g : slow)
            CHECK(contains_class(fast, g));
    }
}

TEST_CASE("known class counts")
{
    // Isolate-free graphs by edge count: 1, 2, 5, 11, 26, 68.
    std::vector<std::size_t> expected{1, 2, 5, 11, 26, 68};
    for (int q = 1; q <= 6; ++q)
        CHECK(isolate_free(q).size() == expected[q - 1]);
    // Connected graphs by edge count: 1, 1, 3, 5, 12.
    std::vector<std::size_t> connected{1, 1, 3, 5, 12};
    for (int q = 1; q <= 5; ++q)
        CHECK(enumerate_graphs({.q = q, .require_isolate_free = true, .require_connected = true, .max_vertices = std::nullopt}).size()
            == connected[q - 1]);
}

TEST_CASE("enumeration output properties")
{
    for (int q = 1; q <= 5; ++q) {
        auto list = isolate_free(q);
        std::set<std::string> keys;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto &g = list[i];
            CHECK(g.size() == q);
            CHECK(degree_profile(g).min_degree >= 1);
            CHECK(canonical_form(g) == g);
            keys.insert(to_graph6(g));
            if (i > 0) {
                const auto &prev = list[i - 1];
                bool ordered = prev.order() < g.order() || (prev.order() == g.order() && to_graph6(prev) < to_graph6(g));
                CHECK(ordered);
            }
        }
        CHECK(keys.size() == list.size());
    }
}

TEST_CASE("every base-case graph appears in its edge class")
{
    for (const char *name : {"P3", "K3", "C4", "3K2", "K1,3", "K2 u P3", "2P3", "2K2", "K1,4", "K2 u C3",
             "K2 u K1,3", "2K2 u P3", "paw", "T3", "4K2"}) {
        auto g = graph_from_name(name);
        INFO(name);
        CHECK(contains_class(isolate_free(g.size()), g));
    }
}

TEST_CASE("enumeration with isolated vertices and vertex caps")
{
    // q=1 with isolated vertices allowed, up to 4 vertices: K2, K2+K1, K2+2K1.
    auto with_iso = enumerate_graphs({.q = 1, .require_isolate_free = false, .require_connected = false, .max_vertices = 4});
    CHECK(with_iso.size() == 3);
    // q=2 on at most 3 vertices: only P3.
    auto capped = enumerate_graphs({.q = 2, .require_isolate_free = true, .require_connected = false, .max_vertices = 3});
    REQUIRE(capped.size() == 1);
    CHECK(is_isomorphic(capped[0], path_graph(3)));
    CHECK(enumerate_graphs({.q = 3, .require_isolate_free = true, .require_connected = false, .max_vertices = 2}).empty());
    CHECK_THROWS_AS(enumerate_graphs({.q = 0, .require_isolate_free = true, .require_connected = false, .max_vertices = std::nullopt}), GraphError);
    CHECK_THROWS_AS(enumerate_graphs({.q = 2, .require_isolate_free = true, .require_connected = false, .max_vertices = 40}), GraphError);
}
