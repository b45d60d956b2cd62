#pragma once

#include <ramsey/arrowing.hpp>
#include <ramsey/graph.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ramsey {

auto bound_t1(int q) -> int;              // 2q + 1, q >= 2
auto bound_t2(int p, int q) -> int;       // 2p + q - 2, p >= 3, q >= 2
auto bound_l32(int k, int q) -> int;      // kq + 1, k >= 2, q >= 2
auto bound_t3(int k, int q) -> int;       // kq + 2, k >= 3, q >= 1

enum class Theorem { t1, t2, l31, l32, t3 };

auto theorem_name(Theorem t) -> std::string_view;
/// Accepts "t1", "t2", "l31", "l32", "t3" (any case); throws std::invalid_argument.
auto parse_theorem(std::string_view s) -> Theorem;

/// The k used when none is given: 2 for t1, t2 and l31, 3 otherwise.
auto default_k(Theorem t) -> int;

enum class ReportStatus { ok, violation, budget_exceeded };

struct BoundReport {
    std::string graph;      // canonical graph6
    std::string name;
    int p = 0;
    int q = 0;
    int k = 2;
    std::optional<int> exact;
    int bound = 0;
    std::optional<int> slack;
    bool equality = false;
    double runtime = 0.0;
    ReportStatus status = ReportStatus::ok;
    /// The good colouring at exact-1 passed the engine-independent check.
    bool witness_verified = false;
};

auto to_json(const BoundReport &r) -> nlohmann::json;
auto report_from_json(const nlohmann::json &j) -> BoundReport;

/// Memo of exact values keyed by the canonical forms of both graphs.
class ExactCache {
public:
    auto find(const Graph &red, const Graph &blue) const -> const RamseyResult *;
    void store(const Graph &red, const Graph &blue, RamseyResult r);
    /// Exact value (computed on a miss). Throws like ramsey_number.
    auto get(const Graph &red, const Graph &blue, int n_max, const SearchOptions &opts) -> const RamseyResult &;

private:
    std::map<std::pair<std::string, std::string>, RamseyResult> table_;
    static auto key(const Graph &red, const Graph &blue) -> std::pair<std::string, std::string>;
};

struct SweepOptions {
    Theorem theorem = Theorem::t1;
    int q_max = 3;
    std::optional<int> k;
    SearchOptions search;
    /// Called as each report is produced, in canonical order.
    std::function<void(const BoundReport &)> on_report;
    /// Earlier reports keyed by graph6; matching graphs are not recomputed.
    std::map<std::string, BoundReport> resume;
    ExactCache *cache = nullptr;
};

struct SweepResult {
    Theorem theorem = Theorem::t1;
    int k = 2;
    int q_max = 0;
    std::vector<BoundReport> reports;

    auto violations() const -> std::vector<const BoundReport *>;
    auto incomplete() const -> std::vector<const BoundReport *>;
    auto equality_set() const -> std::vector<std::string>;
    auto max_slack() const -> std::optional<int>;
    /// No violations and nothing left incomplete.
    auto passed() const -> bool;
    auto summary_json() const -> nlohmann::json;
};

/// Graphs quantified over by a theorem at edge count q, in enumeration order.
auto sweep_domain(Theorem t, int q) -> std::vector<Graph>;

/// The forbidden red graph K_{2,k} (C4 when k=2) and the bound for g.
auto theorem_bound(Theorem t, int k, const Graph &g) -> int;

/// Throws std::invalid_argument for out-of-range parameters.
auto sweep(const SweepOptions &opts) -> SweepResult;

struct InequalityCheck {
    std::string description;
    bool holds = false;
    /// Left and right sides as evaluated.
    int lhs = 0;
    int rhs = 0;
};

struct CitedInequalityOptions {
    int path_n_max = 6;      // r(C4,P_n) <= r(C4,C_n) <= n+2 for 4 <= n <= path_n_max
    int union_q_max = 4;     // subadditivity over isolate-free pairs with q1+q2 <= union_q_max
    int tree_q_max = 4;      // r(C4,T) <= max{4, q+2, r(C4,K_{1,q})} for trees with q edges
    SearchOptions search;
    ExactCache *cache = nullptr;
};

auto check_cited_inequalities(const CitedInequalityOptions &opts) -> std::vector<InequalityCheck>;

} // namespace ramsey
