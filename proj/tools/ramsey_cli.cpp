// Command-line front end: exact Ramsey numbers, arrowing decisions, bound
// sweeps, graph enumeration and independent witness checking.

#include <ramsey/arrowing.hpp>
#include <ramsey/bounds.hpp>
#include <ramsey/enumerate.hpp>
#include <ramsey/families.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ramsey;

namespace {

constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

auto resolve(const std::string &name, const char *flag) -> Graph
{
    try {
        return graph_from_name(name);
    }
    catch (const std::invalid_argument &e) {
        throw UsageError(std::string(flag) + " '" + name + "': " + e.what());
    }
}

auto make_options(std::optional<double> budget_secs, int jobs) -> SearchOptions
{
    SearchOptions opts;
    opts.jobs = jobs;
    if (! budget_secs) {
        if (const char *env = std::getenv("RAMSEY_BUDGET_SECS"); env && *env) {
            char *end = nullptr;
            double v = std::strtod(env, &end);
            if (*end != '\0' || v <= 0)
                throw UsageError("RAMSEY_BUDGET_SECS must be a positive number");
            budget_secs = v;
        }
    }
    if (budget_secs) {
        if (*budget_secs <= 0)
            throw UsageError("--budget must be positive");
        opts.budget = SearchBudget::seconds(*budget_secs);
    }
    return opts;
}

auto load_resume(const std::string &path) -> std::map<std::string, BoundReport>
{
    std::map<std::string, BoundReport> out;
    std::ifstream in(path);
    if (! in)
        return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || j.contains("summary"))
            continue;
        auto r = report_from_json(j);
        if (r.status == ReportStatus::ok)
            out.emplace(r.graph, r);
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact small Ramsey numbers by exhaustive symmetry-broken search"};
    app.require_subcommand(1);

    std::string red_name, blue_name, witness_path, file_path, theorem_text, json_path, resume_path;
    int n = 0, max_n = max_vertices, jobs = 1, q_max = 0, edges = 0;
    std::optional<int> k, max_vertices_flag;
    std::optional<double> budget;
    bool connected = false, allow_isolated = false;

    auto *ramsey_cmd = app.add_subcommand("ramsey", "compute r(red, blue) and write a witness for r-1");
    ramsey_cmd->add_option("--red", red_name, "graph to avoid in red")->required();
    ramsey_cmd->add_option("--blue", blue_name, "graph to avoid in blue")->required();
    ramsey_cmd->add_option("--max-n", max_n, "largest order to try")->check(CLI::Range(1, max_vertices));
    ramsey_cmd->add_option("--budget", budget, "time budget in seconds");
    ramsey_cmd->add_option("--witness", witness_path, "witness output file")->default_val("witness.txt");
    ramsey_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto *arrows_cmd = app.add_subcommand("arrows", "decide K_n -> (red, blue)");
    arrows_cmd->add_option("--n", n, "order of the complete graph")->required()->check(CLI::Range(0, max_vertices));
    arrows_cmd->add_option("--red", red_name, "graph to avoid in red")->required();
    arrows_cmd->add_option("--blue", blue_name, "graph to avoid in blue")->required();
    arrows_cmd->add_option("--witness", witness_path, "write the good colouring here if one exists");
    arrows_cmd->add_option("--budget", budget, "time budget in seconds");
    arrows_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto *verify_cmd = app.add_subcommand("verify", "sweep a bound over all isolate-free graphs");
    verify_cmd->add_option("--theorem", theorem_text, "t1, t2, l31, l32 or t3")->required();
    verify_cmd->add_option("--q-max", q_max, "largest edge count (default 4 for t1/t2/l31, 2 otherwise)");
    verify_cmd->add_option("--k", k, "k of K_{2,k}");
    verify_cmd->add_option("--json", json_path, "JSON-lines report file");
    verify_cmd->add_option("--resume", resume_path, "reuse completed reports from this JSON-lines file");
    verify_cmd->add_option("--budget", budget, "time budget in seconds");
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto *enum_cmd = app.add_subcommand("enumerate", "list graphs with a given edge count as graph6");
    enum_cmd->add_option("--edges", edges, "edge count")->required()->check(CLI::Range(1, 16));
    enum_cmd->add_flag("--connected", connected, "connected graphs only");
    enum_cmd->add_flag("--allow-isolated", allow_isolated, "also list graphs with isolated vertices");
    enum_cmd->add_option("--max-vertices", max_vertices_flag, "vertex cap")->check(CLI::Range(1, max_vertices));

    auto *check_cmd = app.add_subcommand("witness-check", "validate a witness colouring");
    check_cmd->add_option("--file", file_path, "witness file")->required();
    check_cmd->add_option("--red", red_name, "graph absent in red")->required();
    check_cmd->add_option("--blue", blue_name, "graph absent in blue")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*ramsey_cmd) {
            Graph red = resolve(red_name, "--red"), blue = resolve(blue_name, "--blue");
            auto opts = make_options(budget, jobs);
            auto r = ramsey_number(red, blue, max_n, opts);
            write_witness_file(witness_path, r.witness);
            std::cout << r.value << "\n";
            std::cerr << "witness for n=" << r.value - 1 << " written to " << witness_path << " (" << r.stats.nodes
                      << " nodes, " << r.stats.seconds << " s)\n";
            return 0;
        }
        if (*arrows_cmd) {
            Graph red = resolve(red_name, "--red"), blue = resolve(blue_name, "--blue");
            auto opts = make_options(budget, jobs);
            auto out = arrows(n, red, blue, opts);
            if (out.arrows) {
                std::cout << "ARROWS\n";
            }
            else {
                std::cout << "GOOD COLORING EXISTS\n";
                if (! witness_path.empty())
                    write_witness_file(witness_path, *out.witness);
            }
            return 0;
        }
        if (*verify_cmd) {
            Theorem t;
            try {
                t = parse_theorem(theorem_text);
            }
            catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            SweepOptions so;
            so.theorem = t;
            so.q_max = q_max > 0 ? q_max : ((t == Theorem::t1 || t == Theorem::t2 || t == Theorem::l31) ? 4 : 2);
            so.k = k;
            so.search = make_options(budget, jobs);
            if (! resume_path.empty())
                so.resume = load_resume(resume_path);

            std::ofstream json;
            if (! json_path.empty()) {
                json.open(json_path);
                if (! json)
                    throw UsageError("cannot write " + json_path);
            }
            so.on_report = [&](const BoundReport &r) {
                if (json)
                    json << to_json(r).dump() << "\n" << std::flush;
                std::cout << r.name << "\tp=" << r.p << "\tq=" << r.q << "\tr=" << (r.exact ? std::to_string(*r.exact) : "?")
                          << "\tbound=" << r.bound << "\tslack=" << (r.slack ? std::to_string(*r.slack) : "?")
                          << (r.equality ? "\tEQUALITY" : "") << (r.status == ReportStatus::ok ? "" : "\t" + std::string(r.status == ReportStatus::violation ? "VIOLATION" : "BUDGET EXCEEDED"))
                          << "\n";
            };
            SweepResult res;
            try {
                res = sweep(so);
            }
            catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            auto summary = res.summary_json();
            if (json)
                json << summary.dump() << "\n";
            std::cout << summary.dump() << "\n";
            if (! res.violations().empty()) {
                for (auto *v : res.violations())
                    std::cerr << "bound violated by " << v->name << " (" << v->graph << ")\n";
                return exit_violation;
            }
            for (const auto &r : res.reports)
                if (r.status == ReportStatus::ok && ! r.witness_verified) {
                    std::cerr << "witness for " << r.name << " failed independent verification\n";
                    return exit_violation;
                }
            if (! res.incomplete().empty())
                return exit_budget;
            return 0;
        }
        if (*enum_cmd) {
            EnumFilter f;
            f.q = edges;
            f.require_connected = connected;
            f.require_isolate_free = ! allow_isolated;
            f.max_vertices = max_vertices_flag;
            for (const auto &g : enumerate_graphs(f))
                std::cout << to_graph6(g) << "\n";
            return 0;
        }
        if (*check_cmd) {
            Graph red = resolve(red_name, "--red"), blue = resolve(blue_name, "--blue");
            EdgeColoring c;
            try {
                c = read_witness_file(file_path);
            }
            catch (const WitnessFormatError &e) {
                throw UsageError(e.what());
            }
            bool red_ok = ! embeds(red, c.red_graph());
            bool blue_ok = ! embeds(blue, c.blue_graph());
            if (red_ok && blue_ok) {
                std::cout << "VALID: K_" << c.order() << " has no red " << red_name << " and no blue " << blue_name << "\n";
                return 0;
            }
            std::cout << "INVALID:" << (red_ok ? "" : " red " + red_name + " present") << (blue_ok ? "" : " blue " + blue_name + " present") << "\n";
            return exit_violation;
        }
    }
    catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const RamseyCapExceeded &e) {
        std::cerr << "not determined: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const GraphError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}
