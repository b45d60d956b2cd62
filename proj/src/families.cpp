#include <ramsey/families.hpp>

#include <algorithm>
#include <cctype>
#include <tuple>

namespace ramsey {

auto path_graph(int n) -> Graph
{
    if (n < 1)
        throw GraphError("P_n needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw GraphError("C_n needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph::from_edges(n, e);
}

auto complete_graph(int n) -> Graph
{
    if (n < 1)
        throw GraphError("K_n needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return Graph::from_edges(n, e);
}

auto complete_bipartite_graph(int a, int b) -> Graph
{
    if (a < 1 || b < 1)
        throw GraphError("K_{a,b} needs a, b >= 1");
    if (a + b > max_vertices)
        throw GraphError("K_{a,b} too large");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.push_back({i, a + j});
    return Graph::from_edges(a + b, e);
}

auto star_graph(int leaves) -> Graph { return complete_bipartite_graph(1, leaves); }

auto matching_graph(int m) -> Graph
{
    if (m < 1)
        throw GraphError("mK2 needs m >= 1");
    if (2 * m > max_vertices)
        throw GraphError("mK2 too large");
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        e.push_back({2 * i, 2 * i + 1});
    return Graph::from_edges(2 * m, e);
}

auto book_graph(int k) -> Graph
{
    if (k < 1)
        throw GraphError("B_k needs k >= 1");
    if (k + 2 > max_vertices)
        throw GraphError("B_k too large");
    std::vector<Edge> e{{0, 1}};
    for (int i = 0; i < k; ++i) {
        e.push_back({0, 2 + i});
        e.push_back({1, 2 + i});
    }
    return Graph::from_edges(k + 2, e);
}

auto paw_graph() -> Graph { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}); }

auto spider_graph() -> Graph { return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

namespace {

auto realize_term(const FamilyTerm &t) -> Graph
{
    switch (t.kind) {
    case FamilyKind::path: return path_graph(t.a);
    case FamilyKind::cycle: return cycle_graph(t.a);
    case FamilyKind::complete: return complete_graph(t.a);
    case FamilyKind::complete_bipartite: return complete_bipartite_graph(t.a, t.b);
    case FamilyKind::book: return book_graph(t.a);
    case FamilyKind::paw: return paw_graph();
    case FamilyKind::spider: return spider_graph();
    case FamilyKind::literal: return from_graph6(t.graph6);
    }
    throw GraphError("unknown family kind");
}

class NameParser {
public:
    explicit NameParser(std::string_view text) : text_(text) {}

    auto parse() -> FamilySpec
    {
        FamilySpec spec;
        skip_space();
        spec.terms.push_back(term());
        while (true) {
            skip_space();
            if (at_end())
                break;
            char c = text_[pos_];
            if (c != 'u' && c != '+')
                throw ParseError(std::string("expected 'u' or '+', found '") + c + "'", pos_);
            ++pos_;
            skip_space();
            spec.terms.push_back(term());
        }
        return spec;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    auto at_end() const -> bool { return pos_ >= text_.size(); }

    void skip_space()
    {
        while (! at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    auto peek_digit() const -> bool { return ! at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    auto number(int lo, const char *what) -> int
    {
        skip_space();
        std::size_t start = pos_;
        if (! peek_digit())
            throw ParseError(std::string("expected ") + what, pos_);
        long value = 0;
        while (peek_digit()) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > max_vertices)
                throw ParseError(std::string(what) + " too large", start);
            ++pos_;
        }
        if (value < lo)
            throw ParseError(std::string(what) + " must be at least " + std::to_string(lo), start);
        return static_cast<int>(value);
    }

    auto literal(std::string_view word) -> bool
    {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    auto term() -> FamilyTerm
    {
        FamilyTerm t;
        if (at_end())
            throw ParseError("expected a graph name", pos_);
        if (peek_digit()) {
            t.multiplier = number(1, "multiplier");
            skip_space();
        }
        if (at_end())
            throw ParseError("expected a graph name", pos_);
        std::size_t start = pos_;
        if (literal("paw")) {
            t.kind = FamilyKind::paw;
            return t;
        }
        if (literal("g6:")) {
            t.kind = FamilyKind::literal;
            t.graph6 = graph6_payload();
            return t;
        }
        char c = text_[pos_++];
        switch (c) {
        case 'P':
            t.kind = FamilyKind::path;
            t.a = number(1, "path order");
            break;
        case 'C':
            t.kind = FamilyKind::cycle;
            t.a = number(3, "cycle order");
            break;
        case 'B':
            t.kind = FamilyKind::book;
            t.a = number(1, "book size");
            break;
        case 'T':
            if (number(3, "tree index") != 3)
                throw ParseError("only T3 is defined", start);
            t.kind = FamilyKind::spider;
            break;
        case 'K': {
            t.a = number(1, "complete graph order");
            skip_space();
            if (! at_end() && text_[pos_] == ',') {
                ++pos_;
                t.kind = FamilyKind::complete_bipartite;
                t.b = number(1, "bipartite part size");
                if (plus_e()) {
                    if (t.a != 1 || t.b != 3)
                        throw ParseError("'+e' is only defined for K1,3", start);
                    t.kind = FamilyKind::paw;
                    t.a = 1;
                    t.b = 0;
                }
            }
            else
                t.kind = FamilyKind::complete;
            break;
        }
        default:
            throw ParseError(std::string("unknown graph family '") + c + "'", start);
        }
        return t;
    }

    // Consumes "+e" (whitespace allowed around '+'). A '+' followed by
    // anything else is left for the union operator.
    auto plus_e() -> bool
    {
        std::size_t save = pos_;
        skip_space();
        if (! at_end() && text_[pos_] == '+') {
            ++pos_;
            skip_space();
            if (! at_end() && text_[pos_] == 'e') {
                ++pos_;
                return true;
            }
        }
        pos_ = save;
        return false;
    }

    // graph6 length is implied by its header byte, so the payload is read
    // exactly and may contain characters such as 'u'.
    auto graph6_payload() -> std::string
    {
        std::size_t start = pos_;
        if (at_end())
            throw ParseError("empty graph6 literal", pos_);
        int n = text_[pos_] - 63;
        if (n < 0 || n > max_vertices)
            throw ParseError("graph6 literal order out of range", pos_);
        std::size_t len = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
        if (text_.size() - pos_ < len)
            throw ParseError("truncated graph6 literal", start);
        std::string payload(text_.substr(pos_, len));
        try {
            from_graph6(payload);
        }
        catch (const GraphError &e) {
            throw ParseError(e.what(), start);
        }
        pos_ += len;
        return payload;
    }
};

auto render_term(const FamilyTerm &t) -> std::string
{
    std::string s = t.multiplier == 1 ? "" : std::to_string(t.multiplier);
    switch (t.kind) {
    case FamilyKind::path: return s + "P" + std::to_string(t.a);
    case FamilyKind::cycle: return s + "C" + std::to_string(t.a);
    case FamilyKind::complete: return s + "K" + std::to_string(t.a);
    case FamilyKind::complete_bipartite: return s + "K" + std::to_string(t.a) + "," + std::to_string(t.b);
    case FamilyKind::book: return s + "B" + std::to_string(t.a);
    case FamilyKind::paw: return s + "paw";
    case FamilyKind::spider: return s + "T3";
    case FamilyKind::literal: return s + "g6:" + t.graph6;
    }
    return s;
}

} // namespace

auto realize(const FamilySpec &spec) -> Graph
{
    if (spec.terms.empty())
        throw GraphError("empty family spec");
    Graph result;
    for (const auto &t : spec.terms) {
        if (t.multiplier < 1)
            throw GraphError("multiplier must be at least 1");
        Graph base = realize_term(t);
        for (int i = 0; i < t.multiplier; ++i)
            result = disjoint_union(result, base);
    }
    return result;
}

auto parse_name(std::string_view text) -> FamilySpec { return NameParser(text).parse(); }

auto render_name(const FamilySpec &spec) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        if (i > 0)
            out += " u ";
        out += render_term(spec.terms[i]);
    }
    return out;
}

namespace {

auto name_component(const Graph &c) -> FamilyTerm
{
    int n = c.order(), q = c.size();
    auto dp = degree_profile(c);
    FamilyTerm t;
    auto is = [&](const Graph &h) { return is_isomorphic(c, h); };
    if (q == n * (n - 1) / 2) {
        t.kind = FamilyKind::complete;
        t.a = n;
    }
    else if (q == n - 1 && dp.max_degree == 2) {
        t.kind = FamilyKind::path;
        t.a = n;
    }
    else if (q == n && dp.max_degree == 2 && dp.min_degree == 2) {
        t.kind = FamilyKind::cycle;
        t.a = n;
    }
    else if (n == 4 && is(paw_graph()))
        t.kind = FamilyKind::paw;
    else if (n == 5 && is(spider_graph()))
        t.kind = FamilyKind::spider;
    else if (n >= 4 && is(book_graph(n - 2))) {
        t.kind = FamilyKind::book;
        t.a = n - 2;
    }
    else {
        t.kind = FamilyKind::literal;
        t.graph6 = to_graph6(canonical_form(c));
        for (int a = 1; a <= n / 2; ++a)
            if (a * (n - a) == q && is(complete_bipartite_graph(a, n - a))) {
                t.kind = FamilyKind::complete_bipartite;
                t.a = a;
                t.b = n - a;
                t.graph6.clear();
                break;
            }
    }
    return t;
}

} // namespace

auto describe(const Graph &g) -> std::string
{
    if (g.order() == 0)
        throw GraphError("the null graph has no name");
    // Group isomorphic components; sort groups by (size, order, name).
    std::vector<std::tuple<int, int, std::string, FamilyTerm>> groups;
    for (auto comp : components(g)) {
        Graph c = induced_subgraph(g, comp);
        FamilyTerm t = name_component(c);
        std::string r = render_term(t);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto &e) { return std::get<2>(e) == r; });
        if (it != groups.end())
            ++std::get<3>(*it).multiplier;
        else
            groups.emplace_back(c.size(), c.order(), r, t);
    }
    std::sort(groups.begin(), groups.end(), [](const auto &a, const auto &b) {
        return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) < std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
    });
    FamilySpec spec;
    for (auto &e : groups)
        spec.terms.push_back(std::get<3>(e));
    return render_name(spec);
}

auto graph_from_name(std::string_view text) -> Graph { return realize(parse_name(text)); }

} // namespace ramsey
