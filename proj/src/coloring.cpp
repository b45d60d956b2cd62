#include <ramsey/coloring.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ramsey {

EdgeColoring::EdgeColoring(int n) : n_(n)
{
    if (n < 0 || n > max_vertices)
        throw GraphError("colouring order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    colors_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Color::unset);
}

auto EdgeColoring::from_red_graph(const Graph &red) -> EdgeColoring
{
    EdgeColoring c(red.order());
    for (int i = 0; i < red.order(); ++i)
        for (int j = i + 1; j < red.order(); ++j)
            c.set(i, j, red.adjacent(i, j) ? Color::red : Color::blue);
    return c;
}

void EdgeColoring::set(int i, int j, Color c)
{
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw GraphError("edge " + std::to_string(i) + "-" + std::to_string(j) + " not in K_" + std::to_string(n_));
    colors_[edge_index(n_, i, j)] = c;
}

auto EdgeColoring::is_total() const -> bool
{
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == Color::unset; });
}

auto EdgeColoring::colour_class(Color c) const -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) == c)
                edges.push_back({i, j});
    return Graph::from_edges(n_, edges);
}

auto EdgeColoring::swapped() const -> EdgeColoring
{
    EdgeColoring out = *this;
    for (auto &c : out.colors_)
        if (c != Color::unset)
            c = c == Color::red ? Color::blue : Color::red;
    return out;
}

auto to_witness_text(const EdgeColoring &c) -> std::string
{
    if (! c.is_total())
        throw WitnessFormatError("witness colouring must be total");
    std::string out = "n=" + std::to_string(c.order()) + "\nred=";
    bool first = true;
    for (int i = 0; i < c.order(); ++i)
        for (int j = i + 1; j < c.order(); ++j)
            if (c.at(i, j) == Color::red) {
                if (! first)
                    out += ',';
                out += std::to_string(i) + "-" + std::to_string(j);
                first = false;
            }
    out += '\n';
    return out;
}

namespace {

auto parse_int(std::string_view s, const char *what) -> int
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw WitnessFormatError(std::string("bad ") + what + " '" + std::string(s) + "'");
    return value;
}

auto strip_cr(std::string_view s) -> std::string_view
{
    if (! s.empty() && s.back() == '\r')
        s.remove_suffix(1);
    return s;
}

} // namespace

auto parse_witness_text(std::string_view text) -> EdgeColoring
{
    auto nl = text.find('\n');
    if (nl == std::string_view::npos)
        throw WitnessFormatError("witness needs two lines");
    auto line1 = strip_cr(text.substr(0, nl));
    auto rest = text.substr(nl + 1);
    std::string_view line2 = rest, tail;
    if (auto nl2 = rest.find('\n'); nl2 != std::string_view::npos) {
        line2 = rest.substr(0, nl2);
        tail = rest.substr(nl2 + 1);
    }
    line2 = strip_cr(line2);
    for (char c : tail)
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n')
            throw WitnessFormatError("unexpected content after the red line");

    if (line1.substr(0, 2) != "n=")
        throw WitnessFormatError("first line must be n=<N>");
    int n = parse_int(line1.substr(2), "order");
    if (n < 0 || n > max_vertices)
        throw WitnessFormatError("order out of range");
    if (line2.substr(0, 4) != "red=")
        throw WitnessFormatError("second line must be red=<pairs>");

    EdgeColoring c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            c.set(i, j, Color::blue);
    auto pairs = line2.substr(4);
    while (! pairs.empty()) {
        auto comma = pairs.find(',');
        auto item = pairs.substr(0, comma);
        auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw WitnessFormatError("bad edge '" + std::string(item) + "'");
        int i = parse_int(item.substr(0, dash), "vertex");
        int j = parse_int(item.substr(dash + 1), "vertex");
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw WitnessFormatError("edge '" + std::string(item) + "' not in K_" + std::to_string(n));
        if (c.at(i, j) == Color::red)
            throw WitnessFormatError("duplicate edge '" + std::string(item) + "'");
        c.set(i, j, Color::red);
        if (comma == std::string_view::npos)
            break;
        pairs = pairs.substr(comma + 1);
        if (pairs.empty())
            throw WitnessFormatError("trailing comma");
    }
    return c;
}

auto read_witness_file(const std::string &path) -> EdgeColoring
{
    std::ifstream in(path);
    if (! in)
        throw WitnessFormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_witness_text(ss.str());
}

void write_witness_file(const std::string &path, const EdgeColoring &c)
{
    std::ofstream out(path);
    if (! out)
        throw WitnessFormatError("cannot write " + path);
    out << to_witness_text(c);
}

} // namespace ramsey
