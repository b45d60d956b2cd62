#pragma once

#include <ramsey/graph.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

enum class Color : std::uint8_t { red, blue, unset };

/// Red/blue assignment over the edges of K_n, indexed in lexicographic
/// edge order (0,1), (0,2), ..., (0,n-1), (1,2), ...
class EdgeColoring {
public:
    EdgeColoring() = default;

    /// All edges unset.
    explicit EdgeColoring(int n);

    /// Total colouring whose red edges are exactly those of `red` (order n).
    static auto from_red_graph(const Graph &red) -> EdgeColoring;

    auto order() const -> int { return n_; }
    auto edge_count() const -> int { return static_cast<int>(colors_.size()); }

    static auto edge_index(int n, int i, int j) -> int
    {
        if (i > j)
            std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    auto at(int i, int j) const -> Color { return colors_[edge_index(n_, i, j)]; }
    void set(int i, int j, Color c);
    auto at_index(int e) const -> Color { return colors_[e]; }
    void set_index(int e, Color c) { colors_[e] = c; }

    auto is_total() const -> bool;

    auto red_graph() const -> Graph { return colour_class(Color::red); }
    auto blue_graph() const -> Graph { return colour_class(Color::blue); }

    /// Red and blue exchanged.
    auto swapped() const -> EdgeColoring;

    auto operator==(const EdgeColoring &) const -> bool = default;

private:
    int n_ = 0;
    std::vector<Color> colors_;

    auto colour_class(Color c) const -> Graph;
};

class WitnessFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text form: "n=<N>\nred=<i-j,i-j,...>\n". Unlisted edges are blue.
auto to_witness_text(const EdgeColoring &c) -> std::string;

/// Inverse of to_witness_text; throws WitnessFormatError.
auto parse_witness_text(std::string_view text) -> EdgeColoring;

auto read_witness_file(const std::string &path) -> EdgeColoring;
void write_witness_file(const std::string &path, const EdgeColoring &c);

} // namespace ramsey
