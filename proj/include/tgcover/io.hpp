#ifndef TGCOVER_IO_HPP
#define TGCOVER_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "tgcover/paircut.hpp"
#include "tgcover/temporal_graph.hpp"

namespace tgcover::io {

/// Malformed input. `line` is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Instance format, one record per line, `#` starts a comment:
///
///     p tgc <n> <T>       header, exactly once, before anything else
///     v <name>            optional declaration of a (possibly isolated) vertex
///     e <u> <v> <t>       temporal edge, 1 <= t <= T
///
/// Base vertices are numbered in first-appearance order. If fewer than n
/// names appear, the remaining vertices get unused names "1", "2", ...
TemporalGraph parse_temporal_graph(std::string_view text);
std::string serialize_temporal_graph(const TemporalGraph& graph);

/// JSON document: {"span": S, "intervals": {"<name>": [lo, hi], ...}} with
/// vertices in base-vertex order.
std::string serialize_cover(const TemporalGraph& graph, const TemporalAssignment& cover);

struct ParsedCover {
    TemporalAssignment assignment;
    int declared_span = 0;
};

/// Reads a cover document against `graph`. Unknown vertex names, malformed
/// intervals and duplicate entries raise ParseError; missing vertices simply
/// have no entry.
ParsedCover parse_cover(std::string_view text, const TemporalGraph& graph);

/// Each of the n(n-1)/2 * T possible edges independently with probability p,
/// from a seeded mt19937_64. Vertices are named v1..vn.
TemporalGraph generate_instance(int n, Timestamp horizon, double p, std::uint64_t seed);

/// Pair-cut instance format (nodes are 0-based integers):
///
///     vdpc <nNodes> <nArcs> <nPairs> <k>    or    cdpc <...same...>
///     s <u>               source
///     a <u> <v>           arc (undeletable for cdpc)
///     d <u> <v>           deletable arc, cdpc only; counts towards nArcs
///     p <u> <v>           forbidden pair
using PaircutInstance = std::variant<paircut::VdpcInstance, paircut::CdpcInstance>;

PaircutInstance parse_paircut(std::string_view text);
std::string serialize_paircut(const PaircutInstance& instance);

}  // namespace tgcover::io

#endif  // TGCOVER_IO_HPP
