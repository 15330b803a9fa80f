#include "tgcover/io.hpp"

#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

#include <json.hpp>

namespace tgcover::io {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string token; in >> token;) tokens.push_back(std::move(token));
    return tokens;
}

long long to_integer(const std::string& token, std::size_t line, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
    }
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t number = 0;
    while (!text.empty()) {
        auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        ++number;
        auto tokens = tokenize(line);
        if (!tokens.empty()) fn(number, tokens);
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
}

}  // namespace

TemporalGraph parse_temporal_graph(std::string_view text) {
    bool have_header = false;
    long long declared_n = 0;
    long long horizon = 0;
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<TemporalEdge> edges;
    std::set<TemporalEdge> seen;

    auto intern = [&](const std::string& name, std::size_t line) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        if (static_cast<long long>(names.size()) >= declared_n) {
            throw ParseError(line, "more than " + std::to_string(declared_n) + " base vertices");
        }
        Vertex id = static_cast<Vertex>(names.size());
        names.push_back(name);
        ids.emplace(name, id);
        return id;
    };

    for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
        const std::string& kind = tok[0];
        if (kind == "p") {
            if (have_header) throw ParseError(line, "duplicate header");
            if (tok.size() != 4 || tok[1] != "tgc") throw ParseError(line, "malformed header, expected 'p tgc <n> <T>'");
            declared_n = to_integer(tok[2], line, "vertex count");
            horizon = to_integer(tok[3], line, "horizon");
            if (declared_n < 0) throw ParseError(line, "negative vertex count");
            if (horizon < 1) throw ParseError(line, "horizon must be positive");
            have_header = true;
            return;
        }
        if (!have_header) throw ParseError(line, "missing header 'p tgc <n> <T>'");
        if (kind == "v") {
            if (tok.size() != 2) throw ParseError(line, "malformed vertex line, expected 'v <name>'");
            intern(tok[1], line);
        } else if (kind == "e") {
            if (tok.size() != 4) throw ParseError(line, "malformed edge line, expected 'e <u> <v> <t>'");
            const long long t = to_integer(tok[3], line, "timestamp");
            if (t < 1 || t > horizon) {
                throw ParseError(line, "timestamp " + std::to_string(t) + " outside [1, " +
                                           std::to_string(horizon) + "]");
            }
            if (tok[1] == tok[2]) throw ParseError(line, "self-loop on '" + tok[1] + "'");
            Vertex u = intern(tok[1], line);
            Vertex v = intern(tok[2], line);
            TemporalEdge e{std::min(u, v), std::max(u, v), static_cast<Timestamp>(t)};
            if (!seen.insert(e).second) throw ParseError(line, "duplicate edge");
            edges.push_back(e);
        } else {
            throw ParseError(line, "unknown record '" + kind + "'");
        }
    });
    if (!have_header) throw ParseError(0, "missing header 'p tgc <n> <T>'");

    for (long long next = 1; static_cast<long long>(names.size()) < declared_n; ++next) {
        std::string name = std::to_string(next);
        if (ids.count(name)) continue;
        ids.emplace(name, static_cast<Vertex>(names.size()));
        names.push_back(std::move(name));
    }
    return TemporalGraph(std::move(names), static_cast<Timestamp>(horizon), std::move(edges));
}

std::string serialize_temporal_graph(const TemporalGraph& graph) {
    std::ostringstream out;
    out << "p tgc " << graph.num_vertices() << ' ' << graph.horizon() << '\n';
    for (const auto& name : graph.names()) out << "v " << name << '\n';
    for (const auto& e : graph.edges()) {
        out << "e " << graph.name(e.u) << ' ' << graph.name(e.v) << ' ' << e.t << '\n';
    }
    return out.str();
}

std::string serialize_cover(const TemporalGraph& graph, const TemporalAssignment& cover) {
    // One vertex per line; names go through the JSON encoder for escaping.
    std::ostringstream out;
    out << "{\n  \"span\": " << total_span(cover) << ",\n  \"intervals\": {";
    bool first = true;
    for (std::size_t v = 0; v < cover.num_vertices(); ++v) {
        const auto& part = cover[static_cast<Vertex>(v)];
        if (!part) continue;
        out << (first ? "\n" : ",\n") << "    "
            << nlohmann::json(graph.name(static_cast<Vertex>(v))).dump() << ": [" << part->lo
            << ", " << part->hi << "]";
        first = false;
    }
    out << (first ? "}\n}\n" : "\n  }\n}\n");
    return out.str();
}

ParsedCover parse_cover(std::string_view text, const TemporalGraph& graph) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("cover document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("intervals") || !doc["intervals"].is_object()) {
        throw ParseError(0, "cover document needs an 'intervals' object");
    }
    ParsedCover out{TemporalAssignment(graph.num_vertices()), 0};
    if (doc.contains("span")) {
        if (!doc["span"].is_number_integer()) throw ParseError(0, "'span' must be an integer");
        out.declared_span = doc["span"].get<int>();
    }
    for (const auto& [name, value] : doc["intervals"].items()) {
        auto v = graph.find(name);
        if (!v) throw ParseError(0, "cover names unknown base vertex '" + name + "'");
        if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
            !value[1].is_number_integer()) {
            throw ParseError(0, "interval of '" + name + "' must be [lo, hi]");
        }
        const int lo = value[0].get<int>();
        const int hi = value[1].get<int>();
        if (lo < 1 || lo > hi) throw ParseError(0, "invalid interval for '" + name + "'");
        out.assignment.set(*v, {lo, hi});
    }
    if (!doc.contains("span")) out.declared_span = total_span(out.assignment);
    return out;
}

TemporalGraph generate_instance(int n, Timestamp horizon, double p, std::uint64_t seed) {
    if (n < 1 || horizon < 1 || !(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("generate_instance: need n >= 1, T >= 1, p in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<TemporalEdge> edges;
    for (Timestamp t = 1; t <= horizon; ++t) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.push_back({u, v, t});
            }
        }
    }
    return TemporalGraph(std::move(names), horizon, std::move(edges));
}

PaircutInstance parse_paircut(std::string_view text) {
    bool have_header = false;
    bool constrained = false;
    long long nodes = 0, arcs = 0, pairs = 0, budget = 0;
    std::optional<paircut::Node> source;
    paircut::Digraph digraph;
    std::vector<paircut::NodePair> pair_list;
    std::set<paircut::NodePair> seen_pairs;
    std::vector<std::size_t> deletable;
    long long arc_lines = 0;

    auto node_of = [&](const std::string& token, std::size_t line) {
        long long v = to_integer(token, line, "node");
        if (v < 0 || v >= nodes) throw ParseError(line, "node " + token + " out of range");
        return static_cast<paircut::Node>(v);
    };

    for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
        const std::string& kind = tok[0];
        if (kind == "vdpc" || kind == "cdpc") {
            if (have_header) throw ParseError(line, "duplicate header");
            if (tok.size() != 5) throw ParseError(line, "malformed header, expected '" + kind + " <nNodes> <nArcs> <nPairs> <k>'");
            constrained = kind == "cdpc";
            nodes = to_integer(tok[1], line, "node count");
            arcs = to_integer(tok[2], line, "arc count");
            pairs = to_integer(tok[3], line, "pair count");
            budget = to_integer(tok[4], line, "budget");
            if (nodes < 1 || arcs < 0 || pairs < 0 || budget < 0) throw ParseError(line, "negative or empty header field");
            digraph = paircut::Digraph(static_cast<std::size_t>(nodes));
            have_header = true;
            return;
        }
        if (!have_header) throw ParseError(line, "missing header");
        if (kind == "s") {
            if (tok.size() != 2) throw ParseError(line, "expected 's <u>'");
            if (source) throw ParseError(line, "duplicate source");
            source = node_of(tok[1], line);
        } else if (kind == "a" || kind == "d") {
            if (tok.size() != 3) throw ParseError(line, "expected '" + kind + " <u> <v>'");
            if (kind == "d" && !constrained) throw ParseError(line, "deletable arcs need a cdpc header");
            auto tail = node_of(tok[1], line);
            auto head = node_of(tok[2], line);
            if (digraph.find_arc(tail, head)) throw ParseError(line, "duplicate arc");
            std::size_t index = digraph.add_arc(tail, head);
            if (kind == "d") deletable.push_back(index);
            ++arc_lines;
        } else if (kind == "p") {
            if (tok.size() != 3) throw ParseError(line, "expected 'p <u> <v>'");
            auto a = node_of(tok[1], line);
            auto b = node_of(tok[2], line);
            if (a == b) throw ParseError(line, "pair {" + tok[1] + ", " + tok[2] + "} is malformed");
            auto pair = paircut::make_pair(a, b);
            if (!seen_pairs.insert(pair).second) throw ParseError(line, "duplicate pair");
            pair_list.push_back(pair);
        } else {
            throw ParseError(line, "unknown record '" + kind + "'");
        }
    });
    if (!have_header) throw ParseError(0, "missing header");
    if (!source) throw ParseError(0, "missing source line");
    if (arc_lines != arcs) throw ParseError(0, "header declares " + std::to_string(arcs) + " arcs, found " + std::to_string(arc_lines));
    if (static_cast<long long>(pair_list.size()) != pairs) {
        throw ParseError(0, "header declares " + std::to_string(pairs) + " pairs, found " + std::to_string(pair_list.size()));
    }
    std::sort(pair_list.begin(), pair_list.end());
    if (constrained) {
        paircut::CdpcInstance inst;
        inst.source = *source;
        inst.pairs = std::move(pair_list);
        inst.budget = static_cast<int>(budget);
        inst.deletable.assign(digraph.num_arcs(), false);
        for (std::size_t index : deletable) inst.deletable[index] = true;
        inst.digraph = std::move(digraph);
        return inst;
    }
    paircut::VdpcInstance inst;
    inst.source = *source;
    inst.pairs = std::move(pair_list);
    inst.budget = static_cast<int>(budget);
    inst.digraph = std::move(digraph);
    return inst;
}

std::string serialize_paircut(const PaircutInstance& instance) {
    std::ostringstream out;
    std::visit(
        [&](const auto& inst) {
            constexpr bool constrained =
                std::is_same_v<std::decay_t<decltype(inst)>, paircut::CdpcInstance>;
            out << (constrained ? "cdpc " : "vdpc ") << inst.digraph.num_nodes() << ' '
                << inst.digraph.num_arcs() << ' ' << inst.pairs.size() << ' ' << inst.budget << '\n';
            out << "s " << inst.source << '\n';
            for (std::size_t i = 0; i < inst.digraph.num_arcs(); ++i) {
                const auto& a = inst.digraph.arc(i);
                bool del = false;
                if constexpr (constrained) del = inst.deletable[i];
                out << (del ? "d " : "a ") << a.tail << ' ' << a.head << '\n';
            }
            for (const auto& p : inst.pairs) out << "p " << p.first << ' ' << p.second << '\n';
        },
        instance);
    return out.str();
}

}  // namespace tgcover::io
