#include "tgcover/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tgcover/compression.hpp"
#include "tgcover/io.hpp"
#include "tgcover/oracle.hpp"

namespace tgcover {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io::ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

TemporalGraph load_graph(const std::string& path) {
    try {
        return io::parse_temporal_graph(read_file(path));
    } catch (const io::ParseError& e) {
        throw io::ParseError(e.line(), path + ": " + e.what());
    }
}

int default_jobs() {
    if (const char* env = std::getenv("TGCOVER_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs > 0) return jobs;
    }
    return 1;
}

std::string describe(const TemporalGraph& graph, const CoverViolation& violation) {
    if (const auto* v = std::get_if<Vertex>(&violation)) {
        return "vertex " + graph.name(*v) + " has no interval";
    }
    const auto& e = std::get<TemporalEdge>(violation);
    return "edge " + graph.name(e.u) + " " + graph.name(e.v) + " at t=" + std::to_string(e.t) +
           " is not covered";
}

int run_solve(const std::string& file, int budget, const std::string& mode, int jobs,
              std::ostream& out) {
    const TemporalGraph graph = load_graph(file);
    std::optional<TemporalAssignment> found;
    if (mode == "brute") {
        if (auto r = oracle::brute_force_min_cover(graph, budget)) found = r->cover.assignment();
    } else {
        SolveOptions options;
        options.jobs = jobs;
        if (auto c = solve_min_timeline_cover(graph, budget, options)) found = c->assignment();
    }
    if (!found) {
        out << "UNSAT k=" << budget << '\n';
        return kExitNegative;
    }
    out << io::serialize_cover(graph, *found);
    return kExitOk;
}

int run_verify(const std::string& file, const std::string& cover_file, std::ostream& out) {
    const TemporalGraph graph = load_graph(file);
    const io::ParsedCover parsed = io::parse_cover(read_file(cover_file), graph);
    const CoverCheck check = is_temporal_cover(graph, parsed.assignment);
    const int actual = total_span(parsed.assignment);
    if (!check) {
        out << "INVALID " << describe(graph, *check.violation) << '\n';
        return kExitNegative;
    }
    if (actual != parsed.declared_span) {
        out << "INVALID declared span " << parsed.declared_span << ", actual " << actual << '\n';
        return kExitNegative;
    }
    out << "VALID span=" << actual << '\n';
    return kExitOk;
}

int run_zero_span(const std::string& file, std::ostream& out) {
    const TemporalGraph graph = load_graph(file);
    auto cover = oracle::zero_span_decider(graph);
    if (!cover) {
        out << "UNSAT k=0\n";
        return kExitNegative;
    }
    out << io::serialize_cover(graph, cover->assignment());
    return kExitOk;
}

template <typename Cut>
void print_cut(std::ostream& out, const Cut& cut) {
    out << "CUT " << cut.size();
    for (const auto& item : cut) {
        if constexpr (std::is_same_v<std::decay_t<decltype(item)>, paircut::Arc>) {
            out << ' ' << item.tail << "->" << item.head;
        } else {
            out << ' ' << item;
        }
    }
    out << '\n';
}

int run_paircut(const std::string& file, std::ostream& out) {
    io::PaircutInstance instance;
    try {
        instance = io::parse_paircut(read_file(file));
    } catch (const io::ParseError& e) {
        throw io::ParseError(e.line(), file + ": " + e.what());
    }
    return std::visit(
        [&](const auto& inst) {
            try {
                paircut::validate(inst);
            } catch (const std::invalid_argument& e) {
                throw io::ParseError(0, file + ": " + e.what());
            }
            if constexpr (std::is_same_v<std::decay_t<decltype(inst)>, paircut::CdpcInstance>) {
                auto cut = paircut::solve_cdpc(inst);
                if (!cut) {
                    out << "UNSAT k=" << inst.budget << '\n';
                    return static_cast<int>(kExitNegative);
                }
                print_cut(out, *cut);
            } else {
                auto cut = paircut::solve_vdpc(inst);
                if (!cut) {
                    out << "UNSAT k=" << inst.budget << '\n';
                    return static_cast<int>(kExitNegative);
                }
                print_cut(out, *cut);
            }
            return static_cast<int>(kExitOk);
        },
        instance);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact minimum timeline cover on temporal graphs", "tgcover"};
    app.require_subcommand(1);

    std::string file;
    std::string cover_file;
    int budget = 0;
    std::string mode = "fpt";
    int jobs = default_jobs();
    auto* solve = app.add_subcommand("solve", "find a cover of total span at most K");
    solve->add_option("--k", budget, "span budget")->required()->check(CLI::NonNegativeNumber);
    solve->add_option("--mode", mode, "fpt or brute")->check(CLI::IsMember({"fpt", "brute"}));
    solve->add_option("--jobs", jobs, "worker threads (default $TGCOVER_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    solve->add_option("FILE", file, "instance")->required();

    auto* verify = app.add_subcommand("verify", "check a cover document against an instance");
    verify->add_option("FILE", file, "instance")->required();
    verify->add_option("COVERFILE", cover_file, "cover document")->required();

    auto* zero = app.add_subcommand("zero-span", "decide whether a span-0 cover exists");
    zero->add_option("FILE", file, "instance")->required();

    int n = 0;
    int horizon = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "print a random instance");
    gen->add_option("--n", n, "base vertices")->required()->check(CLI::PositiveNumber);
    gen->add_option("--T", horizon, "horizon")->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "generator seed")->required();

    auto* pc = app.add_subcommand("paircut", "solve a vdpc/cdpc instance");
    pc->add_option("FILE", file, "instance")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "tgcover: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(file, budget, mode, jobs, out);
        if (verify->parsed()) return run_verify(file, cover_file, out);
        if (zero->parsed()) return run_zero_span(file, out);
        if (gen->parsed()) {
            out << io::serialize_temporal_graph(io::generate_instance(n, horizon, p, seed));
            return kExitOk;
        }
        if (pc->parsed()) return run_paircut(file, out);
    } catch (const io::ParseError& e) {
        err << "tgcover: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "tgcover: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace tgcover
