// pslkit: command-line front end for pseudoline arrangements.
//
// Every verb prints key=value lines on stdout. Exit codes: 0 success, 1 the
// input is invalid or p and q are the same point or on the same pseudoline,
// 2 usage and parse errors.

#include "levi/errors.hpp"
#include "levi/levi.hpp"
#include "levi/oracle.hpp"
#include "levi/psl_io.hpp"
#include "levi/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace levi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

// Cell ids refer to the canonical labeling, so load always relabels.
Arrangement load(const std::string& path) { return canonical_relabel(parse_psl(read_file(path))); }

CellRef cell_arg(const Arrangement& arr, const std::string& text) {
    try {
        return parse_cell(arr, text);
    } catch (const Error& e) {
        throw UsageError("bad cell '" + text + "': " + e.what());
    }
}

std::string join_curves(const std::set<CurveId>& cs) {
    std::string s;
    for (CurveId c : cs) s += (s.empty() ? "" : ",") + std::to_string(c);
    return s;
}

std::string signature_text(const Arrangement& arr, const Signature& sig) {
    std::string s;
    for (const auto& c : sig) s += (s.empty() ? "" : " ") + cell_name(arr, c);
    return s;
}

int cmd_validate(const std::string& file) {
    const auto arr = load(file);
    const auto rep = validate(arr);
    std::cout << "ok=" << (rep.ok ? "true" : "false") << '\n';
    std::cout << "pairs_ok=" << (rep.pairs_ok() ? "true" : "false") << '\n';
    std::cout << "curves=" << arr.size() << '\n';
    std::cout << "violations=" << rep.violations.size() << '\n';
    for (const auto& v : rep.violations) std::cout << "violation=" << v.kind << ": " << v.detail << '\n';
    return rep.ok ? 0 : 1;
}

int cmd_stats(const std::string& file, bool list_cells) {
    const auto arr = load(file);
    const auto t = cells(arr.map());
    std::cout << "curves=" << arr.size() << '\n';
    std::cout << "darts=" << arr.map().size() << '\n';
    std::cout << "vertices=" << t.vertices.size() << '\n';
    std::cout << "edges=" << t.edges.size() << '\n';
    std::cout << "faces=" << t.faces.size() << '\n';
    std::cout << "euler=" << t.quotient_euler() << '\n';
    if (list_cells) {
        for (const auto* group : {&t.vertices, &t.edges, &t.faces})
            for (const auto& c : *group)
                std::cout << "cell=" << cell_name(arr, c) << " curves=" << join_curves(curves_through(arr, c)) << '\n';
    }
    return 0;
}

int cmd_extend(const std::string& file, const std::string& p_text, const std::string& q_text,
               const std::string& out) {
    const auto arr = load(file);
    const auto p = cell_arg(arr, p_text);
    const auto q = cell_arg(arr, q_text);
    const auto r = extend_detailed(arr, p, q);
    write_file(out, print_psl(r.arrangement));
    std::cout << "ok=true\n";
    std::cout << "curves=" << r.arrangement.size() << '\n';
    std::cout << "new_curve=" << arr.size() << '\n';
    std::cout << "p_cell=" << cell_name(r.arrangement, r.p_cell) << '\n';
    std::cout << "q_cell=" << cell_name(r.arrangement, r.q_cell) << '\n';
    std::cout << "initial_crossings=" << r.stats.initial_total << '\n';
    std::cout << "steps=" << r.stats.steps.size() << '\n';
    std::cout << "output=" << out << '\n';
    return 0;
}

int cmd_oracle_extend(const std::string& file, const std::string& p_text, const std::string& q_text,
                      int max_len) {
    const auto arr = load(file);
    const auto p = cell_arg(arr, p_text);
    const auto q = cell_arg(arr, q_text);
    if (max_len <= 0) max_len = default_max_len(arr);
    const auto found = brute_extend(arr, p, q, max_len);
    const auto r = extend_detailed(arr, p, q);
    const auto mine = signature_of(arr, r.normalized);
    std::cout << "max_len=" << max_len << '\n';
    std::cout << "signatures=" << found.size() << '\n';
    std::cout << "extend_signature=" << signature_text(arr, mine) << '\n';
    std::cout << "extend_in_oracle=" << (found.count(mine) ? "true" : "false") << '\n';
    for (const auto& s : found) std::cout << "signature=" << signature_text(arr, s) << '\n';
    return found.empty() || !found.count(mine) ? 1 : 0;
}

int cmd_enumerate(int n, const std::string& dir) {
    const auto classes = enumerate_simple(n);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto path = std::filesystem::path(dir) / ("n" + std::to_string(n) + "_" + std::to_string(i) + ".psl");
        write_file(path.string(), print_psl(classes[i]));
        std::cout << "file=" << path.string() << '\n';
    }
    std::cout << "classes=" << classes.size() << '\n';
    return 0;
}

int cmd_random(int n, std::uint64_t seed, bool merged, const std::string& out) {
    const auto arr = random_arrangement(n, seed, merged ? RandomMode::merged : RandomMode::simple);
    write_file(out, print_psl(arr));
    const auto t = cells(arr.map());
    std::cout << "curves=" << arr.size() << '\n';
    std::cout << "vertices=" << t.vertices.size() << '\n';
    std::cout << "output=" << out << '\n';
    return 0;
}

int cmd_render(const std::string& file, int infinity, std::optional<int> highlight, const std::string& out) {
    const auto arr = load(file);
    if (arr.size() == 0) throw UsageError("cannot render an arrangement without pseudolines");
    write_file(out, render_svg(arr, infinity, highlight));
    std::cout << "output=" << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudoline arrangement toolkit"};
    app.require_subcommand(1);

    std::string file, p_text, q_text, out;
    bool list_cells = false, merged = false;
    int n = 0, max_len = 0, infinity = 0, highlight = -1;
    std::uint64_t seed = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Check an arrangement file");
    validate_cmd->add_option("file", file)->required();

    auto* stats_cmd = app.add_subcommand("stats", "Cell counts, optionally every cell id");
    stats_cmd->add_option("file", file)->required();
    stats_cmd->add_flag("--cells", list_cells);

    auto* extend_cmd = app.add_subcommand("extend", "Add a pseudoline through two cells");
    extend_cmd->add_option("file", file)->required();
    extend_cmd->add_option("--p", p_text)->required();
    extend_cmd->add_option("--q", q_text)->required();
    extend_cmd->add_option("-o", out)->required();

    auto* oracle_cmd = app.add_subcommand("oracle-extend", "Exhaustive search for pseudolines through two cells");
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--p", p_text)->required();
    oracle_cmd->add_option("--q", q_text)->required();
    oracle_cmd->add_option("--max-len", max_len);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Write every simple arrangement of n pseudolines");
    enumerate_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 6));
    enumerate_cmd->add_option("-o", out)->required();

    auto* random_cmd = app.add_subcommand("random", "Write a random arrangement");
    random_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 1000));
    random_cmd->add_option("--seed", seed)->required();
    random_cmd->add_flag("--merged", merged);
    random_cmd->add_option("-o", out)->required();

    auto* render_cmd = app.add_subcommand("render", "Draw an arrangement as SVG");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("--infinity", infinity)->required();
    render_cmd->add_option("--highlight", highlight);
    render_cmd->add_option("-o", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) return cmd_validate(file);
        if (*stats_cmd) return cmd_stats(file, list_cells);
        if (*extend_cmd) return cmd_extend(file, p_text, q_text, out);
        if (*oracle_cmd) return cmd_oracle_extend(file, p_text, q_text, max_len);
        if (*enumerate_cmd) return cmd_enumerate(n, out);
        if (*random_cmd) return cmd_random(n, seed, merged, out);
        if (*render_cmd)
            return cmd_render(file, infinity, highlight >= 0 ? std::optional<int>(highlight) : std::nullopt, out);
    } catch (const SameLine& e) {
        std::cout << "error=same_line\ncurve=" << e.curve() << '\n';
        return 1;
    } catch (const SamePoint&) {
        std::cout << "error=same_point\n";
        return 1;
    } catch (const ParseError& e) {
        std::cout << "error=parse\n";
        std::cerr << "pslkit: " << e.what() << '\n';
        return 2;
    } catch (const InvalidMap& e) {
        std::cout << "error=invalid_map\n";
        std::cerr << "pslkit: " << e.what() << '\n';
        return 2;
    } catch (const UnknownCurve& e) {
        std::cout << "error=unknown_curve\n";
        std::cerr << "pslkit: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cout << "error=usage\n";
        std::cerr << "pslkit: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cout << "error=failed\n";
        std::cerr << "pslkit: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
