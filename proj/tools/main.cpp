#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sfcurve/catalogue.hpp"
#include "sfcurve/chain.hpp"
#include "sfcurve/lattice.hpp"
#include "sfcurve/recording.hpp"
#include "sfcurve/render.hpp"
#include "sfcurve/spectral.hpp"
#include "sfcurve/textio.hpp"

namespace {

using namespace sfcurve;

std::string num12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

EnumLimits limits_from_env() {
    EnumLimits lim;
    if (const char* cap = std::getenv("SFCURVE_MAX_PATHS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(cap, &end, 10);
        if (end == cap || *end != '\0' || v == 0)
            throw Error("SFCURVE_MAX_PATHS must be a positive integer");
        lim.max_paths = static_cast<std::size_t>(v);
    }
    return lim;
}

struct SystemSource {
    std::string name;
    std::string file;

    void add_options(CLI::App* cmd) {
        auto* n = cmd->add_option("--name", name, "catalogue system name");
        auto* f = cmd->add_option("--file", file, "GIFS text file");
        n->excludes(f);
        f->excludes(n);
    }

    const CatalogueEntry* entry = nullptr;

    OrderedGifs load() {
        if (!name.empty()) {
            entry = &catalogue_get(name);
            return entry->gifs;
        }
        if (!file.empty()) return load_gifs_file(file);
        throw Error("one of --name or --file is required");
    }
};

int vertex_by_label(const OrderedGifs& g, const std::string& label) {
    if (label.empty()) return 0;
    const int v = g.find_vertex(label);
    if (v < 0) throw Error("unknown vertex label '" + label + "'");
    return v;
}

std::vector<double> parse_reals(const std::string& csv) {
    std::vector<double> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Error("empty entry in numeric list");
        char* end = nullptr;
        const double v = std::strtod(cur.c_str(), &end);
        if (end == cur.c_str() || *end != '\0') throw Error("bad numeric entry '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error("failed writing '" + path + "'");
}

InitialPattern pattern_from_file(const OrderedGifs& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    InitialPattern pat;
    pat.per_vertex.assign(static_cast<std::size_t>(g.vertex_count()), {});
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::string word, label;
        if (!(ss >> word)) continue;
        if (word != "pattern")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'pattern <vertex> <re>,<im> ...'");
        if (!(ss >> label)) throw ParseError("line " + std::to_string(lineno) + ": missing vertex label");
        const int v = vertex_by_label(g, label);
        Polyline pl;
        std::string tok;
        while (ss >> tok) {
            const auto comma = tok.find(',');
            if (comma == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": expected <re>,<im>");
            pl.push_back({std::atof(tok.substr(0, comma).c_str()),
                          std::atof(tok.substr(comma + 1).c_str())});
        }
        if (pl.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty pattern");
        pat.per_vertex[static_cast<std::size_t>(v)] = std::move(pl);
    }
    const HeadTailTable ht = heads_tails(g);
    const InitialPattern fallback = default_pattern(g, ht);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (pat.per_vertex[static_cast<std::size_t>(v)].empty())
            pat.per_vertex[static_cast<std::size_t>(v)] = fallback.per_vertex[static_cast<std::size_t>(v)];
    }
    return pat;
}

int cmd_list() {
    for (const auto& n : catalogue_names()) std::cout << n << "\n";
    return 0;
}

int cmd_show(SystemSource& src) {
    const OrderedGifs g = src.load();
    if (src.entry) {
        std::cout << "name: " << src.entry->name << "\n";
        std::cout << "provenance: " << src.entry->provenance
                  << (src.entry->reconstructed ? " [reconstructed]" : "") << "\n";
    }
    std::cout << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count()
              << ", ratios in [" << num(g.r_min()) << ", " << num(g.r_max()) << "]\n";
    if (!g.strongly_connected())
        std::cout << "warning: base graph is not strongly connected\n";
    const HeadTailTable ht = heads_tails(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::cout << "vertex " << g.label(v) << ": head " << num(ht[v].head.real()) << ","
                  << num(ht[v].head.imag()) << "  tail " << num(ht[v].tail.real()) << ","
                  << num(ht[v].tail.imag()) << "\n";
    }
    const ChainReport rep = chain_check(g, 1e-9);
    std::cout << "chain condition: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    std::cout << "similarity dimension: " << num12(solve_dimension(g)) << "\n";
    std::cout << serialize_gifs(g);
    return 0;
}

int cmd_check(SystemSource& src, double tol) {
    const OrderedGifs g = src.load();
    const ChainReport rep = chain_check(g, tol);
    if (rep.pass()) {
        std::cout << "PASS\n";
        return 0;
    }
    std::cout << "FAIL: " << rep.violations.size() << " chain violation(s), tol " << num(tol)
              << "\n";
    std::cout << "vertex  pair  gap  left  right\n";
    for (const auto& v : rep.violations) {
        std::cout << g.label(v.vertex) << "  (" << v.edge_index + 1 << "," << v.edge_index + 2
                  << ")  " << num(v.gap) << "  " << num(v.left.real()) << "," << num(v.left.imag())
                  << "  " << num(v.right.real()) << "," << num(v.right.imag()) << "\n";
    }
    return 1;
}

int cmd_dim(SystemSource& src) {
    const OrderedGifs g = src.load();
    if (!g.strongly_connected())
        std::cout << "warning: base graph is not strongly connected\n";
    const SpectralData sd = analyze(g);
    std::cout << "delta = " << num12(sd.delta) << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        std::cout << "h " << g.label(v) << " = " << num12(sd.h[static_cast<std::size_t>(v)])
                  << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& row = g.out_edges(v);
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::cout << "p " << g.label(v) << "." << k + 1 << " -> " << g.label(row[k].target)
                      << " = " << num12(sd.p[static_cast<std::size_t>(v)][k]) << "\n";
        }
    }
    return 0;
}

int cmd_eval(SystemSource& src, const std::string& ts_csv, const std::string& vertex_label,
             double tol, bool unit) {
    const OrderedGifs g = src.load();
    const Parametrizer par(g);
    const int v = vertex_by_label(g, vertex_label);
    const std::vector<double> ts = parse_reals(ts_csv);
    std::vector<double> xs = ts;
    if (unit) {
        for (double& x : xs) x *= par.length(v);
    }
    const std::vector<Complex> pts = par.psi_batch(v, xs, tol);
    std::cout << "t,re,im\n";
    for (std::size_t i = 0; i < ts.size(); ++i)
        std::cout << num(ts[i]) << "," << num(pts[i].real()) << "," << num(pts[i].imag()) << "\n";
    return 0;
}

int cmd_render(SystemSource& src, const std::string& vertex_label, int depth,
               const std::string& pattern_kind, const std::string& pattern_file, double shrink,
               const std::string& out) {
    const OrderedGifs g = src.load();
    const EnumLimits lim = limits_from_env();
    const HeadTailTable ht = heads_tails(g);

    InitialPattern pat;
    if (pattern_kind == "default") {
        pat = (src.entry != nullptr) ? src.entry->pattern : default_pattern(g, ht);
    } else if (pattern_kind == "point") {
        pat = midpoint_pattern(g, ht);
    } else if (pattern_kind == "file") {
        if (pattern_file.empty()) throw Error("--pattern file requires --pattern-file");
        pat = pattern_from_file(g, pattern_file);
    } else {
        throw Error("--pattern must be default, point or file");
    }
    if (shrink > 0.0) pat = shrink_pattern(pat, shrink);

    std::vector<std::pair<Polyline, PolylineStyle>> items;
    if (vertex_label == "all") {
        for (int v = 0; v < g.vertex_count(); ++v)
            items.push_back({approximate(g, pat, v, depth, lim),
                             PolylineStyle{strand_color(v, g.vertex_count())}});
    } else {
        const int v = vertex_by_label(g, vertex_label);
        items.push_back({approximate(g, pat, v, depth, lim), PolylineStyle{}});
    }
    write_svg(out, items);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_lattice_build(const std::string& path_file, const std::string& out) {
    const MarkedLatticePath p = load_lattice_path_file(path_file);
    const OrderedGifs g = build_gifs(p);
    write_text(out, serialize_gifs(g));
    return 0;
}

int cmd_enumerate(const std::string& trace_file, bool reflection_free, int depth) {
    const MarkedLatticePath base = load_lattice_path_file(trace_file);
    const EnumLimits lim = limits_from_env();
    std::size_t shown = 0, clean = 0;
    mark_enumerate(base.points, base.lattice, reflection_free, [&](const MarkedLatticePath& p) {
        const OrderedGifs g = build_gifs(p);
        const ChainReport chain = chain_check(g, 1e-9);
        const ReptileReport rf = reptile_flag(p, depth, lim);
        std::string marks;
        for (int k = 0; k < p.segments(); ++k) {
            if (k) marks += ",";
            marks += p.marks[static_cast<std::size_t>(k)] == 1 ? "+1" : "-1";
        }
        if (!p.refl.empty() && !reflection_free) {
            marks += " refl ";
            for (int k = 0; k < p.segments(); ++k)
                marks += p.refl[static_cast<std::size_t>(k)] ? "1" : "0";
        }
        const bool ok = chain.pass() && rf.ratio_condition && !rf.overlap_suspected;
        if (ok) ++clean;
        std::cout << "marks " << marks << "  chain=" << (chain.pass() ? "pass" : "fail")
                  << "  reptile=" << (rf.ratio_condition ? "yes" : "no")
                  << "  dup=" << rf.duplicate_maps << "  coll=" << rf.cell_collisions
                  << "  verdict=" << (ok ? "candidate" : "flagged") << "\n";
        ++shown;
    });
    std::cout << "# " << shown << " markings, " << clean << " candidate(s)\n";
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"ordered graph-directed IFS toolkit: chain condition, dimension, "
                 "optimal parametrization, approximation curves"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list catalogue systems");

    SystemSource show_src;
    auto* show = app.add_subcommand("show", "summarize a system");
    show_src.add_options(show);

    SystemSource check_src;
    double check_tol = 1e-9;
    auto* check = app.add_subcommand("check", "chain-condition check");
    check_src.add_options(check);
    check->add_option("--tol", check_tol, "gap tolerance (default 1e-9)");

    SystemSource dim_src;
    auto* dim = app.add_subcommand("dim", "similarity dimension, measure vector, Markov weights");
    dim_src.add_options(dim);

    SystemSource eval_src;
    std::string eval_ts, eval_vertex;
    double eval_tol = 1e-9;
    bool eval_unit = false;
    auto* eval = app.add_subcommand("eval", "evaluate the parametrization, CSV t,re,im");
    eval_src.add_options(eval);
    eval->add_option("--t", eval_ts, "comma list of parameters")->required();
    eval->add_option("--vertex", eval_vertex, "vertex label (default: first)");
    eval->add_option("--tol", eval_tol, "geometric tolerance (default 1e-9)");
    eval->add_flag("--unit", eval_unit, "parameters are in [0,1] instead of [0,h]");

    SystemSource render_src;
    std::string render_vertex, render_pattern = "default", render_pattern_file, render_out;
    int render_depth = 3;
    double render_shrink = 0.0;
    auto* render = app.add_subcommand("render", "render the n-th approximation curve to SVG");
    render_src.add_options(render);
    render->add_option("--vertex", render_vertex, "vertex label, or 'all' (default: first)");
    render->add_option("--depth", render_depth, "approximation depth n")->required();
    render->add_option("--pattern", render_pattern, "default|point|file");
    render->add_option("--pattern-file", render_pattern_file, "pattern file for --pattern file");
    render->add_option("--shrink", render_shrink, "shrink patterns toward their midpoint by eps");
    render->add_option("--out", render_out, "output SVG path")->required();

    std::string lattice_path, lattice_out;
    auto* lattice = app.add_subcommand("lattice", "path-on-lattice operations");
    lattice->require_subcommand(1);
    auto* lbuild = lattice->add_subcommand("build", "marked path file -> GIFS text");
    lbuild->add_option("--path", lattice_path, "lattice path file")->required();
    lbuild->add_option("--out", lattice_out, "output file (default stdout)");

    std::string enum_trace;
    bool enum_refl_free = false;
    int enum_depth = 5;
    auto* enumerate = app.add_subcommand("enumerate", "stream marking reports for a trace");
    enumerate->add_option("--trace", enum_trace, "path file providing the trace")->required();
    enumerate->add_flag("--reflection-free", enum_refl_free, "orientation marks only");
    enumerate->add_option("--depth", enum_depth, "overlap probe depth (default 5)");

    std::string export_name, export_out;
    auto* catalogue = app.add_subcommand("catalogue", "catalogue operations");
    catalogue->require_subcommand(1);
    auto* cexport = catalogue->add_subcommand("export", "write a catalogue system as GIFS text");
    cexport->add_option("name", export_name, "catalogue system name")->required();
    cexport->add_option("--out", export_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (show->parsed()) return cmd_show(show_src);
        if (check->parsed()) return cmd_check(check_src, check_tol);
        if (dim->parsed()) return cmd_dim(dim_src);
        if (eval->parsed()) return cmd_eval(eval_src, eval_ts, eval_vertex, eval_tol, eval_unit);
        if (render->parsed())
            return cmd_render(render_src, render_vertex.empty() ? std::string() : render_vertex,
                              render_depth, render_pattern, render_pattern_file, render_shrink,
                              render_out);
        if (lattice->parsed()) return cmd_lattice_build(lattice_path, lattice_out);
        if (enumerate->parsed()) return cmd_enumerate(enum_trace, enum_refl_free, enum_depth);
        if (catalogue->parsed()) {
            const CatalogueEntry& e = catalogue_get(export_name);
            write_text(export_out, serialize_gifs(e.gifs));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
