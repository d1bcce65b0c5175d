#include "sfcurve/textio.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace sfcurve {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

double parse_real(const std::string& tok, int line) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') fail(line, "bad real literal '" + tok + "'");
    return v;
}

Complex parse_complex(const std::string& tok, int line) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) fail(line, "expected <re>,<im> in '" + tok + "'");
    return {parse_real(tok.substr(0, comma), line), parse_real(tok.substr(comma + 1), line)};
}

std::vector<std::string> split_csv(const std::string& tok) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : tok) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

OrderedGifs parse_gifs(std::istream& in) {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::vector<Edge>> edges;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = tokenize(strip_comment(raw));
        if (toks.empty()) continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) fail(lineno, "vertex expects exactly one label");
            if (index.count(toks[1])) fail(lineno, "duplicate vertex '" + toks[1] + "'");
            index[toks[1]] = static_cast<int>(labels.size());
            labels.push_back(toks[1]);
            edges.emplace_back();
        } else if (toks[0] == "edge") {
            if (toks.size() < 6 || toks[2] != "->")
                fail(lineno, "edge expects: edge <src> -> <dst> alpha=<re>,<im> beta=<re>,<im> [conj]");
            auto src = index.find(toks[1]);
            auto dst = index.find(toks[3]);
            if (src == index.end()) fail(lineno, "unknown source vertex '" + toks[1] + "'");
            if (dst == index.end()) fail(lineno, "unknown target vertex '" + toks[3] + "'");
            Edge e;
            e.target = dst->second;
            bool have_alpha = false, have_beta = false;
            for (std::size_t i = 4; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                if (t == "conj") {
                    e.map.conj = true;
                } else if (t.rfind("alpha=", 0) == 0) {
                    e.map.alpha = parse_complex(t.substr(6), lineno);
                    have_alpha = true;
                } else if (t.rfind("beta=", 0) == 0) {
                    e.map.beta = parse_complex(t.substr(5), lineno);
                    have_beta = true;
                } else {
                    fail(lineno, "unexpected token '" + t + "'");
                }
            }
            if (!have_alpha || !have_beta) fail(lineno, "edge needs both alpha= and beta=");
            edges[static_cast<std::size_t>(src->second)].push_back(e);
        } else {
            fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (labels.empty()) throw ParseError("gifs file declares no vertices");
    try {
        return OrderedGifs(std::move(labels), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid system: ") + e.what());
    }
}

OrderedGifs parse_gifs_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_gifs(ss);
}

OrderedGifs load_gifs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_gifs(in);
}

std::string serialize_gifs(const OrderedGifs& g) {
    std::string out = "# ordered GIFS; edge file order per source vertex is the order\n";
    for (int v = 0; v < g.vertex_count(); ++v) out += "vertex " + g.label(v) + "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const Edge& e : g.out_edges(v)) {
            out += "edge " + g.label(v) + " -> " + g.label(e.target);
            out += "  alpha=" + fmt(e.map.alpha.real()) + "," + fmt(e.map.alpha.imag());
            out += "  beta=" + fmt(e.map.beta.real()) + "," + fmt(e.map.beta.imag());
            if (e.map.conj) out += "  conj";
            out += "\n";
        }
    }
    return out;
}

MarkedLatticePath parse_lattice_path(std::istream& in) {
    MarkedLatticePath p;
    bool have_lattice = false, have_marks = false;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = tokenize(strip_comment(raw));
        if (toks.empty()) continue;
        if (toks[0] == "lattice") {
            if (toks.size() != 2) fail(lineno, "lattice expects square|triangle");
            if (toks[1] == "square")
                p.lattice = LatticeKind::square;
            else if (toks[1] == "triangle")
                p.lattice = LatticeKind::triangle;
            else
                fail(lineno, "lattice expects square|triangle");
            have_lattice = true;
        } else if (toks[0] == "pt") {
            if (toks.size() != 2) fail(lineno, "pt expects <re>,<im>");
            p.points.push_back(parse_complex(toks[1], lineno));
        } else if (toks[0] == "marks") {
            if (toks.size() != 2) fail(lineno, "marks expects a comma list");
            for (const std::string& t : split_csv(toks[1])) {
                const double v = parse_real(t, lineno);
                if (v != 1.0 && v != -1.0) fail(lineno, "marks must be +1 or -1");
                p.marks.push_back(static_cast<int>(v));
            }
            have_marks = true;
        } else if (toks[0] == "refl") {
            if (toks.size() != 2) fail(lineno, "refl expects a comma list");
            for (const std::string& t : split_csv(toks[1])) {
                if (t == "0")
                    p.refl.push_back(false);
                else if (t == "1")
                    p.refl.push_back(true);
                else
                    fail(lineno, "refl entries must be 0 or 1");
            }
        } else {
            fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_lattice) throw ParseError("path file is missing the lattice line");
    if (!have_marks) throw ParseError("path file is missing the marks line");
    try {
        validate(p);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid path: ") + e.what());
    }
    return p;
}

MarkedLatticePath parse_lattice_path_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_lattice_path(ss);
}

MarkedLatticePath load_lattice_path_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_lattice_path(in);
}

std::string serialize_lattice_path(const MarkedLatticePath& p) {
    std::string out = "lattice ";
    out += p.lattice == LatticeKind::square ? "square" : "triangle";
    out += "\n";
    for (Complex z : p.points) out += "pt " + fmt(z.real()) + "," + fmt(z.imag()) + "\n";
    out += "marks ";
    for (int k = 0; k < p.segments(); ++k) {
        if (k) out += ",";
        out += p.marks[static_cast<std::size_t>(k)] == 1 ? "+1" : "-1";
    }
    out += "\n";
    if (!p.refl.empty()) {
        out += "refl ";
        for (int k = 0; k < p.segments(); ++k) {
            if (k) out += ",";
            out += p.refl[static_cast<std::size_t>(k)] ? "1" : "0";
        }
        out += "\n";
    }
    return out;
}

}  // namespace sfcurve
