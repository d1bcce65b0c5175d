#include "sfcurve/gifs.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sfcurve {

namespace {

// Reachability of every vertex from vertex 0 along `adj`.
bool all_reachable(const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

OrderedGifs::OrderedGifs(std::vector<std::string> labels, std::vector<std::vector<Edge>> out_edges)
    : labels_(std::move(labels)), edges_(std::move(out_edges)) {
    if (labels_.empty()) throw Error("gifs: vertex set is empty");
    if (edges_.size() != labels_.size()) throw Error("gifs: edge table does not match vertex set");
    std::set<std::string> unique(labels_.begin(), labels_.end());
    if (unique.size() != labels_.size()) throw Error("gifs: duplicate vertex label");

    const int n = vertex_count();
    std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n)),
        rev(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& row = edges_[static_cast<std::size_t>(v)];
        if (row.empty()) throw Error("gifs: vertex '" + labels_[static_cast<std::size_t>(v)] +
                                     "' has no out-edges");
        for (const Edge& e : row) {
            if (e.target < 0 || e.target >= n) throw Error("gifs: edge target out of range");
            const double r = e.map.ratio();
            if (!(r > 0.0 && r < 1.0))
                throw Error("gifs: edge ratio must lie strictly in (0,1)");
            r_min_ = std::min(r_min_, r);
            r_max_ = std::max(r_max_, r);
            fwd[static_cast<std::size_t>(v)].push_back(e.target);
            rev[static_cast<std::size_t>(e.target)].push_back(v);
        }
    }
    strongly_connected_ = all_reachable(fwd) && all_reachable(rev);
}

int OrderedGifs::find_vertex(std::string_view label) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (labels_[static_cast<std::size_t>(v)] == label) return v;
    }
    return -1;
}

std::size_t OrderedGifs::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : edges_) total += row.size();
    return total;
}

int path_target(const OrderedGifs& g, const PathWord& w) {
    if (w.start < 0 || w.start >= g.vertex_count()) throw Error("path: start vertex out of range");
    int v = w.start;
    for (int k : w.edges) {
        const auto& row = g.out_edges(v);
        if (k < 0 || k >= static_cast<int>(row.size()))
            throw Error("path: edge index out of range");
        v = row[static_cast<std::size_t>(k)].target;
    }
    return v;
}

Similitude cylinder_map(const OrderedGifs& g, const PathWord& w) {
    if (w.edges.empty()) throw Error("cylinder_map: path must have at least one edge");
    if (w.start < 0 || w.start >= g.vertex_count()) throw Error("path: start vertex out of range");
    int v = w.start;
    Similitude comp;
    bool first = true;
    for (int k : w.edges) {
        const auto& row = g.out_edges(v);
        if (k < 0 || k >= static_cast<int>(row.size()))
            throw Error("path: edge index out of range");
        const Edge& e = row[static_cast<std::size_t>(k)];
        comp = first ? e.map : compose(comp, e.map);
        first = false;
        v = e.target;
    }
    return comp;
}

std::size_t count_paths(const OrderedGifs& g, int start, int depth) {
    if (start < 0 || start >= g.vertex_count()) throw Error("count_paths: vertex out of range");
    if (depth <= 0) return 1;
    const int n = g.vertex_count();
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cnt(static_cast<std::size_t>(n), 1), next(static_cast<std::size_t>(n));
    for (int step = 0; step < depth; ++step) {
        for (int v = 0; v < n; ++v) {
            std::size_t sum = 0;
            for (const Edge& e : g.out_edges(v)) {
                std::size_t c = cnt[static_cast<std::size_t>(e.target)];
                if (sum > kMax - c) {
                    sum = kMax;
                    break;
                }
                sum += c;
            }
            next[static_cast<std::size_t>(v)] = sum;
        }
        cnt.swap(next);
    }
    return cnt[static_cast<std::size_t>(start)];
}

}  // namespace sfcurve
