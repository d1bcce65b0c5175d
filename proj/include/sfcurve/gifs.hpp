#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sfcurve/similitude.hpp"

namespace sfcurve {

struct Edge {
    int target = 0;
    Similitude map;
};

struct EnumLimits {
    std::size_t max_paths = 2'000'000;
};

/// Directed multigraph with one similitude per edge and a total order on each
/// vertex's out-edge list. The list position *is* the order, so dictionary
/// order on paths falls out of plain index comparison.
///
/// Invariants enforced at construction: at least one out-edge per vertex,
/// every edge ratio in (0,1), targets in range, labels unique.
class OrderedGifs {
  public:
    OrderedGifs(std::vector<std::string> labels, std::vector<std::vector<Edge>> out_edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of the vertex with this label, or -1.
    int find_vertex(std::string_view label) const;
    const std::vector<Edge>& out_edges(int v) const {
        return edges_.at(static_cast<std::size_t>(v));
    }
    std::size_t edge_count() const;

    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    /// Strong connectivity is surfaced, not enforced; measure theory on
    /// reducible graphs is the caller's risk.
    bool strongly_connected() const { return strongly_connected_; }

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Edge>> edges_;
    double r_min_ = 1.0;
    double r_max_ = 0.0;
    bool strongly_connected_ = true;
};

/// Edge-index word anchored at a start vertex; entry k selects the k-th
/// ordered out-edge of the vertex reached after k steps.
struct PathWord {
    int start = 0;
    std::vector<int> edges;
};

/// Terminate vertex of the word. Throws Error on out-of-range indices.
int path_target(const OrderedGifs& g, const PathWord& w);

/// Left-to-right composition of the edge maps of w. Requires >= 1 edge.
Similitude cylinder_map(const OrderedGifs& g, const PathWord& w);

/// Number of depth-step paths from `start`, saturating at SIZE_MAX.
std::size_t count_paths(const OrderedGifs& g, int start, int depth);

namespace detail {

template <class Visit>
void paths_rec(const OrderedGifs& g, std::vector<int>& word, const Similitude* comp, int vertex,
               int remaining, std::size_t& budget, Visit& visit) {
    const auto& edges = g.out_edges(vertex);
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        Similitude next = comp ? compose(*comp, edges[k].map) : edges[k].map;
        word.push_back(k);
        if (remaining == 1) {
            if (budget == 0)
                throw EnumerationCapError("path enumeration exceeded the configured cap");
            --budget;
            visit(const_cast<const std::vector<int>&>(word), edges[k].target, next);
        } else {
            paths_rec(g, word, &next, edges[k].target, remaining - 1, budget, visit);
        }
        word.pop_back();
    }
}

}  // namespace detail

/// Visits every depth-step path from `start` in dictionary order:
/// visit(edge_word, terminate_vertex, composed_map). depth >= 1.
template <class Visit>
void for_each_path(const OrderedGifs& g, int start, int depth, const EnumLimits& lim,
                   Visit&& visit) {
    if (depth < 1) throw Error("for_each_path: depth must be >= 1");
    std::size_t budget = lim.max_paths;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(depth));
    detail::paths_rec(g, word, nullptr, start, depth, budget, visit);
}

/// Same, but every visited composition starts from `base` (the cylinder map
/// of some fixed prefix ending at `vertex`).
template <class Visit>
void for_each_extension(const OrderedGifs& g, const Similitude& base, int vertex, int depth,
                        const EnumLimits& lim, Visit&& visit) {
    if (depth < 1) throw Error("for_each_extension: depth must be >= 1");
    std::size_t budget = lim.max_paths;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(depth));
    detail::paths_rec(g, word, &base, vertex, depth, budget, visit);
}

}  // namespace sfcurve
