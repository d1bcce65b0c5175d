#include "sfcurve/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace sfcurve {

namespace {

int pick_index(const OrderedGifs& g, int v, bool lowest) {
    return lowest ? 0 : static_cast<int>(g.out_edges(v).size()) - 1;
}

ExtremeWord extreme_word(const OrderedGifs& g, int v0, bool lowest) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> verts;
    int v = v0;
    while (order[static_cast<std::size_t>(v)] < 0) {
        order[static_cast<std::size_t>(v)] = static_cast<int>(verts.size());
        verts.push_back(v);
        v = g.out_edges(v)[static_cast<std::size_t>(pick_index(g, v, lowest))].target;
    }
    const int entry = order[static_cast<std::size_t>(v)];
    ExtremeWord w;
    for (int i = 0; i < entry; ++i) w.pre.push_back(pick_index(g, verts[static_cast<std::size_t>(i)], lowest));
    for (std::size_t i = static_cast<std::size_t>(entry); i < verts.size(); ++i)
        w.cycle.push_back(pick_index(g, verts[i], lowest));
    return w;
}

Complex extreme_point(const OrderedGifs& g, int v0, bool lowest) {
    // Walk to the cycle, take the fixed point of the cycle composition, then
    // pull it back along the pre-cycle maps.
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> verts;
    int v = v0;
    while (order[static_cast<std::size_t>(v)] < 0) {
        order[static_cast<std::size_t>(v)] = static_cast<int>(verts.size());
        verts.push_back(v);
        v = g.out_edges(v)[static_cast<std::size_t>(pick_index(g, v, lowest))].target;
    }
    const std::size_t entry = static_cast<std::size_t>(order[static_cast<std::size_t>(v)]);
    Similitude comp;
    bool first = true;
    for (std::size_t i = entry; i < verts.size(); ++i) {
        const int u = verts[i];
        const Similitude& m = g.out_edges(u)[static_cast<std::size_t>(pick_index(g, u, lowest))].map;
        comp = first ? m : compose(comp, m);
        first = false;
    }
    Complex p = fixed_point(comp);
    for (std::size_t i = entry; i-- > 0;) {
        const int u = verts[i];
        p = g.out_edges(u)[static_cast<std::size_t>(pick_index(g, u, lowest))].map(p);
    }
    return p;
}

}  // namespace

HeadTailTable heads_tails(const OrderedGifs& g) {
    HeadTailTable t;
    t.rows.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        HeadTail row;
        row.head = extreme_point(g, v, true);
        row.tail = extreme_point(g, v, false);
        row.lowest = extreme_word(g, v, true);
        row.highest = extreme_word(g, v, false);
        t.rows.push_back(std::move(row));
    }
    return t;
}

PathWord extreme_path(const OrderedGifs& g, int vertex, int len, bool lowest) {
    if (vertex < 0 || vertex >= g.vertex_count()) throw Error("extreme_path: vertex out of range");
    PathWord w{vertex, {}};
    int v = vertex;
    for (int i = 0; i < len; ++i) {
        const int k = pick_index(g, v, lowest);
        w.edges.push_back(k);
        v = g.out_edges(v)[static_cast<std::size_t>(k)].target;
    }
    return w;
}

double ChainReport::max_gap() const {
    double m = 0.0;
    for (const auto& v : violations) m = std::max(m, v.gap);
    return m;
}

ChainReport chain_check(const OrderedGifs& g, double tol) {
    if (tol < 0.0) throw Error("chain_check: tol must be >= 0");
    const HeadTailTable ht = heads_tails(g);
    ChainReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& row = g.out_edges(v);
        for (std::size_t k = 0; k + 1 < row.size(); ++k) {
            const Complex left = row[k].map(ht[row[k].target].tail);
            const Complex right = row[k + 1].map(ht[row[k + 1].target].head);
            const double gap = std::abs(left - right);
            if (gap > tol)
                report.violations.push_back({v, static_cast<int>(k), gap, left, right});
        }
    }
    return report;
}

double diameter_bound(const OrderedGifs& g, const HeadTailTable& ht, int depth,
                      const EnumLimits& lim) {
    const double rmax = g.r_max();
    int d = std::max(1, depth);
    while (2.0 * std::pow(rmax, d) >= 1.0) ++d;

    auto total = [&](int k) {
        std::size_t sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::size_t c = count_paths(g, v, k);
            if (sum > std::numeric_limits<std::size_t>::max() - c)
                return std::numeric_limits<std::size_t>::max();
            sum += c;
        }
        return sum;
    };
    while (d > 1 && total(d) > lim.max_paths && 2.0 * std::pow(rmax, d - 1) < 1.0) --d;
    if (total(d) > lim.max_paths)
        throw EnumerationCapError("diameter_bound: anchor enumeration exceeds the cap");

    double spread = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
        double ymin = xmin, ymax = -xmin;
        for_each_path(g, v, d, lim, [&](const std::vector<int>&, int term, const Similitude& m) {
            const Complex p = m(ht[term].head);
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, p.imag());
            ymax = std::max(ymax, p.imag());
        });
        spread = std::max(spread, std::hypot(xmax - xmin, ymax - ymin));
    }
    const double q = std::pow(rmax, d);
    return spread / (1.0 - 2.0 * q);
}

std::vector<Complex> cylinder_anchors(const OrderedGifs& g, const PathWord& w,
                                      const HeadTailTable& ht, int depth, const EnumLimits& lim) {
    if (depth < 0) throw Error("cylinder_anchors: depth must be >= 0");
    const Similitude base = cylinder_map(g, w);
    const int start = path_target(g, w);
    std::vector<Complex> anchors;
    if (depth == 0) {
        anchors.push_back(base(ht[start].head));
        return anchors;
    }
    anchors.reserve(std::min<std::size_t>(count_paths(g, start, depth), lim.max_paths));
    for_each_extension(g, base, start, depth, lim,
                       [&](const std::vector<int>&, int term, const Similitude& m) {
                           anchors.push_back(m(ht[term].head));
                       });
    return anchors;
}

namespace {

struct CellKey {
    long long x, y;
    bool operator==(const CellKey& o) const { return x == o.x && y == o.y; }
};

struct CellHash {
    std::size_t operator()(const CellKey& k) const {
        return std::hash<long long>()(k.x * 1000003LL + k.y);
    }
};

CellKey cell_of(Complex p, double cell) {
    return {static_cast<long long>(std::floor(p.real() / cell)),
            static_cast<long long>(std::floor(p.imag() / cell))};
}

// True when no point of b comes within `thresh` of a point of a.
bool separated(const std::vector<Complex>& a, const std::vector<Complex>& b, double thresh) {
    const double cell = std::max(thresh, 1e-300);
    std::unordered_map<CellKey, std::vector<Complex>, CellHash> grid;
    grid.reserve(a.size() * 2);
    for (Complex p : a) grid[cell_of(p, cell)].push_back(p);
    for (Complex q : b) {
        const CellKey c = cell_of(q, cell);
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = grid.find({c.x + dx, c.y + dy});
                if (it == grid.end()) continue;
                for (Complex p : it->second) {
                    if (std::abs(p - q) <= thresh) return false;
                }
            }
        }
    }
    return true;
}

double min_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex p : a) {
        for (Complex q : b) best = std::min(best, std::abs(p - q));
    }
    return best;
}

}  // namespace

ProbeReport linearity_probe(const OrderedGifs& g, const HeadTailTable& ht, double diam_bound,
                            int k, int sample_depth, double eps, const EnumLimits& lim) {
    if (k < 1) throw Error("linearity_probe: k must be >= 1");
    if (sample_depth < 0) throw Error("linearity_probe: sample_depth must be >= 0");
    const double thresh = eps + 2.0 * diam_bound * std::pow(g.r_max(), sample_depth);

    ProbeReport report;
    report.threshold = thresh;

    struct Cyl {
        PathWord word;
        int term;
        Similitude map;
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<Cyl> cyls;
        cyls.reserve(std::min<std::size_t>(count_paths(g, v, k), lim.max_paths));
        for_each_path(g, v, k, lim, [&](const std::vector<int>& w, int term, const Similitude& m) {
            cyls.push_back({PathWord{v, w}, term, m});
        });

        auto anchors_of = [&](const Cyl& c) {
            std::vector<Complex> pts;
            if (sample_depth == 0) {
                pts.push_back(c.map(ht[c.term].head));
                return pts;
            }
            pts.reserve(std::min<std::size_t>(count_paths(g, c.term, sample_depth), lim.max_paths));
            for_each_extension(g, c.map, c.term, sample_depth, lim,
                               [&](const std::vector<int>&, int term, const Similitude& m) {
                                   pts.push_back(m(ht[term].head));
                               });
            return pts;
        };

        std::vector<Complex> prev, cur;
        for (std::size_t i = 0; i < cyls.size(); ++i) {
            cur = anchors_of(cyls[i]);
            if (i > 0 && separated(prev, cur, thresh)) {
                double dist = thresh;
                if (prev.size() * cur.size() <= 1'000'000) dist = min_distance(prev, cur);
                report.separated.push_back({v, cyls[i - 1].word, cyls[i].word, dist, thresh});
            }
            prev.swap(cur);
        }
    }
    return report;
}

ProbeReport linearity_probe(const OrderedGifs& g, int k, int sample_depth, double eps,
                            const EnumLimits& lim) {
    const HeadTailTable ht = heads_tails(g);
    const double diam = diameter_bound(g, ht, 8, lim);
    return linearity_probe(g, ht, diam, k, sample_depth, eps, lim);
}

}  // namespace sfcurve
