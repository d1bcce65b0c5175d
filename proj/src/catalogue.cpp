#include "sfcurve/catalogue.hpp"

#include <cmath>
#include <numbers>

#include "sfcurve/chain.hpp"
#include "sfcurve/lattice.hpp"
#include "sfcurve/spectral.hpp"

namespace sfcurve {

namespace {

using std::numbers::pi;

InitialPattern points_pattern(std::vector<Complex> pts) {
    InitialPattern pat;
    for (Complex p : pts) pat.per_vertex.push_back({p});
    return pat;
}

CatalogueEntry from_path(std::string name, MarkedLatticePath path, InitialPattern pattern,
                         double delta, std::string provenance, bool reconstructed) {
    OrderedGifs g = build_gifs(path);
    if (pattern.per_vertex.empty()) pattern = default_pattern(g, heads_tails(g));
    return {std::move(name), std::move(g), std::move(pattern), delta, std::move(provenance),
            reconstructed};
}

CatalogueEntry make_heighway() {
    MarkedLatticePath p{LatticeKind::square, {{0, 0}, {1, 0}, {1, 1}}, {1, -1}, {}};
    return from_path("heighway", std::move(p), points_pattern({{0.5, 0.5}, {0.5, 0.5}}), 2.0,
                     "Heighway dragon: two-state system of the marked staircase path 0,1,1+i",
                     false);
}

CatalogueEntry make_hilbert() {
    MarkedLatticePath p{
        LatticeKind::square, {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 0}}, {-1, 1, 1, -1}, {}};
    return from_path("hilbert", std::move(p), points_pattern({{1, 1}, {1, 1}}), 2.0,
                     "Hilbert curve: two-state system of the marked arch path 0,i,1+i,2+i,2 "
                     "(path reconstructed; validated by the enumeration oracle)",
                     true);
}

CatalogueEntry make_peano() {
    // Trace through the diagonal square with corners 0 and 3; the interior
    // lattice points 1 and 2 are necessarily visited twice (the segment
    // adjacency graph has two degree-4 vertices, so no self-avoiding trace
    // exists).
    MarkedLatticePath p{LatticeKind::square,
                        {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 0}, {1, -1}, {2, -1}, {2, 0}, {3, 0}},
                        {1, 1, 1, 1, 1, 1, 1, 1, 1},
                        {}};
    return from_path("peano", std::move(p), points_pattern({{1.5, 0.0}}), 2.0,
                     "Peano curve: all-forward 9-segment path filling the square with corners "
                     "0 and 3 (trace reconstructed; lexicographically least survivor of the "
                     "enumeration oracle)",
                     true);
}

MarkedLatticePath gosper_trace(std::vector<int> marks) {
    const Complex w = std::polar(1.0, 2.0 * pi / 3.0);  // primitive lattice direction
    auto tri = [&](double a, double b) { return Complex{a, 0} + b * w; };
    return {LatticeKind::triangle,
            {tri(0, 0), tri(1, 0), tri(2, 1), tri(1, 1), tri(1, 2), tri(2, 2), tri(3, 2), tri(3, 1)},
            std::move(marks),
            {}};
}

CatalogueEntry make_gosper() {
    auto p = gosper_trace({1, -1, -1, 1, 1, 1, -1});
    return from_path("gosper", std::move(p), {}, 2.0,
                     "Gosper curve: marked 7-segment trace on the triangle lattice, d = 2 + "
                     "exp(i*pi/3)",
                     false);
}

CatalogueEntry make_anti_gosper() {
    auto p = gosper_trace({1, 1, -1, -1, 1, -1, -1});
    return from_path("anti-gosper", std::move(p), {}, 2.0,
                     "anti-Gosper curve: the other admissible marking of the Gosper trace",
                     false);
}

CatalogueEntry make_koch() {
    const Complex rot = std::polar(1.0 / 3.0, pi / 3.0);
    const Complex apex{0.5, std::sqrt(3.0) / 6.0};
    std::vector<Edge> row{
        {0, {{1.0 / 3.0, 0.0}, {0, 0}, false}},
        {0, {rot, {1.0 / 3.0, 0.0}, false}},
        {0, {std::conj(rot), apex, false}},
        {0, {{1.0 / 3.0, 0.0}, {2.0 / 3.0, 0.0}, false}},
    };
    OrderedGifs g({"1"}, {std::move(row)});
    InitialPattern pat = default_pattern(g, heads_tails(g));
    return {"koch", std::move(g), std::move(pat), std::log(4.0) / std::log(3.0),
            "von Koch curve: the standard 4-map linear IFS on [0,1]", false};
}

CatalogueEntry make_sierpinski() {
    // Four corner triangles of the unit square, each split into four halves
    // by segments through the hypotenuse midpoint. T1 sits on the bottom
    // edge; T2, T3, T4 follow counterclockwise (right, top, left). The T1 row
    // is given; the others are its conjugates under the quarter turn about
    // the square's center, which is the unique rotation assignment passing
    // the chain check (see the reconstruction test).
    auto half = [](Complex b, int target) {
        return Edge{target, {{0.5, 0.0}, 0.5 * b, false}};
    };
    const Complex one{1, 0}, i{0, 1};
    std::vector<std::vector<Edge>> rows{
        {half(0, 0), half(0, 1), half(one, 3), half(one, 0)},
        {half(one, 1), half(one, 2), half(one + i, 0), half(one + i, 1)},
        {half(one + i, 2), half(one + i, 3), half(i, 1), half(i, 2)},
        {half(i, 3), half(i, 0), half(0, 2), half(0, 3)},
    };
    OrderedGifs g({"T1", "T2", "T3", "T4"}, std::move(rows));
    InitialPattern pat = default_pattern(g, heads_tails(g));
    return {"sierpinski-curve", std::move(g), std::move(pat), 2.0,
            "Sierpinski curve: four triangle states tiling the unit square (rows for T2..T4 "
            "reconstructed by the rotation search oracle)",
            true};
}

CatalogueEntry make_four_star() {
    const Similitude s1{{-0.5, 0.0}, {0, 0}, false};
    const Similitude s2{{-0.5, 0.0}, {0, -1}, false};
    const Similitude s3{{-0.5, 0.0}, std::polar(1.0, 5.0 * pi / 6.0), false};
    const Similitude s4{{-0.5, 0.0}, std::polar(1.0, pi / 6.0), false};
    // vertex order: X Y Z U V W
    enum { X, Y, Z, U, V, W };
    std::vector<std::vector<Edge>> rows{
        {{U, s3}, {V, s3}, {W, s3}, {U, s1}},
        {{V, s1}, {Z, s4}, {U, s4}, {V, s4}},
        {{W, s4}, {X, s4}, {Y, s4}, {W, s1}},
        {{X, s1}, {V, s2}, {W, s2}, {X, s2}},
        {{Y, s2}, {Z, s2}, {U, s2}, {Y, s1}},
        {{Z, s1}, {X, s3}, {Y, s3}, {Z, s3}},
    };
    OrderedGifs g({"X", "Y", "Z", "U", "V", "W"}, std::move(rows));
    InitialPattern pat = default_pattern(g, heads_tails(g));
    return {"four-star", std::move(g), std::move(pat), 2.0,
            "four-star tile: six boundary-arc states over the maps -z/2 + b", false};
}

CatalogueEntry self_check(CatalogueEntry e) {
    if (!chain_check(e.gifs, 1e-9).pass())
        throw Error("catalogue: entry '" + e.name + "' fails the chain condition");
    if (std::abs(solve_dimension(e.gifs) - e.expected_delta) > 1e-9)
        throw Error("catalogue: entry '" + e.name + "' has an unexpected dimension");
    return e;
}

const std::vector<CatalogueEntry>& entries() {
    static const std::vector<CatalogueEntry> all = [] {
        std::vector<CatalogueEntry> v;
        v.push_back(self_check(make_heighway()));
        v.push_back(self_check(make_hilbert()));
        v.push_back(self_check(make_peano()));
        v.push_back(self_check(make_gosper()));
        v.push_back(self_check(make_anti_gosper()));
        v.push_back(self_check(make_sierpinski()));
        v.push_back(self_check(make_four_star()));
        v.push_back(self_check(make_koch()));
        return v;
    }();
    return all;
}

}  // namespace

std::vector<std::string> catalogue_names() {
    std::vector<std::string> names;
    for (const auto& e : entries()) names.push_back(e.name);
    return names;
}

const CatalogueEntry& catalogue_get(std::string_view name) {
    for (const auto& e : entries()) {
        if (e.name == name) return e;
    }
    throw Error("unknown catalogue entry '" + std::string(name) + "'");
}

}  // namespace sfcurve
