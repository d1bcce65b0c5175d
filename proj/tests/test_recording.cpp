#include <doctest.h>

#include <algorithm>

#include "sfcurve/catalogue.hpp"
#include "sfcurve/recording.hpp"
#include "support.hpp"

using namespace sfcurve;

namespace {

const Parametrizer& heighway_par() {
    static const Parametrizer par{catalogue_get("heighway").gifs};
    return par;
}

const Parametrizer& koch_par() {
    static const Parametrizer par{catalogue_get("koch").gifs};
    return par;
}

}  // namespace

TEST_CASE("recording intervals") {
    const Parametrizer& hw = heighway_par();
    const RecordingSystem& rs = hw.recording();
    REQUIRE(rs.lengths.size() == 2);
    CHECK(rs.lengths[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rs.pieces[0][0].offset == 0.0);
    CHECK(rs.pieces[0][1].offset == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rs.pieces[0][0].scaled_ratio == doctest::Approx(0.5).epsilon(1e-9));

    const RecordingSystem& koch = koch_par().recording();
    for (int k = 0; k < 4; ++k)
        CHECK(koch.pieces[0][static_cast<std::size_t>(k)].offset ==
              doctest::Approx(k / 4.0).epsilon(1e-9));

    // one-edge degenerate system is accepted
    const OrderedGifs loop({"1"}, {{{0, {{0.5, 0}, {0.25, 0}, false}}}});
    const SpectralData sd = analyze(loop);
    const RecordingSystem lrs = build_recording(loop, sd);
    CHECK(lrs.pieces[0].size() == 1);
}

TEST_CASE("interval partition closes to h_i for every catalogue entry") {
    for (const auto& name : catalogue_names()) {
        const OrderedGifs& g = catalogue_get(name).gifs;
        const SpectralData sd = analyze(g);
        const RecordingSystem rs = build_recording(g, sd);
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& ps = rs.pieces[static_cast<std::size_t>(v)];
            double end = ps.back().offset +
                         ps.back().scaled_ratio *
                             sd.h[static_cast<std::size_t>(g.out_edges(v).back().target)];
            CHECK(end == doctest::Approx(sd.h[static_cast<std::size_t>(v)]).epsilon(1e-12));
        }
    }
}

TEST_CASE("encode digit extraction") {
    const Parametrizer& hw = heighway_par();
    const OrderedGifs& g = hw.gifs();
    const RecordingSystem& rs = hw.recording();

    const PathWord lo = encode(rs, g, 0, 0.0, 8);
    CHECK(std::all_of(lo.edges.begin(), lo.edges.end(), [](int e) { return e == 0; }));
    const PathWord hi = encode(rs, g, 0, hw.length(0), 8);
    CHECK(std::all_of(hi.edges.begin(), hi.edges.end(), [](int e) { return e == 1; }));

    // the breakpoint goes to the upper cylinder
    const PathWord mid = encode(rs, g, 0, 0.5, 1);
    REQUIRE(mid.edges.size() == 1);
    CHECK(mid.edges[0] == 1);

    CHECK_THROWS_AS(encode(rs, g, 0, -0.1, 4), Error);
    CHECK_THROWS_AS(encode(rs, g, 0, 1.1, 4), Error);
}

TEST_CASE("cylinder length identity: recording interval equals Markov mass") {
    auto rnd = testsup::rng(71);
    for (const auto& name : {"heighway", "gosper", "four-star"}) {
        const Parametrizer par{catalogue_get(name).gifs};
        const OrderedGifs& g = par.gifs();
        const RecordingSystem& rs = par.recording();
        const SpectralData& sd = par.spectral();
        for (int i = 0; i < 30; ++i) {
            const int start = testsup::uniform_int(rnd, 0, g.vertex_count() - 1);
            int v = start;
            double interval_len = sd.h[static_cast<std::size_t>(start)];
            double mass = sd.h[static_cast<std::size_t>(start)];
            double ratio_pow = 1.0;
            for (int k = 0; k < 6; ++k) {
                const int deg = static_cast<int>(g.out_edges(v).size());
                const int e = testsup::uniform_int(rnd, 0, deg - 1);
                interval_len = rs.pieces[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)]
                                   .scaled_ratio *
                               interval_len / sd.h[static_cast<std::size_t>(v)] *
                               sd.h[static_cast<std::size_t>(
                                   g.out_edges(v)[static_cast<std::size_t>(e)].target)];
                mass *= sd.p[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)];
                ratio_pow *= std::pow(g.out_edges(v)[static_cast<std::size_t>(e)].map.ratio(),
                                      sd.delta);
                v = g.out_edges(v)[static_cast<std::size_t>(e)].target;
            }
            // h_t(w) * prod r^delta equals the Markov mass of the cylinder
            const double direct = sd.h[static_cast<std::size_t>(v)] * ratio_pow;
            CHECK(direct == doctest::Approx(mass).epsilon(1e-12));
            CHECK(interval_len == doctest::Approx(mass).epsilon(1e-12));
        }
    }
}

TEST_CASE("project") {
    const Parametrizer& hw = heighway_par();
    const OrderedGifs& g = hw.gifs();
    const HeadTailTable& ht = hw.table();
    CHECK(std::abs(project(g, ht, PathWord{0, {0}})) < 1e-14);  // phi_1(0) = 0
    // the lowest word projects to the head at every depth
    for (int n : {1, 3, 10})
        CHECK(std::abs(project(g, ht, extreme_path(g, 0, n, true)) - ht[0].head) < 1e-12);
}

TEST_CASE("psi endpoints, midpoint and quarter point") {
    const Parametrizer& hw = heighway_par();
    const double h = hw.length(0);
    CHECK(std::abs(hw.psi(0, 0.0, 1e-9) - Complex{0, 0}) < 1e-6);
    CHECK(std::abs(hw.psi(0, h, 1e-9) - Complex{1, 1}) < 1e-6);
    CHECK(std::abs(hw.psi(0, 0.5 * h, 1e-9) - Complex{1, 0}) < 1e-6);
    CHECK(std::abs(hw.psi_unit(0, 1.0, 1e-9) - Complex{1, 1}) < 1e-6);

    CHECK_THROWS_AS(hw.psi(0, 0.1, 0.0), Error);
    CHECK_THROWS_AS(hw.psi(0, 2.0, 1e-9), Error);
}

TEST_CASE("psi_batch equals pointwise psi") {
    auto rnd = testsup::rng(72);
    for (const auto& name : {"heighway", "koch", "four-star"}) {
        const Parametrizer par{catalogue_get(name).gifs};
        std::vector<double> ts;
        for (int i = 0; i < 64; ++i) ts.push_back(testsup::uniform(rnd, 0.0, par.length(0)));
        std::sort(ts.begin(), ts.end());
        const auto batch = par.psi_batch(0, ts, 1e-9);
        for (std::size_t i = 0; i < ts.size(); ++i)
            CHECK(std::abs(batch[i] - par.psi(0, ts[i], 1e-9)) <= 1e-12);
    }
    const auto empty = heighway_par().psi_batch(0, {}, 1e-9);
    CHECK(empty.empty());
    const auto ends = heighway_par().psi_batch(0, {0.0, heighway_par().length(0)}, 1e-9);
    CHECK(std::abs(ends[0]) < 1e-6);
    CHECK(std::abs(ends[1] - Complex{1, 1}) < 1e-6);
}

TEST_CASE("holder constant plug-in values") {
    const Parametrizer& koch = koch_par();
    CHECK(koch.holder_constant() ==
          doctest::Approx(6.0 * koch.diam_bound()).epsilon(1e-12));
    const Parametrizer& hw = heighway_par();
    CHECK(hw.holder_constant() ==
          doctest::Approx(2.0 * std::sqrt(2.0) * hw.diam_bound()).epsilon(1e-12));
}

TEST_CASE("holder constant scales linearly with the system") {
    const OrderedGifs koch = catalogue_get("koch").gifs;
    std::vector<Edge> scaled_row;
    for (const Edge& e : koch.out_edges(0))
        scaled_row.push_back({0, {e.map.alpha, 2.0 * e.map.beta, e.map.conj}});
    const Parametrizer a{koch};
    const Parametrizer b{OrderedGifs({"1"}, {std::move(scaled_row)})};
    CHECK(b.holder_constant() == doctest::Approx(2.0 * a.holder_constant()).epsilon(1e-9));
}

TEST_CASE("uniform psi samples respect the Holder bound between neighbors") {
    const Parametrizer& par = koch_par();
    const double h = par.length(0);
    const double c = par.holder_constant();
    const double inv = 1.0 / par.spectral().delta;
    std::vector<double> ts;
    const int n = 1000;
    for (int i = 0; i <= n; ++i) ts.push_back(h * i / n);
    const auto pts = par.psi_batch(0, ts, 1e-10);
    for (int i = 0; i < n; ++i)
        CHECK(std::abs(pts[static_cast<std::size_t>(i) + 1] - pts[static_cast<std::size_t>(i)]) <=
              c * std::pow(h / n, inv));
}

TEST_CASE("holder bound holds on random pairs") {
    auto rnd = testsup::rng(73);
    for (const Parametrizer* par : {&koch_par(), &heighway_par()}) {
        const double c = par->holder_constant();
        const double h = par->length(0);
        const double inv = 1.0 / par->spectral().delta;
        for (int i = 0; i < 2000; ++i) {
            const double x = testsup::uniform(rnd, 0.0, h);
            double y = testsup::uniform(rnd, 0.0, h);
            if (std::abs(x - y) < 1e-8) continue;
            const double lhs = std::abs(par->psi(0, x, 1e-10) - par->psi(0, y, 1e-10));
            CHECK(lhs <= c * std::pow(std::abs(x - y), inv));
        }
    }
}

TEST_CASE("breakpoint well-definedness at depth 3") {
    for (const auto& name : {"heighway", "koch", "sierpinski-curve"}) {
        const Parametrizer par{catalogue_get(name).gifs};
        const OrderedGifs& g = par.gifs();
        const HeadTailTable& ht = par.table();
        const double bound = 2.0 * par.diam_bound() * std::pow(g.r_max(), 40);
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<PathWord> words;
            for_each_path(g, v, 3, {}, [&](const std::vector<int>& w, int, const Similitude&) {
                words.push_back(PathWord{v, w});
            });
            for (std::size_t i = 0; i + 1 < words.size(); ++i) {
                PathWord left = words[i];
                int lv = path_target(g, left);
                for (int k = 0; k < 37; ++k) {
                    const int e = static_cast<int>(g.out_edges(lv).size()) - 1;
                    left.edges.push_back(e);
                    lv = g.out_edges(lv)[static_cast<std::size_t>(e)].target;
                }
                PathWord right = words[i + 1];
                int rv = path_target(g, right);
                for (int k = 0; k < 37; ++k) {
                    right.edges.push_back(0);
                    rv = g.out_edges(rv)[0].target;
                }
                CHECK(std::abs(project(g, ht, left) - project(g, ht, right)) <= bound + 1e-13);
            }
        }
    }
}

TEST_CASE("coding frequencies match the Markov weights") {
    const Parametrizer& hw = heighway_par();
    auto rnd = testsup::rng(74);
    const int samples = 20000;
    std::vector<int> counts(16, 0);
    for (int i = 0; i < samples; ++i) {
        const double x = testsup::uniform(rnd, 0.0, hw.length(0));
        const PathWord w = hw.encode(0, x, 4);
        int idx = 0;
        for (int e : w.edges) idx = idx * 2 + e;
        ++counts[static_cast<std::size_t>(idx)];
    }
    const double p = 1.0 / 16.0;
    const double margin = 4.0 * std::sqrt(p * (1 - p) / samples);
    for (int c : counts) CHECK(std::abs(static_cast<double>(c) / samples - p) <= margin);
}

TEST_CASE("almost one-to-one proxy") {
    const Parametrizer& hw = heighway_par();
    auto rnd = testsup::rng(75);
    const double h = hw.length(0);
    int close = 0;
    const int pairs = 2000;
    for (int i = 0; i < pairs; ++i) {
        double x = testsup::uniform(rnd, 0.0, h), y = testsup::uniform(rnd, 0.0, h);
        if (std::abs(x - y) <= 1e-3 * h) {
            --i;
            continue;
        }
        if (std::abs(hw.psi(0, x, 1e-9) - hw.psi(0, y, 1e-9)) <= 1e-6 * hw.diam_bound()) ++close;
    }
    CHECK(static_cast<double>(close) / pairs < 0.01);
}
