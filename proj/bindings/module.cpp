#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfcurve/catalogue.hpp"
#include "sfcurve/chain.hpp"
#include "sfcurve/lattice.hpp"
#include "sfcurve/recording.hpp"
#include "sfcurve/render.hpp"
#include "sfcurve/spectral.hpp"
#include "sfcurve/textio.hpp"

namespace py = pybind11;
using namespace sfcurve;

namespace {

std::vector<std::pair<Polyline, PolylineStyle>> styled(const std::vector<Polyline>& polylines) {
    std::vector<std::pair<Polyline, PolylineStyle>> items;
    const int n = static_cast<int>(polylines.size());
    for (int k = 0; k < n; ++k)
        items.push_back({polylines[static_cast<std::size_t>(k)], PolylineStyle{strand_color(k, n)}});
    return items;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ordered graph-directed IFS: chain condition, similarity dimension, "
              "optimal parametrization, approximation curves";

    py::register_exception<Error>(m, "SfcurveError");

    py::class_<Similitude>(m, "Similitude")
        .def(py::init([](Complex alpha, Complex beta, bool conj) {
                 return Similitude{alpha, beta, conj};
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("conj") = false)
        .def_readonly("alpha", &Similitude::alpha)
        .def_readonly("beta", &Similitude::beta)
        .def_readonly("conj", &Similitude::conj)
        .def("ratio", &Similitude::ratio)
        .def("__call__", [](const Similitude& s, Complex z) { return s(z); })
        .def("__repr__", [](const Similitude& s) {
            return "Similitude(alpha=(" + std::to_string(s.alpha.real()) + "," +
                   std::to_string(s.alpha.imag()) + "), beta=(" + std::to_string(s.beta.real()) +
                   "," + std::to_string(s.beta.imag()) + ")" + (s.conj ? ", conj" : "") + ")";
        });

    m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
    m.def("fixed_point", &fixed_point, py::arg("s"));

    py::class_<OrderedGifs>(m, "OrderedGifs")
        .def_static("from_text", &parse_gifs_text, py::arg("text"))
        .def("to_text", [](const OrderedGifs& g) { return serialize_gifs(g); })
        .def_property_readonly("labels", &OrderedGifs::labels)
        .def("vertex_count", &OrderedGifs::vertex_count)
        .def("find_vertex", &OrderedGifs::find_vertex)
        .def("edge_count", &OrderedGifs::edge_count)
        .def("r_min", &OrderedGifs::r_min)
        .def("r_max", &OrderedGifs::r_max)
        .def("strongly_connected", &OrderedGifs::strongly_connected)
        .def("edges",
             [](const OrderedGifs& g, int v) {
                 std::vector<std::pair<std::string, Similitude>> out;
                 for (const Edge& e : g.out_edges(v)) out.push_back({g.label(e.target), e.map});
                 return out;
             },
             py::arg("vertex"));

    m.def("heads_tails", [](const OrderedGifs& g) {
        const HeadTailTable t = heads_tails(g);
        std::vector<std::pair<Complex, Complex>> out;
        for (const auto& row : t.rows) out.push_back({row.head, row.tail});
        return out;
    });

    m.def(
        "chain_check",
        [](const OrderedGifs& g, double tol) {
            const ChainReport rep = chain_check(g, tol);
            py::list violations;
            for (const auto& v : rep.violations) {
                py::dict d;
                d["vertex"] = g.label(v.vertex);
                d["pair"] = py::make_tuple(v.edge_index + 1, v.edge_index + 2);
                d["gap"] = v.gap;
                d["left"] = v.left;
                d["right"] = v.right;
                violations.append(d);
            }
            py::dict out;
            out["pass"] = rep.pass();
            out["violations"] = violations;
            return out;
        },
        py::arg("gifs"), py::arg("tol") = 1e-9);

    m.def(
        "linearity_probe",
        [](const OrderedGifs& g, int k, int sample_depth, double eps) {
            const ProbeReport rep = linearity_probe(g, k, sample_depth, eps);
            py::dict out;
            out["pass"] = rep.pass();
            out["threshold"] = rep.threshold;
            out["separated_pairs"] = rep.separated.size();
            return out;
        },
        py::arg("gifs"), py::arg("k"), py::arg("sample_depth") = 4, py::arg("eps") = 1e-9);

    m.def("solve_dimension", &solve_dimension, py::arg("gifs"));

    py::class_<SpectralData>(m, "SpectralData")
        .def_readonly("delta", &SpectralData::delta)
        .def_readonly("h", &SpectralData::h)
        .def_readonly("p", &SpectralData::p);
    m.def("analyze", &analyze, py::arg("gifs"));

    py::class_<Parametrizer>(m, "Parametrizer")
        .def(py::init<OrderedGifs>(), py::arg("gifs"))
        .def("length", &Parametrizer::length, py::arg("vertex"))
        .def("diam_bound", &Parametrizer::diam_bound)
        .def("holder_constant", &Parametrizer::holder_constant)
        .def("psi", &Parametrizer::psi, py::arg("vertex"), py::arg("x"), py::arg("tol") = 1e-9)
        .def("psi_unit", &Parametrizer::psi_unit, py::arg("vertex"), py::arg("u"),
             py::arg("tol") = 1e-9)
        .def("psi_batch", &Parametrizer::psi_batch, py::arg("vertex"), py::arg("ts"),
             py::arg("tol") = 1e-9);

    py::class_<CatalogueEntry>(m, "CatalogueEntry")
        .def_readonly("name", &CatalogueEntry::name)
        .def_readonly("gifs", &CatalogueEntry::gifs)
        .def_readonly("expected_delta", &CatalogueEntry::expected_delta)
        .def_readonly("provenance", &CatalogueEntry::provenance)
        .def_readonly("reconstructed", &CatalogueEntry::reconstructed)
        .def_property_readonly("pattern", [](const CatalogueEntry& e) {
            return e.pattern.per_vertex;
        });
    m.def("catalogue_names", &catalogue_names);
    m.def("catalogue_get",
          [](const std::string& name) { return catalogue_get(name); },
          py::arg("name"), py::return_value_policy::copy);

    m.def(
        "approximate",
        [](const OrderedGifs& g, int vertex, int depth,
           const std::vector<Polyline>& pattern) {
            InitialPattern pat;
            if (pattern.empty())
                pat = default_pattern(g, heads_tails(g));
            else
                pat.per_vertex = pattern;
            return approximate(g, pat, vertex, depth);
        },
        py::arg("gifs"), py::arg("vertex"), py::arg("depth"),
        py::arg("pattern") = std::vector<Polyline>{});

    m.def(
        "render_svg",
        [](const OrderedGifs& g, int depth, const std::vector<Polyline>& pattern, double shrink) {
            InitialPattern pat;
            if (pattern.empty())
                pat = default_pattern(g, heads_tails(g));
            else
                pat.per_vertex = pattern;
            if (shrink > 0.0) pat = shrink_pattern(pat, shrink);
            std::vector<Polyline> polys;
            for (int v = 0; v < g.vertex_count(); ++v) polys.push_back(approximate(g, pat, v, depth));
            return to_svg(styled(polys));
        },
        py::arg("gifs"), py::arg("depth"), py::arg("pattern") = std::vector<Polyline>{},
        py::arg("shrink") = 0.0);

    m.def(
        "build_gifs_from_path",
        [](const std::string& path_text) { return build_gifs(parse_lattice_path_text(path_text)); },
        py::arg("path_text"));

    m.def(
        "reptile_report",
        [](const std::string& path_text, int depth) {
            const MarkedLatticePath p = parse_lattice_path_text(path_text);
            const ReptileReport r = reptile_flag(p, depth);
            py::dict d;
            d["ratio_condition"] = r.ratio_condition;
            d["duplicate_maps"] = r.duplicate_maps;
            d["cell_collisions"] = r.cell_collisions;
            d["overlap_suspected"] = r.overlap_suspected;
            return d;
        },
        py::arg("path_text"), py::arg("depth") = 5);
}
