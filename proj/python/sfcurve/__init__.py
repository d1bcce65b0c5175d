"""Ordered graph-directed IFS toolkit.

Chain-condition checking, similarity dimension, optimal parametrization
evaluation, lattice-path systems and SVG approximation curves, backed by the
C++ core in sfcurve._core.
"""

from sfcurve._core import (
    CatalogueEntry,
    OrderedGifs,
    Parametrizer,
    Similitude,
    SfcurveError,
    SpectralData,
    analyze,
    approximate,
    build_gifs_from_path,
    catalogue_get,
    catalogue_names,
    chain_check,
    compose,
    fixed_point,
    heads_tails,
    linearity_probe,
    render_svg,
    reptile_report,
    solve_dimension,
)

__all__ = [
    "CatalogueEntry",
    "OrderedGifs",
    "Parametrizer",
    "Similitude",
    "SfcurveError",
    "SpectralData",
    "analyze",
    "approximate",
    "build_gifs_from_path",
    "catalogue_get",
    "catalogue_names",
    "chain_check",
    "compose",
    "fixed_point",
    "heads_tails",
    "linearity_probe",
    "render_svg",
    "reptile_report",
    "solve_dimension",
]

__version__ = "0.1.0"
