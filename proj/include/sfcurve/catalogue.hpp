#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfcurve/gifs.hpp"
#include "sfcurve/render.hpp"

namespace sfcurve {

/// A named built-in system. Every entry is self-checked on first access:
/// the chain condition must pass at 1e-9 and the computed similarity
/// dimension must match `expected_delta` to 1e-9.
struct CatalogueEntry {
    std::string name;
    OrderedGifs gifs;
    InitialPattern pattern;
    double expected_delta = 0.0;
    std::string provenance;
    /// Set when the defining data was reconstructed (from an enumeration
    /// oracle or a symmetry argument) rather than taken verbatim.
    bool reconstructed = false;
};

std::vector<std::string> catalogue_names();
const CatalogueEntry& catalogue_get(std::string_view name);

}  // namespace sfcurve
