#pragma once

#include <iosfwd>
#include <string>

#include "sfcurve/gifs.hpp"
#include "sfcurve/lattice.hpp"

namespace sfcurve {

/// GIFS text format. `#` starts a comment; tokens are whitespace separated.
///   vertex <label>
///   edge <src> -> <dst>  alpha=<re>,<im>  beta=<re>,<im>  [conj]
/// Vertices must be declared before use; edge file order per source vertex
/// is the order of the system.
OrderedGifs parse_gifs(std::istream& in);
OrderedGifs parse_gifs_text(const std::string& text);
OrderedGifs load_gifs_file(const std::string& path);

std::string serialize_gifs(const OrderedGifs& g);

/// Lattice path text format.
///   lattice square|triangle
///   pt <re>,<im>          (one per path point, in order)
///   marks +1,-1,...
///   refl 0,1,...          (optional)
MarkedLatticePath parse_lattice_path(std::istream& in);
MarkedLatticePath parse_lattice_path_text(const std::string& text);
MarkedLatticePath load_lattice_path_file(const std::string& path);

std::string serialize_lattice_path(const MarkedLatticePath& p);

}  // namespace sfcurve
