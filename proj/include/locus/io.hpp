#pragma once

#include <iosfwd>
#include <string>

#include "locus/core.hpp"
#include "locus/disc.hpp"

namespace locus {

struct LoadOptions {
  int max_vertices = FlagComplex::kDefaultMaxVertices;
};

// Complex file format:
//   complex <name> <vertex-count>
//   edge <u> <v>        (one line per edge; ids 0-based, or quoted labels)
//   # comments and blank lines allowed
// Rejects self-loops, duplicate edges, and complexes over the vertex limit.
FlagComplex read_complex(std::istream& in, const LoadOptions& opts = {});
FlagComplex load_complex(const std::string& path, const LoadOptions& opts = {});
void write_complex(std::ostream& out, const FlagComplex& x);
void save_complex(const std::string& path, const FlagComplex& x);

// Disc file format:
//   disc <name>
//   tri <a> <b> <c>     (one line per triangle)
//   boundary <v0> <v1> ... <vn-1>
// The validator runs on load; an invalid disc is returned with its violation
// list intact (callers decide whether that is an error).
SimplicialDisc read_disc(std::istream& in);
SimplicialDisc load_disc(const std::string& path);
void write_disc(std::ostream& out, const SimplicialDisc& d);
void save_disc(const std::string& path, const SimplicialDisc& d);

// Diagram output format: the disc block, then one `map <disc-vertex>
// <complex-vertex>` line per vertex, then `area <N>`.
void write_diagram(std::ostream& out, const SimplicialDisc& disc,
                   const std::vector<VertexId>& vertex_map, const FlagComplex& target);

}  // namespace locus
