#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locus/core.hpp"
#include "locus/disc.hpp"

namespace locus {

// A filling diagram for a loop in a flag complex: a triangulated disc, a
// vertex map into the target, and the loop itself. The boundary of the disc
// is identified position-by-position with the loop (boundary()[i] maps to
// loop.vertices[i]).
struct FillingDiagram {
  CycleSeq loop;
  SimplicialDisc disc;
  std::vector<VertexId> vertex_map;  // disc vertex -> target vertex
};

// True iff every disc edge maps to an edge or a vertex of the target and
// every triangle image is a clique (of size 1, 2 or 3).
bool map_is_simplicial(const SimplicialDisc& disc, const std::vector<VertexId>& vertex_map,
                       const FlagComplex& target);

// True iff every triangle maps to three pairwise-distinct vertices.
bool map_is_nondegenerate(const SimplicialDisc& disc, const std::vector<VertexId>& vertex_map);

struct CheckResult {
  bool ok = true;
  std::string detail;  // witness description when not ok
};

// FillingDiagram invariants: disc valid, map total and simplicial, and the
// boundary maps bijectively onto the loop preserving the cyclic order.
CheckResult check_filling_diagram(const FillingDiagram& d, const FlagComplex& target);

// Minimal diagrams are expected to be simplicial and nondegenerate.
CheckResult check_simplicial_nondegenerate(const FillingDiagram& d, const FlagComplex& target);

// Minimal diagrams are expected to map edge-adjacent triangles to distinct
// image vertex sets.
CheckResult check_adjacent_triangle_images(const FillingDiagram& d);

// Minimal diagrams are expected to map the link cycle of every interior
// vertex of degree 4..7 to pairwise-distinct vertices.
CheckResult check_interior_link_images(const FillingDiagram& d);

struct FillOutcome {
  enum class Status { found, not_found_within_budget };
  Status status = Status::not_found_within_budget;
  std::optional<FillingDiagram> diagram;
  long nodes_explored = 0;
};

// Exact minimal-area filling search, iterative deepening on the area within
// `area_budget`. Ties between equal-area diagrams are broken by the
// lexicographically least canonical encoding, so identical inputs yield
// identical diagrams. Throws std::invalid_argument if the loop is not a
// cycle of the target or the budget is < 1.
//
// The search fills the loop inward, maintaining the boundary word of the
// not-yet-filled region. Moves:
//   - attach a triangle along one region edge (a,b) with a fresh vertex x,
//     where the image of x is adjacent-or-equal to the images of a and b;
//   - attach an ear along two consecutive region edges (a,b),(b,c), legal
//     when the disc edge (a,c) does not already exist and the images of a,c
//     are adjacent or equal;
//   - close the region when its boundary is a triangle.
// Every triangulated disc is reachable this way: in reverse, a region with
// no ear and with every boundary-edge triangle closing a chord would give a
// chord whose shorter arc is minimal yet properly contains another chord or
// an ear, a contradiction; so some boundary edge always carries an ear or a
// fresh-vertex triangle. A naive oracle in the test suite double-checks
// exactness on small instances.
FillOutcome minimal_filling(const FlagComplex& target, const CycleSeq& loop, int area_budget);

// Default search budget for a loop when none is given.
int default_fill_budget(const CycleSeq& loop);

}  // namespace locus
