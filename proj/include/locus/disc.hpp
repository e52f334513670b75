#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "locus/core.hpp"

namespace locus {

// An unordered triangle, stored with sorted vertices.
struct Triangle {
  std::array<VertexId, 3> v;

  Triangle() : v{-1, -1, -1} {}
  Triangle(VertexId a, VertexId b, VertexId c);

  bool contains(VertexId u) const { return u == v[0] || u == v[1] || u == v[2]; }
  auto operator<=>(const Triangle&) const = default;
};

struct Violation {
  std::string rule;    // stable identifier of the failed condition
  std::string detail;  // witnesses, human readable
};

// A triangulated 2-disc: a triangle list plus a distinguished boundary
// cycle. Construction normalizes vertex ids to 0..V-1 (original ids are kept
// for reporting) and validates the combinatorial disc conditions:
//   - triangles pairwise distinct, vertices of each pairwise distinct,
//   - every non-boundary edge lies in exactly 2 triangles and every boundary
//     edge in exactly 1; the 1-triangle edges are exactly the boundary cycle,
//   - the link of each interior vertex is a single cycle, of each boundary
//     vertex a single path,
//   - the complex is connected and V - E + T = 1.
//
// On success a consistent orientation of the triangles is derived (rotation
// system), normalized so that the boundary cycle is traversed in its given
// order. The planar region machinery (enclosed_area, walk_area) relies on it.
// Instances are immutable after construction.
class SimplicialDisc {
 public:
  SimplicialDisc() = default;
  SimplicialDisc(std::vector<Triangle> triangles, std::vector<VertexId> boundary,
                 std::string name = "");

  bool valid() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::string& name() const { return name_; }

  // Queries below require valid(); they throw std::logic_error otherwise.
  int vertex_count() const;
  long edge_count() const;
  int area() const;  // = number of triangles
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<VertexId>& boundary() const { return boundary_; }
  VertexId original_id(VertexId v) const { return original_ids_[v]; }

  bool is_boundary_vertex(VertexId v) const;
  std::vector<VertexId> interior_vertices() const;
  std::vector<VertexId> boundary_vertices() const;

  bool adjacent(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;

  // Neighbors of an interior vertex in rotational order (starts at the
  // smallest neighbor, direction following the disc orientation).
  CycleSeq link_cycle(VertexId v) const;

  // The 1-skeleton as a graph container (labels = original ids).
  FlagComplex skeleton() const;

  // Succeeds iff the disc is flag as a 2-complex: every 3-clique of the
  // 1-skeleton is a triangle of the disc. On failure reports such a clique.
  struct FlagResult {
    std::optional<FlagComplex> complex;
    std::optional<Triangle> missing_clique;
  };
  FlagResult as_flag_complex() const;

  // Triangles strictly inside a simple cycle of the 1-skeleton, computed via
  // a dual-graph flood from the outer region. For C = boundary this is area().
  int enclosed_area(const CycleSeq& c) const;

  // Area enclosed by an arbitrary closed walk (consecutive vertices adjacent,
  // first = last implied): sum over triangles of |winding number|. Agrees
  // with enclosed_area on simple cycles and is additive under concatenation.
  int walk_area(const std::vector<VertexId>& closed_walk) const;

  // Windings of a closed walk per triangle (indexed like triangles()).
  std::vector<int> walk_windings(const std::vector<VertexId>& closed_walk) const;

  // Vertices strictly inside a simple cycle: vertices of enclosed triangles
  // that do not lie on the cycle itself.
  std::vector<VertexId> vertices_inside(const CycleSeq& c) const;

 private:
  void validate_and_index();
  void require_valid() const;
  int edge_index(VertexId u, VertexId v) const;  // -1 if absent

  std::string name_;
  std::vector<Triangle> triangles_;
  std::vector<VertexId> boundary_;
  std::vector<VertexId> original_ids_;
  std::vector<Violation> violations_;

  int vertex_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edge_list_;       // sorted pairs
  std::vector<std::array<int, 2>> edge_triangles_;             // per edge, -1 padded
  std::vector<std::vector<std::pair<VertexId, int>>> vertex_edges_;  // v -> (other, edge idx)
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<bool> on_boundary_;
  std::vector<std::array<VertexId, 3>> oriented_;  // triangles with consistent orientation
};

inline std::vector<Violation> validate(const SimplicialDisc& d) { return d.violations(); }

}  // namespace locus
