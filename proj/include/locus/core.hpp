#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace locus {

using VertexId = std::int32_t;

// Symmetric, irreflexive adjacency stored as a packed bit matrix.
// Rows are 64-bit word spans so search cores can do whole-row intersections.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(int vertex_count);

  int size() const { return n_; }
  std::size_t row_words() const { return words_; }

  bool test(VertexId u, VertexId v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) & 1u;
  }
  void set(VertexId u, VertexId v);  // sets both directions; u != v required

  std::span<const std::uint64_t> row(VertexId u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A finite flag simplicial complex, represented by its 1-skeleton.
// Simplices are exactly the cliques of the adjacency relation, so the
// graph determines the whole complex. Immutable after construction.
class FlagComplex {
 public:
  static constexpr int kDefaultMaxVertices = 4096;

  FlagComplex() = default;
  FlagComplex(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
              std::vector<std::string> labels = {}, std::string name = "");

  int vertex_count() const { return n_; }
  long edge_count() const { return edge_count_; }
  const std::string& name() const { return name_; }

  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
  void require_vertex(VertexId v) const;  // throws std::out_of_range

  bool adjacent(VertexId u, VertexId v) const { return adj_.test(u, v); }
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v]; }
  int degree(VertexId v) const { return static_cast<int>(neighbors_[v].size()); }
  const AdjacencyMatrix& adjacency() const { return adj_; }

  bool is_clique(std::span<const VertexId> vs) const;

  // Label table: input labels are preserved for reporting; defaults to the
  // decimal vertex id.
  const std::string& label(VertexId v) const;
  std::optional<VertexId> vertex_by_label(const std::string& label) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  int n_ = 0;
  long edge_count_ = 0;
  AdjacencyMatrix adj_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::string> labels_;
  std::string name_;
};

// A walk/path written as a vertex sequence. Validity predicates are free
// functions so the same sequence types serve complexes and disc skeletons.
struct PathSeq {
  std::vector<VertexId> vertices;

  PathSeq() = default;
  explicit PathSeq(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

  std::size_t size() const { return vertices.size(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }  // edge count
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool operator==(const PathSeq&) const = default;
};

// A cyclic vertex sequence with >= 3 pairwise-distinct vertices.
struct CycleSeq {
  std::vector<VertexId> vertices;

  CycleSeq() = default;
  explicit CycleSeq(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

  std::size_t size() const { return vertices.size(); }
  VertexId at(std::size_t i) const { return vertices[i % vertices.size()]; }
  bool operator==(const CycleSeq&) const = default;
};

struct Subcomplex {
  FlagComplex complex;             // induced subcomplex, vertices renumbered 0..k-1
  std::vector<VertexId> vertices;  // vertices[i] = id in the parent complex
};

// Induced subcomplex on A (the span / smallest full subcomplex containing A).
Subcomplex span(const FlagComplex& x, std::vector<VertexId> a);

// Link of a clique: induced subcomplex on the common neighbors of the clique.
Subcomplex link(const FlagComplex& x, std::vector<VertexId> simplex);

// Balls and spheres in the 1-skeleton metric.
Subcomplex ball(const FlagComplex& x, VertexId v, int radius);
Subcomplex sphere(const FlagComplex& x, VertexId v, int radius);

// BFS distances from `from`; unreachable vertices get -1.
std::vector<int> bfs_distances(const FlagComplex& x, VertexId from);
std::optional<int> distance(const FlagComplex& x, VertexId u, VertexId v);

// Common neighbors of every vertex of A, excluding A itself.
std::vector<VertexId> common_neighbors(const FlagComplex& x, std::span<const VertexId> a);

bool is_path(const FlagComplex& x, const PathSeq& p);
bool is_tight(const FlagComplex& x, const PathSeq& p);

// Rewrites p to a chordless, repeat-free path with the same endpoints by
// repeatedly excising loops (when v_i = v_j, drop (i, j]) and skipping chords
// (when v_i ~ v_j with j > i+1, drop (i, j)). Scans for the smallest i, at
// equal i prefers the coincidence rule, and within a rule takes the smallest
// j, so the result is deterministic.
PathSeq tighten(const FlagComplex& x, const PathSeq& p);

bool is_cycle(const FlagComplex& x, const CycleSeq& c);
// True iff c spans no chord (the cycle is a full subcomplex).
bool is_full_cycle(const FlagComplex& x, const CycleSeq& c);

// Lexicographically minimal rotation/reflection, for deduplication.
CycleSeq canonical_cycle(const CycleSeq& c);

}  // namespace locus
