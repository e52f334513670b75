#include "locus/core.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace locus {

AdjacencyMatrix::AdjacencyMatrix(int vertex_count)
    : n_(vertex_count),
      words_((static_cast<std::size_t>(vertex_count) + 63) / 64),
      bits_(static_cast<std::size_t>(vertex_count) * words_, 0) {}

void AdjacencyMatrix::set(VertexId u, VertexId v) {
  bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |=
      std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |=
      std::uint64_t{1} << (u & 63);
}

FlagComplex::FlagComplex(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
                         std::vector<std::string> labels, std::string name)
    : n_(vertex_count),
      adj_(vertex_count),
      neighbors_(vertex_count),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
    throw std::invalid_argument("label table size does not match vertex count");
  for (auto [u, v] : edges) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (adj_.test(u, v)) throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                                     std::to_string(v));
    adj_.set(u, v);
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& ns : neighbors_) std::sort(ns.begin(), ns.end());
}

void FlagComplex::require_vertex(VertexId v) const {
  if (!has_vertex(v))
    throw std::out_of_range("unknown vertex id " + std::to_string(v) + " in complex '" + name_ +
                            "'");
}

bool FlagComplex::is_clique(std::span<const VertexId> vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    require_vertex(vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || !adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

const std::string& FlagComplex::label(VertexId v) const {
  require_vertex(v);
  if (!labels_.empty()) return labels_[v];
  static thread_local std::string scratch;
  scratch = std::to_string(v);
  return scratch;
}

std::optional<VertexId> FlagComplex::vertex_by_label(const std::string& label) const {
  if (!labels_.empty()) {
    for (VertexId v = 0; v < n_; ++v)
      if (labels_[v] == label) return v;
  }
  try {
    std::size_t pos = 0;
    int value = std::stoi(label, &pos);
    if (pos == label.size() && has_vertex(value)) return value;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> FlagComplex::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : neighbors_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

Subcomplex induced(const FlagComplex& x, std::vector<VertexId> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::unordered_map<VertexId, VertexId> to_new;
  to_new.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = static_cast<VertexId>(i);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    labels.push_back(x.label(verts[i]));
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (x.adjacent(verts[i], verts[j]))
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  FlagComplex sub(static_cast<int>(verts.size()), edges, std::move(labels), x.name());
  return Subcomplex{std::move(sub), std::move(verts)};
}

}  // namespace

Subcomplex span(const FlagComplex& x, std::vector<VertexId> a) {
  for (VertexId v : a) x.require_vertex(v);
  return induced(x, std::move(a));
}

Subcomplex link(const FlagComplex& x, std::vector<VertexId> simplex) {
  if (!x.is_clique(simplex)) throw std::invalid_argument("link: vertex set is not a clique");
  return induced(x, common_neighbors(x, simplex));
}

std::vector<int> bfs_distances(const FlagComplex& x, VertexId from) {
  x.require_vertex(from);
  std::vector<int> dist(static_cast<std::size_t>(x.vertex_count()), -1);
  std::deque<VertexId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : x.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const FlagComplex& x, VertexId u, VertexId v) {
  x.require_vertex(u);
  x.require_vertex(v);
  int d = bfs_distances(x, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

Subcomplex ball(const FlagComplex& x, VertexId v, int radius) {
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  auto dist = bfs_distances(x, v);
  std::vector<VertexId> verts;
  for (VertexId u = 0; u < x.vertex_count(); ++u)
    if (dist[u] >= 0 && dist[u] <= radius) verts.push_back(u);
  return induced(x, std::move(verts));
}

Subcomplex sphere(const FlagComplex& x, VertexId v, int radius) {
  if (radius < 0) throw std::invalid_argument("sphere: negative radius");
  auto dist = bfs_distances(x, v);
  std::vector<VertexId> verts;
  for (VertexId u = 0; u < x.vertex_count(); ++u)
    if (dist[u] == radius) verts.push_back(u);
  return induced(x, std::move(verts));
}

std::vector<VertexId> common_neighbors(const FlagComplex& x, std::span<const VertexId> a) {
  for (VertexId v : a) x.require_vertex(v);
  std::vector<VertexId> out;
  if (a.empty()) {
    for (VertexId v = 0; v < x.vertex_count(); ++v) out.push_back(v);
    return out;
  }
  const auto& adj = x.adjacency();
  std::vector<std::uint64_t> acc(adj.row(a[0]).begin(), adj.row(a[0]).end());
  for (std::size_t i = 1; i < a.size(); ++i) {
    auto row = adj.row(a[i]);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= row[w];
  }
  for (VertexId v : a) acc[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  for (std::size_t w = 0; w < acc.size(); ++w) {
    std::uint64_t word = acc[w];
    while (word) {
      int bit = std::countr_zero(word);
      out.push_back(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(bit)));
      word &= word - 1;
    }
  }
  return out;
}

bool is_path(const FlagComplex& x, const PathSeq& p) {
  if (p.vertices.empty()) return false;
  for (VertexId v : p.vertices) x.require_vertex(v);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!x.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
  return true;
}

bool is_tight(const FlagComplex& x, const PathSeq& p) {
  if (!is_path(x, p)) return false;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
      if (p.vertices[i] == p.vertices[j]) return false;
      if (j > i + 1 && x.adjacent(p.vertices[i], p.vertices[j])) return false;
    }
  }
  return true;
}

PathSeq tighten(const FlagComplex& x, const PathSeq& p) {
  if (!is_path(x, p)) throw std::invalid_argument("tighten: input is not a path");
  std::vector<VertexId> vs = p.vertices;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < vs.size() && !changed; ++i) {
      // Coincidence rule first: v_i = v_j, remove (i, j].
      for (std::size_t j = i + 1; j < vs.size() && !changed; ++j) {
        if (vs[i] == vs[j]) {
          vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                   vs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          changed = true;
        }
      }
      // Chord rule: v_i ~ v_j with j > i+1, remove (i, j).
      for (std::size_t j = i + 2; j < vs.size() && !changed; ++j) {
        if (x.adjacent(vs[i], vs[j])) {
          vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                   vs.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
  return PathSeq{std::move(vs)};
}

bool is_cycle(const FlagComplex& x, const CycleSeq& c) {
  if (c.vertices.size() < 3) return false;
  for (VertexId v : c.vertices) x.require_vertex(v);
  std::vector<VertexId> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (!x.adjacent(c.vertices[i], c.at(i + 1))) return false;
  return true;
}

bool is_full_cycle(const FlagComplex& x, const CycleSeq& c) {
  if (!is_cycle(x, c)) throw std::invalid_argument("is_full_cycle: not a cycle");
  std::size_t n = c.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (!consecutive && x.adjacent(c.vertices[i], c.vertices[j])) return false;
    }
  }
  return true;
}

CycleSeq canonical_cycle(const CycleSeq& c) {
  const std::size_t n = c.vertices.size();
  if (n == 0) return c;
  std::vector<VertexId> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<VertexId> cand(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx = dir == 0 ? (start + i) % n : (start + n - i) % n;
        cand[i] = c.vertices[idx];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return CycleSeq{std::move(best)};
}

}  // namespace locus
