#include "locus/disc.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace locus {

Triangle::Triangle(VertexId a, VertexId b, VertexId c) : v{a, b, c} {
  std::sort(v.begin(), v.end());
}

namespace {

std::string vertex_list(const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

SimplicialDisc::SimplicialDisc(std::vector<Triangle> triangles, std::vector<VertexId> boundary,
                               std::string name)
    : name_(std::move(name)) {
  // Normalize vertex ids to 0..V-1; keep the originals for reporting.
  std::vector<VertexId> ids;
  for (const Triangle& t : triangles)
    for (VertexId v : t.v) ids.push_back(v);
  for (VertexId v : boundary) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.front() < 0) {
    violations_.push_back({"vertex-ids", "negative vertex id " + std::to_string(ids.front())});
    return;
  }
  std::unordered_map<VertexId, VertexId> to_new;
  to_new.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) to_new[ids[i]] = static_cast<VertexId>(i);
  original_ids_ = std::move(ids);
  triangles_.reserve(triangles.size());
  for (const Triangle& t : triangles)
    triangles_.emplace_back(to_new[t.v[0]], to_new[t.v[1]], to_new[t.v[2]]);
  boundary_.reserve(boundary.size());
  for (VertexId v : boundary) boundary_.push_back(to_new[v]);
  vertex_count_ = static_cast<int>(original_ids_.size());
  validate_and_index();
}

void SimplicialDisc::validate_and_index() {
  auto fail = [this](std::string rule, std::string detail) {
    violations_.push_back({std::move(rule), std::move(detail)});
  };

  if (triangles_.empty()) {
    fail("no-triangles", "a disc has at least one triangle");
    return;
  }
  for (const Triangle& t : triangles_) {
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
      fail("degenerate-triangle", "triangle with repeated vertex: " +
                                      vertex_list({original_ids_[t.v[0]], original_ids_[t.v[1]],
                                                   original_ids_[t.v[2]]}));
  }
  {
    std::vector<Triangle> sorted = triangles_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("duplicate-triangle", "triangle listed twice");
  }
  if (boundary_.size() < 3) fail("boundary-size", "boundary cycle needs at least 3 vertices");
  {
    std::vector<VertexId> sorted = boundary_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("boundary-simple", "boundary cycle repeats a vertex");
  }
  if (!violations_.empty()) return;

  // Edge table from triangles.
  std::map<std::pair<VertexId, VertexId>, int> edge_of;
  auto add_edge = [&](VertexId a, VertexId b, int tri) {
    if (a > b) std::swap(a, b);
    auto [it, inserted] = edge_of.try_emplace({a, b}, static_cast<int>(edge_list_.size()));
    if (inserted) {
      edge_list_.emplace_back(a, b);
      edge_triangles_.push_back({-1, -1});
    }
    auto& slots = edge_triangles_[static_cast<std::size_t>(it->second)];
    if (slots[0] < 0)
      slots[0] = tri;
    else if (slots[1] < 0)
      slots[1] = tri;
    else
      fail("edge-triangle-count",
           "edge " + std::to_string(original_ids_[a]) + "-" + std::to_string(original_ids_[b]) +
               " lies in more than 2 triangles");
  };
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& v = triangles_[t].v;
    add_edge(v[0], v[1], static_cast<int>(t));
    add_edge(v[1], v[2], static_cast<int>(t));
    add_edge(v[0], v[2], static_cast<int>(t));
  }
  if (!violations_.empty()) return;

  on_boundary_.assign(static_cast<std::size_t>(vertex_count_), false);
  for (VertexId v : boundary_) on_boundary_[static_cast<std::size_t>(v)] = true;

  // Boundary edges are exactly the edges lying in one triangle.
  std::set<std::pair<VertexId, VertexId>> boundary_edges;
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    VertexId a = boundary_[i];
    VertexId b = boundary_[(i + 1) % boundary_.size()];
    if (a > b) std::swap(a, b);
    auto it = edge_of.find({a, b});
    if (it == edge_of.end()) {
      fail("boundary-edge-missing", "boundary edge " + std::to_string(original_ids_[a]) + "-" +
                                        std::to_string(original_ids_[b]) +
                                        " is not an edge of any triangle");
      continue;
    }
    boundary_edges.insert({a, b});
  }
  if (!violations_.empty()) return;
  for (std::size_t e = 0; e < edge_list_.size(); ++e) {
    bool is_boundary = boundary_edges.count(edge_list_[e]) > 0;
    int count = (edge_triangles_[e][0] >= 0) + (edge_triangles_[e][1] >= 0);
    if (is_boundary && count != 1)
      fail("boundary-edge-count", "boundary edge " +
                                      std::to_string(original_ids_[edge_list_[e].first]) + "-" +
                                      std::to_string(original_ids_[edge_list_[e].second]) +
                                      " lies in " + std::to_string(count) + " triangles");
    if (!is_boundary && count != 2)
      fail("interior-edge-count", "interior edge " +
                                      std::to_string(original_ids_[edge_list_[e].first]) + "-" +
                                      std::to_string(original_ids_[edge_list_[e].second]) +
                                      " lies in " + std::to_string(count) + " triangles");
  }
  if (!violations_.empty()) return;

  // Vertex incidence tables.
  vertex_edges_.assign(static_cast<std::size_t>(vertex_count_), {});
  neighbors_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (std::size_t e = 0; e < edge_list_.size(); ++e) {
    auto [a, b] = edge_list_[e];
    vertex_edges_[static_cast<std::size_t>(a)].emplace_back(b, static_cast<int>(e));
    vertex_edges_[static_cast<std::size_t>(b)].emplace_back(a, static_cast<int>(e));
    neighbors_[static_cast<std::size_t>(a)].push_back(b);
    neighbors_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& ns : neighbors_) std::sort(ns.begin(), ns.end());

  // Link of each vertex: interior -> one cycle, boundary -> one path.
  for (VertexId v = 0; v < vertex_count_; ++v) {
    std::map<VertexId, std::vector<VertexId>> link;  // neighbor -> adjacent link vertices
    for (const auto& [u, e] : vertex_edges_[static_cast<std::size_t>(v)]) link[u];
    for (const Triangle& t : triangles_) {
      if (!t.contains(v)) continue;
      std::array<VertexId, 2> rest{};
      int k = 0;
      for (VertexId u : t.v)
        if (u != v) rest[static_cast<std::size_t>(k++)] = u;
      link[rest[0]].push_back(rest[1]);
      link[rest[1]].push_back(rest[0]);
    }
    if (link.empty()) {
      fail("isolated-vertex", "vertex " + std::to_string(original_ids_[v]) + " has no triangle");
      continue;
    }
    int odd = 0;
    bool bad_degree = false;
    for (const auto& [u, around] : link) {
      if (around.size() == 1)
        ++odd;
      else if (around.size() != 2)
        bad_degree = true;
    }
    // Connectivity of the link graph.
    std::size_t seen = 1;
    std::deque<VertexId> queue{link.begin()->first};
    std::set<VertexId> visited{link.begin()->first};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : link[u])
        if (visited.insert(w).second) {
          ++seen;
          queue.push_back(w);
        }
    }
    bool connected = seen == link.size();
    bool interior = !on_boundary_[static_cast<std::size_t>(v)];
    bool ok = connected && !bad_degree && (interior ? odd == 0 : odd == 2);
    if (!ok)
      fail(interior ? "interior-link" : "boundary-link",
           "link of vertex " + std::to_string(original_ids_[v]) + " is not a single " +
               (interior ? "cycle" : "path"));
  }
  if (!violations_.empty()) return;

  // Connectivity of the whole skeleton.
  {
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count_), false);
    std::deque<VertexId> queue{0};
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : neighbors_[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++count;
          queue.push_back(w);
        }
    }
    if (count != vertex_count_) fail("disconnected", "1-skeleton is not connected");
  }
  long euler = static_cast<long>(vertex_count_) - static_cast<long>(edge_list_.size()) +
               static_cast<long>(triangles_.size());
  if (euler != 1) fail("euler", "V - E + T = " + std::to_string(euler) + ", expected 1");
  if (!violations_.empty()) return;

  // Orient triangles consistently: interior edges traversed in opposite
  // directions by their two triangles, boundary edges in the given boundary
  // order. Seeded from the triangle on the first boundary edge.
  oriented_.assign(triangles_.size(), {-1, -1, -1});
  auto orient_with = [&](std::size_t t, VertexId a, VertexId b) {
    // Orientation of triangle t containing directed edge a->b.
    VertexId c = -1;
    for (VertexId u : triangles_[t].v)
      if (u != a && u != b) c = u;
    oriented_[t] = {a, b, c};
  };
  {
    VertexId b0 = boundary_[0], b1 = boundary_[1];
    int e = edge_index(b0, b1);
    std::size_t seed = static_cast<std::size_t>(edge_triangles_[static_cast<std::size_t>(e)][0]);
    orient_with(seed, b0, b1);
    std::deque<std::size_t> queue{seed};
    std::vector<bool> done(triangles_.size(), false);
    done[seed] = true;
    while (!queue.empty()) {
      std::size_t t = queue.front();
      queue.pop_front();
      const auto& o = oriented_[t];
      for (int i = 0; i < 3; ++i) {
        VertexId a = o[static_cast<std::size_t>(i)];
        VertexId b = o[static_cast<std::size_t>((i + 1) % 3)];
        int e2 = edge_index(a, b);
        const auto& ts = edge_triangles_[static_cast<std::size_t>(e2)];
        int other = ts[0] == static_cast<int>(t) ? ts[1] : ts[0];
        if (other < 0 || done[static_cast<std::size_t>(other)]) continue;
        orient_with(static_cast<std::size_t>(other), b, a);
        done[static_cast<std::size_t>(other)] = true;
        queue.push_back(static_cast<std::size_t>(other));
      }
    }
    for (std::size_t t = 0; t < triangles_.size(); ++t)
      if (!done[t]) fail("orientation", "triangle set is not connected through shared edges");
    // Cross-check: every boundary edge must be traversed in boundary order.
    for (std::size_t i = 0; i < boundary_.size() && violations_.empty(); ++i) {
      VertexId a = boundary_[i];
      VertexId b = boundary_[(i + 1) % boundary_.size()];
      int e2 = edge_index(a, b);
      std::size_t t = static_cast<std::size_t>(edge_triangles_[static_cast<std::size_t>(e2)][0]);
      const auto& o = oriented_[t];
      bool forward = (o[0] == a && o[1] == b) || (o[1] == a && o[2] == b) || (o[2] == a && o[0] == b);
      if (!forward)
        fail("orientation", "boundary orientation is inconsistent at edge " +
                                std::to_string(original_ids_[a]) + "-" +
                                std::to_string(original_ids_[b]));
    }
  }
}

void SimplicialDisc::require_valid() const {
  if (!valid()) throw std::logic_error("operation on invalid disc '" + name_ + "'");
}

int SimplicialDisc::edge_index(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  for (const auto& [other, e] : vertex_edges_[static_cast<std::size_t>(u)])
    if (other == v) return e;
  return -1;
}

int SimplicialDisc::vertex_count() const {
  require_valid();
  return vertex_count_;
}

long SimplicialDisc::edge_count() const {
  require_valid();
  return static_cast<long>(edge_list_.size());
}

int SimplicialDisc::area() const {
  require_valid();
  return static_cast<int>(triangles_.size());
}

bool SimplicialDisc::is_boundary_vertex(VertexId v) const {
  require_valid();
  if (v < 0 || v >= vertex_count_) throw std::out_of_range("unknown disc vertex");
  return on_boundary_[static_cast<std::size_t>(v)];
}

std::vector<VertexId> SimplicialDisc::interior_vertices() const {
  require_valid();
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (!on_boundary_[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<VertexId> SimplicialDisc::boundary_vertices() const {
  require_valid();
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (on_boundary_[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

bool SimplicialDisc::adjacent(VertexId u, VertexId v) const {
  require_valid();
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
    throw std::out_of_range("unknown disc vertex");
  return u != v && edge_index(u, v) >= 0;
}

const std::vector<VertexId>& SimplicialDisc::neighbors(VertexId v) const {
  require_valid();
  if (v < 0 || v >= vertex_count_) throw std::out_of_range("unknown disc vertex");
  return neighbors_[static_cast<std::size_t>(v)];
}

int SimplicialDisc::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

CycleSeq SimplicialDisc::link_cycle(VertexId v) const {
  require_valid();
  if (v < 0 || v >= vertex_count_) throw std::out_of_range("unknown disc vertex");
  if (on_boundary_[static_cast<std::size_t>(v)])
    throw std::invalid_argument("link_cycle: vertex " + std::to_string(original_ids_[v]) +
                                " is on the boundary");
  std::unordered_map<VertexId, VertexId> next;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    if (!triangles_[t].contains(v)) continue;
    const auto& o = oriented_[t];
    for (int i = 0; i < 3; ++i)
      if (o[static_cast<std::size_t>(i)] == v)
        next[o[static_cast<std::size_t>((i + 1) % 3)]] = o[static_cast<std::size_t>((i + 2) % 3)];
  }
  VertexId start = neighbors_[static_cast<std::size_t>(v)].front();
  std::vector<VertexId> cycle{start};
  for (VertexId cur = next.at(start); cur != start; cur = next.at(cur)) cycle.push_back(cur);
  return CycleSeq{std::move(cycle)};
}

FlagComplex SimplicialDisc::skeleton() const {
  require_valid();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(vertex_count_));
  for (VertexId v = 0; v < vertex_count_; ++v) labels.push_back(std::to_string(original_ids_[v]));
  return FlagComplex(vertex_count_, edge_list_, std::move(labels), name_);
}

SimplicialDisc::FlagResult SimplicialDisc::as_flag_complex() const {
  require_valid();
  std::set<Triangle> have(triangles_.begin(), triangles_.end());
  for (const auto& [a, b] : edge_list_) {
    const auto& na = neighbors_[static_cast<std::size_t>(a)];
    const auto& nb = neighbors_[static_cast<std::size_t>(b)];
    std::vector<VertexId> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
    for (VertexId c : common) {
      if (c <= b) continue;  // a < b < c visits each clique once
      Triangle t(a, b, c);
      if (!have.count(t)) return FlagResult{std::nullopt, t};
    }
  }
  return FlagResult{skeleton(), std::nullopt};
}

std::vector<int> SimplicialDisc::walk_windings(const std::vector<VertexId>& closed_walk) const {
  require_valid();
  std::vector<int> winding(triangles_.size(), 0);
  if (closed_walk.size() < 2) return winding;
  // Net signed traversal count per edge, in the direction of the smaller id.
  std::unordered_map<int, int> net;
  for (std::size_t i = 0; i < closed_walk.size(); ++i) {
    VertexId a = closed_walk[i];
    VertexId b = closed_walk[(i + 1) % closed_walk.size()];
    if (a == b) throw std::invalid_argument("walk repeats a vertex consecutively");
    int e = (a >= 0 && a < vertex_count_ && b >= 0 && b < vertex_count_) ? edge_index(a, b) : -1;
    if (e < 0) throw std::invalid_argument("walk step is not an edge of the disc");
    net[e] += (a < b) ? 1 : -1;
  }
  // Face of the directed edge (a->b): the triangle whose orientation contains
  // a->b, or the outer face when a->b runs along the boundary outside.
  auto face_of = [&](VertexId a, VertexId b) -> int {
    int e = edge_index(a, b);
    for (int t : edge_triangles_[static_cast<std::size_t>(e)]) {
      if (t < 0) continue;
      const auto& o = oriented_[static_cast<std::size_t>(t)];
      for (int i = 0; i < 3; ++i)
        if (o[static_cast<std::size_t>(i)] == a && o[static_cast<std::size_t>((i + 1) % 3)] == b)
          return t;
    }
    return static_cast<int>(triangles_.size());  // outer face
  };
  const int outer = static_cast<int>(triangles_.size());
  std::vector<int> value(triangles_.size() + 1, 0);
  std::vector<bool> known(triangles_.size() + 1, false);
  known[static_cast<std::size_t>(outer)] = true;
  std::deque<int> queue{outer};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    // Edges bounding face f.
    std::vector<int> edges;
    if (f == outer) {
      for (std::size_t i = 0; i < boundary_.size(); ++i)
        edges.push_back(edge_index(boundary_[i], boundary_[(i + 1) % boundary_.size()]));
    } else {
      const auto& t = triangles_[static_cast<std::size_t>(f)].v;
      edges = {edge_index(t[0], t[1]), edge_index(t[1], t[2]), edge_index(t[0], t[2])};
    }
    for (int e : edges) {
      auto [a, b] = edge_list_[static_cast<std::size_t>(e)];  // a < b
      int left = face_of(a, b);
      int right = face_of(b, a);
      int other = (left == f) ? right : left;
      auto it = net.find(e);
      int n = it == net.end() ? 0 : it->second;
      // Crossing from the right face of a->b to its left face raises the
      // winding by net(a->b).
      int candidate = (other == left) ? value[static_cast<std::size_t>(f)] + n
                                      : value[static_cast<std::size_t>(f)] - n;
      if (!known[static_cast<std::size_t>(other)]) {
        known[static_cast<std::size_t>(other)] = true;
        value[static_cast<std::size_t>(other)] = candidate;
        queue.push_back(other);
      }
    }
  }
  for (std::size_t t = 0; t < triangles_.size(); ++t) winding[t] = value[t];
  return winding;
}

int SimplicialDisc::walk_area(const std::vector<VertexId>& closed_walk) const {
  int area = 0;
  for (int w : walk_windings(closed_walk)) area += std::abs(w);
  return area;
}

int SimplicialDisc::enclosed_area(const CycleSeq& c) const {
  require_valid();
  if (c.size() < 3) throw std::invalid_argument("enclosed_area: cycle too short");
  std::vector<VertexId> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("enclosed_area: cycle is not simple");
  return walk_area(c.vertices);
}

std::vector<VertexId> SimplicialDisc::vertices_inside(const CycleSeq& c) const {
  auto winding = walk_windings(c.vertices);
  std::vector<bool> on_cycle(static_cast<std::size_t>(vertex_count_), false);
  for (VertexId v : c.vertices) on_cycle[static_cast<std::size_t>(v)] = true;
  std::set<VertexId> inside;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    if (winding[t] == 0) continue;
    for (VertexId v : triangles_[t].v)
      if (!on_cycle[static_cast<std::size_t>(v)]) inside.insert(v);
  }
  return {inside.begin(), inside.end()};
}

}  // namespace locus
