#include "locus/filling.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace locus {

bool map_is_simplicial(const SimplicialDisc& disc, const std::vector<VertexId>& vertex_map,
                       const FlagComplex& target) {
  if (!disc.valid()) return false;
  if (static_cast<int>(vertex_map.size()) != disc.vertex_count()) return false;
  for (VertexId img : vertex_map)
    if (!target.has_vertex(img)) return false;
  auto ok_pair = [&](VertexId a, VertexId b) {
    return vertex_map[a] == vertex_map[b] || target.adjacent(vertex_map[a], vertex_map[b]);
  };
  for (const Triangle& t : disc.triangles()) {
    if (!ok_pair(t.v[0], t.v[1]) || !ok_pair(t.v[1], t.v[2]) || !ok_pair(t.v[0], t.v[2]))
      return false;
  }
  return true;
}

bool map_is_nondegenerate(const SimplicialDisc& disc, const std::vector<VertexId>& vertex_map) {
  for (const Triangle& t : disc.triangles()) {
    VertexId a = vertex_map[t.v[0]], b = vertex_map[t.v[1]], c = vertex_map[t.v[2]];
    if (a == b || b == c || a == c) return false;
  }
  return true;
}

CheckResult check_filling_diagram(const FillingDiagram& d, const FlagComplex& target) {
  if (!d.disc.valid()) return {false, "disc invalid: " + d.disc.violations().front().rule};
  if (static_cast<int>(d.vertex_map.size()) != d.disc.vertex_count())
    return {false, "vertex map is not total"};
  if (!map_is_simplicial(d.disc, d.vertex_map, target)) return {false, "map is not simplicial"};
  const auto& b = d.disc.boundary();
  const auto& loop = d.loop.vertices;
  if (b.size() != loop.size()) return {false, "boundary length differs from loop length"};
  std::size_t n = loop.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) {
        std::size_t idx = dir == 0 ? (r + i) % n : (r + n - i) % n;
        if (d.vertex_map[b[i]] != loop[idx]) match = false;
      }
      if (match) return {true, ""};
    }
  }
  return {false, "boundary does not map onto the loop in cyclic order"};
}

CheckResult check_simplicial_nondegenerate(const FillingDiagram& d, const FlagComplex& target) {
  if (!map_is_simplicial(d.disc, d.vertex_map, target)) return {false, "map is not simplicial"};
  if (!map_is_nondegenerate(d.disc, d.vertex_map)) {
    for (const Triangle& t : d.disc.triangles()) {
      VertexId a = d.vertex_map[t.v[0]], b = d.vertex_map[t.v[1]], c = d.vertex_map[t.v[2]];
      if (a == b || b == c || a == c)
        return {false, "triangle " + std::to_string(t.v[0]) + " " + std::to_string(t.v[1]) + " " +
                           std::to_string(t.v[2]) + " has a collapsed image"};
    }
  }
  return {true, ""};
}

CheckResult check_adjacent_triangle_images(const FillingDiagram& d) {
  const auto& tris = d.disc.triangles();
  // Edge -> incident triangles, from scratch (cheap at these sizes).
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const auto& v = tris[t].v;
    by_edge[{v[0], v[1]}].push_back(t);
    by_edge[{v[1], v[2]}].push_back(t);
    by_edge[{v[0], v[2]}].push_back(t);
  }
  auto image = [&](std::size_t t) {
    std::array<VertexId, 3> img{d.vertex_map[tris[t].v[0]], d.vertex_map[tris[t].v[1]],
                                d.vertex_map[tris[t].v[2]]};
    std::sort(img.begin(), img.end());
    return img;
  };
  for (const auto& [edge, ts] : by_edge) {
    if (ts.size() != 2) continue;
    if (image(ts[0]) == image(ts[1]))
      return {false, "triangles sharing edge " + std::to_string(edge.first) + "-" +
                         std::to_string(edge.second) + " have equal images"};
  }
  return {true, ""};
}

CheckResult check_interior_link_images(const FillingDiagram& d) {
  for (VertexId v : d.disc.interior_vertices()) {
    int deg = d.disc.degree(v);
    if (deg < 4 || deg > 7) continue;
    CycleSeq lk = d.disc.link_cycle(v);
    for (std::size_t i = 0; i < lk.size(); ++i) {
      for (std::size_t j = i + 1; j < lk.size(); ++j) {
        if (d.vertex_map[lk.vertices[i]] == d.vertex_map[lk.vertices[j]])
          return {false, "interior vertex " + std::to_string(v) + " (degree " +
                             std::to_string(deg) + ") has link vertices " +
                             std::to_string(lk.vertices[i]) + " and " +
                             std::to_string(lk.vertices[j]) + " with equal images"};
      }
    }
  }
  return {true, ""};
}

int default_fill_budget(const CycleSeq& loop) {
  int n = static_cast<int>(loop.size());
  return n * n;
}

namespace {

// Region boundary entry: a disc vertex and its image in the target.
struct RingEntry {
  VertexId dv;
  VertexId img;
};

using EdgeKey = long long;

EdgeKey edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b);
}

struct Completion {
  int area = 0;
  std::vector<std::uint32_t> encoding;
  std::vector<Triangle> triangles;
  std::vector<VertexId> images;
};

class FillSearch {
 public:
  FillSearch(const FlagComplex& target, const CycleSeq& loop)
      : target_(target), loop_(loop), n_(static_cast<int>(loop.size())) {}

  FillOutcome run(int area_budget) {
    int start = std::max(1, n_ - 2);
    for (int level = start; level <= area_budget; level += 2) {
      level_ = level;
      best_.reset();
      completions_seen_ = 0;
      init_state();
      dfs(level);
      if (best_) return make_outcome();
    }
    FillOutcome out;
    out.status = FillOutcome::Status::not_found_within_budget;
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  static constexpr long kMaxCompletionsPerLevel = 10000;

  void init_state() {
    ring_.clear();
    edges_.clear();
    triangles_.clear();
    images_.clear();
    for (int i = 0; i < n_; ++i) {
      ring_.push_back({static_cast<VertexId>(i), loop_.vertices[static_cast<std::size_t>(i)]});
      images_.push_back(loop_.vertices[static_cast<std::size_t>(i)]);
      edges_.insert(edge_key(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n_)));
    }
    next_vertex_ = static_cast<VertexId>(n_);
  }

  bool images_compatible(VertexId a, VertexId b) const {
    return a == b || target_.adjacent(a, b);
  }

  // Candidate images for a fresh vertex attached along an edge with images
  // (a, b): everything adjacent-or-equal to both.
  std::vector<VertexId> attach_candidates(VertexId a, VertexId b) const {
    std::vector<VertexId> out;
    auto ra = target_.adjacency().row(a);
    auto rb = target_.adjacency().row(b);
    for (std::size_t w = 0; w < ra.size(); ++w) {
      std::uint64_t word = ra[w] & rb[w];
      while (word) {
        int bit = std::countr_zero(word);
        out.push_back(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
    auto consider = [&](VertexId y) {
      if (images_compatible(y, a) && images_compatible(y, b)) out.push_back(y);
    };
    consider(a);
    if (b != a) consider(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Canonical key of the region state: the image word around the ring plus
  // the pattern of disc edges between non-consecutive ring positions,
  // minimized over rotations and reflections.
  std::vector<std::uint32_t> state_key() const {
    const std::size_t L = ring_.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = i + 1; j < L; ++j) {
        bool consecutive = (j == i + 1) || (i == 0 && j == L - 1);
        if (consecutive) continue;
        if (edges_.count(edge_key(ring_[i].dv, ring_[j].dv)))
          pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cand;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < L; ++r) {
        cand.clear();
        cand.push_back(static_cast<std::uint32_t>(L));
        for (std::size_t i = 0; i < L; ++i) {
          std::size_t idx = dir == 0 ? (r + i) % L : (r + L - i) % L;
          cand.push_back(static_cast<std::uint32_t>(ring_[idx].img));
        }
        std::vector<std::uint32_t> mapped;
        for (auto [i, j] : pairs) {
          std::uint32_t a = dir == 0 ? static_cast<std::uint32_t>((i + L - r % L) % L)
                                     : static_cast<std::uint32_t>((r + L - i) % L);
          std::uint32_t b = dir == 0 ? static_cast<std::uint32_t>((j + L - r % L) % L)
                                     : static_cast<std::uint32_t>((r + L - j) % L);
          if (a > b) std::swap(a, b);
          mapped.push_back(a * static_cast<std::uint32_t>(L) + b);
        }
        std::sort(mapped.begin(), mapped.end());
        cand.insert(cand.end(), mapped.begin(), mapped.end());
        if (best.empty() || cand < best) best = cand;
      }
    }
    return best;
  }

  void record_completion() {
    if (completions_seen_ >= kMaxCompletionsPerLevel) return;
    ++completions_seen_;
    Completion c;
    c.area = static_cast<int>(triangles_.size());
    c.triangles = triangles_;
    c.images = images_;
    std::vector<Triangle> sorted = triangles_;
    std::sort(sorted.begin(), sorted.end());
    for (const Triangle& t : sorted)
      for (VertexId v : t.v) c.encoding.push_back(static_cast<std::uint32_t>(v));
    for (VertexId img : images_) c.encoding.push_back(static_cast<std::uint32_t>(img));
    if (!best_ || c.area < best_->area ||
        (c.area == best_->area && c.encoding < best_->encoding))
      best_ = std::move(c);
  }

  // Returns true when the subtree contains at least one completion.
  bool dfs(int rem) {
    ++nodes_;
    const std::size_t L = ring_.size();
    if (rem < static_cast<int>(L) - 2) return false;
    if (completions_seen_ >= kMaxCompletionsPerLevel && best_) return true;

    auto key = state_key();
    auto memo = fail_memo_.find(key);
    if (memo != fail_memo_.end() && memo->second >= rem) return false;

    bool found = false;
    if (L == 3) {
      // Close the region with the final triangle.
      triangles_.emplace_back(ring_[0].dv, ring_[1].dv, ring_[2].dv);
      record_completion();
      triangles_.pop_back();
      found = true;
    }
    if (L >= 4) {
      for (std::size_t pos = 0; pos < L; ++pos) {
        const RingEntry& a = ring_[(pos + L - 1) % L];
        const RingEntry& b = ring_[pos];
        const RingEntry& c = ring_[(pos + 1) % L];
        EdgeKey chord = edge_key(a.dv, c.dv);
        if (edges_.count(chord)) continue;
        if (!images_compatible(a.img, c.img)) continue;
        triangles_.emplace_back(a.dv, b.dv, c.dv);
        edges_.insert(chord);
        RingEntry removed = ring_[pos];
        ring_.erase(ring_.begin() + static_cast<std::ptrdiff_t>(pos));
        found |= dfs(rem - 1);
        ring_.insert(ring_.begin() + static_cast<std::ptrdiff_t>(pos), removed);
        edges_.erase(chord);
        triangles_.pop_back();
      }
    }
    if (rem - 1 >= static_cast<int>(L) + 1 - 2) {
      for (std::size_t pos = 0; pos < L; ++pos) {
        const RingEntry a = ring_[pos];
        const RingEntry b = ring_[(pos + 1) % L];
        for (VertexId y : attach_candidates(a.img, b.img)) {
          VertexId x = next_vertex_++;
          images_.push_back(y);
          triangles_.emplace_back(a.dv, x, b.dv);
          edges_.insert(edge_key(a.dv, x));
          edges_.insert(edge_key(x, b.dv));
          ring_.insert(ring_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, {x, y});
          found |= dfs(rem - 1);
          ring_.erase(ring_.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
          edges_.erase(edge_key(a.dv, x));
          edges_.erase(edge_key(x, b.dv));
          triangles_.pop_back();
          images_.pop_back();
          --next_vertex_;
        }
      }
    }
    if (!found) {
      auto [it, inserted] = fail_memo_.try_emplace(std::move(key), rem);
      if (!inserted && it->second < rem) it->second = rem;
    }
    return found;
  }

  FillOutcome make_outcome() {
    std::vector<VertexId> boundary(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) boundary[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
    SimplicialDisc disc(best_->triangles, boundary, "filling");
    if (!disc.valid())
      throw std::logic_error("filling search produced an invalid disc: " +
                             disc.violations().front().rule);
    FillOutcome out;
    out.status = FillOutcome::Status::found;
    out.diagram = FillingDiagram{loop_, std::move(disc), best_->images};
    out.nodes_explored = nodes_;
    return out;
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const {
      std::size_t h = 1469598103934665603ull;
      for (std::uint32_t v : key) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  const FlagComplex& target_;
  const CycleSeq& loop_;
  int n_;
  int level_ = 0;

  std::vector<RingEntry> ring_;
  std::set<EdgeKey> edges_;
  std::vector<Triangle> triangles_;
  std::vector<VertexId> images_;
  VertexId next_vertex_ = 0;

  std::unordered_map<std::vector<std::uint32_t>, int, KeyHash> fail_memo_;
  std::optional<Completion> best_;
  long completions_seen_ = 0;
  long nodes_ = 0;
};

}  // namespace

FillOutcome minimal_filling(const FlagComplex& target, const CycleSeq& loop, int area_budget) {
  if (area_budget < 1) throw std::invalid_argument("minimal_filling: budget must be >= 1");
  if (!is_cycle(target, loop))
    throw std::invalid_argument("minimal_filling: loop is not a cycle of the target");
  FillSearch search(target, loop);
  return search.run(area_budget);
}

}  // namespace locus
