#include "locus/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "locus/location.hpp"

namespace locus {

FlagComplex gen_triangle() {
  return FlagComplex(3, {{0, 1}, {1, 2}, {0, 2}}, {}, "triangle");
}

FlagComplex gen_wheel(int k) {
  if (k < 4 || k > 8) throw std::invalid_argument("wheel: k must be in 4..8");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(0, i + 1);
    edges.emplace_back(i + 1, (i % k) + 1 == k ? 1 : i + 2);
  }
  return FlagComplex(k + 1, edges, {}, "wheel" + std::to_string(k));
}

FlagComplex gen_octahedron() {
  // Three antipodal pairs (0,1), (2,3), (4,5); all non-antipodal pairs joined.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v)
      if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
  return FlagComplex(6, edges, {}, "octahedron");
}

FlagComplex gen_annulus(int n) {
  if (n < 4) throw std::invalid_argument("annulus: n must be >= 4");
  // Inner ring 0..n-1, outer ring n..2n-1, rungs i-(n+i) and i-(n+(i+1)%n).
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    edges.emplace_back(i, j);
    edges.emplace_back(n + i, n + j);
    edges.emplace_back(i, n + i);
    edges.emplace_back(i, n + j);
  }
  return FlagComplex(2 * n, edges, {}, "annulus" + std::to_string(n));
}

SimplicialDisc gen_hex_patch(int r) {
  if (r < 1) throw std::invalid_argument("hex-patch: radius must be >= 1");
  // Triangular lattice in axial coordinates: vertices with hex distance <= r
  // from the origin; unit triangles up and down.
  std::map<std::pair<int, int>, VertexId> id;
  auto hex_dist = [](int q, int s) {
    int x = q, z = s, y = -x - z;
    return std::max({std::abs(x), std::abs(y), std::abs(z)});
  };
  for (int q = -r; q <= r; ++q)
    for (int s = -r; s <= r; ++s)
      if (hex_dist(q, s) <= r) id[{q, s}] = static_cast<VertexId>(id.size());
  std::vector<Triangle> tris;
  for (const auto& [qs, v] : id) {
    auto [q, s] = qs;
    auto at = [&](int dq, int ds) {
      auto it = id.find({q + dq, s + ds});
      return it == id.end() ? VertexId{-1} : it->second;
    };
    VertexId right = at(1, 0), up = at(0, 1), upleft = at(-1, 1);
    if (right >= 0 && up >= 0) tris.emplace_back(v, right, up);
    if (up >= 0 && upleft >= 0) tris.emplace_back(v, up, upleft);
  }
  // Boundary: walk the hexagon of radius r counterclockwise.
  std::vector<VertexId> boundary;
  std::pair<int, int> cur{r, 0};
  const std::pair<int, int> dirs[6] = {{-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}};
  for (const auto& d : dirs)
    for (int step = 0; step < r; ++step) {
      boundary.push_back(id.at(cur));
      cur = {cur.first + d.first, cur.second + d.second};
    }
  SimplicialDisc disc(std::move(tris), std::move(boundary), "hex-patch" + std::to_string(r));
  if (!disc.valid()) throw std::logic_error("hex-patch generator produced an invalid disc");
  return disc;
}

SimplicialDisc gen_two_interior_disc() {
  // Boundary 1..7, interior z=8 adjacent to 7,1,2,3 and y=9 adjacent to
  // 3,...,7, with z ~ y.
  const VertexId z = 8, y = 9;
  std::vector<Triangle> tris = {
      {z, 1, 2}, {z, 2, 3}, {z, 3, y}, {z, y, 7}, {z, 7, 1},
      {y, 3, 4}, {y, 4, 5}, {y, 5, 6}, {y, 6, 7},
  };
  SimplicialDisc disc(std::move(tris), {1, 2, 3, 4, 5, 6, 7}, "two-interior");
  if (!disc.valid()) throw std::logic_error("two-interior generator produced an invalid disc");
  return disc;
}

GeneratedInstance gen_named(const std::string& name, const std::vector<long>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("generator '" + name + "' takes " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (name == "triangle") {
    want(0);
    return gen_triangle();
  }
  if (name == "wheel") {
    want(1);
    return gen_wheel(static_cast<int>(params[0]));
  }
  if (name == "octahedron") {
    want(0);
    return gen_octahedron();
  }
  if (name == "annulus") {
    want(1);
    return gen_annulus(static_cast<int>(params[0]));
  }
  if (name == "hex-patch") {
    want(1);
    return gen_hex_patch(static_cast<int>(params[0]));
  }
  if (name == "lemma36-counterexample") {
    want(0);
    return gen_two_interior_disc();
  }
  if (name == "random") {
    want(3);
    return gen_random_disc(static_cast<int>(params[0]), static_cast<int>(params[1]),
                           static_cast<std::uint64_t>(params[2]));
  }
  throw std::invalid_argument("unknown generator name: " + name);
}

namespace {

// Portable uniform integer in [0, n): plain modulo on the raw 64-bit stream.
// The bias is irrelevant here and the result is identical on every platform,
// unlike std::uniform_int_distribution.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

}  // namespace

SimplicialDisc gen_random_disc(int boundary_len, int interior_budget, std::uint64_t seed,
                               const RandomDiscWeights& weights) {
  if (boundary_len < 3) throw std::invalid_argument("gen_random_disc: boundary_len must be >= 3");
  if (interior_budget < 0) throw std::invalid_argument("gen_random_disc: negative budget");
  if (boundary_len == 3 && interior_budget == 0)
    return SimplicialDisc({Triangle(0, 1, 2)}, {0, 1, 2},
                          "random-3-0-" + std::to_string(seed));

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Triangle> tris;
  std::set<std::pair<VertexId, VertexId>> edges;
  auto edge = [](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return std::pair{a, b};
  };
  std::vector<VertexId> ring(static_cast<std::size_t>(boundary_len));
  std::vector<VertexId> boundary(static_cast<std::size_t>(boundary_len));
  for (int i = 0; i < boundary_len; ++i) {
    ring[static_cast<std::size_t>(i)] = i;
    boundary[static_cast<std::size_t>(i)] = i;
    edges.insert(edge(i, (i + 1) % boundary_len));
  }
  VertexId next = boundary_len;
  int interior_left = interior_budget;
  const std::uint64_t attach_cut =
      static_cast<std::uint64_t>(weights.attach_weight * 18446744073709551615.0);

  while (!(ring.size() == 3 && interior_left <= 0)) {
    std::size_t L = ring.size();
    bool try_attach = interior_left > 0 && (L == 3 || rng() < attach_cut);
    if (!try_attach) {
      // Ear at a random legal position; fall back to attach when blocked.
      std::vector<std::size_t> legal;
      for (std::size_t pos = 0; pos < L; ++pos) {
        VertexId a = ring[(pos + L - 1) % L];
        VertexId c = ring[(pos + 1) % L];
        if (!edges.count(edge(a, c))) legal.push_back(pos);
      }
      if (!legal.empty() && L >= 4) {
        std::size_t pos = legal[pick(rng, legal.size())];
        VertexId a = ring[(pos + L - 1) % L];
        VertexId b = ring[pos];
        VertexId c = ring[(pos + 1) % L];
        tris.emplace_back(a, b, c);
        edges.insert(edge(a, c));
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(pos));
        continue;
      }
      try_attach = true;  // blocked (or closing would exceed the budget plan)
    }
    if (try_attach) {
      std::size_t pos = pick(rng, ring.size());
      VertexId a = ring[pos];
      VertexId b = ring[(pos + 1) % ring.size()];
      VertexId x = next++;
      tris.emplace_back(a, x, b);
      edges.insert(edge(a, x));
      edges.insert(edge(x, b));
      ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(pos) + 1, x);
      --interior_left;
    }
  }
  tris.emplace_back(ring[0], ring[1], ring[2]);
  SimplicialDisc disc(std::move(tris), std::move(boundary),
                      "random-" + std::to_string(boundary_len) + "-" +
                          std::to_string(interior_budget) + "-" + std::to_string(seed));
  if (!disc.valid())
    throw std::logic_error("gen_random_disc produced an invalid disc (seed " +
                           std::to_string(seed) + ")");
  return disc;
}

bool is_seven_located_disc(const SimplicialDisc& d) {
  auto flag = d.as_flag_complex();
  if (!flag.complex) return false;
  return check_location(*flag.complex, 7, LocationMode::assume_simply_connected).verdict ==
         Verdict::located;
}

}  // namespace locus
