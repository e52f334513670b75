#pragma once

#include <string>
#include <vector>

#include "locus/core.hpp"
#include "locus/disc.hpp"

namespace locus {

// Lexicographically least geodesic from u to v in the disc 1-skeleton.
PathSeq shortest_path(const SimplicialDisc& d, VertexId u, VertexId v);

struct CompanionResult {
  PathSeq q;                      // a shortest (u, w)-path
  std::vector<VertexId> cycle;    // reduced closed walk P + (v,w) + reverse(Q); empty if trivial
  int area = 0;                   // walk area of the full closed walk
  int bound = 0;                  // bound_const * d(u, v)
  bool within_bound = true;
  bool used_fallback = false;
  std::vector<std::string> fallbacks;  // case labels where the guided construction bailed
};

// Builds a shortest (u, w)-path Q whose cycle against P and the edge (v, w)
// has area <= bound_const * d(u, v), following the case analysis for
// 7-located discs (trichotomy on d(u,w) - d(u,v); 1-ball centers of full
// cycles of length <= 7; interior-vertex chains inside longer full cycles).
// Whenever an instance lacks the structure a case expects, the construction
// falls back to exhaustive geodesic search for that subproblem and records
// the case label. Requires p to be a shortest (u, v)-path with w ~ v.
CompanionResult companion_path(const SimplicialDisc& d, VertexId u, const PathSeq& p, VertexId w,
                               int bound_const);

struct CompanionOracleResult {
  int min_area = 0;
  PathSeq best;  // the lexicographically least geodesic achieving the minimum
  bool capped = false;
  long geodesics = 0;
};

// Minimum cycle area over ALL shortest (u, w)-paths, by exhaustive traversal
// of the geodesic DAG (independent of companion_path). Enumeration stops at
// `cap` geodesics; `capped` marks truncated runs.
CompanionOracleResult min_companion_area(const SimplicialDisc& d, VertexId u, const PathSeq& p,
                                         VertexId w, long cap = 1000000);

struct BoundInstance {
  VertexId u, v, w;
  int k = 0;      // d(u, v)
  int area = 0;   // oracle minimum
  int bound = 0;  // bound_const * k
  bool pass = true;
  bool capped = false;
};

struct BoundReport {
  int bound_const = 3;
  long instances = 0;
  long violations = 0;
  long capped = 0;
  double max_ratio = 0.0;  // max area / k over instances with k > 0
  std::vector<BoundInstance> failures;
};

// Oracle bound check over all triples (u, v, w ~ v) with d(u,v) <= max_k.
BoundReport check_companion_bounds(const SimplicialDisc& d, int bound_const, int max_k,
                                   long cap = 1000000);

struct FanCycle {
  int index = 0;
  int dist = 0;   // d(v0, v_i)
  int area = 0;
  int bound = 0;  // bound_const * dist
  bool pass = true;
};

struct IsoperimetricReport {
  int n = 0;         // boundary length
  int area = 0;      // disc area
  long bound = 0;    // bound_const * n^2
  bool pass = false; // area < bound
  bool fan_run = false;
  bool fan_ok = false;       // every per-cycle bound held
  bool coverage_ok = false;  // every triangle covered by some fan cycle
  std::vector<FanCycle> cycles;
  std::vector<std::string> fallbacks;
};

// Direct check: area(D) < bound_const * n^2.
IsoperimetricReport verify_quadratic_bound(const SimplicialDisc& d, int bound_const);

// Constructive check: fills the disc with the n cycles C_i spanned by
// successive companion paths P_i, P_{i+1} from v0, recording every per-cycle
// area against bound_const * d(v0, v_i) and auditing triangle coverage.
IsoperimetricReport fan_decomposition(const SimplicialDisc& d, int bound_const);

}  // namespace locus
