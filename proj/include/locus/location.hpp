#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "locus/core.hpp"
#include "locus/disc.hpp"
#include "locus/filling.hpp"

namespace locus {

enum class Verdict { located, not_located, unknown };
enum class LocationMode { assume_simply_connected, certify };

std::string to_string(Verdict v);
std::string to_string(LocationMode m);

struct LocationReport {
  int m = 0;
  LocationMode mode = LocationMode::assume_simply_connected;
  int budget = 0;
  Verdict verdict = Verdict::located;
  // Witnessed cycles (capped), plus the total count of witnessed cycles.
  static constexpr std::size_t kWitnessCap = 10000;
  std::vector<std::pair<CycleSeq, VertexId>> witnesses;
  std::size_t witness_count = 0;
  std::vector<CycleSeq> violations;  // full trivial cycles with no 1-ball
  std::vector<CycleSeq> undecided;   // null-homotopy not certified within budget
};

// All chordless cycles of X with length in [min_len, max_len], canonicalized,
// without duplicates. Exhaustive backtracking with canonical-start pruning.
std::vector<CycleSeq> enumerate_full_cycles(const FlagComplex& x, int min_len, int max_len);

// A vertex whose 1-ball contains the full cycle c (|c| >= 4), if any. For
// such a cycle a containing 1-ball center cannot lie on the cycle (a cycle
// vertex two steps away would yield a chord), so the common-neighbor test is
// exact. Returns the smallest witness.
std::optional<VertexId> one_ball_witness(const FlagComplex& x, const CycleSeq& c);

enum class Certainty { yes, unknown };

// Operational null-homotopy test: yes iff a filling diagram exists within the
// area budget.
Certainty certify_null_homotopic(const FlagComplex& x, const CycleSeq& c, int budget);

// m-location check per the report structure. Length-3 full cycles are
// triangles, contained in the 1-ball of any of their vertices, and are not
// enumerated. In certify mode a cycle without a witness only counts as a
// violation when its null-homotopy is certified within the budget (budget
// <= 0 means the per-cycle default |c|^2).
LocationReport check_location(const FlagComplex& x, int m, LocationMode mode, int budget = 0);

// Pipeline check for a single loop over a located complex: fill the loop,
// require the minimal disc to be flag, and require the disc itself to be
// 7-located (assume-simply-connected; a disc is simply connected).
struct MinimalDiscLocatedOutcome {
  enum class Status { ok, violation, unknown };
  Status status = Status::unknown;
  std::string detail;
  std::optional<FillingDiagram> diagram;
  std::optional<LocationReport> disc_report;
};
MinimalDiscLocatedOutcome verify_minimal_disc_located(const FlagComplex& x, const CycleSeq& loop,
                                                      int fill_budget);

}  // namespace locus
