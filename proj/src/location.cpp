#include "locus/location.hpp"

#include <algorithm>
#include <stdexcept>

namespace locus {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::located: return "located";
    case Verdict::not_located: return "not-located";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(LocationMode m) {
  return m == LocationMode::assume_simply_connected ? "assume-simply-connected" : "certify";
}

namespace {

// Grows induced paths from a start vertex; all other cycle vertices are
// larger than the start. A candidate extension must be adjacent to the path
// tip only; adjacency to the start closes a chordless cycle and forbids
// further extension.
void extend_cycles(const FlagComplex& x, std::vector<VertexId>& path, std::vector<bool>& in_path,
                   int min_len, int max_len, std::vector<CycleSeq>& out) {
  VertexId start = path.front();
  VertexId tip = path.back();
  for (VertexId next : x.neighbors(tip)) {
    if (next <= start || in_path[static_cast<std::size_t>(next)]) continue;
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
      if (x.adjacent(next, path[i])) chord = true;
    if (chord) continue;
    bool closes = x.adjacent(next, start);
    if (closes) {
      if (static_cast<int>(path.size()) + 1 >= min_len && path[1] < next)
        out.push_back(CycleSeq{[&] {
          std::vector<VertexId> c = path;
          c.push_back(next);
          return c;
        }()});
      continue;  // a longer cycle through `next` would keep the chord to start
    }
    if (static_cast<int>(path.size()) + 1 >= max_len) continue;
    path.push_back(next);
    in_path[static_cast<std::size_t>(next)] = true;
    extend_cycles(x, path, in_path, min_len, max_len, out);
    in_path[static_cast<std::size_t>(next)] = false;
    path.pop_back();
  }
}

}  // namespace

std::vector<CycleSeq> enumerate_full_cycles(const FlagComplex& x, int min_len, int max_len) {
  if (min_len < 3 || min_len > max_len)
    throw std::invalid_argument("enumerate_full_cycles: need 3 <= min_len <= max_len");
  std::vector<CycleSeq> out;
  std::vector<bool> in_path(static_cast<std::size_t>(x.vertex_count()), false);
  for (VertexId start = 0; start < x.vertex_count(); ++start) {
    std::vector<VertexId> path{start};
    in_path[static_cast<std::size_t>(start)] = true;
    extend_cycles(x, path, in_path, min_len, max_len, out);
    in_path[static_cast<std::size_t>(start)] = false;
  }
  for (CycleSeq& c : out) c = canonical_cycle(c);
  std::sort(out.begin(), out.end(), [](const CycleSeq& a, const CycleSeq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices < b.vertices;
  });
  return out;
}

std::optional<VertexId> one_ball_witness(const FlagComplex& x, const CycleSeq& c) {
  if (c.size() < 4) throw std::invalid_argument("one_ball_witness: cycle shorter than 4");
  if (!is_full_cycle(x, c)) throw std::invalid_argument("one_ball_witness: cycle is not full");
  auto ws = common_neighbors(x, c.vertices);
  if (ws.empty()) return std::nullopt;
  return ws.front();
}

Certainty certify_null_homotopic(const FlagComplex& x, const CycleSeq& c, int budget) {
  auto outcome = minimal_filling(x, c, budget);
  return outcome.status == FillOutcome::Status::found ? Certainty::yes : Certainty::unknown;
}

LocationReport check_location(const FlagComplex& x, int m, LocationMode mode, int budget) {
  if (m < 4) throw std::invalid_argument("check_location: m must be >= 4");
  LocationReport report;
  report.m = m;
  report.mode = mode;
  report.budget = budget;
  for (const CycleSeq& c : enumerate_full_cycles(x, 4, m)) {
    auto witness = one_ball_witness(x, c);
    if (witness) {
      ++report.witness_count;
      if (report.witnesses.size() < LocationReport::kWitnessCap)
        report.witnesses.emplace_back(c, *witness);
      continue;
    }
    if (mode == LocationMode::assume_simply_connected) {
      report.violations.push_back(c);
      continue;
    }
    int cycle_budget = budget > 0 ? budget : default_fill_budget(c);
    if (certify_null_homotopic(x, c, cycle_budget) == Certainty::yes)
      report.violations.push_back(c);
    else
      report.undecided.push_back(c);
  }
  if (!report.violations.empty())
    report.verdict = Verdict::not_located;
  else if (!report.undecided.empty())
    report.verdict = Verdict::unknown;
  else
    report.verdict = Verdict::located;
  return report;
}

MinimalDiscLocatedOutcome verify_minimal_disc_located(const FlagComplex& x, const CycleSeq& loop,
                                                      int fill_budget) {
  MinimalDiscLocatedOutcome out;
  auto fill = minimal_filling(x, loop, fill_budget);
  if (fill.status != FillOutcome::Status::found) {
    out.status = MinimalDiscLocatedOutcome::Status::unknown;
    out.detail = "no filling diagram within budget " + std::to_string(fill_budget);
    return out;
  }
  out.diagram = std::move(fill.diagram);
  auto flag = out.diagram->disc.as_flag_complex();
  if (!flag.complex) {
    out.status = MinimalDiscLocatedOutcome::Status::violation;
    const auto& t = *flag.missing_clique;
    out.detail = "minimal disc is not flag: clique " + std::to_string(t.v[0]) + " " +
                 std::to_string(t.v[1]) + " " + std::to_string(t.v[2]) + " spans no triangle";
    return out;
  }
  out.disc_report =
      check_location(*flag.complex, 7, LocationMode::assume_simply_connected, fill_budget);
  if (out.disc_report->verdict == Verdict::located) {
    out.status = MinimalDiscLocatedOutcome::Status::ok;
  } else {
    out.status = MinimalDiscLocatedOutcome::Status::violation;
    out.detail = "minimal disc is not 7-located";
  }
  return out;
}

}  // namespace locus
