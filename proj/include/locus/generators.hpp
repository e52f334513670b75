#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "locus/core.hpp"
#include "locus/disc.hpp"

namespace locus {

// Canonical fixtures.
FlagComplex gen_triangle();
FlagComplex gen_wheel(int k);       // hub 0 + full k-cycle rim, 4 <= k <= 8
FlagComplex gen_octahedron();
FlagComplex gen_annulus(int n);     // two concentric n-cycles, n >= 4
SimplicialDisc gen_hex_patch(int r);  // flat triangular-lattice disc of radius r >= 1

// The seven-boundary disc with two interior vertices whose boundary cycle
// has no 1-ball: the standard witness that a disc need not be 7-located.
SimplicialDisc gen_two_interior_disc();

using GeneratedInstance = std::variant<FlagComplex, SimplicialDisc>;

// Dispatch by name: triangle | wheel <k> | octahedron | annulus <n> |
// hex-patch <r> | lemma36-counterexample | random <blen> <ibudget> <seed>.
GeneratedInstance gen_named(const std::string& name, const std::vector<long>& params);

struct RandomDiscWeights {
  // Relative probability of growing with a fresh interior vertex (versus
  // closing an ear) while interior budget remains. Lower values give flatter
  // discs, which keeps interior degrees low and the 7-located rate up.
  double attach_weight = 0.35;
};

// A valid disc with the given boundary length, grown by seeded random
// boundary-reduction moves; bit-reproducible per (params, seed). The interior
// budget is a target: rare blocked configurations may add an extra vertex to
// complete the disc.
SimplicialDisc gen_random_disc(int boundary_len, int interior_budget, std::uint64_t seed,
                               const RandomDiscWeights& weights = {});

// True iff the disc is flag as a 2-complex and 7-located
// (assume-simply-connected).
bool is_seven_located_disc(const SimplicialDisc& d);

}  // namespace locus
