#pragma once

#include "straightedge/distances.hpp"
#include "straightedge/graph.hpp"

namespace straightedge::detail {

// Distances and break-even data shared by the 4-case formulas for a pair of
// distinct edges e1 = (u1,v1) hosting p1 and e2 = (u2,v2) as target.
struct PairDistances {
  double len1, len2;
  double d_u1u2, d_u1v2, d_v1u2, d_v1v2;
  double lam_u2, lam_v2;  // break-evens of e1 for u2 and v2, clamped to [0, len1]
  bool connected;
};

PairDistances pair_distances(const SpatialGraph& g, const DistanceProvider& dp, const EdgeKey& e1,
                             const EdgeKey& e2);

// Case selection exactly as stated by the 4-case break-even formula, with
// non-strict comparisons on the boundaries (value-neutral by continuity).
int select_case(const PairDistances& pd, double ell1);

double raw_lambda_for_case(const PairDistances& pd, double ell1, int case_index);

// Route length for the two branches of the selected case: through u2 when
// ell2 <= lambda_p1, through v2 otherwise.
double route_length(const PairDistances& pd, int case_index, bool through_u2, double ell1,
                    double ell2);

}  // namespace straightedge::detail
