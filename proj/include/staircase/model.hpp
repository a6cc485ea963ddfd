#pragma once

#include "staircase/types.hpp"

namespace stairs {

/// Ascending perpendicular of each stair, disambiguated between phi and
/// phi + pi so that it points from stair center i toward center i+1
/// (the last stair uses the direction from its predecessor).
/// Requires >= 2 stairs with distinct consecutive centers.
std::vector<double> derive_stair_yaws(const std::vector<Stair>& stairs);

/// Derives the six staircase parameters by averaging over all steps.
/// Throws DegenerateStaircase if fewer than 2 stairs or consecutive centers
/// coincide (< 1e-6 m).
StaircaseParams derive_params(const std::vector<Stair>& stairs);

/// Recomputes params and per-stair yaws on the belief in place.
void refresh_derived(StaircaseBelief& belief);

/// Indices i (0-based) where the center spacing between stairs i and i+1
/// exceeds max(kappa * median spacing, floor) -- i.e. a landing. The caller
/// splits the staircase after stair i. Empty for fewer than 3 stairs.
std::vector<int> detect_landing(const StaircaseBelief& belief, double kappa = 2.5,
                                double abs_floor = 0.5);

/// Sorts stairs ascending by mean tread elevation; ties broken by XY distance
/// of the center from the world origin.
void sort_ascending(std::vector<Stair>& stairs);

/// Builds a belief from stairs + covariance and derives params/yaws.
StaircaseBelief make_belief(std::vector<Stair> stairs, MatX covariance);

}  // namespace stairs
