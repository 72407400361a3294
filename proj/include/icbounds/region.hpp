#pragma once

// Representations and queries for 3-D rate regions: half-space polytopes
// (outer bounds), downward-closed convex hulls of corner clouds (inner
// bounds), 2-D cross-sections, Pareto boundary sampling and per-axis gap
// measurement.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icbounds/channel.hpp"

namespace icb {

// c . R <= bound, with c a 0/1 indicator triple in this artifact.
struct LinearConstraint {
    std::array<double, 3> coeffs{};
    double bound = 0.0;
    std::string label;  // Table row id, e.g. "R1" or "R2+R3"
};

// Intersection of half spaces plus implicit nonnegativity of all rates.
// Bounded as long as every axis has a constraint with positive coefficient.
struct HalfSpaceRegion {
    std::vector<LinearConstraint> constraints;

    const LinearConstraint* find_row(const std::array<double, 3>& coeffs) const;
};

// Finite set of achievable box corners; the represented region is the
// downward closure of their convex hull. provenance[i] indexes whatever
// per-corner record the producer keeps (alpha parameters for the inner
// bounds).
struct CornerCloud {
    std::vector<RateTriple> corners;
    std::vector<int> provenance;
};

struct CrossSection2D {
    int axis = 0;        // fixed axis, 1-based
    double value = 0.0;  // bits
    struct Row {
        std::array<double, 2> coeffs{};  // over the two free axes, low index first
        double bound = 0.0;
        std::string label;
    };
    std::vector<Row> rows;
    std::array<int, 2> free_axes{};  // 1-based, increasing
};

struct BoundaryPoint {
    RateTriple p{};
    std::vector<int> binding;  // indices of all constraints tight at p
};

struct GapRecord {
    std::array<int, 2> free_axes{};
    std::array<double, 2> delta{};       // per free axis
    std::optional<double> delta_sum;     // present when a 2-D sum row exists
};

bool contains_halfspace(const HalfSpaceRegion& region, const RateTriple& p,
                        double tol);

// Downward-closed convex hull membership: true iff there exist convex
// weights over the corners whose combination dominates p - tol
// componentwise. Small phase-1 simplex over the corner columns.
bool contains_inner(const CornerCloud& cloud, const RateTriple& p, double tol);

// Largest feasible value on `axis` with the other coordinates at zero.
double axis_intercept(const HalfSpaceRegion& region, int axis);

// Substitutes region[axis] = value. Rows supported only by the fixed axis
// become vacuous and are dropped; the rest keep their labels.
CrossSection2D cross_section(const HalfSpaceRegion& region, int axis,
                             double value);

// Scales dir from the origin to the first binding constraint. Equal scale
// factors are all reported as binding.
BoundaryPoint shoot_ray(const HalfSpaceRegion& region, const RateTriple& dir);

// Pareto boundary points from directions sampled uniformly on the positive
// octant of the unit sphere (splitmix64 counter scheme, deterministic given
// seed). Throws PreconditionError on an unbounded region.
std::vector<BoundaryPoint> sample_boundary(const HalfSpaceRegion& region,
                                           int count, uint64_t seed);

// delta_k = outer bound on free axis k minus the best inner corner value on
// that axis; delta_sum analogous for the 2-D sum row when one is present.
GapRecord axis_gaps(const CrossSection2D& outer,
                    const std::vector<std::array<double, 2>>& inner_corners);

// Removes exact duplicates and componentwise-dominated points. Safe for
// downward-closed hull membership; used to keep the simplex column count low.
std::vector<RateTriple> pareto_prune(const std::vector<RateTriple>& pts);

}  // namespace icb
