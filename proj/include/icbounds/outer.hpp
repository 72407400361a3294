#pragma once

// Per-type capacity outer bounds, the relaxed outer bounds valid under
// P >= 3N_j, and their 2-D cross-sections.

#include <optional>

#include "icbounds/channel.hpp"
#include "icbounds/region.hpp"

namespace icb {

struct OuterBoundSet {
    ChannelType type;
    HalfSpaceRegion exact;
    std::optional<HalfSpaceRegion> relaxed;  // absent when P < 3*N3
};

// Exact outer bound rows: R_k <= C_k for all k plus the type's pairwise
// sum-rate rows (two-term log form; types 4/5 carry a 1/2 log2(1+2P/N_j)
// row for the cyclic pair).
HalfSpaceRegion outer_region(ChannelType t, const ChannelParams& params);

// Individual rows 1/2 log2((P/N_k) 4/3), sum rows 1/2 log2((P/N_j) 7/3).
// Requires P >= 3 N_j for all j; otherwise throws PreconditionError
// (the trivial-gap path in the certifier handles that case).
HalfSpaceRegion relaxed_outer_region(ChannelType t, const ChannelParams& params);

OuterBoundSet outer_bound_set(ChannelType t, const ChannelParams& params);

// Cross-section of the relaxed region at rates[axis] = value.
CrossSection2D outer_cross_section(ChannelType t, const ChannelParams& params,
                                   int axis, double value);

// Fixed-rate thresholds above which the residual sum row of the
// cross-section stops being active (types 4 and 5).
double r1_threshold_type4(const ChannelParams& params);
double r2_threshold_type5(const ChannelParams& params);

}  // namespace icb
