#pragma once

// Layered random-coding achievable regions for types 4 and 5 and the
// closed-form regions they include.

#include <array>

#include "icbounds/channel.hpp"
#include "icbounds/region.hpp"

namespace icb {

struct LayeredRates {
    ChannelType type = ChannelType::T4;
    std::array<double, 14> I{};  // I[k-1] holds I_k
    std::array<double, 10> T{};  // T[k-1] holds T_k
    HalfSpaceRegion region;      // six rows over (R1,R2,R3)

    double i(int k) const { return I[static_cast<size_t>(k - 1)]; }
    double t(int k) const { return T[static_cast<size_t>(k - 1)]; }
};

// Requires P >= N2+N3 (the top-layer power split must be nonnegative);
// throws PreconditionError otherwise.
LayeredRates appendix_rates_type4(const ChannelParams& params);
LayeredRates appendix_rates_type5(const ChannelParams& params);
LayeredRates appendix_rates(ChannelType t, const ChannelParams& params);

// The stated six-row closed-form region (rows clamp at zero). Valid for
// any P >= 0; only types 4 and 5 exist.
HalfSpaceRegion appendix_closed_form(ChannelType t, const ChannelParams& params);

// Exact vertex enumeration of a small half-space region (rows plus
// nonnegativity), deduplicated, deterministic order.
std::vector<RateTriple> enumerate_vertices(const HalfSpaceRegion& region);

struct InclusionResult {
    bool holds = false;
    double worst_margin = 0.0;  // min over vertices/rows of bound - c.v
    RateTriple worst_vertex{};
};

// True iff every vertex of the closed-form region satisfies the layered
// region's rows.
InclusionResult check_inclusion(const LayeredRates& layered,
                                const HalfSpaceRegion& closed);

}  // namespace icb
