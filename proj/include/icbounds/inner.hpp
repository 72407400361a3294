#pragma once

// Achievable rate boxes per channel type and power-split parameters,
// inner regions assembled as corner clouds over alpha grids, and the
// closed-form witness constructions from the gap analyses.

#include <cstdint>
#include <string>
#include <vector>

#include "icbounds/channel.hpp"
#include "icbounds/region.hpp"

namespace icb {

enum class Scheme { None, LargeR1, SmallR1, LargeR2, SmallR2 };

const char* scheme_name(Scheme s);

// Type-tagged power-split record. Components used per type:
//   type 1: a0, a2      type 2: a1        type 3: a1 (the single alpha)
//   type 4: a0, a1, a2 plus scheme in {LargeR1, SmallR1}
//   type 5: a1, a2, a2p plus scheme in {LargeR2, SmallR2}
struct AlphaParams {
    ChannelType type = ChannelType::T1;
    Scheme scheme = Scheme::None;
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a2p = 0.0;
};

struct InnerBox {
    AlphaParams alpha;
    RateTriple T{};  // box corner, componentwise >= 0
};

InnerBox inner_box_type1(const ChannelParams& p, double a0, double a2);
InnerBox inner_box_type2(const ChannelParams& p, double a1);
InnerBox inner_box_type3(const ChannelParams& p, double a);
// Requires a0+a1+a2 <= 1 (power budget).
InnerBox inner_box_type4_large(const ChannelParams& p, double a0, double a1,
                               double a2);
// Requires a0 <= a1 (sub-layer within the layer).
InnerBox inner_box_type4_small(const ChannelParams& p, double a0, double a1,
                               double a2);
// Requires a2+a2p <= 1.
InnerBox inner_box_type5_large(const ChannelParams& p, double a1, double a2,
                               double a2p);
InnerBox inner_box_type5_small(const ChannelParams& p, double a1, double a2);

InnerBox inner_box(const ChannelParams& p, const AlphaParams& alpha);

// Alpha grids are log-spaced toward zero above `floor_val`, always include
// the exact endpoints 0 and 1, and pick up the gap-analysis witness sweep
// unless inject_witnesses is cleared. Doubling the resolution keeps every
// grid point, so refined clouds are supersets.
struct GridSpec {
    int points_per_axis = 64;
    double floor_val = 1e-6;
    bool inject_witnesses = true;

    std::vector<double> axis_values() const;
};

struct InnerRegion {
    CornerCloud cloud;
    std::vector<AlphaParams> alphas;  // referenced by cloud.provenance
};

// Corner cloud over the alpha grid; for types 4/5 the union over both
// schemes. Corners are ordered by scheme then alpha lexicographic.
InnerRegion inner_region(ChannelType t, const ChannelParams& p,
                         const GridSpec& grid);

struct GapWitness {
    AlphaParams alpha;
    bool in_range = false;  // anchor inside the construction's range
    std::string case_note;  // which case of the section applies
};

// Closed-form witness solve from the gap sections: the anchor is a rate on
// the section's fixed axis (R2 for types 1/5, R1 for types 2/4, R3 for
// type 3). Requires P >= 3*N3.
GapWitness gap_witness_alpha(ChannelType t, const ChannelParams& p,
                             double anchor_rate);

// Witness alpha sweep injected into inner_region grids; exposed for reuse
// by the certifier and tests.
std::vector<AlphaParams> witness_sweep(ChannelType t, const ChannelParams& p,
                                       int count);

}  // namespace icb
