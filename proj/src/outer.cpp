#include "icbounds/outer.hpp"

#include <algorithm>

namespace icb {

namespace {

// Pairwise sum rows per type, in table order. Kind selects between the
// two-term Z-channel form and the single 1/2 log2(1+2P/Nmin) form used by
// the cyclic pair of types 4/5.
enum class SumKind { TwoTerm, OneTerm };

struct SumRowSpec {
    int j, k;      // pair, 1-based, j < k
    SumKind kind;
};

std::vector<SumRowSpec> sum_rows(ChannelType t) {
    switch (t) {
        case ChannelType::T1:
            return {{1, 2, SumKind::TwoTerm}, {2, 3, SumKind::TwoTerm}};
        case ChannelType::T2:
            return {{1, 2, SumKind::TwoTerm}, {1, 3, SumKind::TwoTerm}};
        case ChannelType::T3:
            return {{1, 3, SumKind::TwoTerm}, {2, 3, SumKind::TwoTerm}};
        case ChannelType::T4:
            return {{1, 2, SumKind::TwoTerm},
                    {1, 3, SumKind::OneTerm},
                    {2, 3, SumKind::TwoTerm}};
        case ChannelType::T5:
            return {{1, 2, SumKind::OneTerm},
                    {2, 3, SumKind::OneTerm},
                    {1, 3, SumKind::TwoTerm}};
    }
    throw ConfigError("bad channel type");
}

LinearConstraint individual_row(int k, double bound) {
    LinearConstraint c;
    c.coeffs[static_cast<size_t>(k - 1)] = 1.0;
    c.bound = bound;
    c.label = "R" + std::to_string(k);
    return c;
}

LinearConstraint sum_row(int j, int k, double bound) {
    LinearConstraint c;
    c.coeffs[static_cast<size_t>(j - 1)] = 1.0;
    c.coeffs[static_cast<size_t>(k - 1)] = 1.0;
    c.bound = bound;
    c.label = "R" + std::to_string(j) + "+R" + std::to_string(k);
    return c;
}

}  // namespace

HalfSpaceRegion outer_region(ChannelType t, const ChannelParams& params) {
    const double P = params.P;
    HalfSpaceRegion region;
    for (int k = 1; k <= 3; ++k) {
        region.constraints.push_back(
            individual_row(k, single_user_capacity(params, k)));
    }
    for (const auto& row : sum_rows(t)) {
        const double nj = params.noise(row.j);  // row.j < row.k so Nj <= Nk
        const double nk = params.noise(row.k);
        double bound;
        if (row.kind == SumKind::TwoTerm) {
            bound = half_log2(1.0 + P / nj) +
                    half_log2((2.0 * P + nk) / (P + nk));
        } else {
            bound = half_log2(1.0 + 2.0 * P / nj);
        }
        region.constraints.push_back(sum_row(row.j, row.k, bound));
    }
    return region;
}

HalfSpaceRegion relaxed_outer_region(ChannelType t,
                                     const ChannelParams& params) {
    const double P = params.P;
    if (P < 3.0 * params.noise(3)) {
        throw PreconditionError(
            "relaxed outer bound requires P >= 3*N_j; the trivial-gap path "
            "applies below that");
    }
    HalfSpaceRegion region;
    for (int k = 1; k <= 3; ++k) {
        region.constraints.push_back(
            individual_row(k, half_log2(P / params.noise(k) * 4.0 / 3.0)));
    }
    for (const auto& row : sum_rows(t)) {
        const double nmin = params.noise(row.j);
        region.constraints.push_back(
            sum_row(row.j, row.k, half_log2(P / nmin * 7.0 / 3.0)));
    }
    return region;
}

OuterBoundSet outer_bound_set(ChannelType t, const ChannelParams& params) {
    OuterBoundSet set{t, outer_region(t, params), std::nullopt};
    if (params.P >= 3.0 * params.noise(3)) {
        set.relaxed = relaxed_outer_region(t, params);
    }
    return set;
}

CrossSection2D outer_cross_section(ChannelType t, const ChannelParams& params,
                                   int axis, double value) {
    return cross_section(relaxed_outer_region(t, params), axis, value);
}

double r1_threshold_type4(const ChannelParams& params) {
    const double x1 = params.P / params.noise(1);
    const double x2 = params.P / params.noise(2);
    return half_log2(x1 * 7.0 / 3.0) - 0.5 * half_log2(x2 * 7.0 / 3.0);
}

double r2_threshold_type5(const ChannelParams& params) {
    const double x2 = params.P / params.noise(2);
    return 0.5 * half_log2(x2 * 7.0 / 3.0);
}

}  // namespace icb
