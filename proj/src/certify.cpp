#include "icbounds/certify.hpp"

#include <algorithm>
#include <cmath>

#include "icbounds/outer.hpp"

namespace icb {

namespace {

RateTriple shift_clamped(const RateTriple& p, double s) {
    return {std::max(p[0] - s, 0.0), std::max(p[1] - s, 0.0),
            std::max(p[2] - s, 0.0)};
}

// Minimal uniform shift putting max(p - s, 0) inside the cloud; bisection
// on [0, cap]; returns cap + 1 when even the full shift stays outside.
double min_shift(const CornerCloud& cloud, const RateTriple& p, double tol,
                 double cap) {
    if (contains_inner(cloud, shift_clamped(p, 0.0), tol)) return 0.0;
    if (!contains_inner(cloud, shift_clamped(p, cap), tol)) return cap + 1.0;
    double lo = 0.0, hi = cap;
    for (int i = 0; i < 25 && hi - lo > 1e-6; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (contains_inner(cloud, shift_clamped(p, mid), tol)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

CertReport certify(ChannelType t, const ChannelParams& params,
                   const CertOptions& opts) {
    CertReport rep;
    rep.type = t;
    rep.P = params.P;
    rep.N = params.N;
    rep.samples = opts.samples;
    rep.seed = opts.seed;

    bool trivial = false;
    for (int k = 1; k <= 3; ++k) {
        if (params.P < 3.0 * params.noise(k)) {
            rep.trivial_axes[static_cast<size_t>(k - 1)] = true;
            trivial = true;
        }
    }
    if (trivial) {
        // Capacity region sits inside the unit hypercube on the flagged
        // axes, so the shifted point degenerates there; nothing to sample.
        rep.trivial_case = true;
        return rep;
    }

    InnerRegion inner = inner_region(t, params, opts.grid);
    rep.corner_count = static_cast<int>(inner.cloud.corners.size());
    if (opts.inner_scale != 1.0) {
        for (auto& c : inner.cloud.corners) {
            for (double& v : c) v *= opts.inner_scale;
        }
    }
    CornerCloud pruned;
    pruned.corners = pareto_prune(inner.cloud.corners);
    rep.pruned_corner_count = static_cast<int>(pruned.corners.size());

    const HalfSpaceRegion outer = outer_region(t, params);
    const auto boundary = sample_boundary(outer, opts.samples, opts.seed);
    rep.points_checked = static_cast<int>(boundary.size());

    for (const auto& bp : boundary) {
        const RateTriple shifted = shift_clamped(bp.p, 1.0);
        if (!contains_inner(pruned, shifted, opts.membership_tol)) {
            ++rep.failure_count;
            if (static_cast<int>(rep.failures.size()) <
                opts.max_stored_failures) {
                CertFailure f;
                f.boundary = bp.p;
                f.shifted = shifted;
                f.margin =
                    min_shift(pruned, bp.p, opts.membership_tol, 3.0) - 1.0;
                rep.failures.push_back(f);
            }
        }
    }

    const int probes = std::min<int>(opts.gap_probe_samples,
                                     static_cast<int>(boundary.size()));
    for (int i = 0; i < probes; ++i) {
        const auto& p = boundary[static_cast<size_t>(i)].p;
        const double s = min_shift(pruned, p, opts.membership_tol, 3.0);
        for (int k = 0; k < 3; ++k) {
            rep.max_observed_gap[static_cast<size_t>(k)] =
                std::max(rep.max_observed_gap[static_cast<size_t>(k)],
                         std::min(s, p[static_cast<size_t>(k)]));
        }
    }
    return rep;
}

CertReport certify(ChannelType t, const ChannelParams& params, int samples,
                   const GridSpec& grid, uint64_t seed) {
    CertOptions opts;
    opts.samples = samples;
    opts.grid = grid;
    opts.seed = seed;
    return certify(t, params, opts);
}

// ---------------------------------------------------------------------------
// Gap constants at the witness constructions.
// ---------------------------------------------------------------------------
namespace {

struct DeltaAccum {
    double d_fixed = -1e300;
    double d_a = -1e300;
    double d_b = -1e300;
    double d_sum = -1e300;
    bool any = false;
};

// Clamp the anchor into the cross-section's valid range.
double clamp_anchor(const HalfSpaceRegion& relaxed, int axis, double value) {
    return std::clamp(value, 0.0, axis_intercept(relaxed, axis));
}

// Measure free-axis and sum gaps at a fixed-axis location against a batch
// of inner boxes evaluated at the witness alphas. Boxes whose fixed-axis
// rate falls short of fixed_floor do not reach this cross-section and are
// discarded rather than flattering the inner region.
void measure(DeltaAccum& acc, const HalfSpaceRegion& relaxed, int axis,
             double outer_value, double inner_fixed,
             const std::vector<RateTriple>& boxes,
             double fixed_floor = -1e300) {
    const CrossSection2D cs = cross_section(relaxed, axis, outer_value);
    std::vector<std::array<double, 2>> corners;
    corners.reserve(boxes.size());
    for (const auto& b : boxes) {
        if (b[static_cast<size_t>(axis - 1)] < fixed_floor - 1e-9) continue;
        corners.push_back({b[static_cast<size_t>(cs.free_axes[0] - 1)],
                           b[static_cast<size_t>(cs.free_axes[1] - 1)]});
    }
    if (corners.empty()) return;
    const GapRecord rec = axis_gaps(cs, corners);
    acc.d_fixed = std::max(acc.d_fixed, outer_value - inner_fixed);
    acc.d_a = std::max(acc.d_a, rec.delta[0]);
    acc.d_b = std::max(acc.d_b, rec.delta[1]);
    if (rec.delta_sum) acc.d_sum = std::max(acc.d_sum, *rec.delta_sum);
    acc.any = true;
}

DeltaEntry entry(const std::string& name, double measured, double bound,
                 bool feasible, const std::string& note = "") {
    DeltaEntry e;
    e.name = name;
    e.measured = feasible ? measured : 0.0;
    e.bound = bound;
    e.feasible = feasible;
    e.note = note;
    return e;
}

double geomean(double a, double b) { return std::sqrt(a * b); }

}  // namespace

std::vector<DeltaEntry> delta_report(ChannelType t,
                                     const ChannelParams& params) {
    const double P = params.P;
    const double N1 = params.noise(1), N2 = params.noise(2),
                 N3 = params.noise(3);
    if (P < 3.0 * N3) {
        throw PreconditionError(
            "trivial gap case: P < 3*N_j, the region sits in the unit "
            "hypercube on the affected axes");
    }
    const HalfSpaceRegion relaxed = relaxed_outer_region(t, params);
    std::vector<DeltaEntry> out;

    switch (t) {
        case ChannelType::T1: {
            const double a0 = N2 / P;
            // representatives of the three alpha2 regimes
            std::vector<double> reps{N2 / (4.0 * P), N2 / (2.0 * P),
                                     geomean(N2, N3) / P,
                                     std::min(1.0, 3.0 * N3 / P),
                                     std::min(1.0, 9.0 * N3 / P)};
            DeltaAccum acc;
            for (double a2 : reps) {
                if (a2 > 1.0) continue;
                const InnerBox box = inner_box_type1(params, a0, a2);
                const double u2 = clamp_anchor(
                    relaxed, 2, half_log2(a2 * P / N2 * 7.0 / 4.0));
                measure(acc, relaxed, 2, u2, box.T[1], {box.T});
            }
            out.push_back(entry("type1.delta1", acc.d_a, 1.0, acc.any));
            out.push_back(entry("type1.delta2", acc.d_fixed, 0.91, acc.any));
            out.push_back(entry("type1.delta3", acc.d_b, 1.0, acc.any));
            break;
        }
        case ChannelType::T2: {
            std::vector<double> reps{N2 / (2.0 * P), geomean(N2, N3) / P,
                                     std::min(1.0, 3.0 * N3 / P),
                                     std::min(1.0, 9.0 * N3 / P)};
            DeltaAccum acc;
            for (double a1 : reps) {
                if (a1 > 1.0) continue;
                const InnerBox box = inner_box_type2(params, a1);
                const double u1 = clamp_anchor(
                    relaxed, 1, half_log2(a1 * P / N1 * 7.0 / 4.0));
                measure(acc, relaxed, 1, u1, box.T[0], {box.T});
            }
            out.push_back(entry("type2.delta1", acc.d_fixed, 0.41, acc.any));
            out.push_back(entry("type2.delta2", acc.d_a, 0.71, acc.any));
            out.push_back(entry("type2.delta3", acc.d_b, 0.71, acc.any));
            break;
        }
        case ChannelType::T3: {
            // construction range: alpha <= 4/7 with alpha P >= N3
            const double lo = N3 / P, hi = 4.0 / 7.0;
            DeltaAccum acc;
            if (lo <= hi) {
                for (double a : {lo, geomean(lo, hi), hi}) {
                    const InnerBox box = inner_box_type3(params, a);
                    const double u3 =
                        clamp_anchor(relaxed, 3, half_log2(1.0 / a));
                    measure(acc, relaxed, 3, u3, box.T[2], {box.T});
                }
            }
            out.push_back(entry("type3.delta1", acc.d_a, 0.62, acc.any));
            out.push_back(entry("type3.delta2", acc.d_b, 0.62, acc.any));
            out.push_back(entry("type3.delta3", acc.d_fixed, 0.8, acc.any));
            break;
        }
        case ChannelType::T4: {
            // Large-R1 scheme: alpha0 P = N2, balancing equality fixes
            // alpha0+alpha2 given alpha1, side conditions bound alpha1.
            {
                const double lo = std::sqrt(51.0 * N2 / (20.0 * P));
                const double hi = std::min(
                    3.0 / 8.0, 17.0 * N2 / (20.0 * (N2 + 3.0 * N3)));
                DeltaAccum acc;
                std::string note;
                if (lo <= hi) {
                    for (double a1 : {lo, geomean(lo, hi), hi}) {
                        const double a0 = N2 / P;
                        const double a2 = 17.0 * N2 / (20.0 * a1 * P) - a0;
                        const InnerBox box =
                            inner_box_type4_large(params, a0, a1, a2);
                        const double u1 = clamp_anchor(
                            relaxed, 1,
                            half_log2(a1 * P / N1 * 2.0 / 5.0) + 1.0);
                        measure(acc, relaxed, 1, u1, box.T[0], {box.T},
                                u1 - 1.0);
                    }
                } else {
                    note = "large-R1 side-condition window empty";
                }
                out.push_back(
                    entry("type4.large.delta2", acc.d_a, 0.89, acc.any, note));
                out.push_back(
                    entry("type4.large.delta3", acc.d_b, 0.54, acc.any, note));
            }
            // Small-R1 scheme: alpha0 P = (4/5) N2, alpha2 sweeps the
            // MAC-like window [alpha1, alpha1'].
            {
                const double lo = 3.0 * N3 / P;
                const double hi = std::min(0.5,
                                           std::sqrt(24.0 * N2 / (35.0 * P)));
                DeltaAccum acc;
                std::string note;
                if (lo <= hi) {
                    for (double a1 : {lo, geomean(lo, hi), hi}) {
                        const double a0 = 0.8 * N2 / P;
                        const double a1p =
                            std::min(0.5, 24.0 * N2 / (35.0 * a1 * P));
                        std::vector<RateTriple> boxes;
                        for (double a2 :
                             {a1, geomean(a1, std::max(a1, a1p)),
                              std::max(a1, a1p)}) {
                            boxes.push_back(
                                inner_box_type4_small(params, a0, a1, a2).T);
                        }
                        const double u1 = clamp_anchor(
                            relaxed, 1,
                            half_log2(a1 * P / N1 * 4.0 / 9.0) + 1.0);
                        measure(acc, relaxed, 1, u1, boxes.front()[0], boxes,
                                u1 - 1.0);
                    }
                } else {
                    note = "small-R1 side-condition window empty";
                }
                out.push_back(
                    entry("type4.small.delta2", acc.d_a, 0.90, acc.any, note));
                out.push_back(
                    entry("type4.small.delta3", acc.d_b, 0.41, acc.any, note));
                out.push_back(entry("type4.small.delta23", acc.d_sum, 1.25,
                                    acc.any, note));
            }
            break;
        }
        case ChannelType::T5: {
            // Large-R2 scheme: alpha1 = alpha2' = N2/(6 alpha2 P); the lower
            // window edge also keeps alpha1 <= alpha2.
            {
                const double lo =
                    std::max(N3 / P, std::sqrt(N2 / (6.0 * P)));
                const double hi = 1.0 / 6.0;
                DeltaAccum acc;
                std::string note;
                if (lo <= hi) {
                    for (double a2 : {lo, geomean(lo, hi), hi}) {
                        const double a1 = N2 / (6.0 * a2 * P);
                        const InnerBox box =
                            inner_box_type5_large(params, a1, a2, a1);
                        const double u2 = clamp_anchor(
                            relaxed, 2, half_log2(a2 * P / N2) + 1.0);
                        measure(acc, relaxed, 2, u2, box.T[1], {box.T},
                                u2 - 1.0);
                    }
                } else {
                    note = "large-R2 side-condition window empty";
                }
                out.push_back(
                    entry("type5.large.delta1", acc.d_a, 0.91, acc.any, note));
                out.push_back(
                    entry("type5.large.delta3", acc.d_b, 0.41, acc.any, note));
            }
            // Small-R2 scheme: alpha1 sweeps [alpha2, alpha2'] with
            // alpha2' from 1/(3 alpha2') = alpha2 P / N2.
            {
                const double lo = N3 / P;
                const double hi = std::sqrt(N2 / (3.0 * P));
                DeltaAccum acc;
                std::string note;
                if (lo <= hi && lo <= 0.25) {
                    for (double a2 : {lo, geomean(lo, hi), hi}) {
                        const double a2pp =
                            std::min(N2 / (3.0 * a2 * P), 0.5 - a2);
                        std::vector<RateTriple> boxes;
                        for (double a1 :
                             {a2, geomean(a2, std::max(a2, a2pp)),
                              std::max(a2, a2pp)}) {
                            boxes.push_back(
                                inner_box_type5_small(params, a1, a2).T);
                        }
                        const double u2 = clamp_anchor(
                            relaxed, 2, half_log2(a2 * P / N2) + 1.0);
                        measure(acc, relaxed, 2, u2, boxes.front()[1], boxes,
                                u2 - 1.0);
                    }
                } else {
                    note = "small-R2 side-condition window empty";
                }
                out.push_back(
                    entry("type5.small.delta1", acc.d_a, 0.41, acc.any, note));
                out.push_back(
                    entry("type5.small.delta3", acc.d_b, 0.12, acc.any, note));
                out.push_back(entry("type5.small.delta13", acc.d_sum, 1.12,
                                    acc.any, note));
            }
            break;
        }
    }
    return out;
}

}  // namespace icb
