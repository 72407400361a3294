#include "icbounds/inner.hpp"

#include <algorithm>
#include <cmath>

#include "icbounds/outer.hpp"

namespace icb {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::None: return "none";
        case Scheme::LargeR1: return "largeR1";
        case Scheme::SmallR1: return "smallR1";
        case Scheme::LargeR2: return "largeR2";
        case Scheme::SmallR2: return "smallR2";
    }
    return "?";
}

namespace {

void require_unit(double a, const char* name) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw PreconditionError(std::string(name) + " must lie in [0,1]");
    }
}

}  // namespace

InnerBox inner_box_type1(const ChannelParams& p, double a0, double a2) {
    require_unit(a0, "alpha0");
    require_unit(a2, "alpha2");
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    const double c11 = (1.0 - a0) / (2.0 - a0);
    const double c3 = 1.0 / (2.0 - a0);
    InnerBox box;
    box.alpha = {ChannelType::T1, Scheme::None, a0, 0.0, a2, 0.0};
    box.T[0] = half_log2_pos(c11 + (1.0 - a0) * P / ((a0 + a2) * P + N2)) +
               half_log2(1.0 + a0 * P / N1);
    box.T[1] = half_log2(1.0 + a2 * P / (a0 * P + N2));
    box.T[2] = half_log2_pos(c3 + P / ((a0 + a2) * P + N3));
    return box;
}

InnerBox inner_box_type2(const ChannelParams& p, double a1) {
    require_unit(a1, "alpha1");
    const double P = p.P;
    InnerBox box;
    box.alpha = {ChannelType::T2, Scheme::None, 0.0, a1, 0.0, 0.0};
    box.T[0] = half_log2(1.0 + a1 * P / p.noise(1));
    box.T[1] = half_log2_pos(0.5 + P / (a1 * P + p.noise(2)));
    box.T[2] = half_log2_pos(0.5 + P / (a1 * P + p.noise(3)));
    return box;
}

InnerBox inner_box_type3(const ChannelParams& p, double a) {
    require_unit(a, "alpha");
    const double P = p.P;
    InnerBox box;
    box.alpha = {ChannelType::T3, Scheme::None, 0.0, a, 0.0, 0.0};
    box.T[0] = half_log2(1.0 + a * P / p.noise(1));
    box.T[1] = half_log2(1.0 + a * P / p.noise(2));
    box.T[2] = half_log2(1.0 + P / (2.0 * a * P + p.noise(3)));
    return box;
}

InnerBox inner_box_type4_large(const ChannelParams& p, double a0, double a1,
                               double a2) {
    require_unit(a0, "alpha0");
    require_unit(a1, "alpha1");
    require_unit(a2, "alpha2");
    if (a0 + a1 + a2 > 1.0 + 1e-12) {
        throw PreconditionError("power overallocation: alpha0+alpha1+alpha2 > 1");
    }
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    const double s = a0 + a1 + a2;
    const double c11 = (1.0 - s) / (2.0 - s);
    const double c3 = 1.0 / (2.0 - s);
    InnerBox box;
    box.alpha = {ChannelType::T4, Scheme::LargeR1, a0, a1, a2, 0.0};
    const double aligned =
        half_log2_pos(c11 + (1.0 - s) * P / ((a0 + a1 + 2.0 * a2) * P + N2));
    const double in_cell = half_log2(1.0 + a2 * P / (a0 * P + N1));
    box.T[0] = std::min(aligned, in_cell) +
               half_log2(1.0 + a1 * P / ((a0 + a2) * P + N2)) +
               half_log2(1.0 + a0 * P / N1);
    box.T[1] = half_log2(1.0 + a2 * P / (a0 * P + N2));
    box.T[2] = half_log2_pos(c3 + P / (s * P + N3));
    return box;
}

InnerBox inner_box_type4_small(const ChannelParams& p, double a0, double a1,
                               double a2) {
    require_unit(a0, "alpha0");
    require_unit(a1, "alpha1");
    require_unit(a2, "alpha2");
    if (a0 > a1 + 1e-12) {
        throw PreconditionError("sub-layer exceeds layer: alpha0 > alpha1");
    }
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    const double c11 = (1.0 - a1) / (2.0 - a1);
    const double c3 = 1.0 / (2.0 - a1);
    InnerBox box;
    box.alpha = {ChannelType::T4, Scheme::SmallR1, a0, a1, a2, 0.0};
    const double aligned =
        half_log2_pos(c11 + (1.0 - a1) * P / ((a1 + a2) * P + N2));
    const double in_cell = half_log2(1.0 + (a1 - a0) * P / (a0 * P + N1));
    box.T[0] =
        std::min(aligned, in_cell) + half_log2(1.0 + a0 * P / N1);
    box.T[1] = half_log2(1.0 + a2 * P / (a0 * P + N2));
    box.T[2] = half_log2_pos(c3 + P / (std::max(a1, a2) * P + N3));
    return box;
}

InnerBox inner_box_type5_large(const ChannelParams& p, double a1, double a2,
                               double a2p) {
    require_unit(a1, "alpha1");
    require_unit(a2, "alpha2");
    require_unit(a2p, "alpha2'");
    if (a2 + a2p > 1.0 + 1e-12) {
        throw PreconditionError("power overallocation: alpha2+alpha2' > 1");
    }
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    const double s = a2 + a2p;
    const double c21 = (1.0 - s) / (2.0 - s);
    const double c3 = 1.0 / (2.0 - s);
    InnerBox box;
    box.alpha = {ChannelType::T5, Scheme::LargeR2, 0.0, a1, a2, a2p};
    box.T[0] = half_log2(1.0 + a1 * P / N1);
    const double aligned =
        half_log2_pos(c21 + (1.0 - s) * P / ((a1 + s) * P + N2));
    const double in_cell = half_log2(1.0 + a2p * P / N2);
    // The mid layer is decoded at both receivers; receiver 1 sees it over
    // the noise floor alpha1 P + N1, which binds when alpha1 is large.
    const double mid = std::min(half_log2(1.0 + a2 * P / (a1 * P + N1)),
                                half_log2(1.0 + a2 * P / (a2p * P + N2)));
    box.T[1] = std::min(aligned, in_cell) + mid;
    box.T[2] = half_log2_pos(c3 + P / (std::max(a1, s) * P + N3));
    return box;
}

InnerBox inner_box_type5_small(const ChannelParams& p, double a1, double a2) {
    require_unit(a1, "alpha1");
    require_unit(a2, "alpha2");
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    const double c21 = (1.0 - a2) / (2.0 - a2);
    const double c3 = 1.0 / (2.0 - a2);
    InnerBox box;
    box.alpha = {ChannelType::T5, Scheme::SmallR2, 0.0, a1, a2, 0.0};
    box.T[0] = half_log2(1.0 + a1 * P / N1);
    const double aligned =
        half_log2_pos(c21 + (1.0 - a2) * P / ((a1 + a2) * P + N2));
    const double in_cell = half_log2(1.0 + a2 * P / N2);
    box.T[1] = std::min(aligned, in_cell);
    box.T[2] = half_log2_pos(c3 + P / (std::max(a1, a2) * P + N3));
    return box;
}

InnerBox inner_box(const ChannelParams& p, const AlphaParams& alpha) {
    switch (alpha.type) {
        case ChannelType::T1:
            return inner_box_type1(p, alpha.a0, alpha.a2);
        case ChannelType::T2:
            return inner_box_type2(p, alpha.a1);
        case ChannelType::T3:
            return inner_box_type3(p, alpha.a1);
        case ChannelType::T4:
            if (alpha.scheme == Scheme::LargeR1) {
                return inner_box_type4_large(p, alpha.a0, alpha.a1, alpha.a2);
            }
            return inner_box_type4_small(p, alpha.a0, alpha.a1, alpha.a2);
        case ChannelType::T5:
            if (alpha.scheme == Scheme::LargeR2) {
                return inner_box_type5_large(p, alpha.a1, alpha.a2, alpha.a2p);
            }
            return inner_box_type5_small(p, alpha.a1, alpha.a2);
    }
    throw ConfigError("bad channel type");
}

std::vector<double> GridSpec::axis_values() const {
    if (points_per_axis < 2) {
        throw PreconditionError("grid needs at least 2 points per axis");
    }
    if (!(floor_val > 0.0 && floor_val < 1.0)) {
        throw PreconditionError("grid floor must lie in (0,1)");
    }
    const int r = points_per_axis - 2;
    std::vector<double> v;
    v.reserve(static_cast<size_t>(points_per_axis));
    v.push_back(0.0);
    if (r == 0) {
        v.push_back(1.0);
        return v;
    }
    for (int j = 0; j <= r; ++j) {
        // floor^{(r-j)/r}: log-spaced from floor up to exactly 1
        v.push_back(std::pow(floor_val,
                             static_cast<double>(r - j) / static_cast<double>(r)));
    }
    v.back() = 1.0;
    return v;
}

namespace {

// Log-spaced sweep for the witness manifolds, endpoints included.
std::vector<double> log_sweep(double lo, double hi, int count) {
    std::vector<double> out;
    if (!(lo > 0.0) || !(hi > lo) || count < 2) {
        if (count >= 1 && lo > 0.0) out.push_back(lo);
        return out;
    }
    out.reserve(static_cast<size_t>(count));
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < count; ++i) {
        out.push_back(lo * std::exp(ratio * static_cast<double>(i) /
                                    static_cast<double>(count - 1)));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

void push_valid(std::vector<AlphaParams>& out, const ChannelParams& p,
                AlphaParams a) {
    auto ok = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!ok(a.a0) || !ok(a.a1) || !ok(a.a2) || !ok(a.a2p)) return;
    if (a.type == ChannelType::T4 && a.scheme == Scheme::LargeR1 &&
        a.a0 + a.a1 + a.a2 > 1.0) {
        return;
    }
    if (a.type == ChannelType::T4 && a.scheme == Scheme::SmallR1 &&
        a.a0 > a.a1) {
        return;
    }
    if (a.type == ChannelType::T5 && a.scheme == Scheme::LargeR2 &&
        a.a2 + a.a2p > 1.0) {
        return;
    }
    (void)p;
    out.push_back(a);
}

}  // namespace

std::vector<AlphaParams> witness_sweep(ChannelType t, const ChannelParams& p,
                                       int count) {
    std::vector<AlphaParams> out;
    const double P = p.P;
    const double N2 = p.noise(2), N3 = p.noise(3);
    if (P <= 0.0 || P < 3.0 * N3) return out;

    const std::vector<double> sweep = log_sweep(1e-6, 1.0, count);
    switch (t) {
        case ChannelType::T1: {
            const double a0 = N2 / P;
            for (double a2 : sweep) {
                push_valid(out, p, {t, Scheme::None, a0, 0.0, a2, 0.0});
            }
            push_valid(out, p, {t, Scheme::None, a0, 0.0, 0.0, 0.0});
            push_valid(out, p, {t, Scheme::None, a0, 0.0,
                                std::min(1.0, N3 / P), 0.0});
            break;
        }
        case ChannelType::T2: {
            for (double a1 : sweep) {
                push_valid(out, p, {t, Scheme::None, 0.0, a1, 0.0, 0.0});
            }
            break;
        }
        case ChannelType::T3: {
            for (double a : sweep) {
                push_valid(out, p, {t, Scheme::None, 0.0, a, 0.0, 0.0});
            }
            break;
        }
        case ChannelType::T4: {
            const double a0l = N2 / P;
            for (double a1 : sweep) {
                const double a2 = 17.0 * N2 / (20.0 * a1 * P) - a0l;
                push_valid(out, p, {t, Scheme::LargeR1, a0l, a1, a2, 0.0});
            }
            const double a0s = 0.8 * N2 / P;
            for (double a1 : sweep) {
                if (a1 < a0s) continue;
                const double hi = 24.0 * N2 / (35.0 * a1 * P);
                for (double a2 : {a1, std::sqrt(a1 * std::max(a1, hi)),
                                  std::max(a1, hi)}) {
                    push_valid(out, p, {t, Scheme::SmallR1, a0s, a1, a2, 0.0});
                }
            }
            break;
        }
        case ChannelType::T5: {
            for (double a2 : sweep) {
                const double a1 = N2 / (6.0 * a2 * P);
                push_valid(out, p, {t, Scheme::LargeR2, 0.0, a1, a2, a1});
            }
            for (double a2 : sweep) {
                const double a2p = N2 / (3.0 * a2 * P);
                for (double a1 : {a2, std::sqrt(a2 * std::max(a2, a2p)),
                                  std::max(a2, a2p)}) {
                    push_valid(out, p, {t, Scheme::SmallR2, 0.0, a1, a2, 0.0});
                }
            }
            break;
        }
    }
    return out;
}

InnerRegion inner_region(ChannelType t, const ChannelParams& p,
                         const GridSpec& grid) {
    const std::vector<double> axis = grid.axis_values();
    InnerRegion region;
    auto add = [&](const AlphaParams& a) {
        const InnerBox box = inner_box(p, a);
        region.alphas.push_back(box.alpha);
        region.cloud.corners.push_back(box.T);
        region.cloud.provenance.push_back(
            static_cast<int>(region.alphas.size()) - 1);
    };

    switch (t) {
        case ChannelType::T1:
            for (double a0 : axis) {
                for (double a2 : axis) {
                    add({t, Scheme::None, a0, 0.0, a2, 0.0});
                }
            }
            break;
        case ChannelType::T2:
        case ChannelType::T3:
            for (double a1 : axis) {
                add({t, Scheme::None, 0.0, a1, 0.0, 0.0});
            }
            break;
        case ChannelType::T4:
            for (double a0 : axis) {
                for (double a1 : axis) {
                    for (double a2 : axis) {
                        if (a0 + a1 + a2 <= 1.0) {
                            add({t, Scheme::LargeR1, a0, a1, a2, 0.0});
                        }
                        if (a0 <= a1) {
                            add({t, Scheme::SmallR1, a0, a1, a2, 0.0});
                        }
                    }
                }
            }
            break;
        case ChannelType::T5:
            for (double a1 : axis) {
                for (double a2 : axis) {
                    for (double a2p : axis) {
                        if (a2 + a2p <= 1.0) {
                            add({t, Scheme::LargeR2, 0.0, a1, a2, a2p});
                        }
                    }
                    add({t, Scheme::SmallR2, 0.0, a1, a2, 0.0});
                }
            }
            break;
    }
    if (grid.inject_witnesses) {
        for (const auto& a : witness_sweep(t, p, grid.points_per_axis)) {
            add(a);
        }
    }
    return region;
}

GapWitness gap_witness_alpha(ChannelType t, const ChannelParams& p,
                             double anchor_rate) {
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    if (P < 3.0 * N3) {
        throw PreconditionError(
            "witness constructions assume P >= 3*N_j (trivial gap below)");
    }
    if (anchor_rate < 0.0) {
        throw PreconditionError("anchor rate must be >= 0");
    }
    const double four_pow = std::pow(4.0, anchor_rate);
    GapWitness w;
    switch (t) {
        case ChannelType::T1: {
            // anchor R2 = 1/2 log2(alpha2 P / N2 * 7/4)
            const double a2 = (4.0 / 7.0) * four_pow * N2 / P;
            w.alpha = {t, Scheme::None, N2 / P, 0.0, std::min(a2, 1.0), 0.0};
            w.in_range = a2 <= 1.0;
            if (a2 * P >= N3) {
                w.case_note = "case i: alpha2 P >= N3";
            } else if (a2 * P >= N2) {
                w.case_note = "case ii: N2 <= alpha2 P <= N3";
            } else {
                w.case_note = "case iii: alpha2 P <= N2";
            }
            if (!w.in_range) w.case_note = "anchor beyond alpha2 = 1";
            break;
        }
        case ChannelType::T2: {
            const double a1 = (4.0 / 7.0) * four_pow * N1 / P;
            w.alpha = {t, Scheme::None, 0.0, std::min(a1, 1.0), 0.0, 0.0};
            w.in_range = a1 <= 1.0;
            if (a1 * P >= N3) {
                w.case_note = "case i: alpha1 P >= N3";
            } else if (a1 * P >= N2) {
                w.case_note = "case ii: N2 <= alpha1 P <= N3";
            } else {
                w.case_note = "case iii: alpha1 P <= N2";
            }
            if (!w.in_range) w.case_note = "anchor beyond alpha1 = 1";
            break;
        }
        case ChannelType::T3: {
            // anchor R3 = 1/2 log2(1/alpha)
            const double a = 1.0 / four_pow;
            w.alpha = {t, Scheme::None, 0.0, a, 0.0, 0.0};
            w.in_range = (a <= 4.0 / 7.0) && (a * P >= N3);
            if (a > 4.0 / 7.0) {
                w.case_note = "R3 below 1/2 log2(7/4): trivial case";
            } else if (a * P < N3) {
                w.case_note = "alpha P < N3: trivial case";
            } else {
                w.case_note = "main case: alpha <= 4/7 and alpha P >= N3";
            }
            break;
        }
        case ChannelType::T4: {
            const double th = r1_threshold_type4(p);
            if (anchor_rate > th) {
                // R1 = 1/2 log2(alpha1 P / N1 * 2/5)
                const double a1 = (5.0 / 2.0) * four_pow * N1 / P;
                const double a0 = N2 / P;
                const double a2 = 17.0 * N2 / (20.0 * a1 * P) - a0;
                w.alpha = {t, Scheme::LargeR1, a0, std::min(a1, 1.0),
                           std::clamp(a2, 0.0, 1.0), 0.0};
                w.in_range = a1 <= 3.0 / 8.0 && a1 >= 3.0 * (a0 + a2) &&
                             a2 >= 3.0 * N3 / P && a2 >= 0.0;
                w.case_note = w.in_range
                                  ? "large-R1 scheme, side conditions hold"
                                  : "large-R1 scheme, side conditions fail";
            } else {
                const double a1 = (9.0 / 4.0) * four_pow * N1 / P;
                const double a0 = 0.8 * N2 / P;
                const double hi = 24.0 * N2 / (35.0 * a1 * P);
                const double lo = std::max(a1, 3.0 * N3 / P);
                const double a2 =
                    (lo <= hi) ? std::sqrt(lo * hi) : std::min(lo, 1.0);
                w.alpha = {t, Scheme::SmallR1, a0, std::min(a1, 1.0),
                           std::clamp(a2, 0.0, 1.0), 0.0};
                w.in_range = a1 >= a0 && a1 * P >= 3.0 * N2 && lo <= hi &&
                             a2 <= 0.5 && a1 <= a2;
                w.case_note = w.in_range
                                  ? "small-R1 scheme, side conditions hold"
                                  : "small-R1 scheme, side conditions fail";
            }
            break;
        }
        case ChannelType::T5: {
            const double th = r2_threshold_type5(p);
            const double a2 = std::min(four_pow * N2 / P, 1.0);
            if (anchor_rate > th) {
                const double a1 = N2 / (6.0 * a2 * P);
                w.alpha = {t, Scheme::LargeR2, 0.0, std::min(a1, 1.0), a2,
                           std::min(a1, 1.0)};
                w.in_range = a1 * P >= N2 && a2 * P >= N3 && a1 <= a2 &&
                             a1 + a2 <= 0.5;
                w.case_note = w.in_range
                                  ? "large-R2 scheme, side conditions hold"
                                  : "large-R2 scheme, side conditions fail";
            } else {
                const double a2pp = N2 / (3.0 * a2 * P);
                const double a1 =
                    (a2 <= a2pp) ? std::sqrt(a2 * a2pp) : a2;
                w.alpha = {t, Scheme::SmallR2, 0.0, std::min(a1, 1.0), a2, 0.0};
                w.in_range = a1 * P >= N2 && a2 * P >= N3 && a2 <= a1 &&
                             a1 <= a2pp && a1 + a2 <= 0.5;
                w.case_note = w.in_range
                                  ? "small-R2 scheme, side conditions hold"
                                  : "small-R2 scheme, side conditions fail";
            }
            break;
        }
    }
    return w;
}

}  // namespace icb
