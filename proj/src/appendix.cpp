#include "icbounds/appendix.hpp"

#include <algorithm>
#include <cmath>

namespace icb {

namespace {

void check_layering(const ChannelParams& p) {
    if (p.P < p.noise(2) + p.noise(3)) {
        throw PreconditionError(
            "layering infeasible: top-layer power P - N2 - N3 would be "
            "negative");
    }
}

LinearConstraint row(std::array<double, 3> coeffs, double bound,
                     const char* label) {
    LinearConstraint c;
    c.coeffs = coeffs;
    c.bound = std::max(0.0, bound);
    c.label = label;
    return c;
}

HalfSpaceRegion six_rows(const std::array<double, 6>& b) {
    HalfSpaceRegion region;
    region.constraints = {
        row({1, 0, 0}, b[0], "R1"),       row({0, 1, 0}, b[1], "R2"),
        row({0, 0, 1}, b[2], "R3"),       row({1, 1, 0}, b[3], "R1+R2"),
        row({1, 0, 1}, b[4], "R1+R3"),    row({0, 1, 1}, b[5], "R2+R3"),
    };
    return region;
}

}  // namespace

LayeredRates appendix_rates_type4(const ChannelParams& p) {
    check_layering(p);
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    LayeredRates r;
    r.type = ChannelType::T4;
    auto& I = r.I;
    I[0] = half_log2(1.0 + (P - N2 - N3) / (N1 + N2 + N3));
    I[1] = half_log2(1.0 + P / (N1 + N2 + N3));
    I[2] = half_log2(1.0 + (2.0 * P - N2 - N3) / (N1 + N2 + N3));
    I[3] = half_log2(1.0 + N3 / (N1 + N2));
    I[4] = half_log2(1.0 + N2 / N1);
    I[5] = half_log2(1.0 + (P - N2 - N3) / (2.0 * N2 + 2.0 * N3));
    I[6] = half_log2(1.0 + (P - N3) / (2.0 * N2 + 2.0 * N3));
    I[7] = half_log2(1.0 + (2.0 * P - N2 - 2.0 * N3) / (2.0 * N2 + 2.0 * N3));
    I[8] = half_log2(1.0 + N3 / (2.0 * N2));
    I[9] = half_log2(1.0 + N3 / (2.0 * N2));
    I[10] = half_log2(1.0 + 2.0 * N3 / (2.0 * N2));
    I[11] = half_log2(1.0 + (P - N3) / (2.0 * N3));
    I[12] = half_log2(1.0 + P / (2.0 * N3));
    I[13] = half_log2(1.0 + (2.0 * P - N3) / (2.0 * N3));
    auto& T = r.T;
    T[0] = std::min(I[0], I[5]);  // resolves to I6
    T[1] = std::min(I[6], I[11]); // resolves to I7
    T[2] = std::min(I[1], I[12]);
    T[3] = I[7];
    T[4] = I[2];
    T[5] = I[13];
    T[6] = std::min(I[3], I[8]);  // resolves to I9
    T[7] = I[9];
    T[8] = I[10];
    T[9] = I[4];
    r.region = six_rows({T[0] + T[6] + T[9], T[1] + T[7], T[2],
                         T[3] + T[8] + T[9], T[4] + T[6] + T[9],
                         T[5] + T[7]});
    return r;
}

LayeredRates appendix_rates_type5(const ChannelParams& p) {
    check_layering(p);
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    LayeredRates r;
    r.type = ChannelType::T5;
    auto& I = r.I;
    I[0] = half_log2(1.0 + (P - N2 - N3) / (N1 + N2 + 2.0 * N3));
    I[1] = half_log2(1.0 + (P - N3) / (N1 + N2 + 2.0 * N3));
    I[2] = half_log2(1.0 + (2.0 * P - N2 - 2.0 * N3) / (N1 + N2 + 2.0 * N3));
    I[3] = half_log2(1.0 + N3 / (N1 + N2));
    I[4] = half_log2(1.0 + N3 / (N1 + N2));
    I[5] = half_log2(1.0 + 2.0 * N3 / (N1 + N2));
    I[6] = half_log2(1.0 + N2 / N1);
    I[7] = half_log2(1.0 + (P - N3) / (N2 + N3));
    I[8] = half_log2(1.0 + P / (N2 + N3));
    I[9] = half_log2(1.0 + (2.0 * P - N3) / (N2 + N3));
    I[10] = half_log2(1.0 + N3 / N2);
    I[11] = half_log2(1.0 + (P - N2 - N3) / (N2 + 2.0 * N3));
    I[12] = half_log2(1.0 + P / (N2 + 2.0 * N3));
    I[13] = half_log2(1.0 + (2.0 * P - N2 - N3) / (N2 + 2.0 * N3));
    auto& T = r.T;
    T[0] = std::min(I[0], I[11]);  // resolves to I1
    T[1] = std::min(I[1], I[7]);   // resolves to I2
    T[2] = std::min(I[8], I[12]);  // resolves to I13
    T[3] = I[2];
    T[4] = I[13];
    T[5] = I[9];
    T[6] = I[3];
    T[7] = std::min(I[4], I[10]);  // resolves to I5
    T[8] = I[5];
    T[9] = I[6];
    r.region = six_rows({T[0] + T[6] + T[9], T[1] + T[7], T[2],
                         T[3] + T[8] + T[9], T[4] + T[6] + T[9],
                         T[5] + T[7]});
    return r;
}

LayeredRates appendix_rates(ChannelType t, const ChannelParams& p) {
    if (t == ChannelType::T4) return appendix_rates_type4(p);
    if (t == ChannelType::T5) return appendix_rates_type5(p);
    throw PreconditionError("layered regions exist for types 4 and 5 only");
}

HalfSpaceRegion appendix_closed_form(ChannelType t, const ChannelParams& p) {
    const double P = p.P;
    const double N1 = p.noise(1), N2 = p.noise(2), N3 = p.noise(3);
    const double log3 = half_log2(3.0);
    if (t == ChannelType::T4) {
        return six_rows({half_log2(2.0 + P / N1) - 1.0,
                         half_log2(3.0 + P / N2) - 1.0,
                         half_log2(3.0 + P / N3) - log3,
                         half_log2(1.0 + 2.0 * P / N1) - 0.5,
                         half_log2(1.0 + 2.0 * P / N1) - 1.0,
                         half_log2(1.0 + 2.0 * P / N2) - 1.0});
    }
    if (t == ChannelType::T5) {
        return six_rows({half_log2(2.0 + P / N1) - 0.5,
                         half_log2(2.0 + P / N2) - 1.0,
                         half_log2(3.0 + P / N3) - log3,
                         half_log2(1.0 + 2.0 * P / N1),
                         half_log2(1.0 + 2.0 * P / N1) - 0.5,
                         half_log2(1.0 + 2.0 * P / N2) - 0.5});
    }
    throw PreconditionError("closed-form regions exist for types 4 and 5 only");
}

std::vector<RateTriple> enumerate_vertices(const HalfSpaceRegion& region) {
    // Planes: every constraint row plus the three coordinate planes.
    struct Plane {
        std::array<double, 3> c;
        double b;
    };
    std::vector<Plane> planes;
    for (const auto& c : region.constraints) planes.push_back({c.coeffs, c.bound});
    for (int k = 0; k < 3; ++k) {
        Plane pl{{0, 0, 0}, 0.0};
        pl.c[static_cast<size_t>(k)] = 1.0;
        pl.b = 0.0;
        planes.push_back(pl);
    }
    const size_t n = planes.size();
    std::vector<RateTriple> verts;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                const auto& A = planes[i];
                const auto& B = planes[j];
                const auto& C = planes[k];
                const double det =
                    A.c[0] * (B.c[1] * C.c[2] - B.c[2] * C.c[1]) -
                    A.c[1] * (B.c[0] * C.c[2] - B.c[2] * C.c[0]) +
                    A.c[2] * (B.c[0] * C.c[1] - B.c[1] * C.c[0]);
                if (std::abs(det) < 1e-12) continue;
                // Cramer's rule.
                auto solve1 = [&](int col) {
                    std::array<std::array<double, 3>, 3> M{
                        {A.c, B.c, C.c}};
                    M[0][static_cast<size_t>(col)] = A.b;
                    M[1][static_cast<size_t>(col)] = B.b;
                    M[2][static_cast<size_t>(col)] = C.b;
                    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                            M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                            M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
                           det;
                };
                RateTriple v{solve1(0), solve1(1), solve1(2)};
                bool feasible = true;
                for (double x : v) {
                    if (x < -1e-9 || !std::isfinite(x)) feasible = false;
                }
                if (!feasible) continue;
                for (const auto& c : region.constraints) {
                    const double lhs = c.coeffs[0] * v[0] +
                                       c.coeffs[1] * v[1] + c.coeffs[2] * v[2];
                    if (lhs > c.bound + 1e-9 * (1.0 + std::abs(c.bound))) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible) verts.push_back(v);
            }
        }
    }
    std::sort(verts.begin(), verts.end());
    // Deduplicate within tolerance.
    std::vector<RateTriple> out;
    for (const auto& v : verts) {
        bool dup = false;
        for (const auto& u : out) {
            if (std::abs(u[0] - v[0]) < 1e-9 && std::abs(u[1] - v[1]) < 1e-9 &&
                std::abs(u[2] - v[2]) < 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(v);
    }
    return out;
}

InclusionResult check_inclusion(const LayeredRates& layered,
                                const HalfSpaceRegion& closed) {
    InclusionResult res;
    res.worst_margin = 1e300;
    const auto verts = enumerate_vertices(closed);
    for (const auto& v : verts) {
        for (const auto& c : layered.region.constraints) {
            const double margin = c.bound - (c.coeffs[0] * v[0] +
                                             c.coeffs[1] * v[1] +
                                             c.coeffs[2] * v[2]);
            if (margin < res.worst_margin) {
                res.worst_margin = margin;
                res.worst_vertex = v;
            }
        }
    }
    res.holds = !verts.empty() && res.worst_margin >= -1e-9;
    return res;
}

}  // namespace icb
