#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "icbounds/inner.hpp"
#include "icbounds/outer.hpp"
#include "icbounds/region.hpp"
#include "icbounds/rng.hpp"

using namespace icb;

namespace {

const ChannelParams kP100{100.0, {1.0, 4.0, 16.0}};

ChannelParams random_params(Rng& rng) {
    const double n1 = std::exp(rng.uniform(-2.0, 2.0));
    const double n2 = n1 * std::exp(rng.uniform(0.0, 2.5));
    const double n3 = n2 * std::exp(rng.uniform(0.0, 2.5));
    return ChannelParams{std::exp(rng.uniform(-2.0, 10.0)) * n1, {n1, n2, n3}};
}

AlphaParams random_alpha(ChannelType t, Rng& rng) {
    AlphaParams a;
    a.type = t;
    switch (t) {
        case ChannelType::T1:
            a.a0 = rng.uniform();
            a.a2 = rng.uniform();
            break;
        case ChannelType::T2:
        case ChannelType::T3:
            a.a1 = rng.uniform();
            break;
        case ChannelType::T4: {
            a.scheme = (rng.next() & 1) ? Scheme::LargeR1 : Scheme::SmallR1;
            if (a.scheme == Scheme::LargeR1) {
                // random point of the simplex a0+a1+a2 <= 1
                double u[3] = {rng.uniform(), rng.uniform(), rng.uniform()};
                std::sort(u, u + 3);
                a.a0 = u[0];
                a.a1 = u[1] - u[0];
                a.a2 = u[2] - u[1];
            } else {
                a.a1 = rng.uniform();
                a.a0 = a.a1 * rng.uniform();
                a.a2 = rng.uniform();
            }
            break;
        }
        case ChannelType::T5: {
            a.scheme = (rng.next() & 1) ? Scheme::LargeR2 : Scheme::SmallR2;
            if (a.scheme == Scheme::LargeR2) {
                a.a1 = rng.uniform();
                a.a2 = rng.uniform();
                a.a2p = (1.0 - a.a2) * rng.uniform();
            } else {
                a.a1 = rng.uniform();
                a.a2 = rng.uniform();
            }
            break;
        }
    }
    return a;
}

}  // namespace

TEST_CASE("type 1 boxes: frozen values and the witness identity") {
    const auto b00 = inner_box_type1(kP100, 0.0, 0.0);
    CHECK(b00.T[1] == 0.0);
    CHECK(b00.T[2] == doctest::Approx(1.3774437510817343).epsilon(1e-12));

    // alpha0 = N2/P makes the private layer land at the noise level N2:
    // the second summand of T1 is exactly 1/2 log2(1 + N2/N1).
    const double a0 = 4.0 / 100.0;
    const auto bw = inner_box_type1(kP100, a0, 0.25);
    const double second = half_log2(1.0 + 4.0 / 1.0);
    const double first =
        half_log2_pos((1.0 - a0) / (2.0 - a0) +
                      (1.0 - a0) * 100.0 / ((a0 + 0.25) * 100.0 + 4.0));
    CHECK(bw.T[0] == doctest::Approx(first + second).epsilon(1e-12));
    CHECK_THROWS_AS(inner_box_type1(kP100, -0.1, 0.0), PreconditionError);
    CHECK_THROWS_AS(inner_box_type1(kP100, 0.0, 1.1), PreconditionError);
}

TEST_CASE("type 2 boxes: endpoints and frozen value") {
    CHECK(inner_box_type2(kP100, 0.0).T[0] == 0.0);
    CHECK(inner_box_type2(kP100, 1.0).T[0] ==
          doctest::Approx(3.3291057413758974).epsilon(1e-12));
    CHECK(inner_box_type2(kP100, 0.16).T[2] ==
          doctest::Approx(0.9289904975637861).epsilon(1e-12));
}

TEST_CASE("type 3 boxes: endpoints and frozen values") {
    const auto b0 = inner_box_type3(kP100, 0.0);
    CHECK(b0.T[0] == 0.0);
    CHECK(b0.T[1] == 0.0);
    CHECK(b0.T[2] ==
          doctest::Approx(single_user_capacity(kP100, 3)).epsilon(1e-12));
    CHECK(inner_box_type3(kP100, 1.0).T[2] ==
          doctest::Approx(0.2744466230068172).epsilon(1e-12));
    CHECK(inner_box_type3(kP100, 0.5).T[1] ==
          doctest::Approx(1.8774437510817343).epsilon(1e-12));
}

TEST_CASE("type 4 boxes: degenerate alpha, frozen values, preconditions") {
    const auto z = inner_box_type4_large(kP100, 0.0, 0.0, 0.0);
    CHECK(z.T[0] == 0.0);  // the in-cell min entry is zero
    CHECK_THROWS_AS(inner_box_type4_large(kP100, 0.5, 0.4, 0.2),
                    PreconditionError);

    // full T evaluation at the example power split
    const auto bl = inner_box_type4_large(kP100, 0.04, 0.375, 0.0849);
    CHECK(bl.T[0] == doctest::Approx(2.1070936677007745).epsilon(1e-12));
    CHECK(bl.T[1] == doctest::Approx(0.5217597468313712).epsilon(1e-12));
    CHECK(bl.T[2] == doctest::Approx(0.5628266561697783).epsilon(1e-12));

    const auto zs = inner_box_type4_small(kP100, 0.0, 0.0, 0.0);
    CHECK(zs.T[0] == 0.0);
    CHECK(zs.T[2] ==
          doctest::Approx(half_log2(0.5 + 100.0 / 16.0)).epsilon(1e-12));
    CHECK_THROWS_AS(inner_box_type4_small(kP100, 0.3, 0.2, 0.5),
                    PreconditionError);
    CHECK(inner_box_type4_small(kP100, 0.032, 0.12, 0.16).T[1] ==
          doctest::Approx(0.8440279968426299).epsilon(1e-12));
}

TEST_CASE("type 5 boxes: frozen values and preconditions") {
    CHECK(inner_box_type5_large(kP100, 0.0, 0.3, 0.1).T[0] == 0.0);
    CHECK_THROWS_AS(inner_box_type5_large(kP100, 0.1, 0.7, 0.4),
                    PreconditionError);
    // §-style witness: alpha1 = alpha2' = N2/(6 alpha2 P)
    const double a2 = 0.3;
    const double a1 = 4.0 / (6.0 * a2 * 100.0);
    CHECK(a1 == doctest::Approx(0.022222222222222222).epsilon(1e-12));
    const auto bw = inner_box_type5_large(kP100, a1, a2, a1);
    CHECK(bw.T[1] >= half_log2(a2 * 100.0 / 4.0) - 1e-12);

    CHECK(inner_box_type5_small(kP100, 0.1, 0.0).T[1] == 0.0);
    CHECK(inner_box_type5_small(kP100, 0.2, 0.2).T[0] ==
          doctest::Approx(2.1961587113893801).epsilon(1e-12));
}

TEST_CASE("c-coefficient identities across the alpha domain") {
    Rng rng(3, 0);
    for (int i = 0; i < 500; ++i) {
        const double a0 = rng.uniform();
        const double s3 = rng.uniform();
        // any layering fraction s in [0,1]: c11 = (1-s)/(2-s), c3 = 1/(2-s)
        for (double s : {a0, s3}) {
            const double c11 = (1.0 - s) / (2.0 - s);
            const double c3 = 1.0 / (2.0 - s);
            CHECK(c11 + c3 == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(c11 >= 0.0);
            CHECK(c11 <= 0.5 + 1e-12);
            CHECK(c3 >= 0.5 - 1e-12);
            CHECK(c3 <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("log+ clamping keeps every T component nonnegative") {
    Rng rng(13, 0);
    for (int i = 0; i < 2000; ++i) {
        const auto p = random_params(rng);
        for (ChannelType t : kAllChannelTypes) {
            const auto a = random_alpha(t, rng);
            const auto box = inner_box(p, a);
            for (double v : box.T) {
                CHECK(v >= 0.0);
                CHECK(std::isfinite(v));
            }
        }
    }
}

TEST_CASE("theorem-8 value never exceeds the receiver-1 constraint route") {
    // With N1 <= N2 the stated T1 must match min{T11', T11''} + T10 where
    // T11' uses N1; equivalently the theorem value is bounded by that sum.
    Rng rng(19, 0);
    for (int i = 0; i < 500; ++i) {
        const auto p = random_params(rng);
        const double a0 = rng.uniform();
        const double a2 = rng.uniform();
        const auto box = inner_box_type1(p, a0, a2);
        const double t11p = half_log2(
            1.0 + (1.0 - a0) * p.P / ((a0 + a2) * p.P + p.noise(1)));
        const double t10 = half_log2(1.0 + a0 * p.P / p.noise(1));
        CHECK(box.T[0] <= t11p + t10 + 1e-9);
    }
}

TEST_CASE("monotone degradation in the interfering noise") {
    Rng rng(23, 0);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_params(rng);
        auto n_up = p.N;
        n_up[2] *= 1.5;  // raise N3 only
        const ChannelParams worse{p.P, n_up};
        const double a = rng.uniform();
        CHECK(inner_box_type3(worse, a).T[2] <=
              inner_box_type3(p, a).T[2] + 1e-12);
        CHECK(inner_box_type2(worse, a).T[2] <=
              inner_box_type2(p, a).T[2] + 1e-12);
        auto n2_up = p.N;
        n2_up[1] = std::min(p.N[2], p.N[1] * 1.3);
        const ChannelParams worse2{p.P, n2_up};
        const double b = rng.uniform();
        CHECK(inner_box_type1(worse2, a, b).T[0] <=
              inner_box_type1(p, a, b).T[0] + 1e-12);
    }
}

TEST_CASE("inner boxes stay inside the outer region (sandwich)") {
    Rng rng(29, 0);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto p = random_params(rng);
        const ChannelType t =
            kAllChannelTypes[static_cast<size_t>(rng.next() % 5)];
        const auto a = random_alpha(t, rng);
        const auto box = inner_box(p, a);
        const auto outer = outer_region(t, p);
        CHECK(contains_halfspace(outer, box.T, 1e-9));
        ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("grid axis values: endpoints, log spacing, nesting") {
    GridSpec g;
    g.points_per_axis = 16;
    const auto v = g.axis_values();
    REQUIRE(static_cast<int>(v.size()) == 16);
    CHECK(v.front() == 0.0);
    CHECK(v[1] == doctest::Approx(1e-6));
    CHECK(v.back() == 1.0);
    CHECK(std::is_sorted(v.begin(), v.end()));

    GridSpec g2 = g;
    g2.points_per_axis = 2 * 16 - 2;  // doubled resolution keeps old points
    const auto v2 = g2.axis_values();
    for (double x : v) {
        bool found = false;
        for (double y : v2) {
            if (std::abs(x - y) < 1e-15) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("inner_region: single-point grids and refinement supersets") {
    GridSpec tiny;
    tiny.points_per_axis = 2;
    tiny.inject_witnesses = false;
    const auto r2 = inner_region(ChannelType::T2, kP100, tiny);
    CHECK(r2.cloud.corners.size() == 2);  // alpha1 in {0, 1}

    GridSpec small;
    small.points_per_axis = 10;
    small.inject_witnesses = false;
    GridSpec big = small;
    big.points_per_axis = 2 * 10 - 2;
    const auto rs = inner_region(ChannelType::T4, kP100, small);
    const auto rb = inner_region(ChannelType::T4, kP100, big);
    CHECK(rb.cloud.corners.size() > rs.cloud.corners.size());
    // every coarse corner shows up in the refined cloud
    int missing = 0;
    for (const auto& c : rs.cloud.corners) {
        bool found = false;
        for (const auto& d : rb.cloud.corners) {
            if (std::abs(c[0] - d[0]) < 1e-12 &&
                std::abs(c[1] - d[1]) < 1e-12 &&
                std::abs(c[2] - d[2]) < 1e-12) {
                found = true;
                break;
            }
        }
        if (!found) ++missing;
    }
    CHECK(missing == 0);
}

TEST_CASE("inner_region corners pass the outer region check") {
    GridSpec grid;
    grid.points_per_axis = 12;
    for (ChannelType t : kAllChannelTypes) {
        const auto outer = outer_region(t, kP100);
        const auto region = inner_region(t, kP100, grid);
        for (const auto& c : region.cloud.corners) {
            CHECK(contains_halfspace(outer, c, 1e-9));
        }
        CHECK(region.cloud.corners.size() == region.cloud.provenance.size());
    }
}

TEST_CASE("gap witnesses: closed-form section solves") {
    // type 1: alpha0 = N2/P regardless of the anchor
    const auto w1 = gap_witness_alpha(ChannelType::T1, kP100, 1.0);
    CHECK(w1.alpha.a0 == doctest::Approx(0.04).epsilon(1e-12));

    // type 4 small: alpha0 P = (4/5) N2
    const auto w4 = gap_witness_alpha(ChannelType::T4, kP100, 0.3);
    CHECK(w4.alpha.scheme == Scheme::SmallR1);
    CHECK(w4.alpha.a0 == doctest::Approx(0.032).epsilon(1e-12));

    // type 5 large: alpha1 = N2/(6 alpha2 P) at the anchored alpha2
    const double anchor = 1.2;
    const auto w5 = gap_witness_alpha(ChannelType::T5, kP100, anchor);
    if (w5.alpha.scheme == Scheme::LargeR2) {
        CHECK(w5.alpha.a1 ==
              doctest::Approx(4.0 / (6.0 * w5.alpha.a2 * 100.0))
                  .epsilon(1e-12));
    }

    // anchor beyond the single-user range reports out-of-range
    const auto far = gap_witness_alpha(ChannelType::T2, kP100, 10.0);
    CHECK_FALSE(far.in_range);
    CHECK(!far.case_note.empty());

    CHECK_THROWS_AS(
        gap_witness_alpha(ChannelType::T1, {10.0, {1.0, 4.0, 16.0}}, 0.5),
        PreconditionError);
}

TEST_CASE("witness anchors recover the anchored rate") {
    // type 2: solving back, R1(alpha1) at the witness matches the anchor's
    // outer location up to the 7/4 factor used in the section.
    for (double anchor : {0.3, 0.8, 1.4}) {
        const auto w = gap_witness_alpha(ChannelType::T2, kP100, anchor);
        const double u1 = half_log2(w.alpha.a1 * 100.0 / 1.0 * 7.0 / 4.0);
        CHECK(u1 == doctest::Approx(anchor).epsilon(1e-9));
    }
}
