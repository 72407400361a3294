#include <doctest.h>

#include <cmath>

#include "icbounds/outer.hpp"
#include "icbounds/region.hpp"
#include "icbounds/rng.hpp"

using namespace icb;

namespace {
const ChannelParams kP100{100.0, {1.0, 4.0, 16.0}};

ChannelParams random_params(Rng& rng, bool relaxable) {
    const double n1 = std::exp(rng.uniform(-2.0, 2.0));
    const double n2 = n1 * std::exp(rng.uniform(0.0, 2.5));
    const double n3 = n2 * std::exp(rng.uniform(0.0, 2.5));
    const double lo = relaxable ? 3.0 * n3 : 0.1 * n1;
    return ChannelParams{lo * std::exp(rng.uniform(0.0, 5.0)), {n1, n2, n3}};
}

}  // namespace

TEST_CASE("exact outer rows: spot values against high-precision evaluation") {
    const auto t1 = outer_region(ChannelType::T1, kP100);
    REQUIRE(t1.constraints.size() == 5);
    CHECK(t1.find_row({1, 1, 0})->bound ==
          doctest::Approx(3.8150985532910991).epsilon(1e-12));
    CHECK(t1.find_row({0, 1, 1})->bound ==
          doctest::Approx(2.7986731125884943).epsilon(1e-12));

    const auto t4 = outer_region(ChannelType::T4, kP100);
    REQUIRE(t4.constraints.size() == 6);
    CHECK(t4.find_row({1, 0, 1})->bound ==
          doctest::Approx(3.8255258455894643).epsilon(1e-12));

    const auto t5 = outer_region(ChannelType::T5, kP100);
    REQUIRE(t5.constraints.size() == 6);
    CHECK(t5.find_row({1, 1, 0})->bound ==
          doctest::Approx(3.8255258455894643).epsilon(1e-12));
    CHECK(t5.find_row({0, 1, 1})->bound ==
          doctest::Approx(half_log2(1.0 + 200.0 / 4.0)).epsilon(1e-12));
}

TEST_CASE("zero power: all outer bounds vanish") {
    const ChannelParams p0{0.0, {1.0, 4.0, 16.0}};
    for (ChannelType t : kAllChannelTypes) {
        for (const auto& c : outer_region(t, p0).constraints) {
            CHECK(c.bound == 0.0);
        }
    }
}

TEST_CASE("relaxed rows: spot values and the P = 3N boundary") {
    const auto r1 = relaxed_outer_region(ChannelType::T1, kP100);
    CHECK(r1.find_row({1, 1, 0})->bound ==
          doctest::Approx(3.9331243055555863).epsilon(1e-12));
    CHECK(r1.find_row({1, 0, 0})->bound ==
          doctest::Approx(3.5294468445267843).epsilon(1e-12));

    // at P = 3 N_k the relaxed individual bound is exactly one bit
    const ChannelParams p3{48.0, {16.0, 16.0, 16.0}};
    const auto r3 = relaxed_outer_region(ChannelType::T2, p3);
    CHECK(r3.find_row({0, 0, 1})->bound == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(
        relaxed_outer_region(ChannelType::T1, {47.0, {1.0, 4.0, 16.0}}),
        PreconditionError);
    CHECK_FALSE(
        outer_bound_set(ChannelType::T1, {47.0, {1.0, 4.0, 16.0}}).relaxed
            .has_value());
}

TEST_CASE("row structure per type matches the table") {
    struct Expect {
        ChannelType t;
        std::vector<std::array<double, 3>> sums;
    };
    const std::vector<Expect> expects{
        {ChannelType::T1, {{1, 1, 0}, {0, 1, 1}}},
        {ChannelType::T2, {{1, 1, 0}, {1, 0, 1}}},
        {ChannelType::T3, {{1, 0, 1}, {0, 1, 1}}},
        {ChannelType::T4, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}},
        {ChannelType::T5, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}},
    };
    for (const auto& e : expects) {
        const auto exact = outer_region(e.t, kP100);
        const auto relaxed = relaxed_outer_region(e.t, kP100);
        for (const auto* region : {&exact, &relaxed}) {
            CHECK(region->constraints.size() == 3 + e.sums.size());
            for (const auto& s : e.sums) {
                CHECK(region->find_row(s) != nullptr);
            }
        }
    }
}

TEST_CASE("exact region is contained in the relaxed region") {
    Rng rng(2024, 0);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_params(rng, true);
        for (ChannelType t : kAllChannelTypes) {
            const auto exact = outer_region(t, p);
            const auto relaxed = relaxed_outer_region(t, p);
            for (const auto& bp : sample_boundary(exact, 40,
                                                  static_cast<uint64_t>(i))) {
                CHECK(contains_halfspace(relaxed, bp.p, 1e-9));
            }
            // also row-by-row (same structure, so this is the sharp check)
            for (const auto& c : exact.constraints) {
                const auto* rel = relaxed.find_row(c.coeffs);
                REQUIRE(rel != nullptr);
                CHECK(c.bound <= rel->bound + 1e-9);
            }
        }
    }
}

TEST_CASE("bounds are monotone in P and anti-monotone in the own noise") {
    Rng rng(77, 0);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_params(rng, false);
        const ChannelParams bigger{p.P * 1.5, p.N};
        auto scaled_n = p.N;
        scaled_n[0] *= 0.8;  // reduce N1, keeps ordering
        const ChannelParams lessnoise{p.P, scaled_n};
        for (ChannelType t : kAllChannelTypes) {
            const auto base = outer_region(t, p);
            const auto up = outer_region(t, bigger);
            const auto dn = outer_region(t, lessnoise);
            for (size_t r = 0; r < base.constraints.size(); ++r) {
                CHECK(up.constraints[r].bound >=
                      base.constraints[r].bound - 1e-12);
            }
            CHECK(dn.find_row({1, 0, 0})->bound >=
                  base.find_row({1, 0, 0})->bound - 1e-12);
        }
    }
}

TEST_CASE("cross-section example: type 1 at R2 = 1") {
    const auto cs = outer_cross_section(ChannelType::T1, kP100, 2, 1.0);
    // R3 rows: residual sum 1.9331, individual 1.5294; the individual binds
    double best_r3 = 1e300;
    for (const auto& row : cs.rows) {
        if (row.coeffs[0] == 0.0 && row.coeffs[1] == 1.0) {
            best_r3 = std::min(best_r3, row.bound);
        }
    }
    CHECK(best_r3 == doctest::Approx(1.5294468445267843).epsilon(1e-12));
}

TEST_CASE("type-2 cross-section at R1 = 0 keeps the R2 individual row") {
    const auto cs = outer_cross_section(ChannelType::T2, kP100, 1, 0.0);
    double best_r2 = 1e300;
    for (const auto& row : cs.rows) {
        if (row.coeffs[0] == 1.0 && row.coeffs[1] == 0.0) {
            best_r2 = std::min(best_r2, row.bound);
        }
    }
    CHECK(best_r2 == doctest::Approx(2.5294468445267843).epsilon(1e-12));
}

TEST_CASE("types 4 and 5 keep the residual sum row in their cross-sections") {
    const auto cs4 = outer_cross_section(ChannelType::T4, kP100, 1, 1.0);
    bool has_sum4 = false;
    for (const auto& row : cs4.rows) {
        if (row.coeffs[0] == 1.0 && row.coeffs[1] == 1.0) {
            has_sum4 = true;
            CHECK(row.bound ==
                  doctest::Approx(half_log2(25.0 * 7.0 / 3.0)).epsilon(1e-12));
        }
    }
    CHECK(has_sum4);

    const auto cs5 = outer_cross_section(ChannelType::T5, kP100, 2, 1.0);
    bool has_sum5 = false;
    for (const auto& row : cs5.rows) {
        if (row.coeffs[0] == 1.0 && row.coeffs[1] == 1.0) {
            has_sum5 = true;
            CHECK(row.bound ==
                  doctest::Approx(half_log2(100.0 * 7.0 / 3.0)).epsilon(1e-12));
        }
    }
    CHECK(has_sum5);

    SUBCASE("types 1-3 have no residual sum row") {
        const auto cs1 = outer_cross_section(ChannelType::T1, kP100, 2, 1.0);
        for (const auto& row : cs1.rows) {
            CHECK_FALSE((row.coeffs[0] > 0.0 && row.coeffs[1] > 0.0));
        }
    }
}

namespace {

// Rectangle-corner-sum vs sum-row comparison at a fixed rate. Returns true
// when the residual sum bound is implied by the two per-axis bounds.
bool sum_row_inactive(ChannelType t, const ChannelParams& p, int axis,
                      double value) {
    const auto cs = outer_cross_section(t, p, axis, value);
    double ba = 1e300, bb = 1e300, bsum = 1e300;
    for (const auto& row : cs.rows) {
        if (row.coeffs[0] > 0.0 && row.coeffs[1] > 0.0) {
            bsum = std::min(bsum, row.bound);
        } else if (row.coeffs[0] > 0.0) {
            ba = std::min(ba, row.bound);
        } else {
            bb = std::min(bb, row.bound);
        }
    }
    return ba + bb <= bsum + 1e-9;
}

}  // namespace

TEST_CASE("threshold consistency for the residual sum rows") {
    // The threshold statement applies in the rectangle regime, where the
    // residual min-entries bind on both free axes: fixed rate at least
    // 1/2 log2((7/4) N3/N1) for type 4, 1/2 log2((7/4) N3/N2) for type 5.
    Rng rng(404, 0);
    for (int i = 0; i < 60; ++i) {
        const auto p = random_params(rng, true);
        {
            const double th = r1_threshold_type4(p);
            const auto relaxed = relaxed_outer_region(ChannelType::T4, p);
            const double cap = axis_intercept(relaxed, 1);
            const double lo =
                half_log2(7.0 / 4.0 * p.noise(3) / p.noise(1));
            for (double frac : {0.02, 0.3, 0.6, 0.97}) {
                const double r1 = lo + (cap - lo) * frac;
                if (r1 < 0.0 || r1 > cap) continue;
                const bool inactive =
                    sum_row_inactive(ChannelType::T4, p, 1, r1);
                if (r1 > th + 1e-9) CHECK(inactive);
                if (r1 < th - 1e-9) CHECK_FALSE(inactive);
            }
        }
        {
            const double th = r2_threshold_type5(p);
            const auto relaxed = relaxed_outer_region(ChannelType::T5, p);
            const double cap = axis_intercept(relaxed, 2);
            const double lo =
                half_log2(7.0 / 4.0 * p.noise(3) / p.noise(2));
            for (double frac : {0.02, 0.3, 0.6, 0.97}) {
                const double r2 = lo + (cap - lo) * frac;
                if (r2 < 0.0 || r2 > cap) continue;
                const bool inactive =
                    sum_row_inactive(ChannelType::T5, p, 2, r2);
                if (r2 > th + 1e-9) CHECK(inactive);
                if (r2 < th - 1e-9) CHECK_FALSE(inactive);
            }
        }
    }
}
