#include "icbounds/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "icbounds/rng.hpp"

namespace icb {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

const LinearConstraint* HalfSpaceRegion::find_row(
    const std::array<double, 3>& coeffs) const {
    for (const auto& c : constraints) {
        bool same = true;
        for (int k = 0; k < 3; ++k) {
            if (std::abs(c.coeffs[static_cast<size_t>(k)] -
                         coeffs[static_cast<size_t>(k)]) > 1e-12) {
                same = false;
                break;
            }
        }
        if (same) return &c;
    }
    return nullptr;
}

bool contains_halfspace(const HalfSpaceRegion& region, const RateTriple& p,
                        double tol) {
    if (tol < 0) throw PreconditionError("tolerance must be >= 0");
    for (double v : p) {
        if (v < -tol) return false;
    }
    for (const auto& c : region.constraints) {
        const double lhs = c.coeffs[0] * p[0] + c.coeffs[1] * p[1] +
                           c.coeffs[2] * p[2];
        if (lhs > c.bound + tol) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Downward-closed convex hull membership.
//
// Feasibility problem: lambda >= 0, sum lambda = 1, sum lambda*corner >= q
// componentwise, with q = p - tol. Rows with q_i <= 0 are satisfied by any
// convex combination (corners are nonnegative) and get dropped. What is left
// is a phase-1 simplex with at most four rows; columns are corners plus one
// surplus per inequality row, artificials start in the basis.
// ---------------------------------------------------------------------------
namespace {

class Phase1Simplex {
  public:
    Phase1Simplex(const std::vector<RateTriple>& corners,
                  const std::vector<int>& rows, const std::vector<double>& rhs)
        : corners_(corners), rows_(rows), rhs_(rhs),
          m_(static_cast<int>(rhs.size())),
          ncorner_(static_cast<int>(corners.size())) {
        nslack_ = m_ - 1;  // every row except convexity carries a surplus
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < m_; ++j) binv_[i][j] = (i == j) ? 1.0 : 0.0;
            xb_[i] = rhs_[static_cast<size_t>(i)];
            basis_[i] = ncorner_ + nslack_ + i;  // artificials
        }
    }

    // Returns true when the artificial objective reaches ~0.
    bool solve(std::vector<double>* lambda_out) {
        const int max_iters = 2000 + 16 * ncorner_;
        for (int iter = 0; iter < max_iters; ++iter) {
            double y[4];
            compute_duals(y);
            const bool bland = iter > 256;
            const int enter = pick_entering(y, bland);
            if (enter < 0) break;
            double dir[4];
            column(enter, dir);
            apply_binv(dir);
            const int leave = ratio_test(dir);
            if (leave < 0) {
                // Unbounded phase-1 cannot happen with finite rhs; treat as
                // numerical breakdown.
                return false;
            }
            pivot(enter, leave, dir);
        }
        double art = 0.0;
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= ncorner_ + nslack_) art += std::max(0.0, xb_[i]);
        }
        if (art > 1e-9) return false;
        if (lambda_out) {
            lambda_out->assign(static_cast<size_t>(ncorner_), 0.0);
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] < ncorner_) {
                    (*lambda_out)[static_cast<size_t>(basis_[i])] =
                        std::max(0.0, xb_[i]);
                }
            }
        }
        return true;
    }

  private:
    void compute_duals(double* y) const {
        for (int j = 0; j < m_; ++j) {
            double s = 0.0;
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] >= ncorner_ + nslack_) s += binv_[i][j];
            }
            y[j] = s;
        }
    }

    // Column of the constraint matrix in original coordinates.
    void column(int idx, double* a) const {
        for (int i = 0; i < m_; ++i) a[i] = 0.0;
        if (idx < ncorner_) {
            const auto& c = corners_[static_cast<size_t>(idx)];
            for (int i = 0; i + 1 < m_; ++i) {
                a[i] = c[static_cast<size_t>(rows_[static_cast<size_t>(i)])];
            }
            a[m_ - 1] = 1.0;  // convexity row
        } else if (idx < ncorner_ + nslack_) {
            a[idx - ncorner_] = -1.0;  // surplus on inequality row
        } else {
            a[idx - ncorner_ - nslack_] = 1.0;  // artificial
        }
    }

    void apply_binv(double* v) const {
        double out[4];
        for (int i = 0; i < m_; ++i) {
            double s = 0.0;
            for (int j = 0; j < m_; ++j) s += binv_[i][j] * v[j];
            out[i] = s;
        }
        for (int i = 0; i < m_; ++i) v[i] = out[i];
    }

    double reduced_cost(int idx, const double* y) const {
        double a[4];
        column(idx, a);
        double ya = 0.0;
        for (int i = 0; i < m_; ++i) ya += y[i] * a[i];
        const double cost = (idx >= ncorner_ + nslack_) ? 1.0 : 0.0;
        return cost - ya;
    }

    int pick_entering(const double* y, bool bland) {
        constexpr double eps = 1e-11;
        const int ntot = ncorner_ + nslack_;  // artificials never re-enter
        if (bland) {
            for (int idx = 0; idx < ntot; ++idx) {
                if (reduced_cost(idx, y) < -eps) return idx;
            }
            return -1;
        }
        // Partial pricing: scan blocks from a rotating cursor and take the
        // best negative column of the first block that has one.
        constexpr int kBlock = 2048;
        int scanned = 0;
        while (scanned < ntot) {
            int best = -1;
            double best_rc = -eps;
            const int lo = cursor_;
            const int hi = std::min(lo + kBlock, ntot);
            for (int idx = lo; idx < hi; ++idx) {
                const double rc = reduced_cost(idx, y);
                if (rc < best_rc) {
                    best_rc = rc;
                    best = idx;
                }
            }
            scanned += hi - lo;
            cursor_ = (hi >= ntot) ? 0 : hi;
            if (best >= 0) return best;
        }
        return -1;
    }

    int ratio_test(const double* dir) const {
        constexpr double eps = 1e-11;
        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m_; ++i) {
            if (dir[i] > eps) {
                const double r = std::max(0.0, xb_[i]) / dir[i];
                if (r < best - 1e-15 ||
                    (r < best + 1e-15 &&
                     (leave < 0 || basis_[i] < basis_[leave]))) {
                    best = r;
                    leave = i;
                }
            }
        }
        return leave;
    }

    void pivot(int enter, int leave, const double* dir) {
        const double piv = dir[leave];
        const double step = std::max(0.0, xb_[leave]) / piv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave) continue;
            xb_[i] -= step * dir[i];
        }
        xb_[leave] = step;
        for (int j = 0; j < m_; ++j) binv_[leave][j] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave) continue;
            const double f = dir[i];
            if (f == 0.0) continue;
            for (int j = 0; j < m_; ++j) binv_[i][j] -= f * binv_[leave][j];
        }
        basis_[leave] = enter;
    }

    const std::vector<RateTriple>& corners_;
    const std::vector<int>& rows_;  // axis index per inequality row
    std::vector<double> rhs_;
    int m_;
    int ncorner_;
    int nslack_ = 0;
    double binv_[4][4]{};
    double xb_[4]{};
    int basis_[4]{};
    int cursor_ = 0;  // partial-pricing scan position
};

}  // namespace

bool contains_inner(const CornerCloud& cloud, const RateTriple& p, double tol) {
    if (cloud.corners.empty()) throw PreconditionError("cloud must be nonempty");
    if (tol < 0) throw PreconditionError("tolerance must be >= 0");

    std::vector<int> rows;
    std::vector<double> rhs;
    for (int k = 0; k < 3; ++k) {
        const double q = p[static_cast<size_t>(k)] - tol;
        if (q > 0.0) {
            rows.push_back(k);
            rhs.push_back(q);
        }
    }
    if (rows.empty()) return true;  // dominated by any corner

    // Fast path: a single dominating corner settles membership without
    // touching the simplex.
    for (const auto& c : cloud.corners) {
        bool dom = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (c[static_cast<size_t>(rows[i])] < rhs[i]) {
                dom = false;
                break;
            }
        }
        if (dom) return true;
    }
    rhs.push_back(1.0);  // convexity row

    Phase1Simplex lp(cloud.corners, rows, rhs);
    std::vector<double> lambda;
    if (!lp.solve(&lambda)) return false;

    // Recompute the combination straight from the weights; guards against
    // drift in the factorized basis.
    double combo[3] = {0.0, 0.0, 0.0};
    double total = 0.0;
    for (size_t j = 0; j < lambda.size(); ++j) {
        const double w = lambda[j];
        if (w <= 0.0) continue;
        total += w;
        for (int k = 0; k < 3; ++k) {
            combo[k] += w * cloud.corners[j][static_cast<size_t>(k)];
        }
    }
    if (std::abs(total - 1.0) > 1e-7) return false;
    for (int k : rows) {
        if (combo[k] < p[static_cast<size_t>(k)] - tol - 1e-7) return false;
    }
    return true;
}

double axis_intercept(const HalfSpaceRegion& region, int axis) {
    if (axis < 1 || axis > 3) throw PreconditionError("axis must be 1..3");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : region.constraints) {
        const double ca = c.coeffs[static_cast<size_t>(axis - 1)];
        if (ca > 0.0) best = std::min(best, c.bound / ca);
    }
    if (!std::isfinite(best)) {
        throw PreconditionError("region is unbounded along the axis");
    }
    return best;
}

CrossSection2D cross_section(const HalfSpaceRegion& region, int axis,
                             double value) {
    const double cap = axis_intercept(region, axis);
    if (value < -1e-12 || value > cap + 1e-9) {
        throw PreconditionError("cross-section value outside [0, axis bound]");
    }
    CrossSection2D cs;
    cs.axis = axis;
    cs.value = value;
    int f = 0;
    for (int k = 1; k <= 3; ++k) {
        if (k != axis) cs.free_axes[static_cast<size_t>(f++)] = k;
    }
    for (const auto& c : region.constraints) {
        const double ca = c.coeffs[static_cast<size_t>(axis - 1)];
        std::array<double, 2> free_coeffs{
            c.coeffs[static_cast<size_t>(cs.free_axes[0] - 1)],
            c.coeffs[static_cast<size_t>(cs.free_axes[1] - 1)]};
        if (free_coeffs[0] == 0.0 && free_coeffs[1] == 0.0) continue;
        CrossSection2D::Row row;
        row.coeffs = free_coeffs;
        row.bound = c.bound - ca * value;
        row.label = c.label;
        cs.rows.push_back(std::move(row));
    }
    return cs;
}

BoundaryPoint shoot_ray(const HalfSpaceRegion& region, const RateTriple& dir) {
    double norm = 0.0;
    for (double d : dir) {
        if (d < 0.0) throw PreconditionError("direction must be nonnegative");
        norm += d * d;
    }
    if (norm <= 0.0) throw PreconditionError("direction must be nonzero");

    double t = std::numeric_limits<double>::infinity();
    for (const auto& c : region.constraints) {
        const double cd = c.coeffs[0] * dir[0] + c.coeffs[1] * dir[1] +
                          c.coeffs[2] * dir[2];
        if (cd > 1e-15) t = std::min(t, c.bound / cd);
    }
    if (!std::isfinite(t)) {
        throw PreconditionError("region is unbounded along the ray");
    }
    BoundaryPoint bp;
    for (int k = 0; k < 3; ++k) {
        bp.p[static_cast<size_t>(k)] = t * dir[static_cast<size_t>(k)];
    }
    for (size_t i = 0; i < region.constraints.size(); ++i) {
        const auto& c = region.constraints[i];
        const double cd = c.coeffs[0] * dir[0] + c.coeffs[1] * dir[1] +
                          c.coeffs[2] * dir[2];
        if (cd > 1e-15 && c.bound / cd <= t * (1.0 + 1e-12) + 1e-15) {
            bp.binding.push_back(static_cast<int>(i));
        }
    }
    return bp;
}

std::vector<BoundaryPoint> sample_boundary(const HalfSpaceRegion& region,
                                           int count, uint64_t seed) {
    if (count < 1) throw PreconditionError("count must be >= 1");
    for (int axis = 1; axis <= 3; ++axis) {
        axis_intercept(region, axis);  // throws when the axis is unbounded
    }
    std::vector<BoundaryPoint> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        Rng rng(seed, static_cast<uint64_t>(i));
        // Uniform direction on the positive octant of the unit sphere.
        const double z = rng.uniform();
        const double phi = rng.uniform() * (kPi / 2.0);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const RateTriple dir{s * std::cos(phi), s * std::sin(phi), z};
        out.push_back(shoot_ray(region, dir));
    }
    return out;
}

GapRecord axis_gaps(const CrossSection2D& outer,
                    const std::vector<std::array<double, 2>>& inner_corners) {
    if (inner_corners.empty()) {
        throw PreconditionError("inner corners must be nonempty");
    }
    GapRecord rec;
    rec.free_axes = outer.free_axes;
    for (int k = 0; k < 2; ++k) {
        double outer_bound = std::numeric_limits<double>::infinity();
        for (const auto& row : outer.rows) {
            const double ck = row.coeffs[static_cast<size_t>(k)];
            if (ck > 0.0) outer_bound = std::min(outer_bound, row.bound / ck);
        }
        double inner_best = -std::numeric_limits<double>::infinity();
        for (const auto& c : inner_corners) {
            inner_best = std::max(inner_best, c[static_cast<size_t>(k)]);
        }
        rec.delta[static_cast<size_t>(k)] = outer_bound - inner_best;
    }
    double sum_bound = std::numeric_limits<double>::infinity();
    bool has_sum = false;
    for (const auto& row : outer.rows) {
        if (row.coeffs[0] > 0.0 && row.coeffs[1] > 0.0) {
            has_sum = true;
            sum_bound = std::min(sum_bound, row.bound);
        }
    }
    if (has_sum) {
        double inner_best = -std::numeric_limits<double>::infinity();
        for (const auto& c : inner_corners) {
            inner_best = std::max(inner_best, c[0] + c[1]);
        }
        rec.delta_sum = sum_bound - inner_best;
    }
    return rec;
}

std::vector<RateTriple> pareto_prune(const std::vector<RateTriple>& pts) {
    std::vector<RateTriple> sorted = pts;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] > b[0];
        if (a[1] != b[1]) return a[1] > b[1];
        return a[2] > b[2];
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Staircase of (y, z) pairs over already-kept points (all with x >= the
    // current point's x); z strictly decreases as y increases.
    std::map<double, double> stair;
    std::vector<RateTriple> kept;
    kept.reserve(sorted.size());
    for (const auto& p : sorted) {
        const double y = p[1], z = p[2];
        auto it = stair.lower_bound(y);
        if (it != stair.end() && it->second >= z) continue;  // dominated
        kept.push_back(p);
        if (it != stair.end() && it->first == y) {
            it = stair.erase(it);  // same-y entry has smaller z, replace it
        }
        while (it != stair.begin()) {
            auto prev = std::prev(it);
            if (prev->second <= z) {
                it = stair.erase(prev);
            } else {
                break;
            }
        }
        stair.emplace_hint(it, y, z);
    }
    return kept;
}

}  // namespace icb
