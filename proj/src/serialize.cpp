#include "icbounds/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace icb {

using nlohmann::json;

double round_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

namespace {

json num(double x) { return round_sig(x); }

json triple(const std::array<double, 3>& v) {
    return json::array({num(v[0]), num(v[1]), num(v[2])});
}

}  // namespace

json meta_json(uint64_t seed) {
    return json{{"seed", seed}, {"version", kVersion}, {"rng", kRngAlgorithm}};
}

json region_to_json(ChannelType t, const ChannelParams& p,
                    const HalfSpaceRegion& region, uint64_t seed) {
    json constraints = json::array();
    for (const auto& c : region.constraints) {
        constraints.push_back(json{{"coeffs", triple(c.coeffs)},
                                   {"bound_bits", num(c.bound)},
                                   {"label", c.label}});
    }
    return json{{"type", to_int(t)},
                {"P", num(p.P)},
                {"N", triple(p.N)},
                {"constraints", constraints},
                {"meta", meta_json(seed)}};
}

HalfSpaceRegion region_from_json(const json& j) {
    HalfSpaceRegion region;
    for (const auto& jc : j.at("constraints")) {
        LinearConstraint c;
        const auto& coeffs = jc.at("coeffs");
        for (int k = 0; k < 3; ++k) {
            c.coeffs[static_cast<size_t>(k)] =
                coeffs.at(static_cast<size_t>(k)).get<double>();
        }
        c.bound = jc.at("bound_bits").get<double>();
        c.label = jc.value("label", "");
        region.constraints.push_back(std::move(c));
    }
    return region;
}

json outer_set_to_json(const OuterBoundSet& set, const ChannelParams& p,
                       uint64_t seed) {
    json j = region_to_json(set.type, p, set.exact, seed);
    if (set.relaxed) {
        json relaxed = json::array();
        for (const auto& c : set.relaxed->constraints) {
            relaxed.push_back(json{{"coeffs", triple(c.coeffs)},
                                   {"bound_bits", num(c.bound)},
                                   {"label", c.label}});
        }
        j["relaxed_constraints"] = relaxed;
    }
    return j;
}

json inner_region_to_json(ChannelType t, const ChannelParams& p,
                          const InnerRegion& region, const GridSpec& grid,
                          uint64_t seed) {
    const auto pareto = pareto_prune(region.cloud.corners);
    json corners = json::array();
    for (const auto& c : pareto) corners.push_back(triple(c));
    return json{{"type", to_int(t)},
                {"P", num(p.P)},
                {"N", triple(p.N)},
                {"grid",
                 json{{"points_per_axis", grid.points_per_axis},
                      {"floor", num(grid.floor_val)},
                      {"witnesses", grid.inject_witnesses}}},
                {"corner_count", region.cloud.corners.size()},
                {"pareto_corner_count", pareto.size()},
                {"pareto_corners", corners},
                {"meta", meta_json(seed)}};
}

json cert_report_to_json(const CertReport& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures) {
        failures.push_back(json{{"boundary", triple(f.boundary)},
                                {"shifted", triple(f.shifted)},
                                {"margin_bits", num(f.margin)}});
    }
    return json{{"type", to_int(rep.type)},
                {"P", num(rep.P)},
                {"N", triple(rep.N)},
                {"samples", rep.samples},
                {"points_checked", rep.points_checked},
                {"failure_count", rep.failure_count},
                {"failures", failures},
                {"passed", rep.passed()},
                {"max_observed_gap_bits", triple(rep.max_observed_gap)},
                {"trivial_case", rep.trivial_case},
                {"trivial_axes",
                 json::array({rep.trivial_axes[0], rep.trivial_axes[1],
                              rep.trivial_axes[2]})},
                {"corner_count", rep.corner_count},
                {"pruned_corner_count", rep.pruned_corner_count},
                {"meta", meta_json(rep.seed)}};
}

json layered_to_json(const LayeredRates& rates, const ChannelParams& p,
                     const InclusionResult& inclusion, uint64_t seed) {
    json ivals = json::array();
    for (double v : rates.I) ivals.push_back(num(v));
    json tvals = json::array();
    for (double v : rates.T) tvals.push_back(num(v));
    json rows = json::array();
    for (const auto& c : rates.region.constraints) {
        rows.push_back(json{{"coeffs", triple(c.coeffs)},
                            {"bound_bits", num(c.bound)},
                            {"label", c.label}});
    }
    return json{{"type", to_int(rates.type)},
                {"P", num(p.P)},
                {"N", triple(p.N)},
                {"I_bits", ivals},
                {"T_bits", tvals},
                {"constraints", rows},
                {"closed_form_included", inclusion.holds},
                {"inclusion_worst_margin_bits", num(inclusion.worst_margin)},
                {"meta", meta_json(seed)}};
}

json delta_report_to_json(ChannelType t, const ChannelParams& p,
                          const std::vector<DeltaEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        out.push_back(json{{"name", e.name},
                           {"measured_bits", num(e.measured)},
                           {"bound_bits", num(e.bound)},
                           {"feasible", e.feasible},
                           {"note", e.note}});
    }
    return json{{"type", to_int(t)},
                {"P", num(p.P)},
                {"N", triple(p.N)},
                {"deltas", out}};
}

std::string cross_section_to_csv(const CrossSection2D& cs) {
    std::ostringstream os;
    os << "fixed_axis,fixed_value_bits,row_label,coeff_a,coeff_b,bound_bits\n";
    char buf[64];
    auto fmt = [&](double x) {
        std::snprintf(buf, sizeof(buf), "%.12g", x);
        return std::string(buf);
    };
    for (const auto& row : cs.rows) {
        os << cs.axis << "," << fmt(cs.value) << "," << row.label << ","
           << fmt(row.coeffs[0]) << "," << fmt(row.coeffs[1]) << ","
           << fmt(row.bound) << "\n";
    }
    return os.str();
}

json cross_section_to_json(ChannelType t, const ChannelParams& p,
                           const CrossSection2D& cs, uint64_t seed) {
    json rows = json::array();
    for (const auto& row : cs.rows) {
        rows.push_back(json{
            {"coeffs", json::array({num(row.coeffs[0]), num(row.coeffs[1])})},
            {"bound_bits", num(row.bound)},
            {"label", row.label}});
    }
    return json{{"type", to_int(t)},
                {"P", num(p.P)},
                {"N", triple(p.N)},
                {"fixed_axis", cs.axis},
                {"fixed_value_bits", num(cs.value)},
                {"free_axes", json::array({cs.free_axes[0], cs.free_axes[1]})},
                {"rows", rows},
                {"meta", meta_json(seed)}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace icb
