#pragma once

// JSON/CSV serialization for the CLI. All rates are written in bits with
// 12 significant digits so reruns and golden files diff cleanly.

#include <string>

#include <json.hpp>

#include "icbounds/appendix.hpp"
#include "icbounds/certify.hpp"
#include "icbounds/channel.hpp"
#include "icbounds/inner.hpp"
#include "icbounds/outer.hpp"
#include "icbounds/region.hpp"

namespace icb {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kRngAlgorithm = "splitmix64";

double round_sig(double x, int digits = 12);

nlohmann::json meta_json(uint64_t seed);

nlohmann::json region_to_json(ChannelType t, const ChannelParams& p,
                              const HalfSpaceRegion& region, uint64_t seed);
HalfSpaceRegion region_from_json(const nlohmann::json& j);

nlohmann::json outer_set_to_json(const OuterBoundSet& set,
                                 const ChannelParams& p, uint64_t seed);

nlohmann::json inner_region_to_json(ChannelType t, const ChannelParams& p,
                                    const InnerRegion& region,
                                    const GridSpec& grid, uint64_t seed);

nlohmann::json cert_report_to_json(const CertReport& rep);

nlohmann::json layered_to_json(const LayeredRates& rates,
                               const ChannelParams& p,
                               const InclusionResult& inclusion,
                               uint64_t seed);

nlohmann::json delta_report_to_json(ChannelType t, const ChannelParams& p,
                                    const std::vector<DeltaEntry>& entries);

std::string cross_section_to_csv(const CrossSection2D& cs);

nlohmann::json cross_section_to_json(ChannelType t, const ChannelParams& p,
                                     const CrossSection2D& cs, uint64_t seed);

std::string dump_json(const nlohmann::json& j);

}  // namespace icb
