#pragma once

// Channel topologies, parameters, noise-normalized equivalents, side
// information graphs, and SNR/INR regime classification for the five
// partially connected three-user Gaussian interference channels.
//
// Conventions used throughout the library:
//  - all logarithms are base 2, all rates and gaps are in bits
//  - powers and noise variances are linear-scale (no dB in the core)
//  - receiver/transmitter indices are 1-based in the API, matching the
//    usual R1,R2,R3 naming

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icb {

// Thrown when an operation's stated precondition does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown on malformed configuration (CLI maps this to its own exit code).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ChannelType : int { T1 = 1, T2 = 2, T3 = 3, T4 = 4, T5 = 5 };

inline constexpr std::array<ChannelType, 5> kAllChannelTypes = {
    ChannelType::T1, ChannelType::T2, ChannelType::T3, ChannelType::T4,
    ChannelType::T5};

ChannelType channel_type_from_int(int id);
inline int to_int(ChannelType t) { return static_cast<int>(t); }

using RateTriple = std::array<double, 3>;
using Adjacency = std::array<std::array<int, 3>, 3>;
using Matrix3 = std::array<std::array<double, 3>, 3>;

// Transmit power P (same at all transmitters) and noise triple with
// N1 <= N2 <= N3. P = 0 is allowed and yields the zero region.
struct ChannelParams {
    double P;
    std::array<double, 3> N;

    ChannelParams(double power, std::array<double, 3> noise);

    double noise(int k) const { return N[static_cast<size_t>(k - 1)]; }
};

// Directed 3-node graph with an edge i->j iff transmitter i does not
// interfere at receiver j (i != j).
struct SideInfoGraph {
    std::array<std::array<bool, 3>, 3> edge{};  // edge[i-1][j-1]

    bool has_edge(int i, int j) const {
        return edge[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    }
    // Ordered (i, j) pairs, 1-based, lexicographic.
    std::vector<std::pair<int, int>> edges() const;
};

// SNR/INR comparison for one (transmitter, interfered receiver) pair.
struct InrEntry {
    int rx;        // receiver where this transmitter appears as interference
    double inr;    // P / N_rx
    bool snr_ge;   // SNR_k >= INR_k
    bool snr_le;   // SNR_k <= INR_k (both set on ties)
};

struct RegimeReport {
    std::array<double, 3> snr{};
    std::array<std::vector<InrEntry>, 3> inr;
    // Set for types 4 and 5, which sit in the mixed interference regime
    // with patterns (>=,>=,<=) and (>=,<=,<=) respectively.
    bool mixed_regime = false;
};

// Binary receive matrix, entry (j,k) = 1 iff transmitter k is heard at
// receiver j. Diagonal is always 1.
Adjacency adjacency(ChannelType t);

SideInfoGraph side_info_graph(ChannelType t);

RegimeReport classify_regime(ChannelType t, const ChannelParams& params);

// Equivalent channel with unit noise at all receivers:
// entry (j,k) = adjacency(j,k) / sqrt(N_j).
Matrix3 normalize(ChannelType t, const ChannelParams& params);

// C_k = 1/2 log2(1 + P/N_k), k in 1..3.
double single_user_capacity(const ChannelParams& params, int k);

// 1/2 log2(x), and the clamped variant max{0, 1/2 log2(x)} used by the
// achievable rate expressions (arguments <= 0 clamp to 0 as well).
double half_log2(double x);
double half_log2_pos(double x);

}  // namespace icb
