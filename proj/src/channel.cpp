#include "icbounds/channel.hpp"

#include <cmath>

namespace icb {

ChannelType channel_type_from_int(int id) {
    if (id < 1 || id > 5) {
        throw ConfigError("channel type must be in 1..5");
    }
    return static_cast<ChannelType>(id);
}

ChannelParams::ChannelParams(double power, std::array<double, 3> noise)
    : P(power), N(noise) {
    if (!(P >= 0.0) || !std::isfinite(P)) {
        throw PreconditionError("power must be finite and >= 0");
    }
    for (double n : N) {
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw PreconditionError("noise variances must be finite and > 0");
        }
    }
    if (!(N[0] <= N[1] && N[1] <= N[2])) {
        throw PreconditionError("noise ordering N1 <= N2 <= N3 required");
    }
}

std::vector<std::pair<int, int>> SideInfoGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i != j && has_edge(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

Adjacency adjacency(ChannelType t) {
    switch (t) {
        case ChannelType::T1:
            return {{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}};
        case ChannelType::T2:
            return {{{1, 1, 1}, {1, 1, 0}, {1, 0, 1}}};
        case ChannelType::T3:
            return {{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
        case ChannelType::T4:
            return {{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}};
        case ChannelType::T5:
            return {{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}};
    }
    throw ConfigError("bad channel type");
}

SideInfoGraph side_info_graph(ChannelType t) {
    const Adjacency adj = adjacency(t);
    SideInfoGraph g;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // edge i->j iff transmitter i is not heard at receiver j
            g.edge[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (i != j) && adj[static_cast<size_t>(j)][static_cast<size_t>(i)] == 0;
        }
    }
    return g;
}

RegimeReport classify_regime(ChannelType t, const ChannelParams& params) {
    const Adjacency adj = adjacency(t);
    RegimeReport rep;
    for (int k = 1; k <= 3; ++k) {
        const double snr = params.P / params.noise(k);
        rep.snr[static_cast<size_t>(k - 1)] = snr;
        for (int j = 1; j <= 3; ++j) {
            if (j == k) continue;
            if (adj[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)] == 1) {
                const double inr = params.P / params.noise(j);
                rep.inr[static_cast<size_t>(k - 1)].push_back(
                    {j, inr, snr >= inr, snr <= inr});
            }
        }
    }
    rep.mixed_regime = (t == ChannelType::T4 || t == ChannelType::T5);
    return rep;
}

Matrix3 normalize(ChannelType t, const ChannelParams& params) {
    const Adjacency adj = adjacency(t);
    Matrix3 h{};
    for (int j = 0; j < 3; ++j) {
        const double scale = 1.0 / std::sqrt(params.N[static_cast<size_t>(j)]);
        for (int k = 0; k < 3; ++k) {
            h[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                adj[static_cast<size_t>(j)][static_cast<size_t>(k)] * scale;
        }
    }
    return h;
}

double single_user_capacity(const ChannelParams& params, int k) {
    if (k < 1 || k > 3) throw PreconditionError("receiver index must be 1..3");
    return half_log2(1.0 + params.P / params.noise(k));
}

double half_log2(double x) { return 0.5 * std::log2(x); }

double half_log2_pos(double x) {
    if (x <= 1.0) return 0.0;
    return 0.5 * std::log2(x);
}

}  // namespace icb
