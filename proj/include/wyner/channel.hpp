#pragma once

#include "wyner/topology.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <utility>

namespace wyner {

namespace detail {

inline double uniform01(std::mt19937_64& gen) {
    // 53-bit mantissa uniform in [0, 1); avoids the implementation-defined
    // layout of std::uniform_real_distribution.
    return std::ldexp(static_cast<double>(gen() >> 11), -53);
}

/// Box-Muller standard normal driven directly by the mt19937_64 stream,
/// so a fixed seed reproduces bit-identical draws on any platform.
inline double standard_normal(std::mt19937_64& gen) {
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform01(gen);
    const double u2 = uniform01(gen);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace detail

/// One generic draw of the nonzero channel coefficients H_{rx,tx} on the
/// connected links of a Topology.
class ChannelRealization {
public:
    using Key = std::pair<int, int>;  // (tx, rx)

    ChannelRealization(int k, std::uint64_t seed, std::map<Key, double> entries)
        : k_(k), seed_(seed), entries_(std::move(entries)) {}

    int k() const { return k_; }
    std::uint64_t seed() const { return seed_; }

    /// H_{rx,tx}; zero for links that do not exist.
    double h(int rx, int tx) const {
        auto it = entries_.find({tx, rx});
        return it == entries_.end() ? 0.0 : it->second;
    }

    const std::map<Key, double>& entries() const { return entries_; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& [key, v] : entries_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    int k_;
    std::uint64_t seed_;
    std::map<Key, double> entries_;
};

/// Draws i.i.d. standard-normal coefficients on exactly the connected
/// links. Deterministic for a given seed; exact zeros are redrawn.
inline ChannelRealization draw_channel(const Topology& topo, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::map<ChannelRealization::Key, double> entries;
    for (const Link& link : topo.links()) {
        double v = 0.0;
        while (v == 0.0) v = detail::standard_normal(gen);
        entries[{link.tx, link.rx}] = v;
    }
    return ChannelRealization(topo.k(), seed, std::move(entries));
}

}  // namespace wyner
