#pragma once

#include "wyner/rational.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

namespace wyner {

/// Transmit sets T_i: the set of transmitters that know message W_i.
/// transmit_sets[i-1] holds T_i (indices are 1-based).
struct MessageAssignment {
    int k = 0;
    std::vector<std::set<int>> transmit_sets;

    MessageAssignment() = default;
    explicit MessageAssignment(int k_users)
        : k(k_users), transmit_sets(static_cast<std::size_t>(k_users)) {
        if (k_users < 1) throw std::invalid_argument("MessageAssignment: K must be >= 1");
    }

    const std::set<int>& transmit_set(int message) const {
        return transmit_sets.at(static_cast<std::size_t>(message - 1));
    }
    std::set<int>& transmit_set(int message) {
        return transmit_sets.at(static_cast<std::size_t>(message - 1));
    }

    int total_instances() const {
        int total = 0;
        for (const auto& t : transmit_sets) total += static_cast<int>(t.size());
        return total;
    }

    friend bool operator==(const MessageAssignment&, const MessageAssignment&) = default;
};

/// Average transmit-set size sum |T_i| / K, exact. Throws if any transmit
/// set references a transmitter outside [1, K].
inline Rational backhaul_load(const MessageAssignment& assignment) {
    for (const auto& t : assignment.transmit_sets) {
        for (int tx : t) {
            if (tx < 1 || tx > assignment.k)
                throw std::out_of_range("backhaul_load: transmitter index outside [1, K]");
        }
    }
    return Rational(assignment.total_instances(), assignment.k);
}

}  // namespace wyner
