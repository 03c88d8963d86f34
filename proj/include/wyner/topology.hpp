#pragma once

#include <stdexcept>
#include <vector>

namespace wyner {

/// Directed link from transmitter `tx` to receiver `rx`.
struct Link {
    int tx = 0;
    int rx = 0;

    friend bool operator==(const Link&, const Link&) = default;
};

/// K-user linear interference network: transmitter j reaches receivers j
/// and j+1, the last transmitter reaches only its own receiver. Node
/// indices are 1-based throughout.
class Topology {
public:
    explicit Topology(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("Topology: K must be >= 1");
    }

    int k() const { return k_; }

    /// True iff the link tx -> rx exists, i.e. rx is tx or tx+1.
    bool connected(int tx, int rx) const {
        if (tx < 1 || tx > k_ || rx < 1 || rx > k_) return false;
        return rx == tx || rx == tx + 1;
    }

    /// All 2K-1 links, ordered by transmitter then receiver.
    std::vector<Link> links() const {
        std::vector<Link> out;
        out.reserve(2 * static_cast<std::size_t>(k_) - 1);
        for (int tx = 1; tx <= k_; ++tx) {
            out.push_back({tx, tx});
            if (tx + 1 <= k_) out.push_back({tx, tx + 1});
        }
        return out;
    }

    /// Transmitters other than `rx`'s own that reach receiver `rx`
    /// (only the preceding one in a linear network).
    std::vector<int> interferers_at(int rx) const {
        if (rx < 1 || rx > k_) throw std::out_of_range("interferers_at: receiver out of range");
        if (rx == 1) return {};
        return {rx - 1};
    }

private:
    int k_;
};

inline Topology build_topology(int k) { return Topology(k); }

}  // namespace wyner
