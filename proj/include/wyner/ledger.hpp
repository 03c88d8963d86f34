#pragma once

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wyner {

/// Why a coin changed hands. There is a single coin type; a payment is
/// always one coin. Interference coins flow to the following node, rent
/// coins (either mode) to the preceding node.
enum class PaymentReason : std::uint8_t {
    interference = 0,   // payer's transmitter interferes at payee's receiver
    rent_use = 1,       // payer rents the payee's transmitter to use it
    rent_silence = 2,   // payer rents the payee's transmitter to keep it off
};

inline std::string reason_name(PaymentReason r) {
    switch (r) {
        case PaymentReason::interference: return "interference";
        case PaymentReason::rent_use: return "rent";
        case PaymentReason::rent_silence: return "rent";
    }
    throw std::logic_error("reason_name: bad reason");
}

inline std::optional<std::string> rent_mode(PaymentReason r) {
    if (r == PaymentReason::rent_use) return "use";
    if (r == PaymentReason::rent_silence) return "silence";
    return std::nullopt;
}

inline PaymentReason parse_reason(const std::string& name, const std::optional<std::string>& mode) {
    if (name == "interference") return PaymentReason::interference;
    if (name == "rent" && mode == "use") return PaymentReason::rent_use;
    if (name == "rent" && mode == "silence") return PaymentReason::rent_silence;
    throw std::invalid_argument("parse_reason: unknown reason '" + name + "'");
}

/// A single one-coin payment.
struct Transaction {
    int payer = 0;
    int payee = 0;
    PaymentReason reason = PaymentReason::interference;
    int phase = 0;                  // rotation phase index, 0-3
    std::uint64_t sequence = 0;     // monotone counter in execution order
    int amount = 1;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

using Digest = std::array<std::uint8_t, 32>;

namespace detail {

inline Digest sha256(const std::vector<std::uint8_t>& bytes) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size())
        throw std::runtime_error("sha256: digest failed");
    return out;
}

inline std::string to_hex(const Digest& d) {
    static const char* hex = "0123456789abcdef";
    std::string s;
    s.reserve(64);
    for (std::uint8_t b : d) {
        s.push_back(hex[b >> 4]);
        s.push_back(hex[b & 0xf]);
    }
    return s;
}

inline Digest from_hex(const std::string& s) {
    if (s.size() != 64) throw std::invalid_argument("from_hex: digest must be 64 hex chars");
    auto nibble = [](char c) -> std::uint8_t {
        if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
        throw std::invalid_argument("from_hex: bad hex character");
    };
    Digest d{};
    for (std::size_t i = 0; i < 32; ++i)
        d[i] = static_cast<std::uint8_t>((nibble(s[2 * i]) << 4) | nibble(s[2 * i + 1]));
    return d;
}

/// Canonical byte serialization: every field is length-prefixed (u32 LE)
/// and appended in declaration order.
class ByteWriter {
public:
    void field_u64(std::uint64_t v) { prefix(8); le(v, 8); }
    void field_u32(std::uint32_t v) { prefix(4); le(v, 4); }
    void field_u8(std::uint8_t v) { prefix(1); bytes_.push_back(v); }
    void field_digest(const Digest& d) {
        prefix(static_cast<std::uint32_t>(d.size()));
        bytes_.insert(bytes_.end(), d.begin(), d.end());
    }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

private:
    void prefix(std::uint32_t n) { le(n, 4); }
    void le(std::uint64_t v, int width) {
        for (int i = 0; i < width; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    std::vector<std::uint8_t> bytes_;
};

}  // namespace detail

/// A sealed run of transactions, chained to its predecessor by digest.
struct LedgerBlock {
    Digest prev_hash{};
    std::vector<Transaction> transactions;
    Digest block_hash{};
};

inline Digest compute_block_hash(const Digest& prev_hash,
                                 const std::vector<Transaction>& transactions) {
    detail::ByteWriter w;
    w.field_digest(prev_hash);
    w.field_u64(transactions.size());
    for (const Transaction& t : transactions) {
        w.field_u32(static_cast<std::uint32_t>(t.payer));
        w.field_u32(static_cast<std::uint32_t>(t.payee));
        w.field_u8(static_cast<std::uint8_t>(t.reason));
        w.field_u32(static_cast<std::uint32_t>(t.phase));
        w.field_u64(t.sequence);
        w.field_u8(static_cast<std::uint8_t>(t.amount));
    }
    return detail::sha256(w.bytes());
}

struct ChainValidation {
    bool ok = true;
    std::size_t block_index = 0;  // first failing block when !ok
    std::string what;
};

/// Append-only hash-chained ledger for a K-user network. Single writer;
/// transactions accumulate in an open block until sealed (one block per
/// protocol phase).
class Ledger {
public:
    explicit Ledger(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("Ledger: K must be >= 1");
    }

    int k() const { return k_; }

    /// Validates direction rules and node range, then appends to the open
    /// block. Sequence numbers must be strictly increasing.
    void append_transaction(const Transaction& txn) {
        check_transaction(txn, k_);
        if (have_seq_ && txn.sequence <= last_seq_)
            throw std::invalid_argument("append_transaction: sequence not increasing");
        last_seq_ = txn.sequence;
        have_seq_ = true;
        open_.push_back(txn);
    }

    /// Seals the open block (transactions since the last seal) onto the
    /// chain and returns it.
    const LedgerBlock& seal_block() {
        LedgerBlock block;
        block.prev_hash = tip_hash();
        block.transactions = std::move(open_);
        block.block_hash = compute_block_hash(block.prev_hash, block.transactions);
        open_.clear();
        blocks_.push_back(std::move(block));
        return blocks_.back();
    }

    const std::vector<LedgerBlock>& blocks() const { return blocks_; }
    const std::vector<Transaction>& open_transactions() const { return open_; }

    std::vector<Transaction> all_transactions() const {
        std::vector<Transaction> out;
        for (const auto& b : blocks_)
            out.insert(out.end(), b.transactions.begin(), b.transactions.end());
        out.insert(out.end(), open_.begin(), open_.end());
        return out;
    }

    /// Recomputes every digest and transaction invariant; reports the
    /// first failing block. A genesis-only (empty) chain is valid.
    ChainValidation validate_chain() const { return validate_blocks(blocks_, k_); }

    static ChainValidation validate_blocks(const std::vector<LedgerBlock>& blocks, int k) {
        Digest prev{};  // genesis digest is all-zero
        std::uint64_t last_seq = 0;
        bool have_seq = false;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const LedgerBlock& b = blocks[i];
            if (b.prev_hash != prev)
                return {false, i, "prev_hash does not match preceding block"};
            for (const Transaction& t : b.transactions) {
                try {
                    check_transaction(t, k);
                } catch (const std::exception& e) {
                    return {false, i, e.what()};
                }
                if (have_seq && t.sequence <= last_seq)
                    return {false, i, "sequence not increasing"};
                last_seq = t.sequence;
                have_seq = true;
            }
            if (compute_block_hash(b.prev_hash, b.transactions) != b.block_hash)
                return {false, i, "block hash mismatch"};
            prev = b.block_hash;
        }
        return {};
    }

    static void check_transaction(const Transaction& txn, int k) {
        if (txn.payer < 1 || txn.payer > k || txn.payee < 1 || txn.payee > k)
            throw std::out_of_range("transaction: node index outside [1, K]");
        if (txn.amount != 1)
            throw std::invalid_argument("transaction: amount must be one coin");
        if (txn.phase < 0 || txn.phase > 3)
            throw std::invalid_argument("transaction: phase outside [0, 3]");
        if (txn.reason == PaymentReason::interference) {
            if (txn.payee != txn.payer + 1)
                throw std::invalid_argument("transaction: interference coins flow to the following node");
        } else {
            if (txn.payee != txn.payer - 1)
                throw std::invalid_argument("transaction: rent coins flow to the preceding node");
        }
    }

private:
    Digest tip_hash() const { return blocks_.empty() ? Digest{} : blocks_.back().block_hash; }

    int k_;
    std::vector<LedgerBlock> blocks_;
    std::vector<Transaction> open_;
    std::uint64_t last_seq_ = 0;
    bool have_seq_ = false;
};

/// Initial coins per node plus running balances after applying a
/// transaction prefix. Payments move coins; the total never changes.
struct BalanceSheet {
    std::map<int, int> endowment;
    std::map<int, int> balance;

    static BalanceSheet from_endowment(const std::map<int, int>& endowment) {
        return {endowment, endowment};
    }

    void apply(const Transaction& txn) {
        balance[txn.payer] -= txn.amount;
        balance[txn.payee] += txn.amount;
    }

    int total() const {
        int sum = 0;
        for (const auto& [node, coins] : balance) sum += coins;
        return sum;
    }
};

/// The documented coin allocation: two coins at every node with index
/// congruent to 1 mod 4, for a total of K/2 when K is divisible by 4.
inline std::map<int, int> default_endowment(int k) {
    std::map<int, int> e;
    for (int i = 1; i <= k; i += 4) e[i] = 2;
    return e;
}

inline int balance(const Ledger& ledger, const std::map<int, int>& endowment, int node) {
    if (node < 1 || node > ledger.k()) throw std::out_of_range("balance: node outside [1, K]");
    int b = 0;
    if (auto it = endowment.find(node); it != endowment.end()) b = it->second;
    for (const Transaction& t : ledger.all_transactions()) {
        if (t.payer == node) b -= t.amount;
        if (t.payee == node) b += t.amount;
    }
    return b;
}

/// Coins received minus coins paid by `node` across a full 4-phase
/// rotation. Zero for every interior node once the rotation completes.
inline int net_over_rotation(const Ledger& ledger, int node, bool allow_partial = false) {
    if (node < 1 || node > ledger.k())
        throw std::out_of_range("net_over_rotation: node outside [1, K]");
    std::set<int> phases;
    int net = 0;
    for (const Transaction& t : ledger.all_transactions()) {
        phases.insert(t.phase);
        if (t.payer == node) net -= t.amount;
        if (t.payee == node) net += t.amount;
    }
    if (!allow_partial && phases != std::set<int>{0, 1, 2, 3})
        throw std::invalid_argument("net_over_rotation: ledger does not hold a complete rotation");
    return net;
}

}  // namespace wyner
