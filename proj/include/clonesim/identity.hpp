#pragma once

#include <cstdint>
#include <string>

#include "clonesim/geometry.hpp"
#include "clonesim/net_model.hpp"

namespace clonesim {

// Point on the b-bit Chord ring. All arithmetic is mod 2^b; values are kept
// masked to the low b bits.
struct RingPoint {
    std::uint64_t value = 0;

    friend auto operator<=>(const RingPoint&, const RingPoint&) = default;
};

inline std::uint64_t ring_mask(unsigned bits) {
    return bits >= 64 ? ~0ULL : (1ULL << bits) - 1;
}

// Half-open wrap-aware interval membership: x in (a, b]. The degenerate
// interval (a, a] denotes the full ring. All operands must already be masked.
inline bool in_interval(std::uint64_t x, std::uint64_t a, std::uint64_t b) {
    if (a == b) return true;
    if (a < b) return x > a && x <= b;
    return x > a || x <= b;  // wraps past zero
}

// --- Canonical byte encodings -----------------------------------------------
//
// Claims and evidence are hashed and signed over these layouts, so they are
// stable: field order fixed, integers 8-byte big-endian, doubles as the
// big-endian IEEE-754 bit pattern, lists prefixed with an 8-byte count.
// A single domain byte separates the hash uses:
//   'C' + id                 -> chord coordinate input
//   'K' + seed + examinee_id -> detection key input
//   'S' + signer_id + msg    -> signature tag input

void append_u64_be(std::string& out, std::uint64_t v);
void append_location(std::string& out, const Location& loc);

// FNV-1a, 64-bit. Pinned project-wide so scenario results are bit-reproducible
// across platforms; the name is echoed in the CLI config output.
std::uint64_t fnv1a64(const std::string& data);

inline constexpr const char* kHashName = "fnv1a64";

// Hash of the identity's canonical bytes (its simulated MAC address),
// truncated to the low b bits.
RingPoint chord_coordinate(NodeId id, unsigned bits);

// Hash of seed || examinee id, truncated to b bits. Every claim about one
// examinee in one round converges to this key regardless of the observer.
RingPoint detection_key(std::uint64_t seed, NodeId examinee, unsigned bits);

// --- Simulated signatures ----------------------------------------------------
//
// Deterministic keyed tag over the canonical message bytes, standing in for
// the identity-based signatures of the deployed system. Verification fails on
// any altered byte or on a wrong signer; the adversary signs only as captured
// identities, which the simulation enforces by construction.

struct Signature {
    std::uint64_t tag = 0;
    NodeId signer;

    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature sign(const std::string& msg_bytes, NodeId signer);
bool verify(const std::string& msg_bytes, const Signature& sig, NodeId claimed_signer);

}  // namespace clonesim
