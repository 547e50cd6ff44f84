#include "clonesim/identity.hpp"

#include <bit>

namespace clonesim {

void append_u64_be(std::string& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_location(std::string& out, const Location& loc) {
    append_u64_be(out, std::bit_cast<std::uint64_t>(loc.x));
    append_u64_be(out, std::bit_cast<std::uint64_t>(loc.y));
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

RingPoint chord_coordinate(NodeId id, unsigned bits) {
    std::string buf;
    buf.push_back('C');
    append_u64_be(buf, id.value);
    return RingPoint{fnv1a64(buf) & ring_mask(bits)};
}

RingPoint detection_key(std::uint64_t seed, NodeId examinee, unsigned bits) {
    std::string buf;
    buf.push_back('K');
    append_u64_be(buf, seed);
    append_u64_be(buf, examinee.value);
    return RingPoint{fnv1a64(buf) & ring_mask(bits)};
}

Signature sign(const std::string& msg_bytes, NodeId signer) {
    std::string buf;
    buf.push_back('S');
    append_u64_be(buf, signer.value);
    buf += msg_bytes;
    return Signature{fnv1a64(buf), signer};
}

bool verify(const std::string& msg_bytes, const Signature& sig, NodeId claimed_signer) {
    if (sig.signer != claimed_signer) return false;
    return sign(msg_bytes, claimed_signer).tag == sig.tag;
}

}  // namespace clonesim
