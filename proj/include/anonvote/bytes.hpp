#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace anonvote {

// Arbitrary-precision ballot rank. Values live in [0, n_c! - 1] and are
// serialized as decimal strings in external formats.
using Rank = boost::multiprecision::cpp_int;

using CandidateId = std::uint32_t;

using Digest = std::array<std::uint8_t, 32>;
using Signature = std::array<std::uint8_t, 64>;

// Account identifier on the simulated ledger (address-width, 20 bytes).
struct Address {
    std::array<std::uint8_t, 20> bytes{};

    auto operator<=>(const Address&) const = default;
};

inline std::string to_hex(std::span<const std::uint8_t> data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

inline std::string to_hex(const Digest& d) { return to_hex(std::span<const std::uint8_t>(d)); }
inline std::string to_hex(const Signature& s) { return to_hex(std::span<const std::uint8_t>(s)); }
inline std::string to_hex(const Address& a) { return to_hex(std::span<const std::uint8_t>(a.bytes)); }

inline std::vector<std::uint8_t> from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]);
        int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

inline Digest digest_from_hex(std::string_view hex) {
    auto raw = from_hex(hex);
    if (raw.size() != std::tuple_size_v<Digest>) throw std::invalid_argument("digest must be 32 bytes");
    Digest d{};
    std::copy(raw.begin(), raw.end(), d.begin());
    return d;
}

inline Address address_from_hex(std::string_view hex) {
    auto raw = from_hex(hex);
    Address a{};
    if (raw.size() != a.bytes.size()) throw std::invalid_argument("address must be 20 bytes");
    std::copy(raw.begin(), raw.end(), a.bytes.begin());
    return a;
}

// Append-only byte buffer used to build canonical digest inputs.
// Canonical conventions: unsigned integers are big-endian fixed-width
// (32 bytes); ranks are length-prefixed big-endian magnitudes.
class ByteWriter {
public:
    void put_byte(std::uint8_t b) { buf_.push_back(b); }

    void put_bytes(std::span<const std::uint8_t> data) {
        buf_.insert(buf_.end(), data.begin(), data.end());
    }

    void put_u32_be(std::uint32_t v) {
        for (int shift = 24; shift >= 0; shift -= 8)
            buf_.push_back(static_cast<std::uint8_t>(v >> shift));
    }

    // 32-byte big-endian encoding of a machine word.
    void put_u256_be(std::uint64_t v) {
        for (int i = 0; i < 24; ++i) buf_.push_back(0);
        for (int shift = 56; shift >= 0; shift -= 8)
            buf_.push_back(static_cast<std::uint8_t>(v >> shift));
    }

    // Length-prefixed big-endian magnitude; zero encodes as length 0.
    void put_rank(const Rank& r) {
        std::vector<std::uint8_t> mag;
        if (r > 0) boost::multiprecision::export_bits(r, std::back_inserter(mag), 8);
        put_u32_be(static_cast<std::uint32_t>(mag.size()));
        put_bytes(mag);
    }

    std::span<const std::uint8_t> bytes() const { return buf_; }

private:
    std::vector<std::uint8_t> buf_;
};

inline std::string rank_to_string(const Rank& r) { return r.str(); }

inline Rank rank_from_string(const std::string& s) { return Rank(s); }

}  // namespace anonvote
