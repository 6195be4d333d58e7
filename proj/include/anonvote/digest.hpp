#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include <openssl/evp.h>

#include "anonvote/bytes.hpp"

namespace anonvote {

struct UnknownDigestBackend : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Every digest in the protocol is domain-separated: the role tag is the
// first input byte, so identical payloads hashed under different roles
// never collide. Each tag corresponds to one hash role of the protocol
// (identity commitment, vote hash, nullifier hash, tree node, ...).
enum class Domain : std::uint8_t {
    identity_signing = 0x01,
    identity_nullifier = 0x02,
    identity_trapdoor = 0x03,
    identity_commitment = 0x04,
    vote_hash = 0x05,
    nullifier_hash = 0x06,
    merkle_node = 0x07,
    merkle_zero_leaf = 0x08,
    leaf_list = 0x09,
};

class DigestBackend {
public:
    virtual ~DigestBackend() = default;

    virtual std::string name() const = 0;
    virtual Digest hash(std::span<const std::uint8_t> data) const = 0;

    Digest hash_domain(Domain tag, std::span<const std::uint8_t> payload) const {
        ByteWriter w;
        w.put_byte(static_cast<std::uint8_t>(tag));
        w.put_bytes(payload);
        return hash(w.bytes());
    }
};

namespace detail {

inline Digest evp_hash(const EVP_MD* md, std::span<const std::uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, md, nullptr) != 1 || len != out.size())
        throw std::runtime_error("digest evaluation failed");
    return out;
}

}  // namespace detail

// Default backend: SHA-256.
class Sha256Backend final : public DigestBackend {
public:
    std::string name() const override { return "default"; }
    Digest hash(std::span<const std::uint8_t> data) const override {
        return detail::evp_hash(EVP_sha256(), data);
    }
};

class Sha3Backend final : public DigestBackend {
public:
    std::string name() const override { return "sha3-256"; }
    Digest hash(std::span<const std::uint8_t> data) const override {
        return detail::evp_hash(EVP_sha3_256(), data);
    }
};

inline std::shared_ptr<const DigestBackend> make_digest_backend(const std::string& name) {
    if (name == "default" || name == "sha256") return std::make_shared<Sha256Backend>();
    if (name == "sha3-256") return std::make_shared<Sha3Backend>();
    throw UnknownDigestBackend("unknown digest backend: " + name);
}

}  // namespace anonvote
