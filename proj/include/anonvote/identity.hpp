#pragma once

#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

#include "anonvote/bytes.hpp"
#include "anonvote/digest.hpp"

namespace anonvote {

struct EmptySeed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PathLengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CryptoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A voter's secret tuple: Ed25519 keypair plus the nullifier and trapdoor
// scalars. The whole tuple is derivable from one seed and must never appear
// on the ledger; only its commitment digest does.
struct Identity {
    std::array<std::uint8_t, 32> signing_seed{};
    std::array<std::uint8_t, 32> public_key{};
    std::array<std::uint8_t, 32> nullifier{};
    std::array<std::uint8_t, 32> trapdoor{};
};

using IdentityCommitment = Digest;
using VoteHash = Digest;
using NullifierHash = Digest;

// Vote-blinding secret; 256 bits so the committed hash cannot be brute-forced.
struct VoteSecret {
    std::array<std::uint8_t, 32> value{};
};

namespace detail {

struct PkeyDeleter {
    void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
struct MdCtxDeleter {
    void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

inline PkeyPtr ed25519_private_key(const std::array<std::uint8_t, 32>& seed) {
    PkeyPtr key(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, seed.data(), seed.size()));
    if (!key) throw CryptoError("ed25519 private key construction failed");
    return key;
}

inline std::array<std::uint8_t, 32> ed25519_public_key(const std::array<std::uint8_t, 32>& seed) {
    auto key = ed25519_private_key(seed);
    std::array<std::uint8_t, 32> pub{};
    std::size_t len = pub.size();
    if (EVP_PKEY_get_raw_public_key(key.get(), pub.data(), &len) != 1 || len != pub.size())
        throw CryptoError("ed25519 public key derivation failed");
    return pub;
}

}  // namespace detail

// Deterministically derives a full identity from a seed. Each component is
// pulled from the seed under its own domain tag; the signing keypair is
// Ed25519 with the derived 32-byte secret as its seed.
inline Identity gen_identity(const DigestBackend& backend, std::span<const std::uint8_t> seed) {
    if (seed.empty()) throw EmptySeed("identity seed must be non-empty");

    Identity id;
    id.signing_seed = backend.hash_domain(Domain::identity_signing, seed);
    id.nullifier = backend.hash_domain(Domain::identity_nullifier, seed);
    id.trapdoor = backend.hash_domain(Domain::identity_trapdoor, seed);
    id.public_key = detail::ed25519_public_key(id.signing_seed);
    return id;
}

// Commitment digest over (public key, nullifier, trapdoor); this is the
// Merkle leaf that proves eligibility without exposing any identity field.
inline IdentityCommitment commit_identity(const DigestBackend& backend, const Identity& id) {
    ByteWriter w;
    w.put_bytes(id.public_key);
    w.put_bytes(id.nullifier);
    w.put_bytes(id.trapdoor);
    return backend.hash_domain(Domain::identity_commitment, w.bytes());
}

// Committed ballot: digest of (rank, blinding secret).
inline VoteHash vote_hash(const DigestBackend& backend, const Rank& vid, const VoteSecret& vsk) {
    ByteWriter w;
    w.put_rank(vid);
    w.put_bytes(vsk.value);
    return backend.hash_domain(Domain::vote_hash, w.bytes());
}

// Per-(identity, election) nullifier digest. Consumes the Merkle path index
// bits (the leaf slot), not the sibling digests, so the value is stable even
// if the registry tree is rebuilt. `path_bits` must be one bit per level.
inline NullifierHash nullifier_hash(const DigestBackend& backend,
                                    const std::array<std::uint8_t, 32>& nullifier,
                                    const Address& external_nullifier,
                                    std::span<const std::uint8_t> path_bits,
                                    std::size_t tree_height) {
    if (path_bits.size() != tree_height)
        throw PathLengthMismatch("path bit count does not match tree height");
    ByteWriter w;
    w.put_bytes(nullifier);
    w.put_bytes(external_nullifier.bytes);
    for (std::uint8_t bit : path_bits) w.put_byte(bit ? 1 : 0);
    return backend.hash_domain(Domain::nullifier_hash, w.bytes());
}

inline Signature sign_message(const Identity& id, std::span<const std::uint8_t> msg) {
    auto key = detail::ed25519_private_key(id.signing_seed);
    detail::MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1)
        throw CryptoError("signing context init failed");
    Signature sig{};
    std::size_t len = sig.size();
    if (EVP_DigestSign(ctx.get(), sig.data(), &len, msg.data(), msg.size()) != 1 || len != sig.size())
        throw CryptoError("signing failed");
    return sig;
}

inline bool verify_signature(const std::array<std::uint8_t, 32>& public_key,
                             std::span<const std::uint8_t> msg,
                             const Signature& sig) {
    detail::PkeyPtr key(
        EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, public_key.data(), public_key.size()));
    if (!key) return false;
    detail::MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1)
        return false;
    return EVP_DigestVerify(ctx.get(), sig.data(), sig.size(), msg.data(), msg.size()) == 1;
}

}  // namespace anonvote
