#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anonvote/bytes.hpp"

namespace anonvote {

struct InvalidPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RankOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A full preference list: candidate IDs 1..n_c, each exactly once, ordered
// from most preferred to least preferred.
using PreferenceList = std::vector<CandidateId>;

inline Rank factorial(std::size_t n) {
    Rank f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned>(k);
    return f;
}

inline bool is_permutation_of_candidates(const PreferenceList& prefs) {
    const std::size_t n = prefs.size();
    std::vector<bool> seen(n, false);
    for (CandidateId cid : prefs) {
        if (cid < 1 || cid > n) return false;
        if (seen[cid - 1]) return false;
        seen[cid - 1] = true;
    }
    return true;
}

// Myrvold-Ruskey linear-time permutation ranking, "rank1" variant:
//   rank(n) = s + n * rank(n - 1)   with s = pi[n-1] after each step's swap.
// Internally 0-based; candidate IDs 1..n map to symbols 0..n-1. `op_count`,
// when given, receives the number of arithmetic loop steps (linear in n).
inline Rank rank_permutation(const PreferenceList& prefs, std::size_t* op_count = nullptr) {
    if (prefs.empty() || !is_permutation_of_candidates(prefs))
        throw InvalidPermutation("preference list is not a permutation of 1..n");

    const std::size_t n = prefs.size();
    std::size_t ops = 0;

    std::vector<std::uint32_t> pi(n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        pi[i] = prefs[i] - 1;
        inv[pi[i]] = static_cast<std::uint32_t>(i);
        ++ops;
    }

    // Collect the residues s_k for k = n down to 2, then fold them up.
    std::vector<std::uint32_t> residue(n + 1, 0);
    for (std::size_t k = n; k >= 2; --k) {
        const std::uint32_t s = pi[k - 1];
        std::swap(pi[k - 1], pi[inv[k - 1]]);
        std::swap(inv[s], inv[k - 1]);
        residue[k] = s;
        ++ops;
    }

    // r_k = s_k + k * r_{k-1}, folded from the smallest size upward.
    Rank r = 0;
    for (std::size_t k = 2; k <= n; ++k) {
        r = r * static_cast<unsigned>(k) + residue[k];
        ++ops;
    }

    if (op_count) *op_count = ops;
    return r;
}

// Inverse of rank_permutation ("unrank1"). Returns the unique preference
// list whose rank is `r` among permutations of 1..n.
inline PreferenceList unrank_permutation(Rank r, std::size_t n, std::size_t* op_count = nullptr) {
    if (n == 0) throw InvalidPermutation("candidate count must be at least 1");
    if (r < 0 || r >= factorial(n)) throw RankOutOfRange("rank not in [0, n!-1]");

    std::size_t ops = 0;
    std::vector<std::uint32_t> pi(n);
    for (std::size_t i = 0; i < n; ++i) {
        pi[i] = static_cast<std::uint32_t>(i);
        ++ops;
    }

    for (std::size_t k = n; k >= 2; --k) {
        const auto idx = static_cast<std::size_t>(r % static_cast<unsigned>(k));
        r /= static_cast<unsigned>(k);
        std::swap(pi[k - 1], pi[idx]);
        ++ops;
    }

    PreferenceList prefs(n);
    for (std::size_t i = 0; i < n; ++i) {
        prefs[i] = pi[i] + 1;
        ++ops;
    }

    if (op_count) *op_count = ops;
    return prefs;
}

}  // namespace anonvote
