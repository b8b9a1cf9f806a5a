#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "jlab/errors.hpp"
#include "jlab/rational.hpp"

namespace jlab {

/// Exact binomial coefficient. Returns 0 for k < 0 or k > n; requires n >= 0.
BigInt binomial(long long n, long long k);

/// binomial() narrowed to uint64_t, for rank arithmetic. Throws if it does not fit.
std::uint64_t binomial_u64(long long n, long long k);

// Fixed-width bitset mirror for ground sets up to 128 elements; element e
// occupies bit e-1. Hot loops (adjacency, edge counting) run on these.
struct Mask128 {
    std::uint64_t w0 = 0, w1 = 0;

    void set(int e) {
        if (e <= 64) w0 |= std::uint64_t(1) << (e - 1);
        else w1 |= std::uint64_t(1) << (e - 65);
    }
    int intersect_count(const Mask128& o) const {
        return std::popcount(w0 & o.w0) + std::popcount(w1 & o.w1);
    }
    bool operator==(const Mask128&) const = default;
};

constexpr int kMaskMaxGround = 128;

/// A k-element subset of [1, n], stored as a strictly increasing sequence.
class KSet {
public:
    KSet(std::vector<int> elements, int ground_size);

    int n() const { return n_; }
    int k() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }

    bool has_mask() const { return n_ <= kMaskMaxGround; }
    const Mask128& mask() const { return mask_; }

    bool operator==(const KSet& o) const { return n_ == o.n_ && elems_ == o.elems_; }

private:
    std::vector<int> elems_;
    int n_;
    Mask128 mask_{};
};

/// |a ∩ b|; both sets must live on the same ground set.
int intersection_size(const KSet& a, const KSet& b);

/// Colexicographic rank: sum of C(e_i - 1, i) over sorted elements e_1 < ... < e_k
/// at 1-based positions i. Bijective with [0, C(n,k)).
std::uint64_t rank_colex(const KSet& s);

/// Inverse of rank_colex via greedy binomial descent.
KSet unrank_colex(std::uint64_t rank, int n, int k);

/// All k-subsets of [1, n] in colex order (rank r at index r).
std::vector<KSet> all_ksets(int n, int k);

} // namespace jlab
