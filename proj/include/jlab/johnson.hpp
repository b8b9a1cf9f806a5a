#pragma once

#include <cstdint>
#include <vector>

#include "jlab/family.hpp"
#include "jlab/kset.hpp"
#include "jlab/rational.hpp"

namespace jlab {

/// The generalized Johnson graph J(n,k,L): vertices are k-subsets of [1,n],
/// edges join pairs whose intersection size lies in L.
class JohnsonSpec {
public:
    /// L may be empty or all of [0,k-1]; theorem-level callers validate
    /// proper non-empty L themselves.
    JohnsonSpec(int n, int k, std::vector<int> L);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<int>& L() const { return L_; }
    bool in_L(int s) const;

    BigInt vertex_count() const;
    /// Complement spec: same (n,k), L' = [0,k-1] \ L.
    JohnsonSpec complement() const;

private:
    int n_, k_;
    std::vector<int> L_; // sorted, duplicate-free, subset of [0, k-1]
};

bool adjacent(const JohnsonSpec& spec, const KSet& a, const KSet& b);

/// Valency of every vertex: sum over l in L of C(k,l)*C(n-k,k-l).
BigInt degree(const JohnsonSpec& spec);

/// A subset of vertices given by colex ranks, duplicate-free.
class VertexSubset {
public:
    VertexSubset(JohnsonSpec spec, std::vector<std::uint64_t> ranks);
    VertexSubset(JohnsonSpec spec, const SetFamily& f);

    const JohnsonSpec& spec() const { return spec_; }
    std::size_t size() const { return ranks_.size(); }
    const std::vector<std::uint64_t>& ranks() const { return ranks_; }
    SetFamily to_family() const;

private:
    JohnsonSpec spec_;
    std::vector<std::uint64_t> ranks_; // sorted ascending
};

/// Number of edges of J(n,k,L) with both ends in u.
BigInt induced_edges(const VertexSubset& u);

/// f is a clique iff every distinct pair intersects in a size from L
/// (an (n,k,L)-system); coclique iff no pair does.
bool is_clique(const SetFamily& f, const JohnsonSpec& spec);
bool is_coclique(const SetFamily& f, const JohnsonSpec& spec);

} // namespace jlab
