#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jlab/johnson.hpp"
#include "jlab/rational.hpp"
#include "jlab/search.hpp"

namespace jlab {

/// max(0, (lambda0*u^2/C(n,3) + lambda2*(u - u^2/C(n,3)))/2), exact; the
/// unclamped form is the unconditional Rayleigh lower bound on 2e_U.
BigRat spectral_edge_lower_bound(int n, const BigInt& u_size);

struct AsymptoticCoefficient {
    BigRat value;  // max(0, 9c^2/2 - c)
    bool vacuous;  // c <= 2/9, where the raw coefficient is <= 0
};
AsymptoticCoefficient asymptotic_coefficient(const BigRat& c);

struct SubsetCheck {
    BigInt e_u;
    BigRat bound;  // clamped half-bound, so e_u >= bound iff 2e_u >= raw
    BigRat slack;  // e_u - bound
    bool holds;
};

/// Holds the J(n,3,{1}) adjacency once so many subsets check cheaply.
class SupersatChecker {
public:
    explicit SupersatChecker(int n);

    int n() const { return n_; }
    std::uint64_t vertex_count() const { return nv_; }

    /// ranks: duplicate-free colex ranks of the subset members.
    SubsetCheck check(const std::vector<std::uint64_t>& ranks) const;

    /// Edge count alone (bitset path; independent of induced_edges).
    std::uint64_t edges(const std::vector<std::uint64_t>& ranks) const;

private:
    int n_;
    std::uint64_t nv_;
    BitGraph graph_;
};

/// One-off convenience wrapper around SupersatChecker.
SubsetCheck check_subset(int n, const std::vector<std::uint64_t>& ranks);

enum class Sampler { Uniform, GreedyDense };

struct SampleRow {
    std::uint64_t trial;
    std::uint64_t size;
    std::uint64_t edges;
    BigRat bound;
    bool holds;
};

struct SampleReport {
    int n;
    BigRat c;
    std::uint64_t trials;
    std::uint64_t seed;
    Sampler sampler;
    std::vector<SampleRow> rows;
    // ratio e_U/bound aggregated over rows with bound > 0
    std::uint64_t rows_with_zero_bound = 0;
    BigRat ratio_min, ratio_mean;
};

/// |U| = floor(c*n^2) per trial; uniform draws use trial_rng(seed, trial),
/// greedy-dense is deterministic (seed ignored beyond the report).
SampleReport sample_experiment(int n, const BigRat& c, std::uint64_t trials,
                               std::uint64_t seed, Sampler sampler);

} // namespace jlab
