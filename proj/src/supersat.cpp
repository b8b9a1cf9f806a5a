#include "jlab/supersat.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "jlab/errors.hpp"
#include "jlab/kset.hpp"
#include "jlab/rng.hpp"
#include "jlab/spectra.hpp"

namespace jlab {

BigRat spectral_edge_lower_bound(int n, const BigInt& u_size) {
    require(n >= 7, "spectral bound: need n >= 7");
    BigInt total = binomial(n, 3);
    require(u_size >= 0 && u_size <= total, "spectral bound: subset size out of range");
    SpectrumN31 sp = spectrum_j_n3_1(n);
    BigRat u(u_size);
    BigRat a0sq = u * u / BigRat(total); // alpha_0^2 = u^2 / C(n,3)
    BigRat raw = sp.lambda[0] * a0sq + sp.lambda[2] * (u - a0sq);
    BigRat half = raw / 2;
    return half > 0 ? half : BigRat(0);
}

AsymptoticCoefficient asymptotic_coefficient(const BigRat& c) {
    require(c > 0, "asymptotic coefficient: need c > 0");
    BigRat raw = BigRat(9) * c * c / 2 - c;
    if (raw <= 0) return {BigRat(0), true};
    return {raw, false};
}

SupersatChecker::SupersatChecker(int n)
    : n_(n),
      nv_(binomial_u64(n, 3)),
      graph_(build_graph(JohnsonSpec(n, 3, {1}),
                         /*vertex_budget=*/binomial_u64(n, 3))) {
    require(n >= 7, "supersat checker: need n >= 7");
}

std::uint64_t SupersatChecker::edges(const std::vector<std::uint64_t>& ranks) const {
    int W = graph_.words();
    std::vector<std::uint64_t> umask(static_cast<std::size_t>(W), 0);
    for (auto r : ranks) {
        require(r < nv_, "supersat: rank out of range");
        std::uint64_t bit = std::uint64_t(1) << (r & 63);
        require(!(umask[r >> 6] & bit), "supersat: duplicate rank");
        umask[r >> 6] |= bit;
    }
    std::uint64_t twice = 0;
    for (auto r : ranks) {
        const std::uint64_t* row = graph_.row(static_cast<int>(r));
        for (int w = 0; w < W; ++w) twice += std::popcount(row[w] & umask[w]);
    }
    ensure(twice % 2 == 0, "supersat: handshake parity");
    return twice / 2;
}

SubsetCheck SupersatChecker::check(const std::vector<std::uint64_t>& ranks) const {
    SubsetCheck out;
    out.e_u = BigInt(edges(ranks));
    out.bound = spectral_edge_lower_bound(n_, BigInt(ranks.size()));
    out.slack = BigRat(out.e_u) - out.bound;
    out.holds = out.slack >= 0;
    return out;
}

SubsetCheck check_subset(int n, const std::vector<std::uint64_t>& ranks) {
    return SupersatChecker(n).check(ranks);
}

namespace {

std::vector<std::uint64_t> uniform_subset(std::uint64_t nv, std::uint64_t size,
                                          SplitMix64& rng) {
    // partial Fisher-Yates over all colex ranks
    std::vector<std::uint64_t> pool(nv);
    std::iota(pool.begin(), pool.end(), std::uint64_t(0));
    for (std::uint64_t i = 0; i < size; ++i) {
        std::uint64_t j = i + rng.below(nv - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    return pool;
}

std::vector<std::uint64_t> greedy_dense_subset(const BitGraph& g, std::uint64_t size) {
    // add the vertex with the most edges into the chosen set, ties by rank
    int nv = g.nv(), W = g.words();
    std::vector<std::uint64_t> umask(static_cast<std::size_t>(W), 0);
    std::vector<char> in(static_cast<std::size_t>(nv), 0);
    std::vector<std::uint64_t> out;
    out.reserve(size);
    for (std::uint64_t step = 0; step < size; ++step) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < nv; ++v) {
            if (in[v]) continue;
            const std::uint64_t* row = g.row(v);
            int gain = 0;
            for (int w = 0; w < W; ++w) gain += std::popcount(row[w] & umask[w]);
            if (gain > best_gain) { best_gain = gain; best = v; }
        }
        in[best] = 1;
        umask[static_cast<std::size_t>(best) >> 6] |= std::uint64_t(1) << (best & 63);
        out.push_back(static_cast<std::uint64_t>(best));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SampleReport sample_experiment(int n, const BigRat& c, std::uint64_t trials,
                               std::uint64_t seed, Sampler sampler) {
    require(n >= 7, "sample: need n >= 7");
    require(c > 0, "sample: need c > 0");
    SupersatChecker checker(n);
    BigInt size_big = floor_rat(c * n * n);
    require(size_big <= BigInt(checker.vertex_count()),
            "sample: floor(c*n^2) exceeds the vertex count");
    std::uint64_t size = to_uint64(size_big);

    SampleReport rep{n, c, trials, seed, sampler, {}, 0, BigRat(0), BigRat(0)};
    std::vector<std::uint64_t> greedy_pick;
    if (sampler == Sampler::GreedyDense && trials > 0) {
        // deterministic, so compute once and reuse across trials
        BitGraph g = build_graph(JohnsonSpec(n, 3, {1}), checker.vertex_count());
        greedy_pick = greedy_dense_subset(g, size);
    }

    bool have_ratio = false;
    BigRat ratio_sum(0);
    std::uint64_t ratio_count = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::vector<std::uint64_t> ranks;
        if (sampler == Sampler::Uniform) {
            SplitMix64 rng = trial_rng(seed, trial);
            ranks = uniform_subset(checker.vertex_count(), size, rng);
        } else {
            ranks = greedy_pick;
        }
        SubsetCheck chk = checker.check(ranks);
        ensure(chk.holds, "sample: spectral lower bound violated");
        SampleRow row{trial, size, to_uint64(chk.e_u), chk.bound, chk.holds};
        if (chk.bound > 0) {
            BigRat ratio = BigRat(chk.e_u) / chk.bound;
            if (!have_ratio || ratio < rep.ratio_min) rep.ratio_min = ratio;
            have_ratio = true;
            ratio_sum += ratio;
            ++ratio_count;
        } else {
            ++rep.rows_with_zero_bound;
        }
        rep.rows.push_back(std::move(row));
    }
    if (ratio_count > 0) rep.ratio_mean = ratio_sum / BigRat(ratio_count);
    return rep;
}

} // namespace jlab
