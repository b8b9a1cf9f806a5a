#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "jlab/errors.hpp"
#include "jlab/johnson.hpp"
#include "jlab/kset.hpp"
#include "jlab/rng.hpp"

using namespace jlab;

namespace {

// Independent adjacency oracle: sorted-vector intersection, no masks.
int slow_meet(const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) ++c;
    return c;
}

} // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(JohnsonSpec(3, 3, {0}), ValidationError); // k < n required
    CHECK_THROWS_AS(JohnsonSpec(5, 0, {}), ValidationError);
    CHECK_THROWS_AS(JohnsonSpec(5, 2, {2}), ValidationError); // L must be < k
    CHECK_THROWS_AS(JohnsonSpec(5, 2, {-1}), ValidationError);
    JohnsonSpec s(7, 3, {2, 1, 1});
    CHECK(s.L() == std::vector<int>{1, 2}); // sorted, deduplicated
    CHECK(s.in_L(1));
    CHECK(!s.in_L(0));
}

TEST_CASE("vertex count and complement") {
    JohnsonSpec s(9, 3, {0, 2});
    CHECK(s.vertex_count() == binomial(9, 3));
    CHECK(s.complement().L() == std::vector<int>{1});
    CHECK(s.complement().complement().L() == s.L());
    CHECK(JohnsonSpec(6, 3, {}).complement().L() == std::vector<int>{0, 1, 2});
}

TEST_CASE("adjacency against the slow oracle") {
    for (const auto& L : std::vector<std::vector<int>>{{0}, {1}, {0, 2}, {1, 2}}) {
        JohnsonSpec spec(7, 3, L);
        auto all = all_ksets(7, 3);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                int m = slow_meet(all[i].elements(), all[j].elements());
                bool expect = std::find(L.begin(), L.end(), m) != L.end();
                CHECK(adjacent(spec, all[i], all[j]) == expect);
                CHECK(adjacent(spec, all[j], all[i]) == expect); // symmetric
            }
        }
    }
    JohnsonSpec spec(7, 3, {1});
    auto all = all_ksets(7, 3);
    CHECK_THROWS_AS(adjacent(spec, all[0], all[0]), ValidationError); // distinct
}

TEST_CASE("degree formula matches brute counting") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}, {8, 3}, {9, 4}}) {
        auto all = all_ksets(n, k);
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> L;
            for (int l = 0; l < k; ++l)
                if (mask & (1 << l)) L.push_back(l);
            JohnsonSpec spec(n, k, L);
            // the graph is vertex-transitive: counting at one vertex suffices,
            // but check three spread-out vertices anyway
            for (std::size_t vi : {std::size_t(0), all.size() / 2, all.size() - 1}) {
                BigInt cnt = 0;
                for (std::size_t j = 0; j < all.size(); ++j)
                    if (j != vi && adjacent(spec, all[vi], all[j])) ++cnt;
                CHECK(cnt == degree(spec));
            }
        }
    }
}

TEST_CASE("vertex subset validation") {
    JohnsonSpec spec(7, 3, {1});
    CHECK_THROWS_AS(VertexSubset(spec, std::vector<std::uint64_t>{0, 0}), ValidationError);
    CHECK_THROWS_AS(VertexSubset(spec, std::vector<std::uint64_t>{35}), ValidationError);
    VertexSubset u(spec, std::vector<std::uint64_t>{5, 2, 9});
    CHECK(u.ranks() == std::vector<std::uint64_t>{2, 5, 9});
    CHECK(u.to_family().size() == 3);
}

TEST_CASE("induced edges: handshake on the full vertex set") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}, {8, 3}}) {
        for (int mask = 1; mask < (1 << k) - 1; ++mask) {
            std::vector<int> L;
            for (int l = 0; l < k; ++l)
                if (mask & (1 << l)) L.push_back(l);
            JohnsonSpec spec(n, k, L);
            std::vector<std::uint64_t> everything(binomial_u64(n, k));
            for (std::uint64_t r = 0; r < everything.size(); ++r) everything[r] = r;
            BigInt e = induced_edges(VertexSubset(spec, everything));
            CHECK(e * 2 == spec.vertex_count() * degree(spec));
        }
    }
}

TEST_CASE("complement duality of induced edge counts") {
    JohnsonSpec spec(8, 3, {0, 2});
    JohnsonSpec comp = spec.complement();
    std::uint64_t nv = binomial_u64(8, 3);
    SplitMix64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t size = rng.below(nv + 1);
        // partial Fisher-Yates over ranks
        std::vector<std::uint64_t> pool(nv);
        for (std::uint64_t i = 0; i < nv; ++i) pool[i] = i;
        for (std::uint64_t i = 0; i < size; ++i)
            std::swap(pool[i], pool[i + rng.below(nv - i)]);
        pool.resize(size);
        BigInt eg = induced_edges(VertexSubset(spec, pool));
        BigInt ec = induced_edges(VertexSubset(comp, pool));
        CHECK(eg + ec == BigInt(size) * (size - 1) / 2);
    }
}

TEST_CASE("clique and coclique predicates") {
    JohnsonSpec kneser(7, 3, {0});
    // a star is pairwise intersecting: coclique of the Kneser graph
    std::vector<KSet> star_sets;
    for (const auto& s : all_ksets(7, 3))
        if (s.elements()[0] == 1) star_sets.push_back(s);
    SetFamily star_fam(7, 3, star_sets);
    CHECK(star_fam.size() == 15);
    CHECK(is_coclique(star_fam, kneser));
    CHECK(!is_clique(star_fam, kneser));

    // a partition into disjoint triples is a Kneser clique
    SetFamily parts(9, 3,
                    {KSet({1, 2, 3}, 9), KSet({4, 5, 6}, 9), KSet({7, 8, 9}, 9)});
    JohnsonSpec kneser9(9, 3, {0});
    CHECK(is_clique(parts, kneser9));
    CHECK(!is_coclique(parts, kneser9));

    // mismatched shape is refused
    CHECK_THROWS_AS(is_clique(parts, kneser), ValidationError);
}
