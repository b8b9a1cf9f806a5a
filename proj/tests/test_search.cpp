#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "jlab/errors.hpp"
#include "jlab/extremal.hpp"
#include "jlab/family.hpp"
#include "jlab/johnson.hpp"
#include "jlab/kset.hpp"
#include "jlab/search.hpp"

using namespace jlab;

namespace {

// Fully independent adjacency: element-list intersection, no ranks, no masks.
std::vector<std::vector<bool>> naive_adjacency(int n, int k, const std::vector<int>& L) {
    auto all = all_ksets(n, k);
    std::size_t nv = all.size();
    std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            int meet = 0;
            for (int x : all[i].elements())
                for (int y : all[j].elements())
                    if (x == y) ++meet;
            if (std::find(L.begin(), L.end(), meet) != L.end())
                adj[i][j] = adj[j][i] = true;
        }
    }
    return adj;
}

// Plain recursion, no bounds, no symmetry: ground truth for tiny graphs.
void brute_rec(const std::vector<std::vector<bool>>& adj, const std::vector<int>& cand,
               int size, int& best) {
    best = std::max(best, size);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (adj[v][cand[j]]) next.push_back(cand[j]);
        brute_rec(adj, next, size + 1, best);
    }
}

int brute_max_clique(const std::vector<std::vector<bool>>& adj) {
    std::vector<int> cand(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) cand[i] = static_cast<int>(i);
    int best = 0;
    brute_rec(adj, cand, 0, best);
    return best;
}

// Count optimum-size cliques by exhaustive combination recursion.
void count_rec(const std::vector<std::vector<bool>>& adj, int target, int start,
               std::vector<int>& cur, std::uint64_t& count) {
    if (static_cast<int>(cur.size()) == target) {
        ++count;
        return;
    }
    for (int v = start; v < static_cast<int>(adj.size()); ++v) {
        bool ok = true;
        for (int u : cur)
            if (!adj[u][v]) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(v);
            count_rec(adj, target, v + 1, cur, count);
            cur.pop_back();
        }
    }
}

std::uint64_t brute_count_max_cliques(const std::vector<std::vector<bool>>& adj, int target) {
    std::vector<int> cur;
    std::uint64_t count = 0;
    count_rec(adj, target, 0, cur, count);
    return count;
}

std::vector<std::vector<bool>> complement_adj(std::vector<std::vector<bool>> adj) {
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = 0; j < adj.size(); ++j) adj[i][j] = (i != j) && !adj[i][j];
    return adj;
}

} // namespace

TEST_CASE("solver agrees with brute force on every L, small shapes") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}}) {
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> L;
            for (int l = 0; l < k; ++l)
                if (mask & (1 << l)) L.push_back(l);
            JohnsonSpec spec(n, k, L);
            auto adj = naive_adjacency(n, k, L);
            int bw = brute_max_clique(adj);
            int bi = brute_max_clique(complement_adj(adj));

            SearchResult rc = max_clique(spec);
            SearchResult ri = max_coclique(spec);
            CHECK(rc.optimum == bw);
            CHECK(ri.optimum == bi);
            CHECK(is_clique(rc.witnesses.front(), spec));
            CHECK(is_coclique(ri.witnesses.front(), spec));
        }
    }
}

TEST_CASE("marquee exact values") {
    SearchResult fano = max_clique(JohnsonSpec(7, 3, {1}));
    CHECK(fano.optimum == 7);
    SearchResult fano_co = max_coclique(JohnsonSpec(7, 3, {1}));
    CHECK(fano_co.optimum == 5);

    CHECK(max_clique(JohnsonSpec(9, 3, {0, 1})).optimum == 12);
    CHECK(max_coclique(JohnsonSpec(9, 3, {0, 1})).optimum == 7);

    // complement duality at the search level
    CHECK(max_clique(JohnsonSpec(8, 4, {2, 3})).optimum ==
          max_coclique(JohnsonSpec(8, 4, {0, 1})).optimum);
}

TEST_CASE("witnesses are revalidated members of the stated graph") {
    SearchResult r = max_coclique(JohnsonSpec(8, 3, {1}));
    REQUIRE(!r.witnesses.empty());
    const SetFamily& w = r.witnesses.front();
    CHECK(BigInt(w.size()) == r.optimum);
    CHECK(w.n() == 8);
    CHECK(w.k() == 3);
    CHECK(is_coclique(w, JohnsonSpec(8, 3, {1})));
}

TEST_CASE("enumeration counts match brute force") {
    // perfect matchings of K6: maximum cliques of the Kneser graph J(6,2,{0})
    auto adj = naive_adjacency(6, 2, {0});
    CHECK(brute_max_clique(adj) == 3);
    CHECK(brute_count_max_cliques(adj, 3) == 15);
    SearchOptions all;
    all.enumerate_all = true;
    SearchResult r = max_clique(JohnsonSpec(6, 2, {0}), all);
    CHECK(r.optimum == 3);
    CHECK(r.witnesses.size() == 15);
    CHECK(!r.witnesses_truncated);
    // no duplicates
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& w : r.witnesses) seen.insert(w.ranks());
    CHECK(seen.size() == 15);

    // same check on a denser graph
    auto adj2 = naive_adjacency(6, 3, {1});
    int b2 = brute_max_clique(complement_adj(adj2));
    std::uint64_t c2 = brute_count_max_cliques(complement_adj(adj2), b2);
    SearchResult r2 = max_coclique(JohnsonSpec(6, 3, {1}), all);
    CHECK(r2.optimum == b2);
    CHECK(r2.witnesses.size() == c2);
    CHECK(c2 == 30);
}

TEST_CASE("witness cap truncates honestly") {
    SearchOptions o;
    o.enumerate_all = true;
    o.witness_cap = 7;
    SearchResult r = max_coclique(JohnsonSpec(6, 3, {1}), o);
    CHECK(r.optimum == 4);
    CHECK(r.witnesses.size() == 7);
    CHECK(r.witnesses_truncated);
}

TEST_CASE("budgets refuse loudly") {
    SearchOptions tiny;
    tiny.node_budget = 1;
    CHECK_THROWS_AS(max_clique(JohnsonSpec(9, 3, {0, 1}), tiny), BudgetExceeded);

    SearchOptions small;
    small.vertex_budget = 10;
    CHECK_THROWS_AS(max_clique(JohnsonSpec(7, 3, {1}), small), BudgetExceeded);
}

TEST_CASE("greedy solutions are valid lower bounds") {
    for (const auto& [n, k, L] : std::vector<std::tuple<int, int, std::vector<int>>>{
             {7, 3, {1}}, {8, 3, {0, 2}}, {9, 3, {0, 1}}, {8, 4, {2, 3}}}) {
        JohnsonSpec spec(n, k, L);
        SetFamily gc = greedy_clique(spec);
        SetFamily gi = greedy_coclique(spec);
        CHECK(is_clique(gc, spec));
        CHECK(is_coclique(gi, spec));
        CHECK(BigInt(gc.size()) <= max_clique(spec).optimum);
        CHECK(BigInt(gi.size()) <= max_coclique(spec).optimum);
        CHECK(gc.size() >= 1);
    }
}

TEST_CASE("node counts are deterministic") {
    SearchResult a = max_clique(JohnsonSpec(8, 4, {2, 3}));
    SearchResult b = max_clique(JohnsonSpec(8, 4, {2, 3}));
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.optimum == b.optimum);
    CHECK(a.witnesses.front().ranks() == b.witnesses.front().ranks());
}

TEST_CASE("coclique classification: structural kinds") {
    // a 2-star is recognized with its core
    CocliqueVerdict v = classify_coclique(star(6, 3, {5, 6}));
    CHECK(v.kind == CocliqueKind::TwoStar);
    CHECK(v.core == std::vector<int>{5, 6});

    // the 3-from-4 family on a fixed 4-set
    std::vector<KSet> sets;
    for (const auto& s : all_ksets(6, 3))
        if (intersection_size(s, KSet({1, 2, 3, 4}, 6)) >= 3) sets.push_back(s);
    CocliqueVerdict f = classify_coclique(SetFamily(6, 3, sets));
    CHECK(f.kind == CocliqueKind::FranklR1);
    CHECK(f.core == std::vector<int>{1, 2, 3, 4});

    // neither: a maximum coclique of J(7,3,{1}) that is not a 2-star
    JohnsonSpec s7(7, 3, {1});
    SearchOptions all;
    all.enumerate_all = true;
    SearchResult r7 = max_coclique(s7, all);
    bool saw_other = false;
    for (const auto& w : r7.witnesses)
        if (classify_coclique(w).kind == CocliqueKind::Other) saw_other = true;
    CHECK(saw_other);
}

TEST_CASE("classification of all maximum cocliques at the boundary n = 3k-3") {
    CocliqueClassification c = classify_max_cocliques(JohnsonSpec(6, 3, {1}));
    CHECK(c.alpha == 4);
    CHECK(c.witnesses.size() == 30);
    CHECK(c.count_two_star == 15);
    CHECK(c.count_frankl_r1 == 15);
    CHECK(c.count_other == 0);
    CHECK(!c.truncated);
    CHECK(c.verdicts.size() == 30);
}

TEST_CASE("classification inside the open strip") {
    CocliqueClassification c = classify_max_cocliques(JohnsonSpec(7, 3, {1}));
    CHECK(c.alpha == 5);
    CHECK(c.witnesses.size() == 56);
    CHECK(c.count_two_star == 21);
    CHECK(c.count_frankl_r1 == 0);
    CHECK(c.count_other == 35);
}

TEST_CASE("classification requires L = {1}") {
    CHECK_THROWS_AS(classify_max_cocliques(JohnsonSpec(7, 3, {0})), ValidationError);
}

TEST_CASE("equality scan: exact equality rows for k = 3, n in [6,9]") {
    ScanReport rep = scan_equality(3, 6, 9);
    REQUIRE(rep.rows.size() == 24); // 6 proper non-empty L per n
    std::set<std::pair<int, std::vector<int>>> equality, flagged;
    for (const auto& row : rep.rows) {
        REQUIRE(row.completed);
        CHECK(row.alpha * row.omega == row.product);
        CHECK(row.product <= row.vertices);
        if (row.equality) equality.insert({row.n, row.L});
        if (row.flagged_exception) flagged.insert({row.n, row.L});
        // flagged only when equality holds without prefix shape
        CHECK(row.flagged_exception == (row.equality && !row.prefix_form));
    }
    std::set<std::pair<int, std::vector<int>>> expect_eq = {
        {6, {0}},    {6, {1, 2}},                            // Kneser pair
        {7, {1}},    {7, {0, 1}}, {7, {2}}, {7, {0, 2}},     // Fano and friends
        {8, {1}},    {8, {0, 2}},                            // residual exceptions
        {9, {0}},    {9, {0, 1}}, {9, {2}}, {9, {1, 2}},     // Steiner triple row
    };
    CHECK(equality == expect_eq);
    std::set<std::pair<int, std::vector<int>>> expect_flag = {
        {7, {1}}, {7, {0, 2}}, {8, {1}}, {8, {0, 2}}};
    CHECK(flagged == expect_flag);
}

TEST_CASE("equality scan records refusals per row") {
    SearchOptions tiny;
    tiny.node_budget = 100;
    ScanReport rep = scan_equality(3, 9, 9, tiny);
    bool any_refused = false, any_done = false;
    for (const auto& row : rep.rows) {
        if (row.completed) {
            any_done = true;
            CHECK(row.refusal.empty());
        } else {
            any_refused = true;
            CHECK(!row.refusal.empty());
        }
    }
    CHECK(any_refused);
    (void)any_done;
    CHECK_THROWS_AS(scan_equality(1, 5, 6), ValidationError);
    CHECK_THROWS_AS(scan_equality(3, 3, 6), ValidationError);
}
