#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jlab/family.hpp"
#include "jlab/johnson.hpp"
#include "jlab/rational.hpp"

namespace jlab {

/// Dense bitset adjacency over vertices 0..nv-1 (colex ranks).
class BitGraph {
public:
    explicit BitGraph(int nv);

    int nv() const { return nv_; }
    int words() const { return words_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    const std::uint64_t* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * words_; }
    int degree(int u) const;

private:
    int nv_, words_;
    std::vector<std::uint64_t> rows_;
};

/// Adjacency of J(n,k,L) on colex-ranked vertices; refuses when C(n,k)
/// exceeds vertex_budget.
BitGraph build_graph(const JohnsonSpec& spec, std::uint64_t vertex_budget);

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;   // expand() calls before refusal
    std::uint64_t vertex_budget = 10'000;     // C(n,k) cap before building
    bool enumerate_all = false;               // collect every maximum solution
    std::uint64_t witness_cap = 1'000'000;    // stop collecting past this many
};

enum class SearchMode { Clique, Coclique };

struct SearchResult {
    JohnsonSpec spec;
    SearchMode mode;
    BigInt optimum;
    std::vector<SetFamily> witnesses;  // all optima when enumerate_all, else one
    bool witnesses_truncated = false;
    std::uint64_t nodes_explored = 0;
    std::uint64_t wall_ms = 0;
};

/// Exact maximum clique / coclique. Throws BudgetExceeded rather than ever
/// returning a heuristic answer.
SearchResult max_clique(const JohnsonSpec& spec, const SearchOptions& opts = {});
SearchResult max_coclique(const JohnsonSpec& spec, const SearchOptions& opts = {});

/// Deterministic greedy solutions; lower bounds, also the search warm start.
SetFamily greedy_clique(const JohnsonSpec& spec, std::uint64_t vertex_budget = 10'000);
SetFamily greedy_coclique(const JohnsonSpec& spec, std::uint64_t vertex_budget = 10'000);

enum class CocliqueKind { TwoStar, FranklR1, Other };

struct CocliqueVerdict {
    CocliqueKind kind;
    std::vector<int> core; // the common pair (TwoStar) or 4-set (FranklR1)
};

struct CocliqueClassification {
    BigInt alpha;
    std::vector<SetFamily> witnesses;
    std::vector<CocliqueVerdict> verdicts; // parallel to witnesses
    bool truncated = false;
    std::uint64_t count_two_star = 0, count_frankl_r1 = 0, count_other = 0;
};

/// Structural test used for the verdicts, exposed for reuse:
/// TwoStar iff a common pair exists and |f| = C(n-2,k-2); FranklR1 iff some
/// 4-set T has |S cap T| >= 3 for every member. TwoStar takes precedence.
CocliqueVerdict classify_coclique(const SetFamily& f);

/// Enumerates all maximum cocliques of J(n,k,{1}) and classifies each.
CocliqueClassification classify_max_cocliques(const JohnsonSpec& spec,
                                              const SearchOptions& opts = {});

struct ScanRow {
    int n, k;
    std::vector<int> L;
    bool completed = false;
    BigInt alpha, omega, product, vertices;
    bool equality = false;
    bool prefix_form = false;       // L or its complement is {0,...,t-1}
    bool flagged_exception = false; // equality without prefix form
    std::string refusal;            // budget message when not completed
};

struct ScanReport {
    std::vector<ScanRow> rows;
};

/// alpha/omega over every non-empty proper L for each n in [n_from, n_to];
/// budget refusals are recorded per row, never fatal. Completed rows always
/// satisfy alpha*omega <= C(n,k).
ScanReport scan_equality(int k, int n_from, int n_to, const SearchOptions& opts = {});

} // namespace jlab
