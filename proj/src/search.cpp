#include "jlab/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "jlab/errors.hpp"
#include "jlab/kset.hpp"

namespace jlab {

BitGraph::BitGraph(int nv) : nv_(nv), words_((nv + 63) / 64) {
    require(nv >= 0, "bitgraph: negative vertex count");
    if (words_ == 0) words_ = 1;
    rows_.assign(static_cast<std::size_t>(nv_) * words_, 0);
}

void BitGraph::add_edge(int u, int v) {
    ensure(u != v && u >= 0 && v >= 0 && u < nv_ && v < nv_, "bitgraph: bad edge");
    rows_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] |=
        std::uint64_t(1) << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (static_cast<std::size_t>(u) >> 6)] |=
        std::uint64_t(1) << (u & 63);
}

int BitGraph::degree(int u) const {
    const std::uint64_t* r = row(u);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

BitGraph build_graph(const JohnsonSpec& spec, std::uint64_t vertex_budget) {
    BigInt v = spec.vertex_count();
    if (v > vertex_budget) {
        throw BudgetExceeded("vertex budget exceeded: C(" + std::to_string(spec.n()) + "," +
                             std::to_string(spec.k()) + ") = " + v.str() + " > " +
                             std::to_string(vertex_budget));
    }
    int nv = static_cast<int>(to_int64(v));
    auto sets = all_ksets(spec.n(), spec.k());
    BitGraph g(nv);
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            if (spec.in_L(intersection_size(sets[i], sets[j]))) g.add_edge(i, j);
        }
    }
    return g;
}

namespace {

void set_bit(std::vector<std::uint64_t>& mask, int v) {
    mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
}

// true iff every pair inside P is an edge; P described twice (list + mask)
bool candidates_form_clique(const BitGraph& g, const std::vector<int>& P,
                            const std::vector<std::uint64_t>& Pmask) {
    int W = g.words();
    for (int v : P) {
        const std::uint64_t* rv = g.row(v);
        for (int w = 0; w < W; ++w) {
            std::uint64_t need = Pmask[w];
            if (w == (v >> 6)) need &= ~(std::uint64_t(1) << (v & 63));
            if (need & ~rv[w]) return false;
        }
    }
    return true;
}

// Greedy sequential coloring of P (kept in list order); emits vertices
// grouped by ascending color class, bounds[i] = 1-based class of order[i].
void color_sort(const BitGraph& g, const std::vector<int>& P,
                std::vector<int>& order, std::vector<int>& bounds) {
    int W = g.words();
    int m = static_cast<int>(P.size());
    std::vector<std::uint64_t> cmask; // ncolors * W, class occupancy
    std::vector<int> color(m);
    int ncolors = 0;
    for (int q = 0; q < m; ++q) {
        int v = P[q];
        const std::uint64_t* rv = g.row(v);
        int c = 0;
        for (; c < ncolors; ++c) {
            const std::uint64_t* cm = cmask.data() + static_cast<std::size_t>(c) * W;
            bool conflict = false;
            for (int w = 0; w < W; ++w) {
                if (rv[w] & cm[w]) { conflict = true; break; }
            }
            if (!conflict) break;
        }
        if (c == ncolors) {
            cmask.resize(static_cast<std::size_t>(ncolors + 1) * W, 0);
            ++ncolors;
        }
        cmask[static_cast<std::size_t>(c) * W + (static_cast<std::size_t>(v) >> 6)] |=
            std::uint64_t(1) << (v & 63);
        color[q] = c;
    }
    std::vector<int> offset(ncolors + 1, 0);
    for (int q = 0; q < m; ++q) ++offset[color[q] + 1];
    for (int c = 1; c <= ncolors; ++c) offset[c] += offset[c - 1];
    order.assign(m, 0);
    bounds.assign(m, 0);
    for (int q = 0; q < m; ++q) {
        int pos = offset[color[q]]++;
        order[pos] = P[q];
        bounds[pos] = color[q] + 1;
    }
}

// Candidate list sorted by degree inside the list (descending), vertex id
// ascending on ties; the order every deeper level inherits.
std::vector<int> order_by_induced_degree(const BitGraph& g, const std::vector<int>& verts) {
    int W = g.words();
    std::vector<std::uint64_t> vm(W, 0);
    for (int v : verts) set_bit(vm, v);
    std::vector<std::pair<int, int>> keyed; // (-degree, id)
    keyed.reserve(verts.size());
    for (int v : verts) {
        const std::uint64_t* rv = g.row(v);
        int d = 0;
        for (int w = 0; w < W; ++w) d += std::popcount(rv[w] & vm[w]);
        keyed.emplace_back(-d, v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    out.reserve(verts.size());
    for (auto& [nd, v] : keyed) { (void)nd; out.push_back(v); }
    return out;
}

class CliqueSolver {
public:
    CliqueSolver(const BitGraph& g, std::uint64_t node_budget)
        : g_(g), W_(g.words()), budget_(node_budget) {}

    // Exact maximum clique size; fix_root restricts the root branch to
    // vertex 0, valid only on vertex-transitive graphs.
    int solve(bool fix_root) {
        greedy_warm_start();
        if (g_.nv() == 0) return 0;
        if (fix_root) {
            std::vector<int> P;
            const std::uint64_t* r0 = g_.row(0);
            for (int v = 1; v < g_.nv(); ++v) {
                if ((r0[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u) P.push_back(v);
            }
            P = order_by_induced_degree(g_, P);
            std::vector<std::uint64_t> Pmask(W_, 0);
            for (int v : P) set_bit(Pmask, v);
            cur_.assign(1, 0);
            expand(P, Pmask);
            cur_.clear();
        } else {
            std::vector<int> P(g_.nv());
            for (int v = 0; v < g_.nv(); ++v) P[v] = v;
            P = order_by_induced_degree(g_, P);
            std::vector<std::uint64_t> Pmask(W_, 0);
            for (int v : P) set_bit(Pmask, v);
            expand(P, Pmask);
        }
        return best_size_;
    }

    // All cliques of size exactly target, each reported once.
    void enumerate(int target, std::uint64_t cap,
                   std::vector<std::vector<int>>& out, bool& truncated) {
        target_ = target;
        cap_ = cap;
        out_ = &out;
        truncated_ = false;
        if (target == 0) { truncated = false; return; }
        std::vector<int> P(g_.nv());
        for (int v = 0; v < g_.nv(); ++v) P[v] = v;
        P = order_by_induced_degree(g_, P);
        std::vector<std::uint64_t> Pmask(W_, 0);
        for (int v : P) set_bit(Pmask, v);
        cur_.clear();
        expand_all(P, Pmask);
        truncated = truncated_;
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& best_clique() const { return best_; }

private:
    void charge_node() {
        if (++nodes_ > budget_) {
            throw BudgetExceeded("search: node budget exceeded at " + std::to_string(nodes_) +
                                 " nodes");
        }
    }

    void greedy_warm_start() {
        std::vector<std::uint64_t> cm(W_, 0);
        std::vector<int> clique;
        for (int v = 0; v < g_.nv(); ++v) {
            const std::uint64_t* rv = g_.row(v);
            bool ok = true;
            for (int w = 0; w < W_; ++w) {
                if (cm[w] & ~rv[w]) { ok = false; break; }
            }
            if (ok) { clique.push_back(v); set_bit(cm, v); }
        }
        best_ = clique;
        best_size_ = static_cast<int>(clique.size());
    }

    void expand(const std::vector<int>& P, const std::vector<std::uint64_t>& Pmask) {
        charge_node();
        int rs = static_cast<int>(cur_.size());
        if (P.empty()) {
            if (rs > best_size_) { best_size_ = rs; best_ = cur_; }
            return;
        }
        if (rs + static_cast<int>(P.size()) <= best_size_) return;
        if (candidates_form_clique(g_, P, Pmask)) {
            best_size_ = rs + static_cast<int>(P.size());
            best_ = cur_;
            best_.insert(best_.end(), P.begin(), P.end());
            return;
        }
        std::vector<int> order, bounds;
        color_sort(g_, P, order, bounds);
        std::vector<int> Q;
        std::vector<std::uint64_t> Qmask(W_);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (rs + bounds[i] <= best_size_) return;
            int v = order[i];
            const std::uint64_t* rv = g_.row(v);
            Q.clear();
            std::fill(Qmask.begin(), Qmask.end(), 0);
            for (int p = 0; p < i; ++p) {
                int u = order[p];
                if ((rv[static_cast<std::size_t>(u) >> 6] >> (u & 63)) & 1u) {
                    Q.push_back(u);
                    set_bit(Qmask, u);
                }
            }
            cur_.push_back(v);
            expand(Q, Qmask);
            cur_.pop_back();
        }
    }

    void expand_all(const std::vector<int>& P, const std::vector<std::uint64_t>& Pmask) {
        if (truncated_) return;
        charge_node();
        int rs = static_cast<int>(cur_.size());
        if (rs == target_) { record(cur_); return; }
        if (rs + static_cast<int>(P.size()) < target_) return;
        if (candidates_form_clique(g_, P, Pmask)) {
            // R extended by all of P is the unique maximum clique down here
            if (rs + static_cast<int>(P.size()) == target_) {
                std::vector<int> full = cur_;
                full.insert(full.end(), P.begin(), P.end());
                std::sort(full.begin(), full.end());
                record(full);
            }
            return;
        }
        std::vector<int> order, bounds;
        color_sort(g_, P, order, bounds);
        std::vector<int> Q;
        std::vector<std::uint64_t> Qmask(W_);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (truncated_) return;
            if (rs + bounds[i] < target_) return;
            int v = order[i];
            const std::uint64_t* rv = g_.row(v);
            Q.clear();
            std::fill(Qmask.begin(), Qmask.end(), 0);
            for (int p = 0; p < i; ++p) {
                int u = order[p];
                if ((rv[static_cast<std::size_t>(u) >> 6] >> (u & 63)) & 1u) {
                    Q.push_back(u);
                    set_bit(Qmask, u);
                }
            }
            cur_.push_back(v);
            expand_all(Q, Qmask);
            cur_.pop_back();
        }
    }

    void record(std::vector<int> clique) {
        if (out_->size() >= cap_) { truncated_ = true; return; }
        std::sort(clique.begin(), clique.end());
        out_->push_back(std::move(clique));
    }

    const BitGraph& g_;
    int W_;
    std::uint64_t budget_, nodes_ = 0;
    std::vector<int> cur_, best_;
    int best_size_ = 0;
    int target_ = 0;
    std::uint64_t cap_ = 0;
    bool truncated_ = false;
    std::vector<std::vector<int>>* out_ = nullptr;
};

SetFamily ranks_to_family(const JohnsonSpec& spec, std::vector<int> ranks) {
    std::sort(ranks.begin(), ranks.end());
    std::vector<KSet> sets;
    sets.reserve(ranks.size());
    for (int r : ranks) sets.push_back(unrank_colex(static_cast<std::uint64_t>(r), spec.n(), spec.k()));
    return SetFamily(spec.n(), spec.k(), std::move(sets));
}

// Shared clique engine; coclique mode runs it on the complement spec.
SearchResult run_search(const JohnsonSpec& original, const JohnsonSpec& graph_spec,
                        SearchMode mode, const SearchOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    BitGraph g = build_graph(graph_spec, opts.vertex_budget);
    CliqueSolver solver(g, opts.node_budget);
    int opt = solver.solve(/*fix_root=*/true);

    SearchResult res{original, mode, BigInt(opt), {}, false, 0, 0};
    if (opts.enumerate_all) {
        std::vector<std::vector<int>> lists;
        bool truncated = false;
        solver.enumerate(opt, opts.witness_cap, lists, truncated);
        res.witnesses_truncated = truncated;
        ensure(!lists.empty(), "search: enumeration lost the optimum");
        for (auto& l : lists) res.witnesses.push_back(ranks_to_family(original, l));
    } else {
        res.witnesses.push_back(ranks_to_family(original, solver.best_clique()));
    }
    res.nodes_explored = solver.nodes();
    for (const auto& w : res.witnesses) {
        ensure(BigInt(w.size()) == res.optimum, "search: witness size != optimum");
        bool ok = (mode == SearchMode::Clique) ? is_clique(w, original) : is_coclique(w, original);
        ensure(ok, "search: witness failed revalidation");
    }
    auto t1 = std::chrono::steady_clock::now();
    res.wall_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return res;
}

} // namespace

SearchResult max_clique(const JohnsonSpec& spec, const SearchOptions& opts) {
    return run_search(spec, spec, SearchMode::Clique, opts);
}

SearchResult max_coclique(const JohnsonSpec& spec, const SearchOptions& opts) {
    return run_search(spec, spec.complement(), SearchMode::Coclique, opts);
}

namespace {

SetFamily greedy_on_graph(const JohnsonSpec& graph_spec, const JohnsonSpec& original,
                          std::uint64_t vertex_budget) {
    BitGraph g = build_graph(graph_spec, vertex_budget);
    std::vector<std::uint64_t> cm(static_cast<std::size_t>(g.words()), 0);
    std::vector<int> clique;
    for (int v = 0; v < g.nv(); ++v) {
        const std::uint64_t* rv = g.row(v);
        bool ok = true;
        for (int w = 0; w < g.words(); ++w) {
            if (cm[w] & ~rv[w]) { ok = false; break; }
        }
        if (ok) { clique.push_back(v); set_bit(cm, v); }
    }
    return ranks_to_family(original, clique);
}

} // namespace

SetFamily greedy_clique(const JohnsonSpec& spec, std::uint64_t vertex_budget) {
    SetFamily f = greedy_on_graph(spec, spec, vertex_budget);
    ensure(is_clique(f, spec), "greedy_clique: not a clique");
    return f;
}

SetFamily greedy_coclique(const JohnsonSpec& spec, std::uint64_t vertex_budget) {
    SetFamily f = greedy_on_graph(spec.complement(), spec, vertex_budget);
    ensure(is_coclique(f, spec), "greedy_coclique: not a coclique");
    return f;
}

CocliqueVerdict classify_coclique(const SetFamily& f) {
    require(f.size() > 0, "classify: empty family");
    int n = f.n(), k = f.k();

    // TwoStar: common pair plus the full 2-star size
    std::vector<int> common = f[0].elements();
    for (std::size_t i = 1; i < f.size() && common.size() >= 2; ++i) {
        std::vector<int> next;
        const auto& e = f[i].elements();
        std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (common.size() >= 2 && BigInt(f.size()) == binomial(n - 2, k - 2)) {
        return CocliqueVerdict{CocliqueKind::TwoStar, {common[0], common[1]}};
    }

    // FranklR1: some 4-set T meets every member in >= 3 elements
    if (n >= 4) {
        for (const auto& t4 : all_ksets(n, 4)) {
            bool all = true;
            for (const auto& s : f.sets()) {
                if (intersection_size(s, t4) < 3) { all = false; break; }
            }
            if (all) return CocliqueVerdict{CocliqueKind::FranklR1, t4.elements()};
        }
    }
    return CocliqueVerdict{CocliqueKind::Other, {}};
}

CocliqueClassification classify_max_cocliques(const JohnsonSpec& spec,
                                              const SearchOptions& opts) {
    require(spec.L() == std::vector<int>{1}, "classify_max_cocliques: defined for L = {1}");
    SearchOptions o = opts;
    o.enumerate_all = true;
    SearchResult res = max_coclique(spec, o);

    CocliqueClassification out;
    out.alpha = res.optimum;
    out.truncated = res.witnesses_truncated;
    out.witnesses = std::move(res.witnesses);
    for (const auto& w : out.witnesses) {
        CocliqueVerdict v = classify_coclique(w);
        switch (v.kind) {
            case CocliqueKind::TwoStar: ++out.count_two_star; break;
            case CocliqueKind::FranklR1: ++out.count_frankl_r1; break;
            case CocliqueKind::Other: ++out.count_other; break;
        }
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

namespace {

bool is_prefix_set(const std::vector<int>& L) {
    // sorted, distinct: a prefix {0,...,r-1} iff last element is size-1
    return !L.empty() && L.front() == 0 && L.back() == static_cast<int>(L.size()) - 1;
}

} // namespace

ScanReport scan_equality(int k, int n_from, int n_to, const SearchOptions& opts) {
    require(k >= 2, "scan_equality: need k >= 2 for a non-empty proper L");
    require(n_from > k && n_to >= n_from, "scan_equality: need k < n_from <= n_to");
    ScanReport report;
    for (int n = n_from; n <= n_to; ++n) {
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            std::vector<int> L;
            for (int b = 0; b < k; ++b) {
                if (mask & (1u << b)) L.push_back(b);
            }
            JohnsonSpec spec(n, k, L);
            ScanRow row;
            row.n = n;
            row.k = k;
            row.L = L;
            row.vertices = spec.vertex_count();
            try {
                SearchResult om = max_clique(spec, opts);
                SearchResult al = max_coclique(spec, opts);
                row.completed = true;
                row.omega = om.optimum;
                row.alpha = al.optimum;
                row.product = row.omega * row.alpha;
                ensure(row.product <= row.vertices,
                       "scan_equality: clique-coclique bound violated");
                row.equality = (row.product == row.vertices);
                std::vector<int> comp;
                for (int s = 0; s < k; ++s) {
                    if (!spec.in_L(s)) comp.push_back(s);
                }
                row.prefix_form = is_prefix_set(L) || is_prefix_set(comp);
                row.flagged_exception = row.equality && !row.prefix_form;
            } catch (const BudgetExceeded& e) {
                row.completed = false;
                row.refusal = e.what();
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace jlab
