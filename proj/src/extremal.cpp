#include "jlab/extremal.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "jlab/errors.hpp"
#include "jlab/kset.hpp"

namespace jlab {

namespace {

// Visit all j-element subsets of pool (sorted ascending output per call).
void for_each_combination(const std::vector<int>& pool, int j,
                          const std::function<void(const std::vector<int>&)>& fn) {
    int m = static_cast<int>(pool.size());
    if (j < 0 || j > m) return;
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    std::vector<int> out(j);
    while (true) {
        for (int i = 0; i < j; ++i) out[i] = pool[idx[i]];
        fn(out);
        if (j == 0) return;
        int i = j - 1;
        while (i >= 0 && idx[i] == m - j + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int p = i + 1; p < j; ++p) idx[p] = idx[p - 1] + 1;
    }
}

void sort_by_colex(std::vector<KSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](const KSet& a, const KSet& b) {
        return rank_colex(a) < rank_colex(b);
    });
}

} // namespace

FranklParams::FranklParams(int n_, int k_, int t_, int r_)
    : n(n_), k(k_), t(t_), r(r_) {
    require(t >= 1 && k > t && n > k, "frankl: need n > k > t >= 1");
    require(r >= 0, "frankl: need r >= 0");
    require(t + 2 * r <= n, "frankl: need t + 2r <= n");
    require(t + r <= k, "frankl: need t + r <= k");
}

SetFamily frankl_family(const FranklParams& p) {
    int w = p.t + 2 * p.r; // window [1, w]
    std::vector<int> window(w), rest;
    for (int i = 0; i < w; ++i) window[i] = i + 1;
    for (int e = w + 1; e <= p.n; ++e) rest.push_back(e);

    std::vector<KSet> sets;
    for (int j = p.t + p.r; j <= std::min(p.k, w); ++j) {
        if (p.k - j > static_cast<int>(rest.size())) continue;
        for_each_combination(window, j, [&](const std::vector<int>& a) {
            for_each_combination(rest, p.k - j, [&](const std::vector<int>& b) {
                std::vector<int> e = a;
                e.insert(e.end(), b.begin(), b.end()); // window < rest, stays sorted
                sets.emplace_back(std::move(e), p.n);
            });
        });
    }
    sort_by_colex(sets);
    SetFamily f(p.n, p.k, std::move(sets));
    ensure(BigInt(f.size()) == frankl_size(p), "frankl_family: size formula mismatch");
    return f;
}

BigInt frankl_size(const FranklParams& p) {
    int w = p.t + 2 * p.r;
    BigInt total = 0;
    for (int j = p.t + p.r; j <= p.k; ++j) {
        total += binomial(w, j) * binomial(p.n - w, p.k - j);
    }
    return total;
}

std::vector<int> ak_optimal_r(int n, int k, int t) {
    require(t >= 1 && k > t && n > k, "ak_optimal_r: need n > k > t >= 1");
    std::vector<int> out;
    long long kt1 = k - t + 1;
    for (int r = 0; r <= k - t; ++r) {
        // left: (k-t+1)(2 + (t-1)/(r+1)) <= n, cleared of denominators
        bool left = kt1 * (2 * r + t + 1) <= static_cast<long long>(n) * (r + 1);
        // right: n <= (k-t+1)(2 + (t-1)/r), with (t-1)/0 = +infinity
        bool right = (r == 0) || (static_cast<long long>(n) * r <= kt1 * (2 * r + t - 1));
        if (left && right) out.push_back(r);
    }
    return out;
}

BigRat def_bound(int n, int k, const std::vector<int>& L) {
    require(!L.empty(), "def_bound: L must be non-empty");
    require(n >= k, "def_bound: need n >= k");
    BigRat prod = 1;
    for (int l : L) {
        require(l >= 0 && l <= k - 1, "def_bound: L must lie in [0, k-1]");
        prod *= BigRat(n - l, k - l);
    }
    return prod;
}

bool def_asymptotic_only(int n, int k) {
    return BigInt(n) < (BigInt(1) << k) * k;
}

bool def_chain_holds(int k, const std::vector<int>& L) {
    require(!L.empty(), "def_chain_holds: L must be non-empty");
    std::vector<int> ls = L;
    std::sort(ls.begin(), ls.end());
    require(ls.front() >= 0 && ls.back() <= k - 1, "def_chain_holds: L must lie in [0, k-1]");
    std::vector<int> diffs;
    for (std::size_t i = 1; i < ls.size(); ++i) diffs.push_back(ls[i] - ls[i - 1]);
    diffs.push_back(k - ls.back());
    for (std::size_t i = 1; i < diffs.size(); ++i) {
        if (diffs[i] % diffs[i - 1] != 0) return false;
    }
    return true;
}

BigInt def_threshold(int n, int k, int r) {
    require(r >= 1, "def_threshold: need r >= 1");
    BigInt v = BigInt(k) * k;
    for (int i = 0; i < r - 1; ++i) v *= 2 * BigInt(n);
    return v;
}

bool steiner_verify(const SetFamily& f, int t) {
    require(t >= 0 && t <= f.k(), "steiner_verify: need 0 <= t <= k");
    int n = f.n();
    // coverage count per t-subset, keyed by colex rank
    std::map<std::uint64_t, int> cover;
    for (const auto& s : f.sets()) {
        for_each_combination(s.elements(), t, [&](const std::vector<int>& sub) {
            ++cover[rank_colex(KSet(sub, n))];
        });
    }
    for (const auto& [rk, cnt] : cover) {
        (void)rk;
        if (cnt != 1) return false;
    }
    if (BigInt(cover.size()) != binomial(n, t)) return false;
    // |D| * C(n-t, k-t) = C(n,k), and |D| = C(n,t)/C(k,t)
    BigInt d = f.size();
    ensure(d * binomial(f.k(), t) == binomial(n, t), "steiner_verify: size identity failed");
    ensure(d * binomial(n - t, f.k() - t) == binomial(n, f.k()),
           "steiner_verify: counting identity failed");
    return true;
}

bool steiner_divisibility(int n, int k, int t) {
    require(t >= 0 && t <= k && k <= n, "steiner_divisibility: need t <= k <= n");
    for (int i = 0; i < t; ++i) {
        if (binomial(n - i, t - i) % binomial(k - i, t - i) != 0) return false;
    }
    return true;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace

SetFamily projective_plane(int q) {
    require(is_prime(q), "projective_plane: q must be prime");
    // normalized homogeneous triples: first nonzero coordinate is 1
    std::vector<std::array<int, 3>> pts;
    pts.push_back({0, 0, 1});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    int n = q * q + q + 1;
    ensure(static_cast<int>(pts.size()) == n, "projective_plane: point count");

    std::vector<KSet> lines;
    for (const auto& l : pts) { // lines use the same normalized triples
        std::vector<int> on;
        for (int i = 0; i < n; ++i) {
            const auto& p = pts[i];
            if ((l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0) on.push_back(i + 1);
        }
        ensure(static_cast<int>(on.size()) == q + 1, "projective_plane: line size");
        lines.emplace_back(std::move(on), n);
    }
    sort_by_colex(lines);
    SetFamily f(n, q + 1, std::move(lines));
    ensure(steiner_verify(f, 2), "projective_plane: not an S(2,q+1,n)");
    return f;
}

SetFamily star(int n, int k, const std::vector<int>& t_set) {
    require(n >= 1 && k >= 0 && k <= n, "star: need 0 <= k <= n");
    std::vector<int> core = t_set;
    std::sort(core.begin(), core.end());
    require(std::adjacent_find(core.begin(), core.end()) == core.end(),
            "star: t_set has duplicates");
    for (int e : core) require(e >= 1 && e <= n, "star: t_set element out of [1, n]");
    int t = static_cast<int>(core.size());
    require(t <= k, "star: need |t_set| <= k");

    std::vector<int> rest;
    for (int e = 1; e <= n; ++e)
        if (!std::binary_search(core.begin(), core.end(), e)) rest.push_back(e);

    std::vector<KSet> sets;
    for_each_combination(rest, k - t, [&](const std::vector<int>& b) {
        std::vector<int> e = core;
        e.insert(e.end(), b.begin(), b.end());
        std::sort(e.begin(), e.end());
        sets.emplace_back(std::move(e), n);
    });
    sort_by_colex(sets);
    SetFamily f(n, k, std::move(sets));
    ensure(BigInt(f.size()) == binomial(n - t, k - t), "star: size formula mismatch");
    return f;
}

SetFamily sts9() {
    // AG(2,3): point (i,j) -> 3i+j+1; lines y = ax+b plus verticals x = c
    std::vector<KSet> lines;
    auto id = [](int i, int j) { return 3 * i + j + 1; };
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            std::vector<int> e;
            for (int x = 0; x < 3; ++x) e.push_back(id(x, (a * x + b) % 3));
            std::sort(e.begin(), e.end());
            lines.emplace_back(std::move(e), 9);
        }
    }
    for (int c = 0; c < 3; ++c) {
        std::vector<int> e;
        for (int y = 0; y < 3; ++y) e.push_back(id(c, y));
        std::sort(e.begin(), e.end());
        lines.emplace_back(std::move(e), 9);
    }
    sort_by_colex(lines);
    SetFamily f(9, 3, std::move(lines));
    ensure(steiner_verify(f, 2), "sts9: not an S(2,3,9)");
    return f;
}

} // namespace jlab
