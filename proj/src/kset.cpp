#include "jlab/kset.hpp"

namespace jlab {

BigInt binomial(long long n, long long k) {
    require(n >= 0, "binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

std::uint64_t binomial_u64(long long n, long long k) {
    require(n >= 0, "binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        // partial products C(n-k+i, i) are themselves binomials, so the
        // division is exact and intermediates never exceed the result
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        ensure(r <= std::numeric_limits<std::uint64_t>::max(), "binomial_u64: overflow");
    }
    return static_cast<std::uint64_t>(r);
}

KSet::KSet(std::vector<int> elements, int ground_size)
    : elems_(std::move(elements)), n_(ground_size) {
    require(n_ >= 0, "KSet: ground size must be non-negative");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        require(elems_[i] >= 1 && elems_[i] <= n_, "KSet: element out of [1, n]");
        require(i == 0 || elems_[i - 1] < elems_[i], "KSet: elements must be strictly increasing");
    }
    if (has_mask())
        for (int e : elems_) mask_.set(e);
}

int intersection_size(const KSet& a, const KSet& b) {
    require(a.n() == b.n(), "intersection_size: mismatched ground sets");
    if (a.has_mask()) return a.mask().intersect_count(b.mask());
    const auto& x = a.elements();
    const auto& y = b.elements();
    int cnt = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] < y[j]) ++i;
        else if (x[i] > y[j]) ++j;
        else { ++cnt; ++i; ++j; }
    }
    return cnt;
}

std::uint64_t rank_colex(const KSet& s) {
    std::uint64_t r = 0;
    const auto& e = s.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        r += binomial_u64(e[i] - 1, static_cast<long long>(i) + 1);
    return r;
}

KSet unrank_colex(std::uint64_t rank, int n, int k) {
    require(k >= 0 && k <= n, "unrank_colex: need 0 <= k <= n");
    require(BigInt(rank) < binomial(n, k), "unrank_colex: rank out of range");
    std::vector<int> elems(k);
    std::uint64_t r = rank;
    int hi = n;
    for (int i = k; i >= 1; --i) {
        // largest e with C(e-1, i) <= r
        int e = i; // C(i-1, i) = 0 <= r always
        for (int cand = hi; cand > i; --cand) {
            if (binomial_u64(cand - 1, i) <= r) { e = cand; break; }
        }
        elems[i - 1] = e;
        r -= binomial_u64(e - 1, i);
        hi = e - 1;
    }
    return KSet(std::move(elems), n);
}

std::vector<KSet> all_ksets(int n, int k) {
    std::uint64_t total = binomial_u64(n, k);
    std::vector<KSet> out;
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) out.push_back(unrank_colex(r, n, k));
    return out;
}

} // namespace jlab
