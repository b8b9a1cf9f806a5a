#include "jlab/johnson.hpp"

#include <algorithm>

#include "jlab/errors.hpp"

namespace jlab {

JohnsonSpec::JohnsonSpec(int n, int k, std::vector<int> L)
    : n_(n), k_(k), L_(std::move(L)) {
    require(k_ > 0 && k_ < n_, "johnson: need 0 < k < n");
    std::sort(L_.begin(), L_.end());
    L_.erase(std::unique(L_.begin(), L_.end()), L_.end());
    for (int l : L_) {
        require(l >= 0 && l <= k_ - 1, "johnson: L must be a subset of [0, k-1]");
    }
}

bool JohnsonSpec::in_L(int s) const {
    return std::binary_search(L_.begin(), L_.end(), s);
}

BigInt JohnsonSpec::vertex_count() const {
    return binomial(n_, k_);
}

JohnsonSpec JohnsonSpec::complement() const {
    std::vector<int> comp;
    for (int s = 0; s <= k_ - 1; ++s) {
        if (!in_L(s)) comp.push_back(s);
    }
    return JohnsonSpec(n_, k_, std::move(comp));
}

bool adjacent(const JohnsonSpec& spec, const KSet& a, const KSet& b) {
    require(a.n() == spec.n() && b.n() == spec.n() && a.k() == spec.k() && b.k() == spec.k(),
            "adjacent: vertex does not belong to this graph");
    int s = intersection_size(a, b);
    require(s != spec.k(), "adjacent: a and b must be distinct");
    return spec.in_L(s);
}

BigInt degree(const JohnsonSpec& spec) {
    BigInt d = 0;
    for (int l : spec.L()) {
        d += binomial(spec.k(), l) * binomial(spec.n() - spec.k(), spec.k() - l);
    }
    return d;
}

VertexSubset::VertexSubset(JohnsonSpec spec, std::vector<std::uint64_t> ranks)
    : spec_(std::move(spec)), ranks_(std::move(ranks)) {
    std::sort(ranks_.begin(), ranks_.end());
    require(std::adjacent_find(ranks_.begin(), ranks_.end()) == ranks_.end(),
            "vertex subset: duplicate rank");
    if (!ranks_.empty()) {
        BigInt v = spec_.vertex_count();
        require(BigInt(ranks_.back()) < v, "vertex subset: rank out of range");
    }
}

VertexSubset::VertexSubset(JohnsonSpec spec, const SetFamily& f)
    : spec_(std::move(spec)) {
    require(f.n() == spec_.n() && f.k() == spec_.k(),
            "vertex subset: family does not match graph spec");
    ranks_ = f.ranks();
}

SetFamily VertexSubset::to_family() const {
    std::vector<KSet> sets;
    sets.reserve(ranks_.size());
    for (auto r : ranks_) sets.push_back(unrank_colex(r, spec_.n(), spec_.k()));
    return SetFamily(spec_.n(), spec_.k(), std::move(sets));
}

BigInt induced_edges(const VertexSubset& u) {
    const auto& spec = u.spec();
    std::vector<KSet> sets;
    sets.reserve(u.size());
    for (auto r : u.ranks()) sets.push_back(unrank_colex(r, spec.n(), spec.k()));
    BigInt e = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (spec.in_L(intersection_size(sets[i], sets[j]))) ++e;
        }
    }
    return e;
}

bool is_clique(const SetFamily& f, const JohnsonSpec& spec) {
    require(f.n() == spec.n() && f.k() == spec.k(), "is_clique: family/spec mismatch");
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (!spec.in_L(intersection_size(f[i], f[j]))) return false;
        }
    }
    return true;
}

bool is_coclique(const SetFamily& f, const JohnsonSpec& spec) {
    require(f.n() == spec.n() && f.k() == spec.k(), "is_coclique: family/spec mismatch");
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (spec.in_L(intersection_size(f[i], f[j]))) return false;
        }
    }
    return true;
}

} // namespace jlab
