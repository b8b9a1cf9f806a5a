#include "jlab/spectra.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "jlab/errors.hpp"

namespace jlab {

SchemeMatrix::SchemeMatrix(int n_, int k_) : n(n_), k(k_) {
    require(k > 0 && k < n, "scheme matrix: need 0 < k < n");
    coeffs.assign(static_cast<std::size_t>(k) + 1, BigRat(0));
}

SchemeMatrix::SchemeMatrix(int n_, int k_, std::vector<BigRat> c)
    : n(n_), k(k_), coeffs(std::move(c)) {
    require(k > 0 && k < n, "scheme matrix: need 0 < k < n");
    require(coeffs.size() == static_cast<std::size_t>(k) + 1,
            "scheme matrix: need one coefficient per intersection size in [0,k]");
}

BigInt class_size(int n, int k, int s) {
    require(s >= 0 && s <= k, "class_size: s out of range");
    return binomial(k, s) * binomial(n - k, k - s);
}

BigRat eberlein(int n, int k, int i, int j) {
    require(i >= 0 && i <= k && j >= 0 && j <= k, "eberlein: index out of range");
    BigInt v = 0;
    for (int h = 0; h <= i; ++h) {
        BigInt term = binomial(j, h) * binomial(k - j, i - h) * binomial(n - k - j, i - h);
        if (h % 2 == 0) v += term; else v -= term;
    }
    return BigRat(v);
}

namespace {

std::unique_ptr<EigenTable> build_eigen_table(int n, int k) {
    auto t = std::make_unique<EigenTable>();
    t->n = n;
    t->k = k;
    t->P.assign(static_cast<std::size_t>(k) + 1,
                std::vector<BigRat>(static_cast<std::size_t>(k) + 1));
    t->mult.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
    for (int j = 0; j <= k; ++j) {
        for (int s = 0; s <= k; ++s) {
            t->P[j][s] = eberlein(n, k, k - s, j);
        }
        t->mult[j] = binomial(n, j) - binomial(n, j - 1);
    }
    return t;
}

} // namespace

const EigenTable& eigen_table(int n, int k) {
    require(k > 0 && 2 * k <= n, "eigen_table: need 0 < k <= n - k");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<EigenTable>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_eigen_table(n, k)).first;
    }
    return *it->second;
}

std::vector<std::pair<BigRat, BigInt>> scheme_eigenvalues(const SchemeMatrix& m) {
    const EigenTable& t = eigen_table(m.n, m.k);
    std::vector<std::pair<BigRat, BigInt>> out;
    out.reserve(static_cast<std::size_t>(m.k) + 1);
    for (int j = 0; j <= m.k; ++j) {
        BigRat theta = 0;
        for (int s = 0; s <= m.k; ++s) theta += m.coeffs[s] * t.P[j][s];
        out.emplace_back(theta, t.mult[j]);
    }
    return out;
}

SpectrumN31 spectrum_j_n3_1(int n) {
    require(n >= 7, "spectrum_j_n3_1: need n >= 7");
    BigInt nn = n;
    SpectrumN31 sp;
    sp.lambda = {
        BigRat(3 * (nn - 3) * (nn - 4), 2),
        BigRat((nn - 4) * (nn - 9), 2),
        BigRat(-2 * nn + 11),
        BigRat(3),
    };
    sp.mult = {
        BigInt(1),
        binomial(n, 1) - 1,
        binomial(n, 2) - binomial(n, 1),
        binomial(n, 3) - binomial(n, 2),
    };
    ensure(sp.lambda[2] <= sp.lambda[1] && sp.lambda[2] <= sp.lambda[3],
           "spectrum_j_n3_1: lambda2 must be the smallest nontrivial eigenvalue");
    return sp;
}

SchemeMatrix adjacency_matrix(const JohnsonSpec& spec) {
    SchemeMatrix m(spec.n(), spec.k());
    for (int l : spec.L()) m.coeffs[static_cast<std::size_t>(l)] = 1;
    return m;
}

} // namespace jlab
