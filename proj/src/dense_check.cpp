#include "jlab/dense_check.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "jlab/errors.hpp"
#include "jlab/kset.hpp"

namespace jlab {

namespace {

// Eigenvalues of the symmetric tridiagonal (diag, sub) strictly below x:
// Sylvester inertia via the LDL^T pivot recurrence. No iteration, no
// convergence failure mode, unlike QR on exactly degenerate spectra.
std::int64_t count_below(const std::vector<double>& diag, const std::vector<double>& sub,
                         double x) {
    std::int64_t cnt = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double carry = i == 0 ? 0.0 : sub[i - 1] * sub[i - 1] / d;
        d = diag[i] - x - carry;
        if (std::abs(d) < 1e-300) d = -1e-300; // exact zero pivot: count as crossing
        if (d < 0.0) ++cnt;
    }
    return cnt;
}

} // namespace

DenseSpectrumCheck dense_spectrum_check(const SchemeMatrix& m, double tol,
                                        double cluster_gap) {
    BigInt nv_big = binomial(m.n, m.k);
    require(nv_big <= 4000, "dense check: matrix too large");
    int nv = static_cast<int>(to_int64(nv_big));

    std::vector<double> cd(static_cast<std::size_t>(m.k) + 1);
    for (int s = 0; s <= m.k; ++s) cd[s] = m.coeffs[s].convert_to<double>();

    auto sets = all_ksets(m.n, m.k);
    Eigen::MatrixXd a(nv, nv);
    for (int i = 0; i < nv; ++i) {
        for (int j = i; j < nv; ++j) {
            double v = cd[intersection_size(sets[i], sets[j])];
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    Eigen::Tridiagonalization<Eigen::MatrixXd> tri(a);
    Eigen::VectorXd dv = tri.diagonal();
    Eigen::VectorXd sv = tri.subDiagonal();
    std::vector<double> diag(dv.data(), dv.data() + dv.size());
    std::vector<double> sub(sv.data(), sv.data() + sv.size());

    // exact side: collapse equal thetas, then sort ascending
    auto thetas = scheme_eigenvalues(m);
    std::vector<std::pair<BigRat, BigInt>> exact;
    for (auto& [th, mu] : thetas) {
        bool found = false;
        for (auto& [t2, m2] : exact) {
            if (t2 == th) { m2 += mu; found = true; break; }
        }
        if (!found) exact.emplace_back(th, mu);
    }
    std::sort(exact.begin(), exact.end(),
              [](const auto& a2, const auto& b2) { return a2.first < b2.first; });

    DenseSpectrumCheck out;
    out.clusters = static_cast<int>(exact.size());

    // distinct exact values must be separated enough that tol windows around
    // them cannot blur together
    for (std::size_t i = 0; i + 1 < exact.size(); ++i) {
        double lo = exact[i].first.convert_to<double>();
        double hi = exact[i + 1].first.convert_to<double>();
        if (hi - lo <= cluster_gap * (1.0 + std::max(std::abs(lo), std::abs(hi)))) {
            std::ostringstream os;
            os << "exact values " << rat_to_string(exact[i].first) << " and "
               << rat_to_string(exact[i + 1].first) << " too close to separate";
            out.detail = os.str();
            return out;
        }
    }

    // count numeric eigenvalues inside the tol window around each exact value
    std::int64_t covered = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        double t = exact[i].first.convert_to<double>();
        double w = tol * (1.0 + std::abs(t));
        std::int64_t cnt = count_below(diag, sub, t + w) - count_below(diag, sub, t - w);
        if (BigInt(cnt) != exact[i].second) {
            std::ostringstream os;
            os << "multiplicity mismatch at " << rat_to_string(exact[i].first) << ": dense "
               << cnt << " vs exact " << exact[i].second.str();
            out.detail = os.str();
            return out;
        }
        covered += cnt;
    }
    if (covered != nv) {
        std::ostringstream os;
        os << "only " << covered << " of " << nv << " eigenvalues lie in the exact windows";
        out.detail = os.str();
        return out;
    }
    out.match = true;
    return out;
}

} // namespace jlab
