#include "jlab/lp.hpp"

#include <algorithm>

#include "jlab/errors.hpp"
#include "jlab/kset.hpp"

namespace jlab {

int RationalLP::add_var(const BigRat& cost, bool is_free) {
    c.push_back(cost);
    free_var.resize(c.size(), false);
    free_var.back() = is_free;
    return num_vars++;
}

void RationalLP::add_row(std::vector<BigRat> a, Rel rel, BigRat b) {
    require(static_cast<int>(a.size()) == num_vars, "lp: row width != num_vars");
    rows.push_back(LinCon{std::move(a), rel, std::move(b)});
}

namespace {

// Dense rational tableau for the equality form min c.x, Ax = b, x >= 0,
// b >= 0. Columns: split originals, slacks, artificials (artificials are
// kept through phase 2 for dual extraction but banned from entering).
struct Tableau {
    int m = 0, ncols = 0;
    std::vector<std::vector<BigRat>> A; // m rows
    std::vector<BigRat> b;              // m, kept >= 0
    std::vector<BigRat> cost;           // phase-2 costs per column
    std::vector<int> basis;             // column basic in each row
    std::vector<bool> banned;           // artificial columns
    std::uint64_t pivots = 0;

    void pivot(int r, int e) {
        BigRat p = A[r][e];
        ensure(p != 0, "simplex: zero pivot");
        for (int j = 0; j < ncols; ++j) A[r][j] /= p;
        b[r] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || A[i][e] == 0) continue;
            BigRat f = A[i][e];
            for (int j = 0; j < ncols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        basis[r] = e;
        ++pivots;
    }

    // Bland: entering = lowest-index admissible column with negative reduced
    // cost; leaving = min ratio, ties by lowest basic column index.
    // Returns Optimal or Unbounded.
    LPStatus run(const std::vector<BigRat>& col_cost) {
        while (true) {
            ensure(pivots < 2'000'000, "simplex: pivot cap hit");
            std::vector<BigRat> y(m); // y_i = cost of basis in row i
            for (int i = 0; i < m; ++i) y[i] = col_cost[basis[i]];
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (banned[j]) continue;
                BigRat r = col_cost[j];
                for (int i = 0; i < m; ++i) {
                    if (A[i][j] != 0) r -= y[i] * A[i][j];
                }
                if (r < 0) { enter = j; break; }
            }
            if (enter < 0) return LPStatus::Optimal;
            int leave = -1;
            BigRat best_ratio;
            for (int i = 0; i < m; ++i) {
                if (A[i][enter] <= 0) continue;
                BigRat ratio = b[i] / A[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return LPStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

LPSolution solve_lp(const RationalLP& lp) {
    require(lp.num_vars >= 1, "lp: no variables");
    require(static_cast<int>(lp.c.size()) == lp.num_vars, "lp: objective width mismatch");
    std::vector<bool> free_var = lp.free_var;
    free_var.resize(lp.num_vars, false);

    // column layout: each var -> (+) column, free vars also a (-) column
    struct ColRef { int var; int sign; };
    std::vector<ColRef> cols;
    for (int j = 0; j < lp.num_vars; ++j) {
        cols.push_back({j, +1});
        if (free_var[j]) cols.push_back({j, -1});
    }
    int nstruct = static_cast<int>(cols.size());
    int m = static_cast<int>(lp.rows.size());

    Tableau t;
    t.m = m;
    // normalized rows: flip signs so b >= 0 (remember flips for duals)
    std::vector<int> row_sign(m, 1);
    std::vector<std::vector<BigRat>> a(m, std::vector<BigRat>(nstruct));
    std::vector<Rel> rel(m);
    t.b.resize(m);
    for (int i = 0; i < m; ++i) {
        const LinCon& rw = lp.rows[i];
        require(static_cast<int>(rw.a.size()) == lp.num_vars, "lp: row width mismatch");
        rel[i] = rw.rel;
        BigRat bb = rw.b;
        int s = 1;
        if (bb < 0) {
            s = -1;
            bb = -bb;
            if (rw.rel == Rel::LE) rel[i] = Rel::GE;
            else if (rw.rel == Rel::GE) rel[i] = Rel::LE;
        }
        row_sign[i] = s;
        t.b[i] = bb;
        for (int j = 0; j < nstruct; ++j) {
            a[i][j] = rw.a[cols[j].var] * cols[j].sign * s;
        }
    }

    // columns: structurals, then one slack per LE/GE row, then artificials
    int nslack = 0;
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Rel::EQ) slack_col[i] = nstruct + nslack++;
    }
    int nart = 0;
    std::vector<int> art_col(m, -1);
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Rel::LE) art_col[i] = nstruct + nslack + nart++;
    }
    t.ncols = nstruct + nslack + nart;
    t.A.assign(m, std::vector<BigRat>(t.ncols));
    t.banned.assign(t.ncols, false);
    t.basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nstruct; ++j) t.A[i][j] = a[i][j];
        if (slack_col[i] >= 0) t.A[i][slack_col[i]] = (rel[i] == Rel::LE) ? 1 : -1;
        if (art_col[i] >= 0) t.A[i][art_col[i]] = 1;
        t.basis[i] = (rel[i] == Rel::LE) ? slack_col[i] : art_col[i];
    }

    LPSolution sol;

    // phase 1: minimize the artificial sum
    if (nart > 0) {
        std::vector<BigRat> pc(t.ncols, BigRat(0));
        for (int i = 0; i < m; ++i) {
            if (art_col[i] >= 0) pc[art_col[i]] = 1;
        }
        LPStatus st = t.run(pc);
        ensure(st == LPStatus::Optimal, "simplex: phase 1 cannot be unbounded");
        BigRat infeas = 0;
        for (int i = 0; i < m; ++i) {
            if (art_col[i] >= 0 && t.basis[i] == art_col[i]) infeas += t.b[i];
        }
        if (infeas != 0) {
            sol.status = LPStatus::Infeasible;
            sol.pivots = t.pivots;
            return sol;
        }
        // push any degenerate artificials out of the basis
        for (int i = 0; i < m; ++i) {
            int bcol = t.basis[i];
            bool is_art = bcol >= nstruct + nslack;
            if (!is_art) continue;
            int repl = -1;
            for (int j = 0; j < nstruct + nslack; ++j) {
                if (t.A[i][j] != 0) { repl = j; break; }
            }
            if (repl >= 0) t.pivot(i, repl);
            // a fully zero row is redundant; its artificial stays basic at 0
        }
        for (int j = nstruct + nslack; j < t.ncols; ++j) t.banned[j] = true;
    }

    // phase 2
    std::vector<BigRat> cost(t.ncols, BigRat(0));
    for (int j = 0; j < nstruct; ++j) {
        BigRat cj = lp.c[cols[j].var] * cols[j].sign;
        cost[j] = lp.maximize ? -cj : cj;
    }
    LPStatus st = t.run(cost);
    sol.pivots = t.pivots;
    if (st == LPStatus::Unbounded) {
        sol.status = LPStatus::Unbounded;
        return sol;
    }

    // primal in original space
    std::vector<BigRat> colval(t.ncols, BigRat(0));
    for (int i = 0; i < m; ++i) colval[t.basis[i]] = t.b[i];
    sol.x.assign(lp.num_vars, BigRat(0));
    for (int j = 0; j < nstruct; ++j) sol.x[cols[j].var] += colval[j] * cols[j].sign;
    BigRat obj = 0;
    for (int j = 0; j < lp.num_vars; ++j) obj += lp.c[j] * sol.x[j];
    sol.objective = obj;

    // duals of the min form from the initial identity columns: the reduced
    // cost there is c_col - y_i, and c_col = 0 for slacks and artificials
    std::vector<BigRat> ybasis(m);
    for (int i = 0; i < m; ++i) ybasis[i] = cost[t.basis[i]];
    sol.y.assign(m, BigRat(0));
    for (int i = 0; i < m; ++i) {
        int idcol = (rel[i] == Rel::LE) ? slack_col[i] : art_col[i];
        BigRat red = cost[idcol];
        for (int r = 0; r < m; ++r) {
            if (t.A[r][idcol] != 0) red -= ybasis[r] * t.A[r][idcol];
        }
        sol.y[i] = -red * row_sign[i];
    }

    sol.status = LPStatus::Optimal;
    return sol;
}

RatioCertificate ratio_lp_bound(const JohnsonSpec& spec) {
    int k = spec.k();
    const EigenTable& tab = eigen_table(spec.n(), k);

    RationalLP lp;
    for (int s = 0; s <= k; ++s) lp.add_var(BigRat(0), /*is_free=*/true); // x_s
    int tv = lp.add_var(BigRat(1), /*is_free=*/true);                     // t
    for (int j = 0; j <= k; ++j) {
        std::vector<BigRat> row(lp.num_vars, BigRat(0));
        for (int s = 0; s <= k; ++s) row[s] = tab.P[j][s];
        row[tv] = -1;
        lp.add_row(std::move(row), Rel::LE, BigRat(0));
    }
    for (int s = 0; s <= k; ++s) {
        if (s != k && spec.in_L(s)) continue; // edge classes stay free
        std::vector<BigRat> row(lp.num_vars, BigRat(0));
        row[s] = 1;
        lp.add_row(std::move(row), Rel::GE, BigRat(1));
    }

    LPSolution sol = solve_lp(lp);
    ensure(sol.status == LPStatus::Optimal, "ratio_lp_bound: LP must be solvable");

    RatioCertificate cert{spec, SchemeMatrix(spec.n(), k), sol.x[tv], {}, {}};
    for (int s = 0; s <= k; ++s) cert.coeffs.coeffs[s] = sol.x[s];
    auto thetas = scheme_eigenvalues(cert.coeffs);
    BigRat maxt = thetas[0].first;
    for (auto& [th, mu] : thetas) {
        (void)mu;
        cert.theta.push_back(th);
        if (th > maxt) maxt = th;
    }
    ensure(maxt == cert.bound, "ratio_lp_bound: optimum must equal max eigenvalue");
    for (int s = 0; s <= k; ++s) {
        if (cert.coeffs.coeffs[s] > 1) cert.strict_classes.push_back(s);
    }
    return cert;
}

BigInt certificate_alpha_bound(const RatioCertificate& cert) {
    return floor_rat(cert.bound);
}

StrictnessProbe strictness_probe_class(const JohnsonSpec& spec, int cls) {
    int k = spec.k();
    require(0 <= cls && cls <= k, "strictness probe: class out of range");
    RatioCertificate base = ratio_lp_bound(spec);

    const EigenTable& tab = eigen_table(spec.n(), k);
    RationalLP lp;
    for (int s = 0; s <= k; ++s) lp.add_var(BigRat(0), true);
    int tv = lp.add_var(BigRat(1), true);
    for (int j = 0; j <= k; ++j) {
        std::vector<BigRat> row(lp.num_vars, BigRat(0));
        for (int s = 0; s <= k; ++s) row[s] = tab.P[j][s];
        row[tv] = -1;
        lp.add_row(std::move(row), Rel::LE, BigRat(0));
    }
    BigRat eps = BigRat(1) / BigRat(binomial(spec.n(), k));
    for (int s = 0; s <= k; ++s) {
        bool constrained = (s == k) || !spec.in_L(s) || s == cls;
        if (!constrained) continue;
        std::vector<BigRat> row(lp.num_vars, BigRat(0));
        row[s] = 1;
        lp.add_row(std::move(row), Rel::GE, (s == cls) ? BigRat(1) + eps : BigRat(1));
    }
    LPSolution sol = solve_lp(lp);
    ensure(sol.status == LPStatus::Optimal, "strictness probe: LP must be solvable");
    return StrictnessProbe{cls, base.bound, sol.x[tv], sol.x[tv] == base.bound};
}

StrictnessProbe strictness_probe_class0(const JohnsonSpec& spec) {
    require(!spec.in_L(0), "strictness probe: class 0 must be a non-edge class");
    return strictness_probe_class(spec, 0);
}

StrictnessReport strictness_refinement(const RatioCertificate& cert,
                                       const std::vector<SetFamily>& max_cocliques) {
    require(!max_cocliques.empty(), "strictness refinement: no witnesses");
    BigInt alpha = max_cocliques.front().size();
    for (const auto& w : max_cocliques) {
        require(BigInt(w.size()) == alpha, "strictness refinement: witness sizes differ");
        require(w.n() == cert.spec.n() && w.k() == cert.spec.k(),
                "strictness refinement: witness/spec mismatch");
    }
    require(cert.bound == BigRat(alpha),
            "strictness refinement: only valid when the LP bound is attained");

    bool strict0 = std::find(cert.strict_classes.begin(), cert.strict_classes.end(), 0) !=
                   cert.strict_classes.end();
    if (!strict0) strict0 = strictness_probe_class0(cert.spec).achievable;

    StrictnessReport rep;
    rep.strict_at_class0 = strict0;
    if (!strict0) {
        rep.verdict = RefinementVerdict::Inconclusive;
        return rep;
    }
    bool any_contradiction = false;
    for (const auto& w : max_cocliques) {
        bool two_int = true;
        for (std::size_t i = 0; i < w.size() && two_int; ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (intersection_size(w[i], w[j]) == 0) { two_int = false; break; }
            }
        }
        rep.witnesses.push_back(WitnessVerdict{two_int, !two_int});
        if (!two_int) any_contradiction = true;
    }
    rep.verdict = any_contradiction ? RefinementVerdict::Contradiction
                                    : RefinementVerdict::Consistent;
    return rep;
}

} // namespace jlab
