#pragma once

#include <vector>

#include "jlab/family.hpp"
#include "jlab/johnson.hpp"
#include "jlab/rational.hpp"
#include "jlab/spectra.hpp"

namespace jlab {

enum class Rel { LE, GE, EQ };

struct LinCon {
    std::vector<BigRat> a;
    Rel rel;
    BigRat b;
};

/// Exact-arithmetic LP. Variables default to x >= 0; free_var[j] lifts the
/// bound (internally split into a difference of nonnegatives).
struct RationalLP {
    int num_vars = 0;
    bool maximize = false;
    std::vector<BigRat> c;
    std::vector<LinCon> rows;
    std::vector<bool> free_var; // empty means all nonnegative

    int add_var(const BigRat& cost, bool is_free);
    void add_row(std::vector<BigRat> a, Rel rel, BigRat b);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    BigRat objective;        // in the user's orientation
    std::vector<BigRat> x;   // original variable space
    // Duals of the minimization form, one per original row: y.b equals the
    // minimized optimum; a maximized problem's duals refer to min(-c).
    std::vector<BigRat> y;
    std::uint64_t pivots = 0;
};

/// Two-phase primal simplex over rationals, Bland's rule (entering: lowest
/// index with negative reduced cost; leaving: lowest basic index among
/// minimum ratios). Deterministic; never cycles.
LPSolution solve_lp(const RationalLP& lp);

/// Certificate M = sum_s x_s A_s with x_s >= 1 for s outside L and s = k,
/// bound = largest eigenvalue. Any feasible certificate upper-bounds the
/// coclique number: t >= theta_max >= <M chi, chi>/|I| >= |I|.
struct RatioCertificate {
    JohnsonSpec spec;
    SchemeMatrix coeffs;
    BigRat bound;                   // LP optimum = max_j theta_j
    std::vector<BigRat> theta;      // eigenvalue per eigenspace j
    std::vector<int> strict_classes; // s with x_s > 1 in the returned optimum
};

/// min t s.t. sum_s x_s P[j][s] <= t for all j; x_s >= 1 for s not in L and
/// for s = k, x_s free on L. Needs 2k <= n (eigen table).
RatioCertificate ratio_lp_bound(const JohnsonSpec& spec);

/// alpha(J(n,k,L)) <= floor(bound) for any feasible certificate.
BigInt certificate_alpha_bound(const RatioCertificate& cert);

/// Re-solve with x_cls >= 1 + 1/C(n,k): can that class sit strictly above 1
/// without raising the bound?
struct StrictnessProbe {
    int cls;
    BigRat base_bound;
    BigRat probe_bound;
    bool achievable; // probe_bound == base_bound
};
StrictnessProbe strictness_probe_class(const JohnsonSpec& spec, int cls);
StrictnessProbe strictness_probe_class0(const JohnsonSpec& spec);

enum class RefinementVerdict { Consistent, Contradiction, Inconclusive };

struct WitnessVerdict {
    bool two_intersecting;  // no pair of members is disjoint
    bool contradiction;     // disjoint pair despite strictness at class 0
};

struct StrictnessReport {
    RefinementVerdict verdict;
    bool strict_at_class0;
    std::vector<WitnessVerdict> witnesses;
};

/// Valid only when cert.bound equals the exact coclique number (refused
/// otherwise): with strictness at class 0, every maximum coclique must be
/// 2-intersecting; witnesses are checked one by one.
StrictnessReport strictness_refinement(const RatioCertificate& cert,
                                       const std::vector<SetFamily>& max_cocliques);

} // namespace jlab
