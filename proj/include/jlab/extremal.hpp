#pragma once

#include <vector>

#include "jlab/family.hpp"
#include "jlab/rational.hpp"

namespace jlab {

/// Parameters of the Frankl family F_{n,k,t,r} = { S : |S ∩ [t+2r]| >= t+r }.
struct FranklParams {
    int n, k, t, r;
    FranklParams(int n_, int k_, int t_, int r_);
};

/// Materialized F_{n,k,t,r}, members in colex order; always t-intersecting.
SetFamily frankl_family(const FranklParams& p);

/// |F_{n,k,t,r}| = sum_{j >= t+r} C(t+2r, j) * C(n-t-2r, k-j), no enumeration.
BigInt frankl_size(const FranklParams& p);

/// All r in [0, k-t] whose interval
///   (k-t+1)(2 + (t-1)/(r+1)) <= n <= (k-t+1)(2 + (t-1)/r)
/// contains n, with (t-1)/0 = +infinity. Empty when n < 2k-t+1 (the
/// intervals tile [2k-t+1, inf) only). Boundary n yields two values.
std::vector<int> ak_optimal_r(int n, int k, int t);

/// prod_{l in L} (n-l)/(k-l), exact. L non-empty subset of [0,k-1], n >= k.
BigRat def_bound(int n, int k, const std::vector<int>& L);

/// The bound above is only a theorem for n large in terms of k; flag small n.
/// Threshold n < 2^k * k is a reporting convention, not a sharp constant.
bool def_asymptotic_only(int n, int k);

/// Divisibility chain (l2-l1) | (l3-l2) | ... | (k-lr); vacuous for r = 1.
bool def_chain_holds(int k, const std::vector<int>& L);

/// k^2 * 2^(r-1) * n^(r-1), r >= 1.
BigInt def_threshold(int n, int k, int r);

/// True iff every t-subset of [n] is covered by exactly one member.
/// On success also checks |f| = C(n,t)/C(k,t) and |f|*C(n-t,k-t) = C(n,k).
bool steiner_verify(const SetFamily& f, int t);

/// C(k-i,t-i) | C(n-i,t-i) for all i = 0..t-1.
bool steiner_divisibility(int n, int k, int t);

/// Lines of PG(2,q) for prime q: q^2+q+1 many (q+1)-sets over [q^2+q+1],
/// pairwise intersecting in exactly one point; a Steiner system S(2,q+1,n).
SetFamily projective_plane(int q);

/// All k-sets of [n] containing t_set; size C(n-|t_set|, k-|t_set|).
SetFamily star(int n, int k, const std::vector<int>& t_set);

/// The 12 lines of AG(2,3) over [9], point (i,j) |-> 3i+j+1; an S(2,3,9).
SetFamily sts9();

} // namespace jlab
