#pragma once

#include <utility>
#include <vector>

#include "jlab/johnson.hpp"
#include "jlab/rational.hpp"

namespace jlab {

/// M = sum_s coeffs[s] * A_s in the Bose-Mesner algebra of the Johnson
/// scheme on k-subsets of [n]; A_s is the 0/1 matrix of pairs with
/// intersection size s, A_k the identity.
struct SchemeMatrix {
    int n, k;
    std::vector<BigRat> coeffs; // indexed by intersection size s in [0,k]

    SchemeMatrix(int n_, int k_);
    SchemeMatrix(int n_, int k_, std::vector<BigRat> c);
};

/// Number of k-sets meeting a fixed k-set in exactly s elements.
BigInt class_size(int n, int k, int s);

/// Eberlein polynomial E_i(j) for the Johnson scheme on (n,k).
/// Class index i corresponds to intersection size s = k - i.
BigRat eberlein(int n, int k, int i, int j);

struct EigenTable {
    int n, k;
    // P[j][s]: eigenvalue of A_s on eigenspace j, for j,s in [0,k]
    std::vector<std::vector<BigRat>> P;
    std::vector<BigInt> mult; // m_j = C(n,j) - C(n,j-1)
};

/// Cached per (n,k); requires 0 < k <= n - k.
const EigenTable& eigen_table(int n, int k);

/// Eigenvalue of M on eigenspace j is theta_j = sum_s coeffs[s]*P[j][s].
/// Returns (theta_j, m_j) for j = 0..k.
std::vector<std::pair<BigRat, BigInt>> scheme_eigenvalues(const SchemeMatrix& m);

struct SpectrumN31 {
    // adjacency eigenvalues of J(n,3,{1}) with multiplicities, j = 0..3
    std::vector<BigRat> lambda;
    std::vector<BigInt> mult;
};

/// Closed forms, n >= 7: lambda0 = 3(n-3)(n-4)/2, lambda1 = (n-4)(n-9)/2,
/// lambda2 = -2n+11, lambda3 = 3. The smallest of lambda1..3 is lambda2.
SpectrumN31 spectrum_j_n3_1(int n);

/// Adjacency of J(n,k,L) as a scheme matrix: coeff 1 on s in L, else 0.
SchemeMatrix adjacency_matrix(const JohnsonSpec& spec);

} // namespace jlab
