#pragma once

#include <string>

#include "jlab/spectra.hpp"

namespace jlab {

// Diagnostic oracle only: builds the scheme matrix densely from pairwise
// intersection sizes, tridiagonalizes in floating point, and counts
// eigenvalues inside the tol window around each exact value by Sylvester
// inertia. The exact production path never touches this. cluster_gap is the
// minimum separation demanded between distinct exact values.
struct DenseSpectrumCheck {
    bool match = false;
    int clusters = 0;
    std::string detail; // first mismatch, empty when match
};

DenseSpectrumCheck dense_spectrum_check(const SchemeMatrix& m, double tol = 1e-6,
                                        double cluster_gap = 1e-3);

} // namespace jlab
