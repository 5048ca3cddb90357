#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecclab/equitable.hpp"
#include "ecclab/spectral.hpp"

namespace ecclab {

// Closed-form eccentricity spectra of complete multipartite graphs and of
// K_{m,n} minus one edge. The deleted edge is always the canonical one
// between the first vertices of the two parts (vertex 0 and vertex m).

// Monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0 attached to K_{m,n}-e.
struct QuarticSpec {
    int m = 0, n = 0;
    double c3 = 0, c2 = 0, c1 = 0, c0 = 0;

    double eval(double x) const { return (((x + c3) * x + c2) * x + c1) * x + c0; }
    double deriv(double x) const { return ((4 * x + 3 * c3) * x + 2 * c2) * x + c1; }
};

// Roots sorted descending; always real (the quartic is the characteristic
// polynomial of a matrix similar to a symmetric one).
struct QuarticRoots {
    std::array<double, 4> roots{};
};

// Spectrum given as -2 with a multiplicity plus a short list of
// distinguished eigenvalues.
struct EpsSpectrumClosedForm {
    int minus_two_multiplicity = 0;
    std::vector<double> distinguished;

    int total_count() const {
        return minus_two_multiplicity + static_cast<int>(distinguished.size());
    }
    // Sum of absolute values over the full spectrum.
    double energy() const;
    // All eigenvalues expanded and sorted descending.
    std::vector<double> values() const;
};

// Sign pattern and localization record for the quartic roots.
struct RootSignPattern {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool alpha4_in_minus5_minus4 = false;
    bool alpha3_in_minus1_0 = false;
    std::string lemma_case;  // which case analysis covered (m,n)
};

// eps-spectrum of K_{n1,...,nk}: -2 with multiplicity (sum n_i - k) plus
// 2(n_i - 1) for each part. Requires k >= 2 and every n_i >= 2.
EpsSpectrumClosedForm multipartite_eps_spectrum(const std::vector<int>& sizes);

// Integer eigenvectors for eigenvalue -2 of eps(K_{m,n}-e): (m-2)+(n-2)
// difference vectors inside each part, skipping the deleted-edge endpoints.
std::vector<std::vector<std::int64_t>> lemma1_eigenvectors(int m, int n);

// 4x4 quotient matrix of eps(K_{m,n}-e) under the partition
// {v1}, {v2..vm}, {u1}, {u2..un}; block sizes (1, m-1, 1, n-1).
QuotientMatrix quotient_Qpi(int m, int n);

QuarticSpec quartic_coeffs(int m, int n);

// Roots via the symmetrized quotient eigenvalues, polished by one Newton
// step. NumericalError if a residual exceeds 1e-6 * (1 + |c0|).
QuarticRoots quartic_roots(const QuarticSpec& spec);

// Counts positive/negative/zero roots and the interval localizations. For
// (m,n) inside a lemma's range a contradiction throws VerificationError.
RootSignPattern classify_root_signs(const QuarticRoots& roots, int m, int n);

// Full eps-spectrum of K_{m,n}-e: -2 with multiplicity m+n-4 plus the four
// quartic roots.
EpsSpectrumClosedForm kmn_minus_e_spectrum(int m, int n);

// The paper's claimed block decomposition of eps(K_{n1..nk}-e) for the edge
// between parts part_i and part_j (1-based): top-left eps(K_{ni,nj}-e), rest
// the direct sum of 2(J-I) blocks of the remaining parts. Returned as the
// pair (top-left, B); it is a claim, not necessarily the true eps-matrix.
std::pair<DenseSymMatrix, DenseSymMatrix> main3_block_form(const std::vector<int>& sizes,
                                                           int part_i, int part_j);

// Absolute residuals of the four Vieta identities for spec's coefficients.
std::array<double, 4> vieta_residuals(const QuarticRoots& roots, const QuarticSpec& spec);

}  // namespace ecclab
