#pragma once

#include <vector>

#include "ecclab/spectral.hpp"

namespace ecclab {

// Disjoint nonempty index blocks covering 0..n-1.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    // Throws DomainError unless the blocks partition 0..n-1.
    void validate(int n) const;
};

// Block row sums of a matrix under an equitable partition. Generally not
// symmetric; block_sizes are kept so the spectrum can be computed through
// the diagonal similarity S^{1/2} Q S^{-1/2} with S = diag(block sizes).
struct QuotientMatrix {
    int n = 0;
    std::vector<double> q;  // row-major n*n
    std::vector<int> block_sizes;

    double at(int i, int j) const { return q[static_cast<std::size_t>(i) * n + j]; }
};

// True iff every block of mat has constant row sums under p. Exact
// comparison for integral matrices, tolerance 1e-9 otherwise.
bool is_equitable(const DenseSymMatrix& mat, const Partition& p);

// Block row-sum matrix; DomainError if p is not equitable for mat.
QuotientMatrix quotient(const DenseSymMatrix& mat, const Partition& p);

// Coarsest equitable partition by row-sum refinement to a fixed point.
// Blocks come out sorted by their smallest vertex index.
Partition coarsest_equitable(const DenseSymMatrix& mat);

// Eigenvalues of q (descending), via the symmetrized similarity. Requires q
// to come from an equitable partition of a symmetric matrix.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

// Every eigenvalue of q matches a distinct eigenvalue of mat within tol.
bool spectrum_containment(const DenseSymMatrix& mat, const QuotientMatrix& q, double tol);

}  // namespace ecclab
