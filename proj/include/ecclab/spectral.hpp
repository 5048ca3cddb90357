#pragma once

#include <vector>

#include "ecclab/graph.hpp"

namespace ecclab {

// Dense real symmetric matrix; set() writes both (i,j) and (j,i) so the
// stored matrix is symmetric by construction.
class DenseSymMatrix {
public:
    DenseSymMatrix() = default;
    explicit DenseSymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int dim() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    double trace() const;
    double frobenius_norm() const;
    const std::vector<double>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

// Real eigenvalues sorted descending. cluster_tol is the default absolute
// tolerance for multiplicity grouping.
struct Spectrum {
    std::vector<double> values;
    double cluster_tol = 1e-6;
};

DenseSymMatrix adjacency_matrix(const Graph& g);

// Both require a connected graph (ConnectivityError otherwise).
DenseSymMatrix distance_matrix(const Graph& g);

// Entry (u,v) = d(u,v) if d(u,v) == min(e(u), e(v)), else 0.
DenseSymMatrix eccentricity_matrix(const Graph& g);

// Cyclic Jacobi rotations; converged when the off-diagonal Frobenius norm
// drops below 1e-12 * ||m||_F, capped at 100 sweeps (NumericalError past
// the cap, reporting the residual).
Spectrum jacobi_eigen(const DenseSymMatrix& m);

// Sum of absolute eigenvalues.
double energy(const Spectrum& s);

// Number of eigenvalues within tol of target.
int multiplicity(const Spectrum& s, double target, double tol);

inline int multiplicity(const Spectrum& s, double target) {
    return multiplicity(s, target, s.cluster_tol);
}

// True iff the graph on the nonzero pattern of m is connected.
bool support_is_irreducible(const DenseSymMatrix& m);

}  // namespace ecclab
