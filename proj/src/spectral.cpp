#include "ecclab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace ecclab {

double DenseSymMatrix::trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double DenseSymMatrix::frobenius_norm() const {
    double s = 0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

DenseSymMatrix adjacency_matrix(const Graph& g) {
    DenseSymMatrix m(g.order());
    for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
    return m;
}

DenseSymMatrix distance_matrix(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    DenseSymMatrix m(d.n);
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v) m.set(u, v, d.at(u, v));
    return m;
}

DenseSymMatrix eccentricity_matrix(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    EccentricityVector e = eccentricities(d);
    DenseSymMatrix m(d.n);
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v)
            if (d.at(u, v) == std::min(e[u], e[v])) m.set(u, v, d.at(u, v));
    return m;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[static_cast<std::size_t>(i) * n + j] *
                             a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

}  // namespace

Spectrum jacobi_eigen(const DenseSymMatrix& m) {
    const int n = m.dim();
    Spectrum s;
    if (n == 0) return s;

    std::vector<double> a = m.data();
    auto el = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    const double fro = m.frobenius_norm();
    const double tol = 1e-12 * fro;
    const double skip = 1e-16 * fro;  // rotations below this cannot push off(A) past tol
    const int max_sweeps = 100;

    int sweep = 0;
    double off = off_diagonal_norm(a, n);
    while (off > tol && sweep < max_sweeps) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = el(p, q);
                if (std::abs(apq) <= skip) continue;
                double theta = (el(q, q) - el(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = el(k, p), akq = el(k, q);
                    el(k, p) = el(p, k) = c * akp - sn * akq;
                    el(k, q) = el(q, k) = sn * akp + c * akq;
                }
                el(p, p) -= t * apq;
                el(q, q) += t * apq;
                el(p, q) = el(q, p) = 0.0;
            }
        }
        ++sweep;
        off = off_diagonal_norm(a, n);
    }
    if (off > tol) {
        std::ostringstream msg;
        msg << "jacobi eigensolver did not converge in " << max_sweeps
            << " sweeps; off-diagonal residual " << off << " (tolerance " << tol << ")";
        throw NumericalError(msg.str());
    }

    s.values.resize(n);
    for (int i = 0; i < n; ++i) s.values[i] = el(i, i);
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

double energy(const Spectrum& s) {
    double e = 0;
    for (double v : s.values) e += std::abs(v);
    return e;
}

int multiplicity(const Spectrum& s, double target, double tol) {
    if (tol <= 0) throw DomainError("multiplicity tolerance must be positive");
    int count = 0;
    for (double v : s.values)
        if (std::abs(v - target) <= tol) ++count;
    return count;
}

bool support_is_irreducible(const DenseSymMatrix& m) {
    int n = m.dim();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && m.at(u, v) != 0.0) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

}  // namespace ecclab
