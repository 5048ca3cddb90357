#include "ecclab/equitable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ecclab {

namespace {

constexpr double kFloatTol = 1e-9;

bool is_integral(const DenseSymMatrix& m) {
    for (double v : m.data())
        if (v != std::nearbyint(v)) return false;
    return true;
}

bool sums_equal(double a, double b, bool integral) {
    return integral ? a == b : std::abs(a - b) <= kFloatTol;
}

}  // namespace

void Partition::validate(int n) const {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& blk : blocks) {
        if (blk.empty()) throw DomainError("partition block is empty");
        for (int v : blk) {
            if (v < 0 || v >= n) throw DomainError("partition index out of range");
            if (seen[v]) throw DomainError("partition blocks overlap at " + std::to_string(v));
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) throw DomainError("partition does not cover all indices");
}

bool is_equitable(const DenseSymMatrix& mat, const Partition& p) {
    p.validate(mat.dim());
    const bool integral = is_integral(mat);
    const int k = p.block_count();
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double ref = 0;
            bool first = true;
            for (int u : p.blocks[i]) {
                double sum = 0;
                for (int v : p.blocks[j]) sum += mat.at(u, v);
                if (first) {
                    ref = sum;
                    first = false;
                } else if (!sums_equal(sum, ref, integral)) {
                    return false;
                }
            }
        }
    }
    return true;
}

QuotientMatrix quotient(const DenseSymMatrix& mat, const Partition& p) {
    if (!is_equitable(mat, p)) throw DomainError("partition is not equitable for this matrix");
    const int k = p.block_count();
    QuotientMatrix q;
    q.n = k;
    q.q.assign(static_cast<std::size_t>(k) * k, 0.0);
    q.block_sizes.resize(k);
    for (int i = 0; i < k; ++i) {
        q.block_sizes[i] = static_cast<int>(p.blocks[i].size());
        int u = p.blocks[i].front();
        for (int j = 0; j < k; ++j) {
            double sum = 0;
            for (int v : p.blocks[j]) sum += mat.at(u, v);
            q.q[static_cast<std::size_t>(i) * k + j] = sum;
        }
    }
    return q;
}

Partition coarsest_equitable(const DenseSymMatrix& mat) {
    const int n = mat.dim();
    const bool integral = is_integral(mat);
    std::vector<int> color(n, 0);
    int ncolors = 1;

    for (;;) {
        // signature: current color followed by row sums into each color class
        std::vector<std::vector<double>> sig(n);
        for (int u = 0; u < n; ++u) {
            sig[u].assign(ncolors + 1, 0.0);
            sig[u][0] = color[u];
            for (int v = 0; v < n; ++v) sig[u][1 + color[v]] += mat.at(u, v);
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (sig[a] != sig[b]) return sig[a] < sig[b];
            return a < b;
        });
        std::vector<int> next(n, 0);
        int next_colors = 0;
        for (int idx = 0; idx < n; ++idx) {
            int u = order[idx];
            if (idx > 0) {
                int prev = order[idx - 1];
                bool same = sig[u].size() == sig[prev].size();
                for (std::size_t t = 0; same && t < sig[u].size(); ++t)
                    same = sums_equal(sig[u][t], sig[prev][t], integral);
                if (!same) ++next_colors;
            }
            next[u] = next_colors;
        }
        ++next_colors;
        if (next_colors == ncolors) break;  // refinement stalled: stable
        color = next;
        ncolors = next_colors;
    }

    // blocks ordered by smallest contained vertex
    Partition p;
    std::vector<int> block_of_color(ncolors, -1);
    for (int u = 0; u < n; ++u) {
        if (block_of_color[color[u]] < 0) {
            block_of_color[color[u]] = static_cast<int>(p.blocks.size());
            p.blocks.emplace_back();
        }
        p.blocks[block_of_color[color[u]]].push_back(u);
    }
    return p;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
    const int k = q.n;
    DenseSymMatrix qs(k);
    for (int i = 0; i < k; ++i) {
        qs.set(i, i, q.at(i, i));
        for (int j = i + 1; j < k; ++j) {
            double si = q.block_sizes[i], sj = q.block_sizes[j];
            double upper = q.at(i, j) * std::sqrt(si / sj);
            double lower = q.at(j, i) * std::sqrt(sj / si);
            // equal in exact arithmetic for quotients of symmetric matrices
            qs.set(i, j, 0.5 * (upper + lower));
        }
    }
    return jacobi_eigen(qs).values;
}

bool spectrum_containment(const DenseSymMatrix& mat, const QuotientMatrix& q, double tol) {
    std::vector<double> big = jacobi_eigen(mat).values;
    std::vector<double> small = quotient_eigenvalues(q);
    std::vector<char> used(big.size(), 0);
    for (double qe : small) {
        int best = -1;
        double best_gap = tol;
        for (std::size_t i = 0; i < big.size(); ++i) {
            if (used[i]) continue;
            double gap = std::abs(big[i] - qe);
            if (gap <= best_gap) {
                best_gap = gap;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) return false;
        used[best] = 1;
    }
    return true;
}

}  // namespace ecclab
