#include "ecclab/forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace ecclab {

double EpsSpectrumClosedForm::energy() const {
    double e = 2.0 * minus_two_multiplicity;
    for (double v : distinguished) e += std::abs(v);
    return e;
}

std::vector<double> EpsSpectrumClosedForm::values() const {
    std::vector<double> out(distinguished);
    out.insert(out.end(), minus_two_multiplicity, -2.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace {

void require_part_sizes(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw DomainError("need at least two parts");
    for (int s : sizes)
        if (s < 2) throw DomainError("closed forms require every part size >= 2");
}

void require_mn(int m, int n) {
    if (m < 2 || n < 2) throw DomainError("part sizes m, n must both be >= 2");
}

}  // namespace

EpsSpectrumClosedForm multipartite_eps_spectrum(const std::vector<int>& sizes) {
    require_part_sizes(sizes);
    EpsSpectrumClosedForm out;
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    out.minus_two_multiplicity = total - static_cast<int>(sizes.size());
    out.distinguished.reserve(sizes.size());
    for (int s : sizes) out.distinguished.push_back(2.0 * (s - 1));
    return out;
}

std::vector<std::vector<std::int64_t>> lemma1_eigenvectors(int m, int n) {
    require_mn(m, n);
    // Deleted edge is (0, m). In each part, differences of unit vectors on
    // the vertices other than the edge endpoint and one reference vertex.
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(m - 2) + (n - 2));
    for (int i = 2; i < m; ++i) {
        std::vector<std::int64_t> x(m + n, 0);
        x[1] = 1;
        x[i] = -1;
        out.push_back(std::move(x));
    }
    for (int j = m + 2; j < m + n; ++j) {
        std::vector<std::int64_t> x(m + n, 0);
        x[m + 1] = 1;
        x[j] = -1;
        out.push_back(std::move(x));
    }
    return out;
}

QuotientMatrix quotient_Qpi(int m, int n) {
    require_mn(m, n);
    QuotientMatrix q;
    q.n = 4;
    q.block_sizes = {1, m - 1, 1, n - 1};
    q.q = {0.0,           2.0 * (m - 1), 3.0, 0.0,
           2.0,           2.0 * (m - 2), 0.0, 0.0,
           3.0,           0.0,           0.0, 2.0 * (n - 1),
           0.0,           0.0,           2.0, 2.0 * (n - 2)};
    return q;
}

QuarticSpec quartic_coeffs(int m, int n) {
    require_mn(m, n);
    QuarticSpec s;
    s.m = m;
    s.n = n;
    s.c3 = -2.0 * (m + n - 4);
    s.c2 = 4.0 * m * n - 12.0 * (m + n) + 15.0;
    s.c1 = 16.0 * m * n - 6.0 * (m + n) - 40.0;
    s.c0 = -4.0 * (5.0 * m * n - 14.0 * (m + n) + 32.0);
    return s;
}

QuarticRoots quartic_roots(const QuarticSpec& spec) {
    std::vector<double> eig = quotient_eigenvalues(quotient_Qpi(spec.m, spec.n));
    QuarticRoots out;
    for (int i = 0; i < 4; ++i) {
        double x = eig[i];
        double dp = spec.deriv(x);
        // one Newton polish; skip near-critical points (multiple roots)
        if (std::abs(dp) > 1e-8) x -= spec.eval(x) / dp;
        out.roots[i] = x;
    }
    std::sort(out.roots.begin(), out.roots.end(), std::greater<>());

    double allowed = 1e-6 * (1.0 + std::abs(spec.c0));
    for (double r : out.roots) {
        if (std::abs(spec.eval(r)) > allowed) {
            std::ostringstream msg;
            msg << "quartic root residual " << std::abs(spec.eval(r)) << " exceeds " << allowed
                << " for (m,n)=(" << spec.m << "," << spec.n << ")";
            throw NumericalError(msg.str());
        }
    }
    return out;
}

RootSignPattern classify_root_signs(const QuarticRoots& roots, int m, int n) {
    require_mn(m, n);
    constexpr double zero_tol = 1e-7;
    RootSignPattern p;
    for (double r : roots.roots) {
        if (r > zero_tol)
            ++p.positive;
        else if (r < -zero_tol)
            ++p.negative;
        else
            ++p.zero;
    }
    double a4 = roots.roots[3], a3 = roots.roots[2];
    p.alpha4_in_minus5_minus4 = (-5.0 < a4 && a4 < -4.0);
    p.alpha3_in_minus1_0 = (-1.0 < a3 && a3 < 0.0);

    int a = std::min(m, n), b = std::max(m, n);
    bool ok = true;
    if (a == 2 && b >= 4) {
        p.lemma_case = "lemma2";
        ok = p.positive == 2 && p.negative == 2 && p.alpha4_in_minus5_minus4 &&
             p.alpha3_in_minus1_0;
    } else if (a == 3 && b <= 9) {
        p.lemma_case = "lemma3-case1";
        ok = p.positive == 2 && p.negative == 2 && p.alpha4_in_minus5_minus4 &&
             p.alpha3_in_minus1_0;
    } else if (a == 3 && b >= 11) {
        p.lemma_case = "lemma3-case2";
        ok = p.negative == 1 && p.alpha4_in_minus5_minus4;
    } else if (a >= 4 && b >= 5) {
        p.lemma_case = "lemma4";
        ok = p.positive == 3 && p.negative == 1 && p.alpha4_in_minus5_minus4;
    } else {
        // (2,2), (2,3), (3,10), (4,4): settled by direct computation
        p.lemma_case = "direct";
    }
    if (!ok) {
        std::ostringstream msg;
        msg << "root sign pattern for (m,n)=(" << m << "," << n << ") contradicts "
            << p.lemma_case << ": " << p.positive << " positive, " << p.negative
            << " negative, alpha4=" << a4 << ", alpha3=" << a3;
        throw VerificationError(msg.str());
    }
    return p;
}

EpsSpectrumClosedForm kmn_minus_e_spectrum(int m, int n) {
    require_mn(m, n);
    QuarticRoots r = quartic_roots(quartic_coeffs(m, n));
    EpsSpectrumClosedForm out;
    out.minus_two_multiplicity = m + n - 4;
    out.distinguished.assign(r.roots.begin(), r.roots.end());
    return out;
}

std::pair<DenseSymMatrix, DenseSymMatrix> main3_block_form(const std::vector<int>& sizes,
                                                           int part_i, int part_j) {
    require_part_sizes(sizes);
    int k = static_cast<int>(sizes.size());
    if (part_i < 1 || part_j < 1 || part_i > k || part_j > k || part_i == part_j)
        throw DomainError("part indices must satisfy 1 <= i < j <= k");
    if (part_i > part_j) std::swap(part_i, part_j);

    int ni = sizes[part_i - 1], nj = sizes[part_j - 1];
    Graph top = delete_edge(complete_multipartite({ni, nj}), 0, ni);
    DenseSymMatrix top_left = eccentricity_matrix(top);

    int rest = 0;
    for (int l = 0; l < k; ++l)
        if (l != part_i - 1 && l != part_j - 1) rest += sizes[l];
    DenseSymMatrix b(rest);
    int base = 0;
    for (int l = 0; l < k; ++l) {
        if (l == part_i - 1 || l == part_j - 1) continue;
        for (int u = 0; u < sizes[l]; ++u)
            for (int v = u + 1; v < sizes[l]; ++v) b.set(base + u, base + v, 2.0);
        base += sizes[l];
    }
    return {std::move(top_left), std::move(b)};
}

std::array<double, 4> vieta_residuals(const QuarticRoots& roots, const QuarticSpec& spec) {
    const auto& r = roots.roots;
    double e1 = r[0] + r[1] + r[2] + r[3];
    double e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] + r[2] * r[3];
    double e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
    double e4 = r[0] * r[1] * r[2] * r[3];
    return {std::abs(e1 + spec.c3), std::abs(e2 - spec.c2), std::abs(e3 + spec.c1),
            std::abs(e4 - spec.c0)};
}

}  // namespace ecclab
