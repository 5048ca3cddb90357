#include "ecclab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "ecclab/forms.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/lab.hpp"
#include "ecclab/spectral.hpp"

namespace ecclab {

namespace {

Graph kmn_minus_e(int m, int n) {
    return delete_edge(complete_multipartite({m, n}), 0, m);
}

// eps-matrix with exact integer entries, for the Lemma 1 arithmetic.
std::vector<std::int64_t> integer_eps_matrix(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    EccentricityVector e = eccentricities(d);
    int n = d.n;
    std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && d.at(u, v) == std::min(e[u], e[v]))
                m[static_cast<std::size_t>(u) * n + v] = d.at(u, v);
    return m;
}

bool sorted_match(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

}  // namespace

CheckResult verify_lemma1(int max_mn) {
    int vectors_checked = 0;
    for (int m = 2; m <= max_mn; ++m) {
        for (int n = 2; n <= max_mn; ++n) {
            Graph g = kmn_minus_e(m, n);
            int nn = g.order();
            std::vector<std::int64_t> eps = integer_eps_matrix(g);
            auto vecs = lemma1_eigenvectors(m, n);
            if (static_cast<int>(vecs.size()) != (m - 2) + (n - 2))
                return fail("lemma1", "wrong vector count at (" + std::to_string(m) + "," +
                                          std::to_string(n) + ")");
            for (const auto& x : vecs) {
                for (int i = 0; i < nn; ++i) {
                    std::int64_t acc = 0;
                    for (int j = 0; j < nn; ++j)
                        acc += eps[static_cast<std::size_t>(i) * nn + j] * x[j];
                    if (acc != -2 * x[i])
                        return fail("lemma1", "eps*x != -2x at (" + std::to_string(m) + "," +
                                                  std::to_string(n) + ") row " +
                                                  std::to_string(i));
                }
                ++vectors_checked;
            }
        }
    }
    return pass("lemma1", std::to_string(vectors_checked) +
                              " eigenvectors verified exactly, 2<=m,n<=" +
                              std::to_string(max_mn));
}

namespace {

// shared sweep for lemma2 (m=2) and lemma3 (m=3)
CheckResult verify_small_m(const char* name, int m, int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        if (m == 3 && n < 3) continue;
        QuarticSpec spec = quartic_coeffs(m, n);
        QuarticRoots roots = quartic_roots(spec);
        try {
            classify_root_signs(roots, m, n);
        } catch (const VerificationError& e) {
            return fail(name, e.what());
        }
        double before = multipartite_eps_spectrum({m, n}).energy();
        double after = kmn_minus_e_spectrum(m, n).energy();
        if (after - before <= 1e-7)
            return fail(name, "no energy increase at (" + std::to_string(m) + "," +
                                  std::to_string(n) + ")");
    }
    return pass(name, std::string("energy increases and sign pattern holds for m=") +
                          std::to_string(m) + ", n up to " + std::to_string(max_n));
}

}  // namespace

CheckResult verify_lemma2(int max_n) { return verify_small_m("lemma2", 2, max_n); }

CheckResult verify_lemma3(int max_n) { return verify_small_m("lemma3", 3, max_n); }

CheckResult verify_lemma4(int max_mn) {
    for (int m = 4; m <= max_mn; ++m) {
        for (int n = std::max(m, 5); n <= max_mn; ++n) {
            RootSignPattern p;
            try {
                p = classify_root_signs(quartic_roots(quartic_coeffs(m, n)), m, n);
            } catch (const VerificationError& e) {
                return fail("lemma4", e.what());
            }
            if (p.lemma_case != "lemma4")
                return fail("lemma4", "unexpected case " + p.lemma_case + " at (" +
                                          std::to_string(m) + "," + std::to_string(n) + ")");
        }
    }
    return pass("lemma4", "three positive roots, one negative in (-5,-4), 4<=m, 5<=n<=" +
                              std::to_string(max_mn));
}

CheckResult verify_mainthm(int max_mn) {
    for (int m = 2; m <= max_mn; ++m) {
        for (int n = m; n <= max_mn; ++n) {
            EpsSpectrumClosedForm cf = kmn_minus_e_spectrum(m, n);
            for (double r : cf.distinguished)
                if (std::abs(r + 2.0) < 1e-6)
                    return fail("mainthm", "quartic root near -2 at (" + std::to_string(m) + "," +
                                               std::to_string(n) + ")");
            Spectrum numeric = jacobi_eigen(eccentricity_matrix(kmn_minus_e(m, n)));
            if (!sorted_match(numeric.values, cf.values(), 1e-7))
                return fail("mainthm", "spectrum mismatch at (" + std::to_string(m) + "," +
                                           std::to_string(n) + ")");
            if (multiplicity(numeric, -2.0, 1e-7) != m + n - 4)
                return fail("mainthm", "-2 multiplicity wrong at (" + std::to_string(m) + "," +
                                           std::to_string(n) + ")");
        }
    }
    return pass("mainthm", "closed-form spectrum matches numerically, 2<=m<=n<=" +
                               std::to_string(max_mn));
}

CheckResult verify_main2(int max_mn) {
    double worst = 1e300;
    for (int m = 2; m <= max_mn; ++m) {
        for (int n = m; n <= max_mn; ++n) {
            double margin =
                kmn_minus_e_spectrum(m, n).energy() - multipartite_eps_spectrum({m, n}).energy();
            worst = std::min(worst, margin);
            if (margin <= 1e-7)
                return fail("main2", "margin " + std::to_string(margin) + " at (" +
                                         std::to_string(m) + "," + std::to_string(n) + ")");
        }
    }
    std::ostringstream d;
    d << "all margins positive for 2<=m<=n<=" << max_mn << " (min " << worst << ")";
    return pass("main2", d.str());
}

CheckResult verify_main3(int max_total) {
    auto rows = sweep_multipartite(max_total);
    double worst = 1e300;
    for (const auto& row : rows) {
        worst = std::min(worst, row.margin);
        if (row.margin <= 1e-7) {
            std::string sizes;
            for (int s : row.sizes) sizes += std::to_string(s) + " ";
            return fail("main3", "margin " + std::to_string(row.margin) + " for sizes " + sizes);
        }
    }
    std::ostringstream d;
    d << rows.size() << " deletions, all margins positive (min " << worst << ")";
    return pass("main3", d.str());
}

CheckResult verify_quotient_containment(int max_mn) {
    for (int m = 2; m <= max_mn; ++m) {
        for (int n = m; n <= max_mn; ++n) {
            Graph g = kmn_minus_e(m, n);
            DenseSymMatrix eps = eccentricity_matrix(g);
            Partition pi;
            std::vector<int> p2, p4;
            for (int i = 1; i < m; ++i) p2.push_back(i);
            for (int i = m + 1; i < m + n; ++i) p4.push_back(i);
            pi.blocks = {{0}, p2, {m}, p4};
            if (!is_equitable(eps, pi))
                return fail("quotient-containment", "pi not equitable at (" + std::to_string(m) +
                                                        "," + std::to_string(n) + ")");
            if (!spectrum_containment(eps, quotient_Qpi(m, n), 1e-7))
                return fail("quotient-containment",
                            "Q_pi spectrum not contained at (" + std::to_string(m) + "," +
                                std::to_string(n) + ")");
        }
    }
    return pass("quotient-containment",
                "Q_pi equitable and spectrum contained, 2<=m<=n<=" + std::to_string(max_mn));
}

std::vector<CheckResult> verify_all() {
    return {verify_lemma1(),  verify_lemma2(), verify_lemma3(),
            verify_lemma4(),  verify_mainthm(), verify_main2(),
            verify_main3(),   verify_quotient_containment()};
}

std::vector<CheckResult> run_verification(const std::string& name) {
    if (name == "all") return verify_all();
    if (name == "lemma1") return {verify_lemma1()};
    if (name == "lemma2") return {verify_lemma2()};
    if (name == "lemma3") return {verify_lemma3()};
    if (name == "lemma4") return {verify_lemma4()};
    if (name == "mainthm") return {verify_mainthm()};
    if (name == "main2") return {verify_main2()};
    if (name == "main3") return {verify_main3()};
    if (name == "quotient-containment") return {verify_quotient_containment()};
    throw DomainError("unknown verification check: " + name);
}

}  // namespace ecclab
