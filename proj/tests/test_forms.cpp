#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ecclab/forms.hpp"

using namespace ecclab;

namespace {

Graph kmn_minus_e(int m, int n) { return delete_edge(complete_multipartite({m, n}), 0, m); }

// test-side oracle: integer eps-matrix straight from distances
std::vector<std::int64_t> int_eps(const Graph& g) {
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

// test-side oracle: 4x4 determinant by cofactor expansion
double det4(const double a[4][4]) {
    double det = 0;
    for (int c = 0; c < 4; ++c) {
        double minor[3][3];
        for (int i = 1; i < 4; ++i) {
            int jj = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = a[i][j];
            }
        }
        double m3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1]) -
                    minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0]) +
                    minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
        det += (c % 2 ? -1.0 : 1.0) * a[0][c] * m3;
    }
    return det;
}

double charpoly_Qpi(int m, int n, double x) {
    QuotientMatrix q = quotient_Qpi(m, n);
    double a[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = (i == j ? x : 0.0) - q.at(i, j);
    return det4(a);
}

}  // namespace

TEST_CASE("multipartite_eps_spectrum") {
    EpsSpectrumClosedForm k22 = multipartite_eps_spectrum({2, 2});
    CHECK(k22.minus_two_multiplicity == 2);
    CHECK(k22.distinguished == std::vector<double>{2.0, 2.0});
    CHECK(k22.energy() == doctest::Approx(8.0));

    CHECK(multipartite_eps_spectrum({3, 10}).energy() == doctest::Approx(44.0));

    EpsSpectrumClosedForm oct = multipartite_eps_spectrum({2, 2, 2});
    CHECK(oct.minus_two_multiplicity == 3);
    CHECK(oct.distinguished == std::vector<double>{2.0, 2.0, 2.0});
    CHECK(oct.energy() == doctest::Approx(12.0));
    CHECK(oct.total_count() == 6);

    CHECK_THROWS_AS(multipartite_eps_spectrum({1, 5}), DomainError);
    CHECK_THROWS_AS(multipartite_eps_spectrum({4}), DomainError);
}

TEST_CASE("lemma1_eigenvectors structure") {
    CHECK(lemma1_eigenvectors(2, 2).empty());

    auto v33 = lemma1_eigenvectors(3, 3);
    REQUIRE(v33.size() == 2);
    CHECK(v33[0] == std::vector<std::int64_t>{0, 1, -1, 0, 0, 0});
    CHECK(v33[1] == std::vector<std::int64_t>{0, 0, 0, 0, 1, -1});

    CHECK(lemma1_eigenvectors(4, 5).size() == 5);
    CHECK_THROWS_AS(lemma1_eigenvectors(1, 5), DomainError);
}

TEST_CASE("lemma1 eigenvectors satisfy eps x = -2x exactly") {
    for (auto [m, n] : {std::pair{3, 3}, {4, 5}, {2, 6}, {5, 5}}) {
        Graph g = kmn_minus_e(m, n);
        auto eps = int_eps(g);
        int nn = g.order();
        for (const auto& x : lemma1_eigenvectors(m, n)) {
            for (int i = 0; i < nn; ++i) {
                std::int64_t acc = 0;
                for (int j = 0; j < nn; ++j) acc += eps[static_cast<std::size_t>(i) * nn + j] * x[j];
                CHECK(acc == -2 * x[i]);
            }
        }
    }
}

TEST_CASE("quotient_Qpi entries") {
    QuotientMatrix q = quotient_Qpi(2, 2);
    double expect[4][4] = {{0, 2, 3, 0}, {2, 0, 0, 0}, {3, 0, 0, 2}, {0, 0, 2, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(q.at(i, j) == expect[i][j]);

    // block row sums of the true eps-matrix reproduce Q_pi
    for (auto [m, n] : {std::pair{3, 4}, {2, 5}, {4, 6}}) {
        auto eps = int_eps(kmn_minus_e(m, n));
        int nn = m + n;
        std::vector<std::vector<int>> blocks = {{0}, {}, {m}, {}};
        for (int i = 1; i < m; ++i) blocks[1].push_back(i);
        for (int i = m + 1; i < nn; ++i) blocks[3].push_back(i);
        QuotientMatrix qpi = quotient_Qpi(m, n);
        for (int bi = 0; bi < 4; ++bi) {
            int rep = blocks[bi].front();
            for (int bj = 0; bj < 4; ++bj) {
                std::int64_t sum = 0;
                for (int v : blocks[bj]) sum += eps[static_cast<std::size_t>(rep) * nn + v];
                CHECK(static_cast<double>(sum) == qpi.at(bi, bj));
            }
        }
    }

    CHECK_THROWS_AS(quotient_Qpi(1, 4), DomainError);
}

TEST_CASE("characteristic polynomial of Q_pi equals the quartic") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 7}, {3, 5}, {4, 9}, {6, 6}}) {
        QuarticSpec spec = quartic_coeffs(m, n);
        for (double x : {-4.5, -1.0, 0.5, 2.0, 7.5}) {
            double direct = charpoly_Qpi(m, n, x);
            CHECK(spec.eval(x) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("quartic_coeffs specializations") {
    QuarticSpec s22 = quartic_coeffs(2, 2);
    CHECK(s22.c3 == 0);
    CHECK(s22.c2 == -17);
    CHECK(s22.c1 == 0);
    CHECK(s22.c0 == 16);

    // m=2 family: x^4 + (4-2n)x^3 - (4n+9)x^2 + 26(n-2)x + 16(n-1)
    for (int n = 2; n <= 9; ++n) {
        QuarticSpec s = quartic_coeffs(2, n);
        CHECK(s.c3 == 4 - 2 * n);
        CHECK(s.c2 == -(4 * n + 9));
        CHECK(s.c1 == 26 * (n - 2));
        CHECK(s.c0 == 16 * (n - 1));
    }
    // m=3 family: x^4 + (2-2n)x^3 - 21x^2 + (42n-58)x + 4(10-n)
    for (int n = 3; n <= 12; ++n) {
        QuarticSpec s = quartic_coeffs(3, n);
        CHECK(s.c3 == 2 - 2 * n);
        CHECK(s.c2 == -21);
        CHECK(s.c1 == 42 * n - 58);
        CHECK(s.c0 == 4 * (10 - n));
    }
}

TEST_CASE("quartic_roots") {
    // (2,2): x^4 - 17x^2 + 16 = (x^2-1)(x^2-16)
    QuarticRoots r22 = quartic_roots(quartic_coeffs(2, 2));
    CHECK(r22.roots[0] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(r22.roots[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r22.roots[2] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(r22.roots[3] == doctest::Approx(-4.0).epsilon(1e-10));

    // reported energies: 24.84886 for K_{4,4}-e, 45.0087 for K_{3,10}-e
    QuarticRoots r44 = quartic_roots(quartic_coeffs(4, 4));
    double e44 = 2.0 * (4 + 4 - 4);
    for (double r : r44.roots) e44 += std::abs(r);
    CHECK(e44 == doctest::Approx(24.84886).epsilon(2e-6));

    QuarticRoots r310 = quartic_roots(quartic_coeffs(3, 10));
    double e310 = 2.0 * (3 + 10 - 4);
    for (double r : r310.roots) e310 += std::abs(r);
    CHECK(e310 == doctest::Approx(45.0087).epsilon(1e-5));

    // residual bound from the contract
    for (auto [m, n] : {std::pair{2, 3}, {5, 9}, {12, 17}}) {
        QuarticSpec spec = quartic_coeffs(m, n);
        for (double r : quartic_roots(spec).roots)
            CHECK(std::abs(spec.eval(r)) <= 1e-6 * (1.0 + std::abs(spec.c0)));
    }
}

TEST_CASE("classify_root_signs") {
    RootSignPattern p25 = classify_root_signs(quartic_roots(quartic_coeffs(2, 5)), 2, 5);
    CHECK(p25.positive == 2);
    CHECK(p25.negative == 2);
    CHECK(p25.alpha4_in_minus5_minus4);
    CHECK(p25.alpha3_in_minus1_0);
    CHECK(p25.lemma_case == "lemma2");

    RootSignPattern p312 = classify_root_signs(quartic_roots(quartic_coeffs(3, 12)), 3, 12);
    CHECK(p312.negative == 1);
    CHECK(p312.alpha4_in_minus5_minus4);
    CHECK(p312.lemma_case == "lemma3-case2");

    RootSignPattern p45 = classify_root_signs(quartic_roots(quartic_coeffs(4, 5)), 4, 5);
    CHECK(p45.positive == 3);
    CHECK(p45.negative == 1);
    CHECK(p45.alpha4_in_minus5_minus4);
    CHECK(p45.lemma_case == "lemma4");

    // boundary cases settled by direct computation in the paper
    CHECK(classify_root_signs(quartic_roots(quartic_coeffs(2, 2)), 2, 2).lemma_case == "direct");
    CHECK(classify_root_signs(quartic_roots(quartic_coeffs(4, 4)), 4, 4).lemma_case == "direct");
    RootSignPattern p310 = classify_root_signs(quartic_roots(quartic_coeffs(3, 10)), 3, 10);
    CHECK(p310.lemma_case == "direct");
    CHECK(p310.zero == 1);  // x=0 is a root exactly when 5mn-14(m+n)+32 = 0

    // the oracle must never fire across a small sweep
    for (int m = 2; m <= 12; ++m)
        for (int n = m; n <= 12; ++n)
            CHECK_NOTHROW(classify_root_signs(quartic_roots(quartic_coeffs(m, n)), m, n));
}

TEST_CASE("no quartic root approaches -2 across the full sweep") {
    for (int m = 2; m <= 30; ++m)
        for (int n = m; n <= 30; ++n)
            for (double r : quartic_roots(quartic_coeffs(m, n)).roots)
                CHECK(std::abs(r + 2.0) > 1e-6);
}

TEST_CASE("kmn_minus_e_spectrum") {
    EpsSpectrumClosedForm s22 = kmn_minus_e_spectrum(2, 2);
    CHECK(s22.minus_two_multiplicity == 0);
    CHECK(s22.energy() == doctest::Approx(10.0).epsilon(1e-10));

    CHECK(kmn_minus_e_spectrum(2, 3).energy() == doctest::Approx(13.8486879840).epsilon(1e-9));

    // dual route: numeric eigensolver on the definitional matrix
    for (auto [m, n] : {std::pair{5, 7}, {2, 8}, {6, 6}}) {
        std::vector<double> closed = kmn_minus_e_spectrum(m, n).values();
        std::vector<double> numeric = jacobi_eigen(eccentricity_matrix(kmn_minus_e(m, n))).values;
        REQUIRE(closed.size() == numeric.size());
        for (std::size_t i = 0; i < closed.size(); ++i)
            CHECK(closed[i] == doctest::Approx(numeric[i]).epsilon(1e-9));
    }
}

TEST_CASE("main3_block_form") {
    auto [top, b] = main3_block_form({2, 2, 2}, 1, 2);
    REQUIRE(top.dim() == 4);
    REQUIRE(b.dim() == 2);
    // top-left is eps(K_{2,2}-e)
    DenseSymMatrix expect = eccentricity_matrix(kmn_minus_e(2, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(top.at(i, j) == expect.at(i, j));
    CHECK(b.at(0, 1) == 2.0);
    CHECK(b.at(0, 0) == 0.0);

    // k=2: B is empty, the claim is the whole matrix
    auto [top23, b23] = main3_block_form({2, 3}, 1, 2);
    CHECK(b23.dim() == 0);
    DenseSymMatrix eps23 = eccentricity_matrix(kmn_minus_e(2, 3));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(top23.at(i, j) == eps23.at(i, j));

    // the claimed (v1,u1) entry is 3, but with a third part around both
    // endpoints keep eccentricity 2, so the true entry is 2
    DenseSymMatrix true222 = eccentricity_matrix(delete_edge(complete_multipartite({2, 2, 2}), 0, 2));
    CHECK(top.at(0, 2) == 3.0);
    CHECK(true222.at(0, 2) == 2.0);

    CHECK_THROWS_AS(main3_block_form({2, 2, 2}, 1, 1), DomainError);
    CHECK_THROWS_AS(main3_block_form({2, 2, 2}, 0, 2), DomainError);
    CHECK_THROWS_AS(main3_block_form({2, 2, 2}, 1, 4), DomainError);
    CHECK_THROWS_AS(main3_block_form({2, 1, 2}, 1, 2), DomainError);
}

TEST_CASE("vieta_residuals") {
    // m=3 family identities: sum = 2n-2, product = 4(10-n)
    for (int n : {3, 7, 10, 15, 25}) {
        QuarticSpec spec = quartic_coeffs(3, n);
        QuarticRoots roots = quartic_roots(spec);
        const auto& r = roots.roots;
        CHECK(std::abs(r[0] + r[1] + r[2] + r[3] - (2.0 * n - 2.0)) < 1e-6);
        CHECK(std::abs(r[0] * r[1] * r[2] * r[3] - 4.0 * (10.0 - n)) <
              1e-6 * (1.0 + std::abs(4.0 * (10.0 - n))));
        auto res = vieta_residuals(roots, spec);
        CHECK(res[0] < 1e-6 * (1.0 + std::abs(spec.c3)));
        CHECK(res[1] < 1e-6 * (1.0 + std::abs(spec.c2)));
        CHECK(res[2] < 1e-6 * (1.0 + std::abs(spec.c1)));
        CHECK(res[3] < 1e-6 * (1.0 + std::abs(spec.c0)));
    }
    // general family: product = -4(5mn - 14(m+n) + 32)
    for (auto [m, n] : {std::pair{4, 7}, {8, 11}, {2, 9}}) {
        QuarticSpec spec = quartic_coeffs(m, n);
        auto res = vieta_residuals(quartic_roots(spec), spec);
        CHECK(res[3] < 1e-6 * (1.0 + std::abs(spec.c0)));
    }
}
