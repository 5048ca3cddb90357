#include <doctest.h>

#include <cmath>
#include <random>

#include "ecclab/enumerate.hpp"
#include "ecclab/spectral.hpp"

using namespace ecclab;

namespace {

// Independent oracle: det(A - x I) via Gaussian elimination with partial
// pivoting; eigenvalues must be near-roots of the characteristic polynomial.
double det_shifted(const DenseSymMatrix& m, double x) {
    int n = m.dim();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = m.at(i, j) - (i == j ? x : 0.0);
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        if (a[piv * n + c] == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            det = -det;
        }
        det *= a[c * n + c];
        for (int r = c + 1; r < n; ++r) {
            double f = a[r * n + c] / a[c * n + c];
            for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
        }
    }
    return det;
}

Graph kmn_minus_e(int m, int n) { return delete_edge(complete_multipartite({m, n}), 0, m); }

}  // namespace

TEST_CASE("adjacency_matrix") {
    DenseSymMatrix a = adjacency_matrix(complete_multipartite({1, 1}));
    CHECK(a.at(0, 0) == 0);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 0) == 1);

    DenseSymMatrix z = adjacency_matrix(Graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(z.at(i, j) == 0);

    DenseSymMatrix k6 = adjacency_matrix(complete_multipartite({1, 1, 1, 1, 1, 1}));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(k6.at(i, j) == (i == j ? 0 : 1));
}

TEST_CASE("distance_matrix") {
    DenseSymMatrix k4 = distance_matrix(complete_multipartite({1, 1, 1, 1}));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k4.at(i, j) == (i == j ? 0 : 1));

    DenseSymMatrix p3 = distance_matrix(parse_edge_list("n 3\n0 1\n1 2\n"));
    CHECK(p3.at(0, 2) == 2);
    CHECK(p3.at(0, 1) == 1);

    // K_{2,2}: cross entries 1, within-part entries 2
    DenseSymMatrix k22 = distance_matrix(complete_multipartite({2, 2}));
    CHECK(k22.at(0, 1) == 2);
    CHECK(k22.at(2, 3) == 2);
    CHECK(k22.at(0, 2) == 1);

    Graph disc(2);
    CHECK_THROWS_AS(distance_matrix(disc), ConnectivityError);
}

TEST_CASE("eccentricity_matrix") {
    DenseSymMatrix k6 = eccentricity_matrix(complete_multipartite({1, 1, 1, 1, 1, 1}));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(k6.at(i, j) == (i == j ? 0 : 1));

    // hand-computed from the path distances of P4
    DenseSymMatrix p4 = eccentricity_matrix(parse_edge_list("n 4\n0 1\n1 2\n2 3\n"));
    double expect[4][4] = {{0, 0, 2, 3}, {0, 0, 0, 2}, {2, 0, 0, 0}, {3, 2, 0, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(p4.at(i, j) == expect[i][j]);

    // K_{m,n} splits into 2(J-I) blocks per part, hence reducible
    DenseSymMatrix k23 = eccentricity_matrix(complete_multipartite({2, 3}));
    CHECK(k23.at(0, 1) == 2);
    CHECK(k23.at(2, 3) == 2);
    CHECK(k23.at(0, 2) == 0);
    CHECK_FALSE(support_is_irreducible(k23));
}

TEST_CASE("jacobi_eigen on closed-form cases") {
    DenseSymMatrix d(2);
    d.set(0, 0, 3.0);
    d.set(1, 1, 1.0);
    Spectrum s = jacobi_eigen(d);
    CHECK(s.values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-12));

    // J - I of size 6: rank-one shift, spectrum {5, -1 x 5}
    Spectrum k6 = jacobi_eigen(adjacency_matrix(complete_multipartite({1, 1, 1, 1, 1, 1})));
    CHECK(k6.values[0] == doctest::Approx(5.0).epsilon(1e-10));
    for (int i = 1; i < 6; ++i) CHECK(k6.values[i] == doctest::Approx(-1.0).epsilon(1e-10));

    // eps(K_{2,2}-e): roots of x^4-17x^2+16 = (x^2-1)(x^2-16)
    Spectrum q = jacobi_eigen(eccentricity_matrix(kmn_minus_e(2, 2)));
    double expect[4] = {4, 1, -1, -4};
    for (int i = 0; i < 4; ++i) CHECK(q.values[i] == doctest::Approx(expect[i]).epsilon(1e-10));

    CHECK(jacobi_eigen(DenseSymMatrix(0)).values.empty());
}

TEST_CASE("jacobi_eigen eigenvalues kill the characteristic polynomial") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 3 + rep % 4;
        DenseSymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
        Spectrum s = jacobi_eigen(m);
        // scale: product of (|lambda_i| + 1) bounds the char poly's slope
        double scale = 1.0;
        for (double v : s.values) scale *= std::abs(v) + 1.0;
        for (double v : s.values) CHECK(std::abs(det_shifted(m, v)) <= 1e-8 * scale);
    }
}

TEST_CASE("jacobi_eigen trace and Frobenius invariants on the corpus") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            for (const DenseSymMatrix& m :
                 {adjacency_matrix(g), distance_matrix(g), eccentricity_matrix(g)}) {
                Spectrum s = jacobi_eigen(m);
                REQUIRE(static_cast<int>(s.values.size()) == n);
                double sum = 0, sumsq = 0, maxabs = 0;
                for (double v : s.values) {
                    sum += v;
                    sumsq += v * v;
                }
                for (double v : m.data()) maxabs = std::max(maxabs, std::abs(v));
                double tol = 1e-8 * n * std::max(maxabs, 1.0);
                CHECK(std::abs(sum - m.trace()) <= tol);
                CHECK(std::abs(sumsq - m.frobenius_norm() * m.frobenius_norm()) <= tol);
            }
        }
    }
}

TEST_CASE("eps matrix is dominated by the distance matrix and has no zero row") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            DenseSymMatrix eps = eccentricity_matrix(g);
            DenseSymMatrix dist = distance_matrix(g);
            for (int i = 0; i < n; ++i) {
                bool nonzero = false;
                for (int j = 0; j < n; ++j) {
                    CHECK(eps.at(i, j) <= dist.at(i, j));
                    nonzero = nonzero || eps.at(i, j) != 0;
                }
                CHECK(nonzero);  // every vertex attains its eccentricity
            }
        }
    }
}

TEST_CASE("energy") {
    CHECK(energy(jacobi_eigen(eccentricity_matrix(complete_multipartite({1, 1, 1, 1, 1, 1})))) ==
          doctest::Approx(10.0).epsilon(1e-12));
    CHECK(energy(jacobi_eigen(DenseSymMatrix(4))) == 0.0);
    CHECK(energy(jacobi_eigen(eccentricity_matrix(complete_multipartite({2, 3})))) ==
          doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("multiplicity") {
    Spectrum k33 = jacobi_eigen(eccentricity_matrix(complete_multipartite({3, 3})));
    CHECK(multiplicity(k33, -2.0, 1e-6) == 4);

    DenseSymMatrix id(5);
    for (int i = 0; i < 5; ++i) id.set(i, i, 1.0);
    CHECK(multiplicity(jacobi_eigen(id), 1.0, 1e-6) == 5);

    Spectrum k45e = jacobi_eigen(eccentricity_matrix(kmn_minus_e(4, 5)));
    CHECK(multiplicity(k45e, -2.0, 1e-6) == 5);

    CHECK_THROWS_AS(multiplicity(k33, -2.0, 0.0), DomainError);
}

TEST_CASE("closed-form multipartite energy, definitional route") {
    // E_eps(K_{n1..nk}) = 4(sum - k); a couple of spot checks here, the
    // full sweep up to total 12 runs in the acceptance suite
    CHECK(energy(jacobi_eigen(eccentricity_matrix(complete_multipartite({2, 2, 2})))) ==
          doctest::Approx(12.0).epsilon(1e-12));
    CHECK(energy(jacobi_eigen(eccentricity_matrix(complete_multipartite({3, 10})))) ==
          doctest::Approx(44.0).epsilon(1e-12));
}

TEST_CASE("support_is_irreducible") {
    CHECK_FALSE(support_is_irreducible(eccentricity_matrix(complete_multipartite({2, 3}))));
    CHECK(support_is_irreducible(eccentricity_matrix(complete_multipartite({1, 1, 1, 1, 1, 1}))));
    // eps(P4) support edges {0-2, 0-3, 1-3} reach every vertex
    CHECK(support_is_irreducible(eccentricity_matrix(parse_edge_list("n 4\n0 1\n1 2\n2 3\n"))));
    CHECK(support_is_irreducible(DenseSymMatrix(0)));
    CHECK_FALSE(support_is_irreducible(DenseSymMatrix(2)));
}

TEST_CASE("trees have irreducible eccentricity matrices") {
    for (int n = 2; n <= 10; ++n)
        for (const Graph& t : nonisomorphic_trees(n))
            CHECK(support_is_irreducible(eccentricity_matrix(t)));
}
