// Python bindings for the core operations: graph construction, the three
// graph matrices and their spectra, the closed-form results and the
// experiment harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ecclab/enumerate.hpp"
#include "ecclab/equitable.hpp"
#include "ecclab/forms.hpp"
#include "ecclab/graph6.hpp"
#include "ecclab/lab.hpp"
#include "ecclab/spectral.hpp"
#include "ecclab/verify.hpp"

namespace py = pybind11;
using namespace ecclab;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const DenseSymMatrix& m) {
    Rows out(m.dim(), std::vector<double>(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out[i][j] = m.at(i, j);
    return out;
}

DenseSymMatrix from_rows(const Rows& rows) {
    int n = static_cast<int>(rows.size());
    DenseSymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw DomainError("matrix must be square");
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] != rows[j][i]) throw DomainError("matrix must be symmetric");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

Partition partition_from_blocks(const std::vector<std::vector<int>>& blocks) {
    Partition p;
    p.blocks = blocks;
    return p;
}

py::dict report_to_dict(const EnergyChangeReport& r) {
    py::dict d;
    d["graph_id"] = r.graph_id;
    d["edge"] = py::make_tuple(r.u, r.v);
    d["eps_before"] = r.eps_before;
    d["eps_after"] = r.eps_after;
    d["dist_before"] = r.dist_before;
    d["dist_after"] = r.dist_after;
    d["adj_before"] = r.adj_before;
    d["adj_after"] = r.adj_after;
    d["eps_class"] = std::string(to_string(r.eps_class));
    d["dist_class"] = std::string(to_string(r.dist_class));
    return d;
}

py::dict closed_form_to_dict(const EpsSpectrumClosedForm& s) {
    py::dict d;
    d["minus_two_multiplicity"] = s.minus_two_multiplicity;
    d["distinguished"] = s.distinguished;
    d["values"] = s.values();
    d["energy"] = s.energy();
    return d;
}

}  // namespace

PYBIND11_MODULE(ecclab, m) {
    m.doc() = "eccentricity-matrix spectra, energies and edge-deletion experiments";

    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "GraphDomainError", PyExc_ValueError);
    py::register_exception<ConnectivityError>(m, "ConnectivityError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "EigensolverError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "TheoremVerificationError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.order() << ", edges=" << g.size() << ")";
            return s.str();
        });

    // construction and parsing
    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("encode_graph6", &encode_graph6, py::arg("g"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("complete_multipartite", &complete_multipartite, py::arg("sizes"));
    m.def("delete_edge", &delete_edge, py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("is_connected", &is_connected, py::arg("g"));
    m.def(
        "distances",
        [](const Graph& g) {
            DistanceMatrix d = bfs_all_pairs(g);
            std::vector<std::vector<int>> rows(d.n, std::vector<int>(d.n));
            for (int u = 0; u < d.n; ++u)
                for (int v = 0; v < d.n; ++v) rows[u][v] = d.at(u, v);
            return rows;
        },
        py::arg("g"));
    m.def(
        "vertex_eccentricities", [](const Graph& g) { return eccentricities(bfs_all_pairs(g)); },
        py::arg("g"));

    // matrices and spectra
    m.def("adjacency_matrix", [](const Graph& g) { return to_rows(adjacency_matrix(g)); });
    m.def("distance_matrix", [](const Graph& g) { return to_rows(distance_matrix(g)); });
    m.def("eccentricity_matrix", [](const Graph& g) { return to_rows(eccentricity_matrix(g)); });
    m.def(
        "eigenvalues", [](const Rows& rows) { return jacobi_eigen(from_rows(rows)).values; },
        py::arg("matrix"), "eigenvalues of a symmetric matrix, sorted descending");
    m.def(
        "energy", [](const Rows& rows) { return energy(jacobi_eigen(from_rows(rows))); },
        py::arg("matrix"), "sum of absolute eigenvalues");
    m.def(
        "multiplicity",
        [](const Rows& rows, double target, double tol) {
            Spectrum s = jacobi_eigen(from_rows(rows));
            return multiplicity(s, target, tol);
        },
        py::arg("matrix"), py::arg("target"), py::arg("tol") = 1e-6);
    m.def(
        "support_is_irreducible",
        [](const Rows& rows) { return support_is_irreducible(from_rows(rows)); },
        py::arg("matrix"));

    // equitable partitions
    m.def(
        "is_equitable",
        [](const Rows& rows, const std::vector<std::vector<int>>& blocks) {
            return is_equitable(from_rows(rows), partition_from_blocks(blocks));
        },
        py::arg("matrix"), py::arg("blocks"));
    m.def(
        "quotient_matrix",
        [](const Rows& rows, const std::vector<std::vector<int>>& blocks) {
            QuotientMatrix q = quotient(from_rows(rows), partition_from_blocks(blocks));
            Rows out(q.n, std::vector<double>(q.n));
            for (int i = 0; i < q.n; ++i)
                for (int j = 0; j < q.n; ++j) out[i][j] = q.at(i, j);
            return out;
        },
        py::arg("matrix"), py::arg("blocks"));
    m.def(
        "coarsest_equitable",
        [](const Rows& rows) { return coarsest_equitable(from_rows(rows)).blocks; },
        py::arg("matrix"));
    m.def(
        "spectrum_containment",
        [](const Rows& rows, const std::vector<std::vector<int>>& blocks, double tol) {
            DenseSymMatrix mat = from_rows(rows);
            QuotientMatrix q = quotient(mat, partition_from_blocks(blocks));
            return spectrum_containment(mat, q, tol);
        },
        py::arg("matrix"), py::arg("blocks"), py::arg("tol") = 1e-7);

    // closed forms
    m.def(
        "multipartite_eps_spectrum",
        [](const std::vector<int>& sizes) {
            return closed_form_to_dict(multipartite_eps_spectrum(sizes));
        },
        py::arg("sizes"));
    m.def(
        "kmn_minus_e_spectrum",
        [](int mm, int nn) { return closed_form_to_dict(kmn_minus_e_spectrum(mm, nn)); },
        py::arg("m"), py::arg("n"));
    m.def("lemma1_eigenvectors", &lemma1_eigenvectors, py::arg("m"), py::arg("n"));
    m.def(
        "quotient_Qpi",
        [](int mm, int nn) {
            QuotientMatrix q = quotient_Qpi(mm, nn);
            Rows out(4, std::vector<double>(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) out[i][j] = q.at(i, j);
            return out;
        },
        py::arg("m"), py::arg("n"));
    m.def(
        "quartic_coeffs",
        [](int mm, int nn) {
            QuarticSpec s = quartic_coeffs(mm, nn);
            return py::make_tuple(s.c3, s.c2, s.c1, s.c0);
        },
        py::arg("m"), py::arg("n"), "coefficients (c3, c2, c1, c0) of the monic quartic");
    m.def(
        "quartic_roots",
        [](int mm, int nn) {
            QuarticRoots r = quartic_roots(quartic_coeffs(mm, nn));
            return std::vector<double>(r.roots.begin(), r.roots.end());
        },
        py::arg("m"), py::arg("n"));
    m.def(
        "classify_root_signs",
        [](int mm, int nn) {
            RootSignPattern p = classify_root_signs(quartic_roots(quartic_coeffs(mm, nn)), mm, nn);
            py::dict d;
            d["positive"] = p.positive;
            d["negative"] = p.negative;
            d["zero"] = p.zero;
            d["alpha4_in_minus5_minus4"] = p.alpha4_in_minus5_minus4;
            d["alpha3_in_minus1_0"] = p.alpha3_in_minus1_0;
            d["lemma_case"] = p.lemma_case;
            return d;
        },
        py::arg("m"), py::arg("n"));
    m.def(
        "main3_block_form",
        [](const std::vector<int>& sizes, int i, int j) {
            auto [top, b] = main3_block_form(sizes, i, j);
            return py::make_tuple(to_rows(top), to_rows(b));
        },
        py::arg("sizes"), py::arg("part_i"), py::arg("part_j"));

    // experiment harness
    m.def(
        "compare_edge_deletion",
        [](const Graph& g, int u, int v, double tol) {
            return report_to_dict(compare_edge_deletion(g, u, v, tol));
        },
        py::arg("g"), py::arg("u"), py::arg("v"), py::arg("tol") = 1e-7);
    m.def(
        "sweep_bipartite",
        [](int m_max, int n_max) {
            py::list out;
            for (const auto& r : sweep_bipartite(m_max, n_max)) {
                py::dict d;
                d["m"] = r.m;
                d["n"] = r.n;
                d["lhs"] = r.lhs;
                d["rhs"] = r.rhs;
                d["margin"] = r.margin;
                py::dict checks;
                for (const auto& [name, ok] : r.checks) checks[py::str(name)] = ok;
                d["checks"] = checks;
                out.append(d);
            }
            return out;
        },
        py::arg("m_max"), py::arg("n_max"));
    m.def(
        "sweep_multipartite",
        [](int total_max) {
            py::list out;
            for (const auto& r : sweep_multipartite(total_max)) {
                py::dict d;
                d["sizes"] = r.sizes;
                d["part_i"] = r.part_i;
                d["part_j"] = r.part_j;
                d["lhs"] = r.lhs;
                d["rhs"] = r.rhs;
                d["margin"] = r.margin;
                d["block_form_matches"] = r.block_form_matches;
                out.append(d);
            }
            return out;
        },
        py::arg("n_total_max"));
    m.def(
        "search_corpus",
        [](const std::string& text, const std::string& predicate, double tol) {
            std::istringstream in(text);
            py::list out;
            for (const auto& r : search_corpus(in, behavior_class_from_name(predicate), tol))
                out.append(report_to_dict(r));
            return out;
        },
        py::arg("text"), py::arg("predicate"), py::arg("tol") = 1e-7,
        "scan graph6 lines for a behavior class");
    m.def(
        "verify",
        [](const std::string& name) {
            py::list out;
            for (const auto& r : run_verification(name)) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("check") = "all");

    // small-graph corpora
    m.def("connected_graphs", &connected_graphs, py::arg("n"),
          "all connected graphs on n vertices up to isomorphism (n <= 8)");
    m.def("nonisomorphic_trees", &nonisomorphic_trees, py::arg("n"),
          "all trees on n vertices up to isomorphism (n <= 10)");
}
