// Command-line front end: spectra, energies, edge-deletion comparisons,
// theorem verification sweeps and corpus searches.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecclab/forms.hpp"
#include "ecclab/graph6.hpp"
#include "ecclab/lab.hpp"
#include "ecclab/spectral.hpp"
#include "ecclab/verify.hpp"

namespace {

using namespace ecclab;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError(std::string("bad ") + what + " list: " + text);
        }
    }
    if (out.empty()) throw DomainError(std::string("empty ") + what + " list");
    return out;
}

struct GraphInput {
    std::string graph6;
    std::string edges_file;
    std::string sizes;
    std::string delete_edge_spec;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph6-encoded graph");
        cmd->add_option("--edges", edges_file, "edge-list file (\"-\" for stdin)");
        cmd->add_option("--sizes", sizes, "complete multipartite part sizes, e.g. 2,3");
        cmd->add_option("--delete", delete_edge_spec, "delete edge u,v before computing");
    }

    Graph build() const {
        int given = !graph6.empty() + !edges_file.empty() + !sizes.empty();
        if (given != 1)
            throw DomainError("give exactly one of --graph6, --edges, --sizes");
        Graph g(0);
        if (!graph6.empty()) {
            g = parse_graph6(graph6);
        } else if (!sizes.empty()) {
            g = complete_multipartite(parse_int_list(sizes, "sizes"));
        } else {
            std::string text;
            if (edges_file == "-") {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else {
                std::ifstream in(edges_file);
                if (!in) throw DomainError("cannot open file: " + edges_file);
                std::ostringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            g = parse_edge_list(text);
        }
        if (!delete_edge_spec.empty()) {
            auto uv = parse_int_list(delete_edge_spec, "edge");
            if (uv.size() != 2) throw DomainError("--delete needs exactly two vertices");
            g = ecclab::delete_edge(g, uv[0], uv[1]);
        }
        return g;
    }
};

DenseSymMatrix build_matrix(const Graph& g, const std::string& kind) {
    if (kind == "eps") return eccentricity_matrix(g);
    if (kind == "dist") return distance_matrix(g);
    if (kind == "adj") return adjacency_matrix(g);
    throw DomainError("unknown matrix kind: " + kind + " (use eps, dist or adj)");
}

OutputFormat parse_format(const std::string& f) {
    if (f == "csv") return OutputFormat::csv;
    if (f == "json") return OutputFormat::json;
    throw DomainError("unknown format: " + f + " (use csv or json)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentricity-matrix energy lab"};
    app.require_subcommand(1);

    GraphInput spec_in, energy_in, compare_in;
    std::string matrix_kind = "eps", energy_matrix_kind = "eps";
    std::string format;
    std::string edge_spec;
    double tol = 1e-7;
    int max_m = 10, max_n = 10, max_total = 10;
    std::string check_name = "all";
    std::string corpus_file, class_name;

    auto* c_spec = app.add_subcommand("spectrum", "eigenvalues of a graph matrix");
    spec_in.add_flags(c_spec);
    c_spec->add_option("--matrix", matrix_kind, "eps|dist|adj (default eps)");
    c_spec->add_option("--format", format, "csv|json (default: one value per line)");

    auto* c_energy = app.add_subcommand("energy", "graph energy of a matrix");
    energy_in.add_flags(c_energy);
    c_energy->add_option("--matrix", energy_matrix_kind, "eps|dist|adj (default eps)");
    c_energy->add_option("--format", format, "csv|json (default: plain number)");

    auto* c_compare = app.add_subcommand("compare", "energy change report for one edge deletion");
    compare_in.add_flags(c_compare);
    c_compare->add_option("--edge", edge_spec, "edge to delete, as u,v")->required();
    c_compare->add_option("--tol", tol, "equality tolerance (default 1e-7)");
    c_compare->add_option("--format", format, "csv|json (default json)");

    auto* c_sb = app.add_subcommand("sweep-bipartite", "K_{m,n} edge-deletion energy sweep");
    c_sb->add_option("--max-m", max_m, "largest m (default 10)");
    c_sb->add_option("--max-n", max_n, "largest n (default 10)");
    c_sb->add_option("--format", format, "csv|json (default csv)");

    auto* c_sk = app.add_subcommand("sweep-kpartite", "complete k-partite edge-deletion sweep");
    c_sk->add_option("--max-total", max_total, "largest total vertex count (default 10)");
    c_sk->add_option("--format", format, "csv|json (default csv)");

    auto* c_verify = app.add_subcommand("verify", "re-verify the paper's statements");
    c_verify->add_option("check", check_name,
                         "lemma1|lemma2|lemma3|lemma4|mainthm|main2|main3|"
                         "quotient-containment|all (default all)");

    auto* c_search = app.add_subcommand("search", "scan a graph6 corpus for a behavior class");
    c_search->add_option("--file", corpus_file, "graph6 file, one graph per line (\"-\" stdin)")
        ->required();
    c_search
        ->add_option("--class", class_name,
                     "eps-increase|eps-decrease|eps-equal|eps-up-dist-down|eps-down-dist-up|"
                     "one-positive-eps-eigenvalue-and-eps-decrease")
        ->required();
    c_search->add_option("--tol", tol, "equality tolerance (default 1e-7)");
    c_search->add_option("--format", format, "csv|json (default csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_spec->parsed()) {
            Spectrum s = jacobi_eigen(build_matrix(spec_in.build(), matrix_kind));
            if (format.empty()) {
                for (double v : s.values) std::printf("%.10g\n", v);
            } else {
                std::cout << emit_spectrum(s.values, parse_format(format));
            }
        } else if (c_energy->parsed()) {
            double e = energy(jacobi_eigen(build_matrix(energy_in.build(), energy_matrix_kind)));
            if (format.empty()) {
                std::printf("%.10g\n", e);
            } else if (parse_format(format) == OutputFormat::csv) {
                std::printf("matrix,energy\n%s,%.6f\n", energy_matrix_kind.c_str(), e);
            } else {
                std::printf("{\n  \"matrix\": \"%s\",\n  \"energy\": %.6f\n}\n",
                            energy_matrix_kind.c_str(), e);
            }
        } else if (c_compare->parsed()) {
            auto uv = parse_int_list(edge_spec, "edge");
            if (uv.size() != 2) throw DomainError("--edge needs exactly two vertices");
            Graph g = compare_in.build();
            auto report = compare_edge_deletion(g, uv[0], uv[1], tol);
            std::cout << emit(std::vector<EnergyChangeReport>{report},
                              format.empty() ? OutputFormat::json : parse_format(format));
        } else if (c_sb->parsed()) {
            std::cout << emit(sweep_bipartite(max_m, max_n),
                              format.empty() ? OutputFormat::csv : parse_format(format));
        } else if (c_sk->parsed()) {
            std::cout << emit(sweep_multipartite(max_total),
                              format.empty() ? OutputFormat::csv : parse_format(format));
        } else if (c_verify->parsed()) {
            bool all_pass = true;
            for (const auto& r : run_verification(check_name)) {
                std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                            r.detail.c_str());
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 1;
        } else if (c_search->parsed()) {
            BehaviorClass cls = behavior_class_from_name(class_name);
            std::vector<std::string> warnings;
            std::vector<EnergyChangeReport> hits;
            if (corpus_file == "-") {
                hits = search_corpus(std::cin, cls, tol, &warnings);
            } else {
                std::ifstream in(corpus_file);
                if (!in) throw DomainError("cannot open file: " + corpus_file);
                hits = search_corpus(in, cls, tol, &warnings);
            }
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            std::cout << emit(hits, format.empty() ? OutputFormat::csv : parse_format(format));
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ConnectivityError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
