#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecclab/graph.hpp"

namespace ecclab {

enum class ChangeClass { increase, decrease, equal };

std::string_view to_string(ChangeClass c);

// Energies of one graph before/after deleting edge {u,v}, for the
// eccentricity, distance and adjacency matrices.
struct EnergyChangeReport {
    std::string graph_id;
    int u = 0, v = 0;
    double eps_before = 0, eps_after = 0;
    double dist_before = 0, dist_after = 0;
    double adj_before = 0, adj_after = 0;
    ChangeClass eps_class = ChangeClass::equal;
    ChangeClass dist_class = ChangeClass::equal;
};

// Requires: g connected, edge present, g-e still connected.
// |delta| <= tol classifies as equal.
EnergyChangeReport compare_edge_deletion(const Graph& g, int u, int v, double tol = 1e-7,
                                         std::string_view graph_id = "");

struct BipartiteSweepRow {
    int m = 0, n = 0;
    double lhs = 0;    // E_eps(K_{m,n}), closed form
    double rhs = 0;    // E_eps(K_{m,n}-e), closed form
    double margin = 0; // rhs - lhs
    std::vector<std::pair<std::string, bool>> checks;
};

// One row per 2 <= m <= m_max, m <= n <= n_max. Checks per row:
// lemma_signs (root sign classification), vieta (residuals in tolerance),
// defn_match (closed-form spectrum equals the numeric one within 1e-7).
std::vector<BipartiteSweepRow> sweep_bipartite(int m_max, int n_max);

struct MultipartiteSweepRow {
    std::vector<int> sizes;
    int part_i = 0, part_j = 0;  // 1-based part indices
    double lhs = 0;              // E_eps before, definitional
    double rhs = 0;              // E_eps after, definitional
    double margin = 0;
    bool block_form_matches = false;  // claimed decomposition == true eps-matrix
};

// Every size tuple with k >= 2, n_i >= 2, sum <= n_total_max (parts
// non-decreasing), and every part pair; the deleted edge joins the first
// vertices of the two parts.
std::vector<MultipartiteSweepRow> sweep_multipartite(int n_total_max);

enum class BehaviorClass {
    eps_increase,
    eps_decrease,
    eps_equal,
    eps_up_dist_down,
    eps_down_dist_up,
    one_positive_eps_and_eps_decrease,
};

// Names as accepted by the CLI: "eps-increase", ...,
// "one-positive-eps-eigenvalue-and-eps-decrease".
BehaviorClass behavior_class_from_name(std::string_view name);
std::string_view to_string(BehaviorClass c);

// Scan graph6 lines; for each connected graph test every edge whose
// deletion keeps it connected and return the reports matching `predicate`
// in input order. Disconnected inputs are skipped; if `warnings` is given
// a note per skipped line is appended. Undecodable lines raise ParseError
// naming the line number.
std::vector<EnergyChangeReport> search_corpus(std::istream& stream, BehaviorClass predicate,
                                              double tol = 1e-7,
                                              std::vector<std::string>* warnings = nullptr);

enum class OutputFormat { csv, json };

// Fixed column order, reals with 6 decimals. JSON mirrors the CSV fields.
std::string emit(const std::vector<EnergyChangeReport>& rows, OutputFormat f);
std::string emit(const std::vector<BipartiteSweepRow>& rows, OutputFormat f);
std::string emit(const std::vector<MultipartiteSweepRow>& rows, OutputFormat f);
std::string emit_spectrum(const std::vector<double>& values, OutputFormat f);

}  // namespace ecclab
