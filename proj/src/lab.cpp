#include "ecclab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ecclab/forms.hpp"
#include "ecclab/graph6.hpp"
#include "ecclab/spectral.hpp"

namespace ecclab {

namespace {

ChangeClass classify(double before, double after, double tol) {
    double delta = after - before;
    if (delta > tol) return ChangeClass::increase;
    if (delta < -tol) return ChangeClass::decrease;
    return ChangeClass::equal;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string join_sizes(const std::vector<int>& sizes) {
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(sizes[i]);
    }
    return out;
}

// Multisets equal when the descending-sorted values agree elementwise.
bool spectra_match(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

std::string_view to_string(ChangeClass c) {
    switch (c) {
        case ChangeClass::increase: return "increase";
        case ChangeClass::decrease: return "decrease";
        default: return "equal";
    }
}

EnergyChangeReport compare_edge_deletion(const Graph& g, int u, int v, double tol,
                                         std::string_view graph_id) {
    if (!g.has_edge(u, v))
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") not present");
    Graph h = delete_edge(g, u, v);
    // distance/eccentricity construction below rejects disconnected inputs
    EnergyChangeReport r;
    r.graph_id = graph_id.empty() ? encode_graph6(g) : std::string(graph_id);
    r.u = u;
    r.v = v;
    r.eps_before = energy(jacobi_eigen(eccentricity_matrix(g)));
    r.dist_before = energy(jacobi_eigen(distance_matrix(g)));
    r.adj_before = energy(jacobi_eigen(adjacency_matrix(g)));
    r.eps_after = energy(jacobi_eigen(eccentricity_matrix(h)));
    r.dist_after = energy(jacobi_eigen(distance_matrix(h)));
    r.adj_after = energy(jacobi_eigen(adjacency_matrix(h)));
    r.eps_class = classify(r.eps_before, r.eps_after, tol);
    r.dist_class = classify(r.dist_before, r.dist_after, tol);
    return r;
}

std::vector<BipartiteSweepRow> sweep_bipartite(int m_max, int n_max) {
    if (m_max < 2 || n_max < 2) throw DomainError("sweep bounds must be >= 2");
    std::vector<BipartiteSweepRow> rows;
    for (int m = 2; m <= m_max; ++m) {
        for (int n = m; n <= n_max; ++n) {
            BipartiteSweepRow row;
            row.m = m;
            row.n = n;
            row.lhs = multipartite_eps_spectrum({m, n}).energy();
            QuarticSpec spec = quartic_coeffs(m, n);
            QuarticRoots roots = quartic_roots(spec);
            EpsSpectrumClosedForm after = kmn_minus_e_spectrum(m, n);
            row.rhs = after.energy();
            row.margin = row.rhs - row.lhs;

            bool signs_ok = true;
            try {
                classify_root_signs(roots, m, n);
            } catch (const VerificationError&) {
                signs_ok = false;
            }
            auto res = vieta_residuals(roots, spec);
            bool vieta_ok = res[0] <= 1e-6 * (1.0 + std::abs(spec.c3)) &&
                            res[1] <= 1e-6 * (1.0 + std::abs(spec.c2)) &&
                            res[2] <= 1e-6 * (1.0 + std::abs(spec.c1)) &&
                            res[3] <= 1e-6 * (1.0 + std::abs(spec.c0));
            Graph ge = delete_edge(complete_multipartite({m, n}), 0, m);
            bool defn_ok =
                spectra_match(jacobi_eigen(eccentricity_matrix(ge)).values, after.values(), 1e-7);
            row.checks = {{"lemma_signs", signs_ok}, {"vieta", vieta_ok}, {"defn_match", defn_ok}};
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

// ascending part-size tuples, every part >= 2, total <= cap
void size_tuples(int cap, std::vector<int>& cur, int total, std::vector<std::vector<int>>& out) {
    if (cur.size() >= 2) out.push_back(cur);
    int start = cur.empty() ? 2 : cur.back();
    for (int s = start; total + s <= cap; ++s) {
        cur.push_back(s);
        size_tuples(cap, cur, total + s, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultipartiteSweepRow> sweep_multipartite(int n_total_max) {
    if (n_total_max < 4) throw DomainError("total size cap must be >= 4");
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    size_tuples(n_total_max, cur, 0, tuples);

    std::vector<MultipartiteSweepRow> rows;
    for (const auto& sizes : tuples) {
        int k = static_cast<int>(sizes.size());
        Graph g = complete_multipartite(sizes);
        double before = energy(jacobi_eigen(eccentricity_matrix(g)));
        std::vector<int> offset(k, 0);
        for (int i = 1; i < k; ++i) offset[i] = offset[i - 1] + sizes[i - 1];
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                MultipartiteSweepRow row;
                row.sizes = sizes;
                row.part_i = i;
                row.part_j = j;
                row.lhs = before;
                Graph h = delete_edge(g, offset[i - 1], offset[j - 1]);
                DenseSymMatrix eps = eccentricity_matrix(h);
                row.rhs = energy(jacobi_eigen(eps));
                row.margin = row.rhs - row.lhs;

                // compare the claimed block form against the true matrix,
                // in the vertex order (part i, part j, remaining parts)
                auto [top, b] = main3_block_form(sizes, i, j);
                std::vector<int> order;
                for (int t = 0; t < sizes[i - 1]; ++t) order.push_back(offset[i - 1] + t);
                for (int t = 0; t < sizes[j - 1]; ++t) order.push_back(offset[j - 1] + t);
                for (int l = 1; l <= k; ++l) {
                    if (l == i || l == j) continue;
                    for (int t = 0; t < sizes[l - 1]; ++t) order.push_back(offset[l - 1] + t);
                }
                int nn = h.order(), tn = top.dim();
                bool match = true;
                for (int a = 0; a < nn && match; ++a) {
                    for (int c = 0; c < nn && match; ++c) {
                        double claimed = 0.0;
                        if (a < tn && c < tn)
                            claimed = top.at(a, c);
                        else if (a >= tn && c >= tn)
                            claimed = b.at(a - tn, c - tn);
                        if (claimed != eps.at(order[a], order[c])) match = false;
                    }
                }
                row.block_form_matches = match;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

BehaviorClass behavior_class_from_name(std::string_view name) {
    if (name == "eps-increase") return BehaviorClass::eps_increase;
    if (name == "eps-decrease") return BehaviorClass::eps_decrease;
    if (name == "eps-equal") return BehaviorClass::eps_equal;
    if (name == "eps-up-dist-down") return BehaviorClass::eps_up_dist_down;
    if (name == "eps-down-dist-up") return BehaviorClass::eps_down_dist_up;
    if (name == "one-positive-eps-eigenvalue-and-eps-decrease")
        return BehaviorClass::one_positive_eps_and_eps_decrease;
    throw DomainError("unknown behavior class: " + std::string(name));
}

std::string_view to_string(BehaviorClass c) {
    switch (c) {
        case BehaviorClass::eps_increase: return "eps-increase";
        case BehaviorClass::eps_decrease: return "eps-decrease";
        case BehaviorClass::eps_equal: return "eps-equal";
        case BehaviorClass::eps_up_dist_down: return "eps-up-dist-down";
        case BehaviorClass::eps_down_dist_up: return "eps-down-dist-up";
        default: return "one-positive-eps-eigenvalue-and-eps-decrease";
    }
}

std::vector<EnergyChangeReport> search_corpus(std::istream& stream, BehaviorClass predicate,
                                              double tol, std::vector<std::string>* warnings) {
    std::vector<EnergyChangeReport> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        Graph g(0);
        try {
            g = parse_graph6(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
        }
        if (!is_connected(g)) {
            if (warnings)
                warnings->push_back("line " + std::to_string(lineno) +
                                    ": disconnected graph skipped");
            continue;
        }
        if (g.size() == 0) continue;

        Spectrum eps_spec = jacobi_eigen(eccentricity_matrix(g));
        long n_positive = std::count_if(eps_spec.values.begin(), eps_spec.values.end(),
                                        [](double v) { return v > 1e-6; });
        bool one_positive = n_positive == 1;
        double eps_before = energy(eps_spec);
        double dist_before = energy(jacobi_eigen(distance_matrix(g)));

        for (auto [u, v] : g.edges()) {
            Graph h = delete_edge(g, u, v);
            if (!is_connected(h)) continue;
            double eps_after = energy(jacobi_eigen(eccentricity_matrix(h)));
            double dist_after = energy(jacobi_eigen(distance_matrix(h)));
            ChangeClass ec = classify(eps_before, eps_after, tol);
            ChangeClass dc = classify(dist_before, dist_after, tol);
            bool hit = false;
            switch (predicate) {
                case BehaviorClass::eps_increase: hit = ec == ChangeClass::increase; break;
                case BehaviorClass::eps_decrease: hit = ec == ChangeClass::decrease; break;
                case BehaviorClass::eps_equal: hit = ec == ChangeClass::equal; break;
                case BehaviorClass::eps_up_dist_down:
                    hit = ec == ChangeClass::increase && dc == ChangeClass::decrease;
                    break;
                case BehaviorClass::eps_down_dist_up:
                    hit = ec == ChangeClass::decrease && dc == ChangeClass::increase;
                    break;
                case BehaviorClass::one_positive_eps_and_eps_decrease:
                    hit = one_positive && ec == ChangeClass::decrease;
                    break;
            }
            if (!hit) continue;
            EnergyChangeReport r;
            r.graph_id = line;
            r.u = u;
            r.v = v;
            r.eps_before = eps_before;
            r.eps_after = eps_after;
            r.dist_before = dist_before;
            r.dist_after = dist_after;
            r.adj_before = energy(jacobi_eigen(adjacency_matrix(g)));
            r.adj_after = energy(jacobi_eigen(adjacency_matrix(h)));
            r.eps_class = ec;
            r.dist_class = dc;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string emit(const std::vector<EnergyChangeReport>& rows, OutputFormat f) {
    if (f == OutputFormat::csv) {
        std::string out =
            "graph_id,u,v,eps_before,eps_after,dist_before,dist_after,adj_before,adj_after,"
            "eps_class,dist_class\n";
        for (const auto& r : rows) {
            out += r.graph_id + ',' + std::to_string(r.u) + ',' + std::to_string(r.v) + ',' +
                   fixed6(r.eps_before) + ',' + fixed6(r.eps_after) + ',' +
                   fixed6(r.dist_before) + ',' + fixed6(r.dist_after) + ',' +
                   fixed6(r.adj_before) + ',' + fixed6(r.adj_after) + ',' +
                   std::string(to_string(r.eps_class)) + ',' +
                   std::string(to_string(r.dist_class)) + '\n';
        }
        return out;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"graph_id", r.graph_id},
                       {"edge", {r.u, r.v}},
                       {"eps_before", round6(r.eps_before)},
                       {"eps_after", round6(r.eps_after)},
                       {"dist_before", round6(r.dist_before)},
                       {"dist_after", round6(r.dist_after)},
                       {"adj_before", round6(r.adj_before)},
                       {"adj_after", round6(r.adj_after)},
                       {"eps_class", std::string(to_string(r.eps_class))},
                       {"dist_class", std::string(to_string(r.dist_class))}});
    }
    return arr.dump(2) + "\n";
}

std::string emit(const std::vector<BipartiteSweepRow>& rows, OutputFormat f) {
    if (f == OutputFormat::csv) {
        std::string out = "m,n,lhs,rhs,margin";
        if (!rows.empty())
            for (const auto& [name, _] : rows.front().checks) out += ',' + name;
        out += '\n';
        for (const auto& r : rows) {
            out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + fixed6(r.lhs) + ',' +
                   fixed6(r.rhs) + ',' + fixed6(r.margin);
            for (const auto& [_, ok] : r.checks) out += ok ? ",true" : ",false";
            out += '\n';
        }
        return out;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json checks = nlohmann::json::object();
        for (const auto& [name, ok] : r.checks) checks[name] = ok;
        arr.push_back({{"m", r.m},
                       {"n", r.n},
                       {"lhs", round6(r.lhs)},
                       {"rhs", round6(r.rhs)},
                       {"margin", round6(r.margin)},
                       {"checks", checks}});
    }
    return arr.dump(2) + "\n";
}

std::string emit(const std::vector<MultipartiteSweepRow>& rows, OutputFormat f) {
    if (f == OutputFormat::csv) {
        std::string out = "sizes,part_i,part_j,lhs,rhs,margin,block_form_matches\n";
        for (const auto& r : rows) {
            out += join_sizes(r.sizes) + ',' + std::to_string(r.part_i) + ',' +
                   std::to_string(r.part_j) + ',' + fixed6(r.lhs) + ',' + fixed6(r.rhs) + ',' +
                   fixed6(r.margin) + (r.block_form_matches ? ",true" : ",false") + '\n';
        }
        return out;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"sizes", r.sizes},
                       {"part_i", r.part_i},
                       {"part_j", r.part_j},
                       {"lhs", round6(r.lhs)},
                       {"rhs", round6(r.rhs)},
                       {"margin", round6(r.margin)},
                       {"block_form_matches", r.block_form_matches}});
    }
    return arr.dump(2) + "\n";
}

std::string emit_spectrum(const std::vector<double>& values, OutputFormat f) {
    if (f == OutputFormat::csv) {
        std::string out = "index,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            out += std::to_string(i) + ',' + fixed6(values[i]) + '\n';
        return out;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (double v : values) arr.push_back(round6(v));
    return nlohmann::json{{"values", arr}}.dump(2) + "\n";
}

}  // namespace ecclab
