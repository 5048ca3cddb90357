#include "ecclab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace ecclab {

Graph::Graph(int n) : n_(n), edge_count_(0), adj_(std::max(n, 0)) {
    if (n < 0) throw DomainError("vertex count must be nonnegative");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("edge endpoint out of range: (" + std::to_string(u) + "," +
                          std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw DomainError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int u) const {
    if (u < 0 || u >= n_) throw DomainError("vertex out of range: " + std::to_string(u));
    return adj_[u];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    Graph g(0);
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (n < 0) {
            if (first != "n")
                throw ParseError("edge list must start with a \"n <count>\" line", lineno);
            int count;
            if (!(ls >> count) || count < 0)
                throw ParseError("bad vertex count on line " + std::to_string(lineno), lineno);
            std::string rest;
            if (ls >> rest)
                throw ParseError("trailing tokens on line " + std::to_string(lineno), lineno);
            n = count;
            g = Graph(n);
            continue;
        }
        int u, v;
        std::istringstream es(line);
        if (!(es >> u >> v))
            throw ParseError("expected \"u v\" on line " + std::to_string(lineno), lineno);
        std::string rest;
        if (es >> rest) throw ParseError("trailing tokens on line " + std::to_string(lineno), lineno);
        try {
            g.add_edge(u, v);
        } catch (const DomainError& e) {
            throw ParseError(std::string(e.what()) + " on line " + std::to_string(lineno), lineno);
        }
    }
    if (n < 0) throw ParseError("empty edge list", 0);
    return g;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw DomainError("complete multipartite graph needs k >= 2 parts");
    for (int s : sizes)
        if (s < 1) throw DomainError("part sizes must be positive");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    Graph g(n);
    std::vector<int> part_of(n);
    int base = 0, idx = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i) part_of[base + i] = idx;
        base += s;
        ++idx;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") not present");
    Graph out(g.order());
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) out.add_edge(a, b);
    return out;
}

namespace {

// Single-source BFS; unreached entries stay -1.
void bfs_from(const Graph& g, int src, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

DistanceMatrix bfs_all_pairs(const Graph& g) {
    int n = g.order();
    DistanceMatrix m;
    m.n = n;
    m.d.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> dist(n);
    for (int u = 0; u < n; ++u) {
        bfs_from(g, u, dist);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0)
                throw ConnectivityError("graph is disconnected: no path from " +
                                            std::to_string(u) + " to " + std::to_string(v),
                                        u, v);
            m.d[static_cast<std::size_t>(u) * n + v] = dist[v];
        }
    }
    return m;
}

EccentricityVector eccentricities(const DistanceMatrix& d) {
    EccentricityVector e(d.n, 0);
    for (int u = 0; u < d.n; ++u)
        for (int v = 0; v < d.n; ++v) e[u] = std::max(e[u], d.at(u, v));
    return e;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    std::vector<int> dist(n);
    bfs_from(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

}  // namespace ecclab
