#include "ecclab/graph6.hpp"

#include <string_view>

namespace ecclab {

// graph6 packs the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... into
// 6-bit groups, each stored as byte value + 63. Short form only: the order
// is a single byte 63..125 ('~' opens the long form, which is out of scope
// at this graph scale).

namespace {
constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string_view s(text);
    std::size_t base = 0;
    if (s.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        s.remove_prefix(kHeader.size());
    }
    // tolerate one trailing newline, as in one-graph-per-line files
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty graph6 string", base);

    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126)
        throw ParseError("graph6 long form (order > 62) not supported", base);
    if (c0 < kBias || c0 > 125)
        throw ParseError("malformed graph6 header byte", base);
    int n = c0 - kBias;

    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (s.size() - 1 < bytes_needed)
        throw ParseError("graph6 string truncated: need " + std::to_string(bytes_needed) +
                             " data bytes, got " + std::to_string(s.size() - 1),
                         base + s.size());
    if (s.size() - 1 > bytes_needed)
        throw ParseError("trailing garbage after graph6 data", base + 1 + bytes_needed);

    Graph g(n);
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            std::size_t byte_idx = 1 + static_cast<std::size_t>(bit / 6);
            unsigned char c = static_cast<unsigned char>(s[byte_idx]);
            if (c < kBias || c > 126)
                throw ParseError("graph6 data byte out of range", base + byte_idx);
            int val = c - kBias;
            if (val & (1 << (5 - bit % 6))) g.add_edge(u, v);
        }
    }
    // validate the padding bits of the last byte too
    for (; bit < static_cast<long>(bytes_needed) * 6; ++bit) {
        std::size_t byte_idx = 1 + static_cast<std::size_t>(bit / 6);
        unsigned char c = static_cast<unsigned char>(s[byte_idx]);
        if (c < kBias || c > 126)
            throw ParseError("graph6 data byte out of range", base + byte_idx);
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw DomainError("graph6 short form requires order <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

}  // namespace ecclab
