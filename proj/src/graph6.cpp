#include "ndl/graph6.hpp"

#include <cstdint>

namespace ndl {

namespace detail {

std::string encode_graph6(int n, const std::function<bool(int, int)>& adj) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        // 4-byte form: "~~" then 36 bits.
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((static_cast<long long>(n) >> shift) & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

} // namespace detail

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header)
        line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw Error(ErrorCode::truncated, "empty graph6 record");

    auto need = [&](size_t k) {
        if (line.size() < k)
            throw Error(ErrorCode::truncated, "graph6 record too short");
    };
    auto value = [&](size_t i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw Error(ErrorCode::bad_char,
                        "byte outside graph6 range at offset " + std::to_string(i));
        return static_cast<long long>(c - 63);
    };

    size_t pos = 0;
    long long n;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    } else if (line.size() >= 2 && value(1) < 63) {
        need(4);
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    } else {
        need(8);
        n = 0;
        for (size_t i = 2; i < 8; ++i)
            n = (n << 6) | value(i);
        pos = 8;
    }

    if (n > 10'000'000)
        throw Error(ErrorCode::parse, "graph6 vertex count implausibly large");

    long long nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    need(pos + nbytes);
    // trailing garbage would make round trips ambiguous
    if (line.size() > pos + nbytes)
        throw Error(ErrorCode::parse, "trailing bytes after graph6 record");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            long long byte = value(pos + bit / 6);
            int shift = 5 - static_cast<int>(bit % 6);
            if ((byte >> shift) & 1)
                edges.emplace_back(i, j);
        }
    }
    return Graph::build(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    return detail::encode_graph6(g.vertex_count(),
                                 [&](int i, int j) { return g.adjacent(i, j); });
}

} // namespace ndl
