#include "ndl/edgelist.hpp"

#include <fstream>
#include <sstream>

#include "ndl/graph6.hpp"

namespace ndl {

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    bool n_fixed = false;
    int max_endpoint = -1;

    std::istringstream stream{std::string(text)};
    std::string line;
    int lineno = 0;
    bool first_content_line = true;
    while (std::getline(stream, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        if (!(fields >> tok))
            continue; // blank or comment-only

        if (first_content_line && tok.rfind("n=", 0) == 0) {
            first_content_line = false;
            try {
                size_t used = 0;
                n = std::stoi(tok.substr(2), &used);
                if (used != tok.size() - 2 || n < 0)
                    throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw Error(ErrorCode::parse,
                            "line " + std::to_string(lineno) + ": bad vertex count");
            }
            n_fixed = true;
            std::string extra;
            if (fields >> extra)
                throw Error(ErrorCode::parse,
                            "line " + std::to_string(lineno) + ": trailing tokens");
            continue;
        }
        first_content_line = false;

        int u, v;
        std::string second, extra;
        if (!(fields >> second) || (fields >> extra))
            throw Error(ErrorCode::parse,
                        "line " + std::to_string(lineno) + ": expected 'u v'");
        try {
            size_t pu = 0, pv = 0;
            u = std::stoi(tok, &pu);
            v = std::stoi(second, &pv);
            if (pu != tok.size() || pv != second.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw Error(ErrorCode::parse,
                        "line " + std::to_string(lineno) + ": expected 'u v'");
        }
        if (u < 0 || v < 0)
            throw Error(ErrorCode::parse,
                        "line " + std::to_string(lineno) + ": negative vertex");
        edges.emplace_back(u, v);
        max_endpoint = std::max({max_endpoint, u, v});
    }

    if (!n_fixed)
        n = max_endpoint + 1;
    return Graph::build(n, edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
                return parse_graph6(line);
        }
        throw Error(ErrorCode::truncated, path + ": no graph6 record found");
    }
    return parse_edge_list(text);
}

} // namespace ndl
