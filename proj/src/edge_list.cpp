#include "locdim/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace locdim {

namespace {

bool is_integer_token(const std::string& t) {
    return !t.empty() &&
           std::all_of(t.begin(), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct RawLine {
    int number;
    std::string a;
    std::string b;
};

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    bool saw_content = false;
    std::vector<RawLine> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> parts;
        std::string tok;
        while (tokens >> tok) parts.push_back(tok);
        if (parts.empty()) continue;
        if (!saw_content && parts.size() == 2 && parts[0] == "n" && is_integer_token(parts[1])) {
            declared_n = std::stoi(parts[1]);
            saw_content = true;
            continue;
        }
        saw_content = true;
        if (parts.size() != 2) throw ParseError(line_no, "expected 'u v'");
        rows.push_back({line_no, parts[0], parts[1]});
    }

    bool label_mode = std::any_of(rows.begin(), rows.end(), [](const RawLine& r) {
        return !is_integer_token(r.a) || !is_integer_token(r.b);
    });

    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    int max_index = -1;
    std::map<std::string, int> label_index;
    auto resolve = [&](const RawLine& row, const std::string& t) {
        if (label_mode) {
            auto [it, inserted] = label_index.emplace(t, static_cast<int>(labels.size()));
            if (inserted) labels.push_back(t);
            return it->second;
        }
        int v = std::stoi(t);
        if (declared_n >= 0 && v >= declared_n)
            throw ParseError(row.number, "vertex " + t + " exceeds declared count");
        max_index = std::max(max_index, v);
        return v;
    };
    for (const auto& row : rows) {
        int u = resolve(row, row.a);
        int v = resolve(row, row.b);
        if (u == v) throw ParseError(row.number, "self-loop at '" + row.a + "'");
        edges.emplace_back(u, v);
    }

    int n = label_mode ? static_cast<int>(labels.size()) : max_index + 1;
    if (declared_n >= 0) {
        if (n > declared_n) throw ParseError(0, "more vertices than declared");
        n = declared_n;
    }
    if (n < 0) n = 0;
    if (label_mode) labels.resize(static_cast<size_t>(n));
    return Graph::from_edge_list(n, edges, std::move(labels));
}

Graph read_edge_list(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace locdim
