#include "domlab/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace domlab {

Graph::Graph(int order, std::span<const VertexPair> edges, std::string name)
    : order_(order), name_(std::move(name)) {
    if (order < 1) throw std::invalid_argument("graph order must be at least 1");
    adj_.assign(static_cast<std::size_t>(order), Bitset(order));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (adj_[static_cast<std::size_t>(u)].test(v)) continue;
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
        ++edge_count_;
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_) throw std::out_of_range("vertex index out of range");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].test(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)].count();
}

bool Graph::has_isolated_vertex() const {
    for (const auto& row : adj_)
        if (row.none()) return true;
    return false;
}

const Bitset& Graph::neighbors_open(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

Bitset Graph::neighbors_closed(int v) const {
    Bitset s = neighbors_open(v);
    s.set(v);
    return s;
}

std::vector<VertexPair> Graph::edge_list() const {
    std::vector<VertexPair> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order_; ++u)
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& line, const std::string& why) {
    std::ostringstream msg;
    msg << "edge list parse error at line " << line_no << " (\"" << line << "\"): " << why;
    throw std::runtime_error(msg.str());
}

} // namespace

Graph parse_edge_list(std::istream& in, std::string name) {
    std::string line;
    int line_no = 0;
    int order = -1;
    std::vector<VertexPair> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (first[0] == '#') continue;
        if (order < 0) {
            std::string extra;
            std::size_t pos = 0;
            int n = 0;
            try {
                n = std::stoi(first, &pos);
            } catch (const std::exception&) {
                parse_fail(line_no, line, "expected vertex count");
            }
            if (pos != first.size() || (ls >> extra))
                parse_fail(line_no, line, "expected a single vertex count");
            if (n < 1) parse_fail(line_no, line, "vertex count must be at least 1");
            order = n;
            continue;
        }
        int u = 0, v = 0;
        std::istringstream es(line);
        std::string tail;
        if (!(es >> u >> v) || (es >> tail))
            parse_fail(line_no, line, "expected \"u v\"");
        if (u < 0 || u >= order || v < 0 || v >= order)
            parse_fail(line_no, line, "vertex index out of range");
        if (u == v) parse_fail(line_no, line, "self-loop");
        edges.emplace_back(u, v);
    }
    if (order < 0) throw std::runtime_error("edge list parse error: missing vertex count line");
    return Graph(order, edges, std::move(name));
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path.string());
    return parse_edge_list(in, path.stem().string());
}

void write_edge_list(const Graph& g, std::ostream& out) {
    if (!g.name().empty()) out << "# " << g.name() << "\n";
    out << g.order() << "\n";
    for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
}

} // namespace domlab
