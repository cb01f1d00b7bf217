#include "sgr/graph.hpp"

#include <algorithm>
#include <set>

#include "sgr/errors.hpp"

namespace sgr {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw InputError("BadGraph", "graph has no vertices");
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) throw InputError("BadGraph", "duplicate vertex name");
    std::set<std::string> enames;
    out_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (!enames.insert(e.name).second) throw InputError("BadGraph", "duplicate edge " + e.name);
        if (seen.count(e.name)) throw InputError("BadGraph", "edge name clashes with vertex " + e.name);
        if (e.name.empty() || e.name.back() == '*')
            throw InputError("BadGraph", "edge names may not be empty or end in '*'");
        auto n = static_cast<int>(vertices_.size());
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            throw InputError("BadGraph", "edge endpoint out of range: " + e.name);
        out_[static_cast<std::size_t>(e.src)].push_back(static_cast<int>(i));
    }
}

Graph Graph::from_names(
    const std::vector<std::string>& vertices,
    const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
    auto find = [&](const std::string& v) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return static_cast<int>(i);
        throw InputError("UnknownSymbol", "vertex " + v);
    };
    std::vector<Edge> es;
    for (const auto& [name, s, d] : edges) es.push_back({name, find(s), find(d)});
    return Graph(vertices, es);
}

Graph Graph::rose(int loops) {
    std::vector<Edge> es;
    for (int i = 1; i <= loops; ++i) es.push_back({"e" + std::to_string(i), 0, 0});
    return Graph({"v"}, es);
}

int Graph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return static_cast<int>(i);
    return -1;
}

int Graph::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Graph::special_edge(int v) const {
    const auto& o = out_edges(v);
    return o.empty() ? -1 : o.front();
}

bool Graph::has_sinks() const {
    for (const auto& o : out_)
        if (o.empty()) return true;
    return false;
}

bool Graph::on_cycle(int v) const {
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<int> stack;
    for (int e : out_edges(v)) stack.push_back(edges_[static_cast<std::size_t>(e)].dst);
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        if (w == v) return true;
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        for (int e : out_edges(w)) stack.push_back(edges_[static_cast<std::size_t>(e)].dst);
    }
    return false;
}

std::vector<std::vector<int>> Graph::paths(int n) const {
    std::vector<std::vector<int>> cur;
    for (std::size_t e = 0; e < edges_.size(); ++e) cur.push_back({static_cast<int>(e)});
    for (int len = 1; len < n; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& p : cur)
            for (int e : out_edges(edges_[static_cast<std::size_t>(p.back())].dst)) {
                auto q = p;
                q.push_back(e);
                next.push_back(std::move(q));
            }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto &x = a.edges_[i], &y = b.edges_[i];
        if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
    }
    return true;
}

}  // namespace sgr
