#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace sgr {

struct Edge {
    std::string name;
    int src = 0;
    int dst = 0;
};

// Finite directed graph. Vertex and edge indices follow declaration order;
// that order also fixes the special edge of each vertex (its first out-edge).
class Graph {
public:
    Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

    static Graph from_names(const std::vector<std::string>& vertices,
                            const std::vector<std::tuple<std::string, std::string, std::string>>& edges);
    static Graph rose(int loops);  // one vertex "v", loops e1..ek
    static Graph l12() { return rose(2); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_index(const std::string& name) const;
    int edge_index(const std::string& name) const;

    const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
    int special_edge(int v) const;  // -1 for a sink
    bool has_sinks() const;
    bool on_cycle(int v) const;

    // All real paths of length n (n >= 1) in lexicographic edge order.
    std::vector<std::vector<int>> paths(int n) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
};

}  // namespace sgr
