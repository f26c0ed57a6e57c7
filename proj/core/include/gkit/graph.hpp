#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gkit/errors.hpp"
#include "gkit/vertexset.hpp"

namespace gkit {

// Simple undirected graph on at most 64 vertices. One adjacency bitset per
// vertex; symmetric, irreflexive, no bits at positions >= n. Immutable in
// normal use: build it, then treat it as a value.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long edge_count() const;
    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    void add_edge(int u, int v);

    // New graph with one extra vertex (index order()) adjacent to exactly
    // `neighbors_of_new`.
    Graph augmented(VertexSet neighbors_of_new) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// --- graph6 and edge-list formats ------------------------------------------

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// First line "n <count>", then "u v" per edge; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// --- basic operations -------------------------------------------------------

Graph complement(const Graph& g);

// Dense reindexing: vertices of s become 0..|s|-1 in ascending original
// order. The index map back to g is vertex_list(s).
Graph induced_subgraph(const Graph& g, VertexSet s);
inline std::vector<int> vertex_list(VertexSet s) { return s.to_vector(); }

VertexSet closed_neighborhood(const Graph& g, VertexSet f);

// Support of G_F = G minus N[F]; f must be independent.
VertexSet g_sub_f_support(const Graph& g, VertexSet f);
Graph g_sub_f(const Graph& g, VertexSet f);

bool is_connected(const Graph& g);
bool is_cycle_at_least(const Graph& g, int k);
bool is_triangle_free(const Graph& g);
VertexSet isolated_vertices(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

Graph disjoint_union(const Graph& a, const Graph& b);

// Relabel: vertex v of the result is old vertex perm[v].
Graph relabeled(const Graph& g, const std::vector<int>& perm);

struct StrippedGraph {
    Graph graph;
    std::vector<int> to_original; // new index -> original index
};
StrippedGraph strip_isolated(const Graph& g);

// --- fixed families ---------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_complement(int n);

} // namespace gkit
