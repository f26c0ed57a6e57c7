#include "gkit/graph.hpp"

#include <algorithm>
#include <sstream>

namespace gkit {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw TooLarge("graph order must be in [0,64], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw MalformedInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
}

long Graph::edge_count() const {
    long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

Graph Graph::augmented(VertexSet neighbors_of_new) const {
    Graph h(n_ + 1);
    h.adj_ = adj_;
    h.adj_.push_back(neighbors_of_new);
    for (int u : neighbors_of_new) h.adj_[static_cast<std::size_t>(u)].add(n_);
    return h;
}

// --- graph6 ------------------------------------------------------------------

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int chunk = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            chunk <<= 1;
            if (i + j < bits.size() && bits[i + j]) chunk |= 1;
        }
        out.push_back(static_cast<char>(chunk + kG6Lo));
    }
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw MalformedGraph6("empty graph6 string");
    for (char c : text)
        if (static_cast<unsigned char>(c) < kG6Lo || static_cast<unsigned char>(c) > kG6Hi)
            throw MalformedGraph6("byte outside 63..126 in graph6 string");

    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        // Long form: '~' + three 6-bit chunks. ">>>~..." (8-byte) headers would
        // mean n > 64 anyway, so they land in the TooLarge-style check below.
        if (text.size() < 4) throw MalformedGraph6("truncated graph6 size header");
        if (text[1] == '~') throw MalformedGraph6("graph6 order exceeds 64");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[static_cast<std::size_t>(i)] - kG6Lo);
        pos = 4;
    } else {
        n = text[0] - kG6Lo;
        pos = 1;
    }
    if (n > Graph::kMaxVertices) throw MalformedGraph6("graph6 order exceeds 64: " + std::to_string(n));

    const long pair_bits = n * (n - 1) / 2;
    const std::size_t want = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (text.size() - pos != want)
        throw MalformedGraph6("graph6 body length mismatch: expected " + std::to_string(want) +
                              " bytes, got " + std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
        int chunk = text[i] - kG6Lo;
        for (int j = 5; j >= 0; --j, ++bit) {
            bool set = (chunk >> j) & 1;
            if (bit >= pair_bits) {
                if (set) throw MalformedGraph6("nonzero padding bits in graph6 string");
                continue;
            }
            if (set) {
                // Bit index -> column-major upper-triangle pair (u,v), v > u.
                long b = bit;
                int v = 1;
                while (b >= v) { b -= v; ++v; }
                g.add_edge(static_cast<int>(b), v);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

// --- edge-list text ----------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    Graph g;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank line before header
            long n;
            if (tag != "n" || !(ls >> n)) throw MalformedInput("edge list must start with a line \"n <count>\"");
            if (n < 0 || n > Graph::kMaxVertices)
                throw MalformedInput("vertex count out of range: " + std::to_string(n));
            std::string extra;
            if (ls >> extra) throw MalformedInput("trailing tokens after vertex count");
            g = Graph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        long u, v;
        if (!(ls >> u)) continue; // blank or comment-only line
        if (!(ls >> v)) throw MalformedInput("edge line needs two endpoints: \"" + line + "\"");
        std::string extra;
        if (ls >> extra) throw MalformedInput("trailing tokens on edge line: \"" + line + "\"");
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
            throw MalformedInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_header) throw MalformedInput("edge list must start with a line \"n <count>\"");
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) out << u << " " << v << "\n";
    return out.str();
}

// --- basic operations ---------------------------------------------------------

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    const VertexSet all = g.vertices();
    for (int v = 0; v < n; ++v)
        for (int u : (all - g.neighbors(v)))
            if (u != v && u < v) h.add_edge(u, v);
    return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    const std::vector<int> verts = s.to_vector();
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet f) {
    VertexSet out = f;
    for (int v : f) out = out | g.neighbors(v);
    return out;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

VertexSet g_sub_f_support(const Graph& g, VertexSet f) {
    if (!is_independent(g, f)) throw NotIndependent("F contains an edge");
    return g.vertices() - closed_neighborhood(g, f);
}

Graph g_sub_f(const Graph& g, VertexSet f) {
    return induced_subgraph(g, g_sub_f_support(g, f));
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen = VertexSet::single(0);
    for (;;) {
        VertexSet next = seen;
        for (int v : seen) next = next | g.neighbors(v);
        if (next == seen) break;
        seen = next;
    }
    return seen == g.vertices();
}

bool is_cycle_at_least(const Graph& g, int k) {
    if (g.order() < k) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

bool is_triangle_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) {
            if (u >= v) break;
            if (g.neighbors(u).intersects(g.neighbors(v))) return false;
        }
    return true;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.add(v);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.order() + b.order());
    for (int v = 1; v < a.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (a.has_edge(u, v)) h.add_edge(u, v);
    for (int v = 1; v < b.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (b.has_edge(u, v)) h.add_edge(a.order() + u, a.order() + v);
    return h;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    Graph h(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                h.add_edge(u, v);
    return h;
}

StrippedGraph strip_isolated(const Graph& g) {
    const VertexSet keep = g.vertices() - isolated_vertices(g);
    return {induced_subgraph(g, keep), keep.to_vector()};
}

// --- fixed families ------------------------------------------------------------

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_complement(int n) { return complement(cycle_graph(n)); }

} // namespace gkit
