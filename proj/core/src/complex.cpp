#include "gkit/complex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "gkit/independence.hpp"

namespace gkit {

namespace {

bool lex_less_by_vertex_list(VertexSet a, VertexSet b) {
    return a.to_vector() < b.to_vector();
}

} // namespace

SimplicialComplex SimplicialComplex::void_complex(int ambient) {
    SimplicialComplex c;
    c.ambient_ = ambient;
    c.void_ = true;
    return c;
}

SimplicialComplex SimplicialComplex::irrelevant(int ambient) {
    SimplicialComplex c;
    c.ambient_ = ambient;
    c.void_ = false;
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int ambient, std::vector<VertexSet> facets) {
    if (facets.empty()) return void_complex(ambient);
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j)
            if (i != j && facets[i].is_subset_of(facets[j])) dominated = true;
        if (!dominated) maximal.push_back(facets[i]);
    }
    if (maximal.size() == 1 && maximal[0].empty()) return irrelevant(ambient);
    SimplicialComplex c;
    c.ambient_ = ambient;
    c.void_ = false;
    c.facets_ = std::move(maximal);
    return c;
}

VertexSet SimplicialComplex::vertex_support() const {
    VertexSet s;
    for (VertexSet f : facets_) s = s | f;
    return s;
}

int SimplicialComplex::dim() const {
    if (void_) throw VoidComplex("the void complex has no dimension");
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::contains_face(VertexSet f) const {
    if (void_) return false;
    if (f.empty()) return true;
    for (VertexSet s : facets_)
        if (f.is_subset_of(s)) return true;
    return false;
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex::from_facets(g.order(), maximal_independent_sets(g));
}

std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplex("the void complex has no faces");
    std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(c.dim()) + 2);
    std::unordered_set<std::uint64_t> seen;
    // Expand each facet's subset lattice once, sharing faces across facets.
    std::vector<VertexSet> stack;
    by_dim[0].push_back(VertexSet{});
    seen.insert(0);
    for (VertexSet facet : c.facets()) {
        if (!facet.empty() && seen.insert(facet.bits).second) stack.push_back(facet);
        while (!stack.empty()) {
            VertexSet f = stack.back();
            stack.pop_back();
            by_dim[static_cast<std::size_t>(f.size())].push_back(f);
            for (int v : f) {
                VertexSet sub = f;
                sub.remove(v);
                if (!sub.empty() && seen.insert(sub.bits).second) stack.push_back(sub);
            }
        }
    }
    for (auto& group : by_dim)
        std::sort(group.begin(), group.end(), lex_less_by_vertex_list);
    return by_dim;
}

FVector f_vector(const SimplicialComplex& c) {
    const auto by_dim = faces_by_dimension(c);
    FVector f;
    f.entries.reserve(by_dim.size());
    for (const auto& group : by_dim) f.entries.emplace_back(static_cast<unsigned long>(group.size()));
    return f;
}

std::vector<BigInt> h_vector(const SimplicialComplex& c) {
    if (!is_pure(c)) throw NotPure("h-vector is only used on pure complexes here");
    const FVector f = f_vector(c);
    const int d = c.dim() + 1;
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 1, BigInt(0));
    // sum_i f_{i-1} t^i (1-t)^(d-i), expanded exactly
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j + i <= d; ++j) {
            BigInt term = f.entries[static_cast<std::size_t>(i)] *
                          binomial(static_cast<unsigned long>(d - i), static_cast<unsigned long>(j));
            if (j % 2) term = -term;
            h[static_cast<std::size_t>(i + j)] += term;
        }
    }
    return h;
}

IntPolynomial h_polynomial(const SimplicialComplex& c) { return IntPolynomial(h_vector(c)); }

SimplicialComplex link(const SimplicialComplex& c, VertexSet f) {
    if (!c.contains_face(f)) throw NotAFace("link of a non-face");
    if (f.empty()) return c;
    std::vector<VertexSet> facets;
    for (VertexSet s : c.facets())
        if (f.is_subset_of(s)) facets.push_back(s - f);
    return SimplicialComplex::from_facets(c.ambient(), std::move(facets));
}

SimplicialComplex core(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplex("the void complex has no core");
    if (c.is_irrelevant()) return c;
    VertexSet cone_points = c.facets().front();
    for (VertexSet f : c.facets()) cone_points = cone_points & f;
    if (cone_points.empty()) return c;
    std::vector<VertexSet> facets;
    for (VertexSet f : c.facets()) facets.push_back(f - cone_points);
    return SimplicialComplex::from_facets(c.ambient(), std::move(facets));
}

bool is_pure(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplex("purity is undefined for the void complex");
    for (VertexSet f : c.facets())
        if (f.size() != c.facets().front().size()) return false;
    return true;
}

bool is_euler(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplex("the Euler condition is undefined for the void complex");
    if (!is_pure(c)) return false;
    for (const auto& group : faces_by_dimension(c)) {
        for (VertexSet face : group) {
            const FVector lf = f_vector(link(c, face));
            BigInt sum(0);
            for (std::size_t j = 0; j < lf.entries.size(); ++j)
                sum += (j % 2 ? lf.entries[j] : -lf.entries[j]); // entry j has dimension j-1
            const int d_f = static_cast<int>(lf.entries.size()) - 2;
            const BigInt want = (((d_f % 2) + 2) % 2) ? BigInt(-1) : BigInt(1);
            if (sum != want) return false;
        }
    }
    return true;
}

SimplicialComplex parse_facet_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<VertexSet> facets;
    int max_vertex = -1;
    bool saw_marker = false, saw_facet = false;
    SimplicialComplex marker_value;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "irrelevant" || first == "void") {
            std::string extra;
            if (ls >> extra) throw MalformedInput("unexpected tokens after \"" + first + "\"");
            if (saw_marker || saw_facet) throw MalformedInput("degenerate-complex marker must be the only content");
            saw_marker = true;
            marker_value = first == "void" ? SimplicialComplex::void_complex()
                                           : SimplicialComplex::irrelevant();
            continue;
        }
        if (saw_marker) throw MalformedInput("facet lines after a degenerate-complex marker");
        VertexSet f;
        std::istringstream vs(line);
        long v;
        while (vs >> v) {
            if (v < 0 || v >= Graph::kMaxVertices)
                throw MalformedInput("vertex index out of range: " + std::to_string(v));
            f.add(static_cast<int>(v));
            max_vertex = std::max(max_vertex, static_cast<int>(v));
        }
        if (!vs.eof()) throw MalformedInput("bad token on facet line: \"" + line + "\"");
        facets.push_back(f);
        saw_facet = true;
    }
    if (saw_marker) return marker_value;
    if (!saw_facet) throw MalformedInput("empty facet file (use \"irrelevant\" or \"void\" for degenerate complexes)");
    return SimplicialComplex::from_facets(max_vertex + 1, std::move(facets));
}

std::string emit_facet_file(const SimplicialComplex& c) {
    if (c.is_void()) return "void\n";
    if (c.is_irrelevant()) return "irrelevant\n";
    std::ostringstream out;
    for (VertexSet f : c.facets()) {
        bool first = true;
        for (int v : f) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace gkit
