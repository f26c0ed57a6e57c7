#include "gkit/brute.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace gkit::brute {

namespace {

bool subset_independent(const Graph& g, std::uint64_t mask) {
    for (int v : VertexSet(mask))
        if (g.neighbors(v).bits & mask) return false;
    return true;
}

} // namespace

std::vector<BigInt> independent_set_counts(const Graph& g) {
    if (g.order() > 20) throw TooLarge("subset scan limited to 20 vertices");
    int alpha = 0;
    std::vector<BigInt> counts(static_cast<std::size_t>(g.order()) + 1, BigInt(0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        if (!subset_independent(g, mask)) continue;
        const int size = VertexSet(mask).size();
        alpha = std::max(alpha, size);
        counts[static_cast<std::size_t>(size)] += 1;
    }
    counts.resize(static_cast<std::size_t>(alpha) + 1);
    return counts;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    if (g.order() > 20) throw TooLarge("subset scan limited to 20 vertices");
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        if (!subset_independent(g, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v) {
            if (VertexSet(mask).contains(v)) continue;
            if (subset_independent(g, mask | (std::uint64_t{1} << v))) maximal = false;
        }
        if (maximal) out.push_back(VertexSet(mask));
    }
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.order() > 8) throw TooLarge("permutation search limited to 8 vertices");
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabeled(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string min_adjacency_string(const Graph& g) {
    if (g.order() > 8) throw TooLarge("permutation search limited to 8 vertices");
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        s.reserve(static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
        for (int v = 1; v < g.order(); ++v)
            for (int u = 0; u < v; ++u)
                s.push_back(g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]) ? '1' : '0');
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

long count_isomorphism_classes(int n) {
    if (n > 6) throw TooLarge("labeled census limited to 6 vertices");
    const int pairs = n * (n - 1) / 2;
    std::unordered_set<std::string> keys;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        keys.insert(min_adjacency_string(g));
    }
    return static_cast<long>(keys.size());
}

int rational_rank(const IntMatrix& m) {
    std::vector<BigRat> a(m.a.size());
    for (std::size_t i = 0; i < m.a.size(); ++i) a[i] = BigRat(m.a[i]);
    auto at = [&](int r, int c) -> BigRat& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(m.cols) + static_cast<std::size_t>(c)];
    };
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(at(pivot, c), at(rank, c));
        const BigRat lead = at(rank, col);
        for (int c = col; c < m.cols; ++c) at(rank, c) /= lead;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || at(r, col) == 0) continue;
            const BigRat factor = at(r, col);
            for (int c = col; c < m.cols; ++c) at(r, c) -= factor * at(rank, c);
        }
        ++rank;
    }
    return rank;
}

} // namespace gkit::brute
