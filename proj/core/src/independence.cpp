#include "gkit/independence.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace gkit {

namespace {

// Branch vertex: highest degree inside the candidate set, ties to the
// lowest index. Shrinks the residual problem fastest.
int pick_branch_vertex(const Graph& g, VertexSet c) {
    int best = -1, best_deg = -1;
    for (int v : c) {
        const int d = (g.neighbors(v) & c).size();
        if (d > best_deg) { best_deg = d; best = v; }
    }
    return best;
}

bool exists_independent(const Graph& g, VertexSet c, int t) {
    if (t <= 0) return true;
    if (c.size() < t) return false;
    const int v = pick_branch_vertex(g, c);
    VertexSet with_v = c - g.neighbors(v);
    with_v.remove(v);
    if (exists_independent(g, with_v, t - 1)) return true;
    VertexSet without_v = c;
    without_v.remove(v);
    return exists_independent(g, without_v, t);
}

std::vector<BigInt> count_rec(const Graph& g, VertexSet c,
                              std::unordered_map<std::uint64_t, std::vector<BigInt>>& memo) {
    if (c.empty()) return {BigInt(1)};
    if (auto it = memo.find(c.bits); it != memo.end()) return it->second;
    const int v = c.lowest();
    VertexSet without_v = c;
    without_v.remove(v);
    std::vector<BigInt> out = count_rec(g, without_v, memo);
    VertexSet with_v = without_v - g.neighbors(v);
    const std::vector<BigInt> in = count_rec(g, with_v, memo);
    if (out.size() < in.size() + 1) out.resize(in.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < in.size(); ++i) out[i + 1] += in[i];
    memo.emplace(c.bits, out);
    return out;
}

// Enumerates maximal independent sets (Bron-Kerbosch with pivoting on the
// complement adjacency). Visitor returns false to stop early.
class MaximalSetWalker {
public:
    MaximalSetWalker(const Graph& g, std::function<bool(VertexSet)> visit)
        : g_(g), visit_(std::move(visit)) {
        const VertexSet all = g.vertices();
        nonadj_.reserve(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) {
            VertexSet nb = all - g.neighbors(v);
            nb.remove(v);
            nonadj_.push_back(nb);
        }
    }

    bool run() { return expand(VertexSet{}, g_.vertices(), VertexSet{}); }

private:
    bool expand(VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) return visit_(r);
        int pivot = -1, best = -1;
        for (int u : (p | x)) {
            const int gain = (p & nonadj_[static_cast<std::size_t>(u)]).size();
            if (gain > best) { best = gain; pivot = u; }
        }
        for (int v : (p - nonadj_[static_cast<std::size_t>(pivot)])) {
            VertexSet rv = r;
            rv.add(v);
            if (!expand(rv, p & nonadj_[static_cast<std::size_t>(v)], x & nonadj_[static_cast<std::size_t>(v)]))
                return false;
            p.remove(v);
            x.add(v);
        }
        return true;
    }

    const Graph& g_;
    std::function<bool(VertexSet)> visit_;
    std::vector<VertexSet> nonadj_;
};

void collect_independent_sets(const Graph& g, VertexSet chosen, VertexSet candidates,
                              std::vector<VertexSet>& out) {
    out.push_back(chosen);
    for (int v : candidates) {
        VertexSet next = candidates - g.neighbors(v);
        next = next & VertexSet(~((std::uint64_t{2} << v) - 1)); // only higher indices
        VertexSet with_v = chosen;
        with_v.add(v);
        collect_independent_sets(g, with_v, next, out);
    }
}

// Any independent completion of `partial` to size `size` avoiding `forbid`
// such that a disjoint maximum independent superset of `other` also exists?
bool extend_to_disjoint_maxima(const Graph& g, int alpha, VertexSet partial, VertexSet candidates,
                               int missing, VertexSet other) {
    if (missing == 0) return has_independent_set(g, alpha, other, partial);
    if (candidates.size() < missing) return false;
    for (int v : candidates) {
        VertexSet next = candidates - g.neighbors(v);
        next = next & VertexSet(~((std::uint64_t{2} << v) - 1));
        VertexSet with_v = partial;
        with_v.add(v);
        if (extend_to_disjoint_maxima(g, alpha, with_v, next, missing - 1, other)) return true;
    }
    return false;
}

} // namespace

std::vector<BigInt> independent_set_counts(const Graph& g) {
    std::unordered_map<std::uint64_t, std::vector<BigInt>> memo;
    return count_rec(g, g.vertices(), memo);
}

bool independence_number_at_most(const Graph& g, int bound) {
    return !exists_independent(g, g.vertices(), bound + 1);
}

int independence_number(const Graph& g) {
    // Greedy lower bound, then push upward.
    int lb = 0;
    for (VertexSet c = g.vertices(); !c.empty();) {
        const int v = c.lowest();
        c = c - g.neighbors(v);
        c.remove(v);
        ++lb;
    }
    while (exists_independent(g, g.vertices(), lb + 1)) ++lb;
    return lb;
}

bool has_independent_set(const Graph& g, int size, VertexSet require, VertexSet forbid) {
    if (!is_independent(g, require)) return false;
    const int missing = size - require.size();
    if (missing < 0) return false;
    const VertexSet candidates = g.vertices() - closed_neighborhood(g, require) - forbid;
    return exists_independent(g, candidates, missing);
}

IntPolynomial independence_polynomial(const Graph& g) {
    return IntPolynomial(independent_set_counts(g));
}

std::vector<VertexSet> independent_sets_of_size(const Graph& g, int k) {
    std::vector<VertexSet> all;
    collect_independent_sets(g, VertexSet{}, g.vertices(), all);
    std::vector<VertexSet> out;
    for (VertexSet s : all)
        if (s.size() == k) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    MaximalSetWalker walker(g, [&out](VertexSet s) {
        out.push_back(s);
        return true;
    });
    walker.run();
    std::sort(out.begin(), out.end());
    return out;
}

bool is_well_covered(const Graph& g) {
    const int alpha = independence_number(g);
    bool ok = true;
    MaximalSetWalker walker(g, [&ok, alpha](VertexSet s) {
        if (s.size() != alpha) { ok = false; return false; }
        return true;
    });
    walker.run();
    return ok;
}

bool is_w2_definition(const Graph& g) {
    if (g.order() < 2) return false;
    if (!is_well_covered(g)) return false; // also covers the single-set case
    const int alpha = independence_number(g);

    std::vector<VertexSet> sets;
    collect_independent_sets(g, VertexSet{}, g.vertices(), sets);
    std::sort(sets.begin(), sets.end());

    for (std::size_t i = 0; i < sets.size(); ++i) {
        const VertexSet a = sets[i];
        if (a.empty()) continue;
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const VertexSet b = sets[j];
            if (b.empty() || a.intersects(b)) continue;
            const VertexSet candidates = g.vertices() - closed_neighborhood(g, a) - b;
            if (!extend_to_disjoint_maxima(g, alpha, a, candidates, alpha - a.size(), b))
                return false;
        }
    }
    return true;
}

bool is_w2_deletion(const Graph& g) {
    if (g.order() < 2) throw InvalidInput("deletion criterion needs at least two vertices");
    if (!isolated_vertices(g).empty()) throw InvalidInput("deletion criterion needs a graph without isolated vertices");
    const int alpha = independence_number(g);
    for (int v = 0; v < g.order(); ++v) {
        VertexSet keep = g.vertices();
        keep.remove(v);
        const Graph h = induced_subgraph(g, keep);
        if (independence_number(h) != alpha || !is_well_covered(h)) return false;
    }
    return true;
}

} // namespace gkit
