#include "gkit/homology.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace gkit {

// --- FieldSpec ---------------------------------------------------------------

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw InvalidInput("not a prime: " + std::to_string(p));
    return {Kind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view token) {
    if (token == "q" || token == "Q") return rationals();
    std::string_view digits = token;
    if (!digits.empty() && (digits[0] == 'f' || digits[0] == 'F')) digits.remove_prefix(1);
    else if (digits.size() > 2 && (digits.substr(0, 2) == "gf" || digits.substr(0, 2) == "GF")) digits.remove_prefix(2);
    else digits = {};
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw InvalidInput("unknown field \"" + std::string(token) + "\" (use q or f<prime>)");
    unsigned long p = std::stoul(std::string(digits));
    if (p > 0x7fffffffUL) throw InvalidInput("prime out of range: " + std::string(token));
    return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
    return kind == Kind::Rationals ? "q" : "f" + std::to_string(p);
}

std::string to_string(Route r) {
    switch (r) {
        case Route::Theorem: return "theorem";
        case Route::Homological: return "homological";
        case Route::BaseCase: return "base-case";
    }
    return "?";
}

// --- matrices ------------------------------------------------------------------

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw IndexOutOfRange("matrix shape mismatch in multiply");
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

bool is_zero(const IntMatrix& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix boundary_matrix(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw VoidComplex("boundary of the void complex");
    const int d = c.dim();
    if (i < -1 || i > d + 1) throw IndexOutOfRange("boundary index " + std::to_string(i) + " outside -1.." + std::to_string(d + 1));
    const auto by_dim = faces_by_dimension(c);
    const auto faces_of = [&](int dim) -> std::size_t {
        const int j = dim + 1;
        if (j < 0 || j >= static_cast<int>(by_dim.size())) return 0;
        return by_dim[static_cast<std::size_t>(j)].size();
    };
    IntMatrix m(static_cast<int>(faces_of(i - 1)), static_cast<int>(faces_of(i)));
    if (i - 1 < -1 || i > d) return m; // a zero-dimensional end of the chain complex
    std::unordered_map<std::uint64_t, int> row_index;
    for (std::size_t r = 0; r < by_dim[static_cast<std::size_t>(i)].size(); ++r)
        row_index.emplace(by_dim[static_cast<std::size_t>(i)][r].bits, static_cast<int>(r));
    const auto& cols = by_dim[static_cast<std::size_t>(i + 1)];
    for (std::size_t col = 0; col < cols.size(); ++col) {
        int j = 0;
        for (int v : cols[col]) {
            VertexSet sub = cols[col];
            sub.remove(v);
            m.at(row_index.at(sub.bits), static_cast<int>(col)) = (j % 2) ? BigInt(-1) : BigInt(1);
            ++j;
        }
    }
    return m;
}

namespace {

int rank_bareiss(IntMatrix m) {
    int rank = 0;
    BigInt prev(1);
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                BigInt num = m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c);
                mpz_divexact(m.at(r, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
}

int rank_mod_p(const IntMatrix& m, std::uint32_t p) {
    const std::int64_t pp = p;
    std::vector<std::int64_t> a(m.a.size());
    for (std::size_t i = 0; i < m.a.size(); ++i)
        a[i] = static_cast<std::int64_t>(mpz_fdiv_ui(m.a[i].get_mpz_t(), p));
    auto at = [&](int r, int c) -> std::int64_t& {
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
        const std::int64_t inv = mod_inverse(at(rank, col), pp);
        for (int c = col; c < m.cols; ++c) at(rank, c) = at(rank, c) * inv % pp;
        for (int r = rank + 1; r < m.rows; ++r) {
            const std::int64_t factor = at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < m.cols; ++c)
                at(r, c) = ((at(r, c) - factor * at(rank, c)) % pp + pp) % pp;
        }
        ++rank;
    }
    return rank;
}

} // namespace

int rank_over(const IntMatrix& m, const FieldSpec& k) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return k.kind == FieldSpec::Kind::Rationals ? rank_bareiss(m) : rank_mod_p(m, k.p);
}

BettiProfile reduced_betti(const SimplicialComplex& c, const FieldSpec& k, std::string label) {
    if (c.is_void()) throw VoidComplex("Betti numbers of the void complex");
    const int d = c.dim();
    const auto by_dim = faces_by_dimension(c);
    std::vector<int> ranks(static_cast<std::size_t>(d) + 3, 0); // ranks[j] = rank of boundary in dimension j-1
    for (int i = 0; i <= d; ++i)
        ranks[static_cast<std::size_t>(i) + 1] = rank_over(boundary_matrix(c, i), k);
    BettiProfile profile{std::move(label), k, {}};
    profile.values.reserve(static_cast<std::size_t>(d) + 2);
    for (int i = -1; i <= d; ++i) {
        const long faces = static_cast<long>(by_dim[static_cast<std::size_t>(i + 1)].size());
        profile.values.push_back(faces - ranks[static_cast<std::size_t>(i + 1)] - ranks[static_cast<std::size_t>(i + 2)]);
    }
    return profile;
}

namespace {

std::string dims_detail(int dim, long found, long expected) {
    std::ostringstream out;
    out << "dimension " << dim << ": betti=" << found << ", expected " << expected;
    return out.str();
}

} // namespace

Verdict is_cm_reisner(const SimplicialComplex& c, const FieldSpec& k) {
    if (c.is_void()) throw VoidComplex("CM check on the void complex");
    Verdict v;
    v.route = Route::Homological;
    v.field = k;
    v.conditions_checked = {"reisner-links-vanishing"};
    for (const auto& group : faces_by_dimension(c)) {
        for (VertexSet face : group) {
            const SimplicialComplex lk = link(c, face);
            const BettiProfile betti = reduced_betti(lk, k);
            const int top = lk.dim();
            for (int i = -1; i < top; ++i) {
                if (betti.beta(i) != 0) {
                    v.accepted = false;
                    v.witness = Witness{"reisner-low-homology", face.to_vector(), dims_detail(i, betti.beta(i), 0)};
                    return v;
                }
            }
        }
    }
    v.accepted = true;
    return v;
}

Verdict is_gorenstein_homological(const SimplicialComplex& c, const FieldSpec& k) {
    if (c.is_void()) throw VoidComplex("Gorenstein check on the void complex");
    Verdict v;
    v.route = Route::Homological;
    v.field = k;
    v.conditions_checked = {"core-links-are-homology-spheres"};
    const SimplicialComplex gamma = core(c);
    for (const auto& group : faces_by_dimension(gamma)) {
        for (VertexSet face : group) {
            const SimplicialComplex lk = link(gamma, face);
            const BettiProfile betti = reduced_betti(lk, k);
            const int top = lk.dim();
            for (int i = -1; i <= top; ++i) {
                const long expected = (i == top) ? 1 : 0;
                if (betti.beta(i) != expected) {
                    v.accepted = false;
                    v.witness = Witness{"core-link-homology", face.to_vector(), dims_detail(i, betti.beta(i), expected)};
                    return v;
                }
            }
        }
    }
    v.accepted = true;
    return v;
}

} // namespace gkit
