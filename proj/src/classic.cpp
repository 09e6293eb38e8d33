#include "treefold/classic.hpp"

#include "treefold/integer_matrix.hpp"
#include "treefold/poset_ops.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace treefold {

JoinEmbedding join_embedding(const FacePoset& K) {
    if (K.kind() != PosetKind::Simplicial && !K.empty())
        throw Error(ErrorKind::Input, "join_embedding needs a simplicial complex");
    JoinEmbedding e;
    e.complex = K;
    e.factors.resize(std::max(K.dimension(), 0) + 1);
    for (int s = 0; s < static_cast<int>(K.size()); ++s) e.factors[K.rank(s)].push_back(K.id(s));
    for (auto& f : e.factors) std::sort(f.begin(), f.end());
    e.subdivision = K.empty() ? FacePoset{} : barycentric(K);
    return e;
}

FacePoset join_complex(const JoinEmbedding& e, std::size_t max_simplices) {
    std::size_t total = 1;
    for (const auto& f : e.factors) {
        total *= f.size() + 1;
        if (total > max_simplices) throw Error(ErrorKind::Budget, "join complex too large to materialize");
    }
    // Facets pick one vertex from every non-empty factor.
    std::vector<Simplex> facets{{}};
    for (const auto& f : e.factors) {
        if (f.empty()) continue;
        std::vector<Simplex> next;
        for (const auto& s : facets)
            for (const auto& v : f) {
                Simplex t = s;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        facets = std::move(next);
    }
    if (facets.size() == 1 && facets.front().empty()) return FacePoset{};
    return make_simplicial(facets);
}

Verdict verify_join_embedding(const JoinEmbedding& e) {
    const FacePoset& K = e.complex;
    const FacePoset& Kp = e.subdivision;
    std::map<std::string, int> factor_of;
    for (int i = 0; i < static_cast<int>(e.factors.size()); ++i)
        for (const auto& v : e.factors[i])
            if (!factor_of.emplace(v, i).second) return {false, "vertex " + v + " lies in two factors"};

    std::set<std::vector<int>> chains_seen;
    for (const auto& s : simplices_of(Kp)) {
        std::vector<int> used, members;
        for (const auto& v : s) {
            auto it = factor_of.find(v);
            if (it == factor_of.end()) return {false, "vertex " + v + " of K' is in no factor"};
            used.push_back(it->second);
            auto idx = K.find(v);
            if (!idx) return {false, "vertex " + v + " of K' is not a simplex of K"};
            members.push_back(*idx);
        }
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end())
            return {false, "simplex " + simplex_id(s) + " uses two vertices of one factor"};
        std::sort(members.begin(), members.end(), [&](int a, int b) { return K.rank(a) < K.rank(b); });
        for (std::size_t j = 1; j < members.size(); ++j)
            if (!K.leq(members[j - 1], members[j])) return {false, "simplex " + simplex_id(s) + " is not a chain"};
        std::sort(members.begin(), members.end());
        chains_seen.insert(members);
    }
    // Count the non-empty chains of K independently.
    std::size_t chains = 0;
    auto grow = [&](auto&& self, int top) -> void {
        ++chains;
        for (int u : K.up_set(top))
            if (u != top) self(self, u);
    };
    for (int s = 0; s < static_cast<int>(K.size()); ++s) grow(grow, s);
    if (chains != chains_seen.size()) return {false, "K' does not contain every chain of K"};
    return {};
}

FacePoset simplicial_cone(const FacePoset& L, const std::string& apex) {
    std::vector<Simplex> facets;
    for (int m : L.maximal_elements()) {
        Simplex s = vertex_labels(L, m);
        s.push_back(apex);
        facets.push_back(std::move(s));
    }
    if (facets.empty()) facets.push_back({apex});
    return make_simplicial(facets);
}

namespace {

std::string leaf_name(const FacePoset& L, int s) {
    std::string out;
    for (const auto& v : vertex_labels(L, s)) out += (out.empty() ? "" : "+") + v;
    return out;
}

struct Stars {
    std::vector<std::vector<std::string>> factors;
    std::vector<int> slot;  // element of L -> position in its factor
    TreeProduct product;
};

Stars build_stars(const FacePoset& L, int k) {
    if (L.kind() != PosetKind::Simplicial && !L.empty())
        throw Error(ErrorKind::Input, "tree embeddings need a simplicial complex");
    if (k < 0) k = std::max(L.dimension(), 0);
    if (L.dimension() > k) throw Error(ErrorKind::Input, "complex has dimension above k");
    Stars st;
    st.factors.resize(k + 1);
    st.slot.assign(L.size(), -1);
    std::vector<std::vector<int>> members(k + 1);
    for (int s = 0; s < static_cast<int>(L.size()); ++s) members[L.rank(s)].push_back(s);
    for (int i = 0; i <= k; ++i) {
        std::sort(members[i].begin(), members[i].end(), [&](int a, int b) { return L.id(a) < L.id(b); });
        std::vector<std::string> vertices{"o"};
        std::vector<std::pair<std::string, std::string>> edges;
        for (int j = 0; j < static_cast<int>(members[i].size()); ++j) {
            int s = members[i][j];
            st.slot[s] = j;
            st.factors[i].push_back(L.id(s));
            vertices.push_back(leaf_name(L, s));
            edges.emplace_back("o", vertices.back());
        }
        st.product.trees.push_back(Tree::from_edges(vertices, edges, std::string("o")));
    }
    return st;
}

// Cells [a;b] for a chain b (elements of L in increasing order) and every a ⊆ b,
// non-empty unless allow_empty_a.
void interval_cells(const FacePoset& L, const Stars& st, const std::vector<int>& b, bool allow_empty_a,
                    std::vector<Cell>& out) {
    const int k = st.product.size();
    const unsigned full = (1u << b.size());
    for (unsigned mask = allow_empty_a ? 0 : 1; mask < full; ++mask) {
        Cell c(k, 0);  // centre everywhere
        for (std::size_t j = 0; j < b.size(); ++j) {
            int s = b[j];
            int leaf_edge = st.slot[s];
            c[L.rank(s)] = (mask >> j) & 1u ? 2 * (leaf_edge + 1) : 2 * leaf_edge + 1;
        }
        out.push_back(std::move(c));
    }
}

// Calls f(chain, top) for every non-empty chain of L.
template <class F>
void for_each_chain(const FacePoset& L, F&& f) {
    std::vector<int> chain;
    auto grow = [&](auto&& self, int top) -> void {
        chain.push_back(top);
        f(chain, top);
        for (int u : L.up_set(top))
            if (u != top) self(self, u);
        chain.pop_back();
    };
    for (int s = 0; s < static_cast<int>(L.size()); ++s) grow(grow, s);
}

}  // namespace

TreeEmbedding standard_tree_embedding(const FacePoset& L, int k) {
    Stars st = build_stars(L, k);
    TreeEmbedding out;
    out.factors = st.factors;
    out.embedding.source = L;
    for (int s = 0; s < static_cast<int>(L.size()); ++s) out.embedding.images[L.id(s)];
    std::vector<Cell> cells;
    for_each_chain(L, [&](const std::vector<int>& chain, int top) {
        cells.clear();
        interval_cells(L, st, chain, false, cells);
        for (int s : L.up_set(top)) out.embedding.images[L.id(s)].insert(cells.begin(), cells.end());
    });
    out.embedding.target = std::move(st.product);
    return out;
}

TreeEmbedding cone_product_embedding(const FacePoset& L, int k) {
    std::string apex = "c";
    while (L.contains(apex)) apex += "'";
    Stars st = build_stars(L, k);
    FacePoset CL = simplicial_cone(L, apex);

    TreeEmbedding out;
    out.factors = st.factors;
    out.embedding.source = CL;
    // σ*apex for σ in L, keyed by the id in CL.
    auto coned = [&](int s) {
        Simplex v = vertex_labels(L, s);
        v.push_back(apex);
        std::sort(v.begin(), v.end());
        return simplex_id(v);
    };
    for (int x = 0; x < static_cast<int>(CL.size()); ++x) out.embedding.images[CL.id(x)];
    const Cell centre(st.product.size(), 0);
    out.embedding.images[simplex_id({apex})].insert(centre);
    std::vector<Cell> plain, with_empty;
    for_each_chain(L, [&](const std::vector<int>& chain, int top) {
        plain.clear();
        with_empty.clear();
        interval_cells(L, st, chain, false, plain);
        interval_cells(L, st, chain, true, with_empty);
        for (int s : L.up_set(top)) {
            out.embedding.images[L.id(s)].insert(plain.begin(), plain.end());
            out.embedding.images[coned(s)].insert(with_empty.begin(), with_empty.end());
        }
    });
    for (int s = 0; s < static_cast<int>(L.size()); ++s) out.embedding.images[coned(s)].insert(centre);
    out.embedding.target = std::move(st.product);
    return out;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw Error(ErrorKind::Internal, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) { return checked_mul(a.num, b.den) < checked_mul(b.num, a.den); }

Rational operator+(const Rational& a, const Rational& b) {
    return {checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }

Rational operator*(const Rational& a, const Rational& b) {
    return {checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw Error(ErrorKind::Internal, "division by zero");
    return {checked_mul(a.num, b.den), checked_mul(a.den, b.num)};
}

namespace {

// Point at arclength p (0 <= p < 8) along the boundary of [-1,1]², counterclockwise from (1,-1).
std::pair<Rational, Rational> square_boundary(Rational p) {
    const Rational one(1), two(2), four(4), six(6);
    if (p < two) return {one, p - one};
    if (p < four) return {one - (p - two), one};
    if (p < six) return {Rational(-1), one - (p - four)};
    return {Rational(-1) + (p - six), Rational(-1)};
}

Rational to_unit(const Rational& c) { return (c + Rational(1)) / Rational(2); }

}  // namespace

CubeCoordinates cube_coordinates(const FacePoset& K) {
    CubeCoordinates out;
    out.join = join_embedding(K);
    out.n = std::max(K.dimension(), 0);
    const int width = 2 * out.n + 1;
    const Rational half(1, 2);
    for (int i = 0; i < static_cast<int>(out.join.factors.size()); ++i) {
        const auto& f = out.join.factors[i];
        const std::int64_t m = static_cast<std::int64_t>(f.size());
        for (std::int64_t j = 0; j < m; ++j) {
            std::vector<Rational> p(width, half);
            if (i == 0) {
                p[0] = Rational(j, m);
            } else {
                p[0] = Rational(1);
                auto [x, y] = square_boundary(Rational(8 * j, m));
                p[2 * i - 1] = to_unit(x);
                p[2 * i] = to_unit(y);
            }
            out.points.emplace(f[j], std::move(p));
        }
    }
    for (const auto& s : simplices_of(out.join.subdivision)) out.simplices.push_back(s);
    return out;
}

}  // namespace treefold
