#include "treefold/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace treefold {

const char* to_string(PosetKind kind) {
    switch (kind) {
    case PosetKind::Simplicial: return "simplicial";
    case PosetKind::Cubical: return "cubical";
    case PosetKind::General: return "general";
    }
    return "general";
}

FacePoset::FacePoset(std::vector<std::string> ids, const std::vector<std::pair<int, int>>& covers,
                     PosetKind kind) {
    build(std::move(ids), covers);
    kind_ = kind;
    if (kind == PosetKind::Simplicial && !has_simplicial_shape())
        throw Error(ErrorKind::Input, "poset declared simplicial has a non-simplex cell");
    if (kind == PosetKind::Cubical && !has_cubical_shape())
        throw Error(ErrorKind::Input, "poset declared cubical has a non-cube cell");
}

FacePoset FacePoset::classified(std::vector<std::string> ids,
                                const std::vector<std::pair<int, int>>& covers) {
    FacePoset p;
    p.build(std::move(ids), covers);
    if (p.has_simplicial_shape())
        p.kind_ = PosetKind::Simplicial;
    else if (p.has_cubical_shape())
        p.kind_ = PosetKind::Cubical;
    else
        p.kind_ = PosetKind::General;
    return p;
}

void FacePoset::build(std::vector<std::string> ids, const std::vector<std::pair<int, int>>& covers) {
    const int n = static_cast<int>(ids.size());
    elements_.resize(n);
    lower_.assign(n, {});
    upper_.assign(n, {});
    index_.clear();
    index_.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(ids[i], i).second)
            throw Error(ErrorKind::Input, "duplicate element id '" + ids[i] + "'");
        elements_[i].id = std::move(ids[i]);
    }
    for (auto [lo, hi] : covers) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
            throw Error(ErrorKind::Input, "cover pair references an invalid element");
        lower_[hi].push_back(lo);
        upper_[lo].push_back(hi);
    }
    for (int i = 0; i < n; ++i) {
        std::sort(lower_[i].begin(), lower_[i].end());
        lower_[i].erase(std::unique(lower_[i].begin(), lower_[i].end()), lower_[i].end());
        std::sort(upper_[i].begin(), upper_[i].end());
        upper_[i].erase(std::unique(upper_[i].begin(), upper_[i].end()), upper_[i].end());
    }

    // Kahn's algorithm doubles as the acyclicity check and the rank computation.
    std::vector<int> pending(n);
    std::queue<int> ready;
    for (int i = 0; i < n; ++i) {
        pending[i] = static_cast<int>(lower_[i].size());
        if (pending[i] == 0) ready.push(i);
    }
    int seen = 0;
    while (!ready.empty()) {
        const int e = ready.front();
        ready.pop();
        ++seen;
        for (int up : upper_[e]) {
            elements_[up].rank = std::max(elements_[up].rank, elements_[e].rank + 1);
            if (--pending[up] == 0) ready.push(up);
        }
    }
    if (seen != n) throw Error(ErrorKind::Input, "cover relation contains a cycle");
}

FacePoset FacePoset::from_order(std::vector<std::string> ids,
                                const std::vector<std::pair<int, int>>& less_than, PosetKind kind) {
    const int n = static_cast<int>(ids.size());
    std::vector<std::vector<char>> above(n, std::vector<char>(n, 0));
    std::vector<std::vector<int>> succ(n);
    for (auto [a, b] : less_than) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw Error(ErrorKind::Input, "order pair references an invalid element");
        succ[a].push_back(b);
    }
    // Transitive closure by DFS from every element.
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack(succ[s].begin(), succ[s].end());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (above[s][x]) continue;
            above[s][x] = 1;
            for (int y : succ[x]) stack.push_back(y);
        }
        if (above[s][s]) throw Error(ErrorKind::Input, "order relation contains a cycle");
    }
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!above[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (above[a][c] && above[c][b]) cover = false;
            if (cover) covers.emplace_back(a, b);
        }
    return FacePoset(std::move(ids), covers, kind);
}

int FacePoset::dimension() const {
    int d = -1;
    for (const auto& e : elements_) d = std::max(d, e.rank);
    return d;
}

std::optional<int> FacePoset::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FacePoset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorKind::Input, "unknown element '" + id + "'");
    return it->second;
}

bool FacePoset::leq(int a, int b) const {
    if (a == b) return true;
    if (rank(a) >= rank(b)) return false;
    std::vector<int> stack{b};
    std::vector<char> seen(size(), 0);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : lower_[x]) {
            if (y == a) return true;
            if (!seen[y] && rank(y) > rank(a)) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

namespace {

std::vector<int> closure(const std::vector<std::vector<int>>& adj, const std::vector<int>& start,
                         std::size_t n) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = start, out;
    for (int s : start) seen[s] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<int> FacePoset::down_set(int e) const { return closure(lower_, {e}, size()); }
std::vector<int> FacePoset::up_set(int e) const { return closure(upper_, {e}, size()); }

std::vector<int> FacePoset::down_closure(const std::vector<int>& elements) const {
    return closure(lower_, elements, size());
}

bool FacePoset::is_down_closed(const std::vector<int>& elements) const {
    std::vector<char> in(size(), 0);
    for (int e : elements) in[e] = 1;
    for (int e : elements)
        for (int l : lower_[e])
            if (!in[l]) return false;
    return true;
}

std::vector<int> FacePoset::vertices_of(int e) const {
    std::vector<int> out;
    for (int x : down_set(e))
        if (lower_[x].empty()) out.push_back(x);
    return out;
}

std::vector<int> FacePoset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(size()); ++i)
        if (lower_[i].empty()) out.push_back(i);
    return out;
}

std::vector<int> FacePoset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(size()); ++i)
        if (upper_[i].empty()) out.push_back(i);
    return out;
}

std::vector<std::size_t> FacePoset::rank_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& e : elements_) ++counts[e.rank];
    return counts;
}

long long FacePoset::euler_characteristic() const {
    long long chi = 0;
    for (const auto& e : elements_) chi += (e.rank % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<std::pair<int, int>> FacePoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int hi = 0; hi < static_cast<int>(size()); ++hi)
        for (int lo : lower_[hi]) out.emplace_back(lo, hi);
    return out;
}

FacePoset FacePoset::induced(const std::vector<int>& elements, PosetKind kind) const {
    std::vector<std::string> ids;
    ids.reserve(elements.size());
    for (int e : elements) ids.push_back(id(e));
    std::vector<std::pair<int, int>> order;
    const int m = static_cast<int>(elements.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && leq(elements[i], elements[j])) order.emplace_back(i, j);
    return from_order(std::move(ids), order, kind);
}

FacePoset FacePoset::restrict_down_closed(const std::vector<int>& elements) const {
    std::vector<int> local(size(), -1);
    std::vector<std::string> ids;
    ids.reserve(elements.size());
    for (int e : elements) {
        local[e] = static_cast<int>(ids.size());
        ids.push_back(id(e));
    }
    std::vector<std::pair<int, int>> covers;
    for (int e : elements)
        for (int l : lower_[e]) {
            if (local[l] < 0) throw Error(ErrorKind::Input, "subset is not down-closed");
            covers.emplace_back(local[l], local[e]);
        }
    FacePoset out;
    out.build(std::move(ids), covers);
    out.kind_ = kind_;
    return out;
}

bool FacePoset::has_simplicial_shape() const {
    const int n = static_cast<int>(size());
    // Vertex sets bottom-up in rank order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rank(a) < rank(b); });
    std::vector<std::vector<int>> verts(n);
    std::set<std::vector<int>> seen;
    for (int e : order) {
        if (lower_[e].empty()) {
            verts[e] = {e};
        } else {
            std::vector<int> u;
            for (int l : lower_[e]) u.insert(u.end(), verts[l].begin(), verts[l].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            verts[e] = std::move(u);
            const std::size_t m = verts[e].size();
            if (static_cast<int>(m) != rank(e) + 1 || lower_[e].size() != m) return false;
            for (int l : lower_[e])
                if (verts[l].size() != m - 1) return false;
        }
        if (!seen.insert(verts[e]).second) return false;
    }
    return true;
}

bool FacePoset::has_cubical_shape() const {
    const int n = static_cast<int>(size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rank(a) < rank(b); });
    std::vector<std::vector<int>> verts(n);
    std::set<std::vector<int>> seen;
    for (int e : order) {
        const int r = rank(e);
        if (lower_[e].empty()) {
            verts[e] = {e};
        } else {
            std::vector<int> u;
            for (int l : lower_[e]) u.insert(u.end(), verts[l].begin(), verts[l].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            verts[e] = std::move(u);
            if (r > 30 || verts[e].size() != (std::size_t{1} << r)) return false;
            if (lower_[e].size() != static_cast<std::size_t>(2 * r)) return false;
            // Facets split into r opposite pairs: disjoint halves covering all vertices.
            std::vector<char> paired(lower_[e].size(), 0);
            for (std::size_t i = 0; i < lower_[e].size(); ++i) {
                const auto& a = verts[lower_[e][i]];
                if (a.size() != (std::size_t{1} << (r - 1)) || rank(lower_[e][i]) != r - 1)
                    return false;
                if (paired[i]) continue;
                bool found = false;
                for (std::size_t j = i + 1; j < lower_[e].size() && !found; ++j) {
                    if (paired[j]) continue;
                    const auto& b = verts[lower_[e][j]];
                    std::vector<int> both;
                    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
                    if (both.size() == verts[e].size()) {
                        paired[i] = paired[j] = 1;
                        found = true;
                    }
                }
                if (!found) return false;
            }
        }
        if (!seen.insert(verts[e]).second) return false;
    }
    return true;
}

bool operator==(const FacePoset& a, const FacePoset& b) {
    if (a.size() != b.size() || a.kind_ != b.kind_) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto j = b.find(a.id(static_cast<int>(i)));
        if (!j) return false;
        std::vector<std::string> la, lb;
        for (int l : a.lower_[i]) la.push_back(a.id(l));
        for (int l : b.lower_[*j]) lb.push_back(b.id(l));
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (la != lb) return false;
    }
    return true;
}

SubComplex::SubComplex(const FacePoset& ambient, std::vector<int> elements)
    : ambient_(&ambient), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (int e : elements_)
        if (e < 0 || e >= static_cast<int>(ambient.size()))
            throw Error(ErrorKind::Input, "subcomplex element out of range");
    if (!ambient.is_down_closed(elements_))
        throw Error(ErrorKind::Input, "subcomplex is not down-closed in its ambient poset");
}

bool SubComplex::contains(int e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

// --- simplicial -----------------------------------------------------------------------

std::string simplex_id(const Simplex& vertices) {
    if (vertices.size() == 1) return vertices.front();
    std::string out = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += ',';
        out += vertices[i];
    }
    return out + "}";
}

FacePoset make_simplicial(const std::vector<Simplex>& facets) {
    auto less = [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    std::set<Simplex, decltype(less)> all(less);
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorKind::Input, "facet repeats a vertex");
        if (f.empty()) continue;
        if (f.size() > 20) throw Error(ErrorKind::Input, "facet dimension too large");
        const std::size_t m = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) s.push_back(f[i]);
            all.insert(std::move(s));
        }
    }
    std::vector<Simplex> list(all.begin(), all.end());
    std::map<Simplex, int> index;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < list.size(); ++i) {
        index.emplace(list[i], static_cast<int>(i));
        ids.push_back(simplex_id(list[i]));
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Simplex& s = list[i];
        if (s.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != drop) face.push_back(s[j]);
            covers.emplace_back(index.at(face), static_cast<int>(i));
        }
    }
    return FacePoset(std::move(ids), covers, PosetKind::Simplicial);
}

Simplex vertex_labels(const FacePoset& complex, int e) {
    Simplex out;
    for (int v : complex.vertices_of(e)) out.push_back(complex.id(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> simplices_of(const FacePoset& complex) {
    std::vector<Simplex> out;
    out.reserve(complex.size());
    for (int e = 0; e < static_cast<int>(complex.size()); ++e) out.push_back(vertex_labels(complex, e));
    return out;
}

std::vector<Simplex> facets_of(const FacePoset& complex) {
    std::vector<Simplex> out;
    for (int e : complex.maximal_elements()) out.push_back(vertex_labels(complex, e));
    std::sort(out.begin(), out.end());
    return out;
}

FacePoset full_simplex(int n) {
    Simplex f;
    for (int i = 0; i <= n; ++i) f.push_back(std::to_string(i));
    return make_simplicial({f});
}

FacePoset simplex_boundary(int n) {
    std::vector<Simplex> facets;
    for (int drop = 0; drop <= n; ++drop) {
        Simplex f;
        for (int i = 0; i <= n; ++i)
            if (i != drop) f.push_back(std::to_string(i));
        facets.push_back(f);
    }
    return make_simplicial(facets);
}

}  // namespace treefold
