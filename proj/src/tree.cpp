#include "treefold/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace treefold {

namespace {

void check_name(const std::string& name) {
    if (name.empty() || name.find_first_of("~(),/{};[]") != std::string::npos)
        throw Error(ErrorKind::Input, "tree vertex name '" + name + "' is empty or has a reserved character");
}

}  // namespace

void Tree::add_vertex(const std::string& name, int stage, int parent) {
    check_name(name);
    if (!index_.emplace(name, vertex_count()).second)
        throw Error(ErrorKind::Input, "duplicate tree vertex " + name);
    names_.push_back(name);
    stage_.push_back(stage);
    parent_.push_back(parent);
    incident_.emplace_back();
}

Tree Tree::point(const std::string& name) {
    Tree t;
    t.add_vertex(name, 0, -1);
    t.base_ = 0;
    return t;
}

Tree Tree::from_edges(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      std::optional<std::string> base) {
    Tree t;
    for (const auto& v : vertices) t.add_vertex(v, 0, -1);
    if (t.vertex_count() == 0) throw Error(ErrorKind::Input, "a tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != t.vertex_count() - 1)
        throw Error(ErrorKind::Input, "tree edge count must be vertex count minus one");
    for (const auto& [a, b] : edges) {
        auto u = t.find_vertex(a), w = t.find_vertex(b);
        if (!u || !w || *u == *w) throw Error(ErrorKind::Input, "bad tree edge " + a + "~" + b);
        const int e = t.edge_count();
        t.edges_.emplace_back(*u, *w);
        t.incident_[*u].push_back(e);
        t.incident_[*w].push_back(e);
    }
    // Connected with V-1 edges means acyclic.
    std::vector<char> seen(t.vertex_count(), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int e : t.incident_[v]) {
            int w = t.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                bfs.push(w);
            }
        }
    }
    if (reached != t.vertex_count()) throw Error(ErrorKind::Input, "tree is not connected");
    if (base) {
        auto b = t.find_vertex(*base);
        if (!b) throw Error(ErrorKind::Input, "unknown base vertex " + *base);
        t.base_ = *b;
    }
    return t;
}

std::optional<int> Tree::find_vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Tree::add_leaf(int at, const std::string& name, int stage) {
    add_vertex(name, stage, at);
    const int v = vertex_count() - 1;
    const int e = edge_count();
    edges_.emplace_back(at, v);
    incident_[at].push_back(e);
    incident_[v].push_back(e);
    return e;
}

std::string Tree::face_id(int code) const {
    if (is_vertex_code(code)) return names_[code / 2];
    auto [a, b] = edges_[code / 2];
    return names_[a] + "~" + names_[b];
}

std::optional<int> Tree::find_face(const std::string& id) const {
    auto tilde = id.find('~');
    if (tilde == std::string::npos) {
        auto v = find_vertex(id);
        if (!v) return std::nullopt;
        return 2 * *v;
    }
    auto a = find_vertex(id.substr(0, tilde)), b = find_vertex(id.substr(tilde + 1));
    if (!a || !b) return std::nullopt;
    for (int e : incident_[*a])
        if (other_end(e, *a) == *b) return 2 * e + 1;
    return std::nullopt;
}

bool Tree::is_ancestor(int v, int w) const {
    for (int x = w; x >= 0; x = parent_[x])
        if (x == v) return true;
    return false;
}

std::size_t TreeProduct::cell_count() const {
    std::size_t n = 1;
    for (const auto& t : trees) n *= static_cast<std::size_t>(t.face_count());
    return n;
}

int TreeProduct::dim(const Cell& c) {
    int d = 0;
    for (int x : c) d += !is_vertex_code(x);
    return d;
}

std::vector<Cell> TreeProduct::faces(const Cell& c) const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (is_vertex_code(c[i])) continue;
        auto [a, b] = trees[i].edge(c[i] / 2);
        for (int v : {a, b}) {
            Cell f = c;
            f[i] = 2 * v;
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<Cell> TreeProduct::cofaces(const Cell& c) const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_vertex_code(c[i])) continue;
        for (int e : trees[i].incident_edges(c[i] / 2)) {
            Cell f = c;
            f[i] = 2 * e + 1;
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::string TreeProduct::cell_id(const Cell& c) const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += trees[i].face_id(c[i]);
    }
    return s + ")";
}

std::vector<std::string> TreeProduct::cell_face_ids(const Cell& c) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(trees[i].face_id(c[i]));
    return out;
}

Cell TreeProduct::parse_cell(const std::vector<std::string>& face_ids) const {
    if (face_ids.size() != trees.size())
        throw Error(ErrorKind::Input, "cell has the wrong number of coordinates");
    Cell c;
    for (std::size_t i = 0; i < face_ids.size(); ++i) {
        auto code = trees[i].find_face(face_ids[i]);
        if (!code) throw Error(ErrorKind::Input, "unknown face " + face_ids[i] + " in tree " + std::to_string(i));
        c.push_back(*code);
    }
    return c;
}

bool TreeProduct::valid_cell(const Cell& c) const {
    if (c.size() != trees.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] < 0 || c[i] >= trees[i].face_count()) return false;
    return true;
}

FacePoset TreeProduct::poset_of(const CellSet& cells) const {
    std::vector<std::string> ids;
    std::map<Cell, int> index;
    for (const auto& c : cells) {
        index.emplace(c, static_cast<int>(ids.size()));
        ids.push_back(cell_id(c));
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& [c, i] : index)
        for (const auto& f : faces(c)) {
            auto it = index.find(f);
            if (it == index.end()) throw Error(ErrorKind::Input, "cell set is not down-closed at " + cell_id(c));
            covers.emplace_back(it->second, i);
        }
    return FacePoset(std::move(ids), covers, PosetKind::Cubical);
}

std::size_t TreeProduct::flat_index(const Cell& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) idx = idx * trees[i].face_count() + c[i];
    return idx;
}

CellGraph TreeProduct::full_graph() const {
    CellGraph g;
    const std::size_t n = cell_count();
    g.rank.resize(n);
    g.lower_offsets.reserve(n + 1);
    Cell c(trees.size(), 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        g.rank[idx] = dim(c);
        for (const auto& f : faces(c)) g.lower.push_back(static_cast<int>(flat_index(f)));
        g.lower_offsets.push_back(static_cast<int>(g.lower.size()));
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            if (++c[i] < trees[i].face_count()) break;
            c[i] = 0;
        }
    }
    g.finish_upper();
    return g;
}

namespace {

ColoredComplex link_coloring(const TreeProduct& T, const Cell& q, const CellSet* sub) {
    std::vector<int> C;
    for (int i = 0; i < T.size(); ++i)
        if (is_vertex_code(q[i])) C.push_back(i);
    auto label = [&](int i, int e) { return std::to_string(i) + "/" + T.trees[i].face_id(2 * e + 1); };
    ColoredComplex out;
    for (int i : C) out.palette.push_back(std::to_string(i));
    std::sort(out.palette.begin(), out.palette.end());
    // Enumerate all choices of at most one incident edge per tree in C.
    std::vector<Simplex> simplices;
    std::vector<int> choice(C.size(), -1);
    auto walk = [&](auto&& self, std::size_t j) -> void {
        if (j == C.size()) {
            Cell c = q;
            Simplex s;
            for (std::size_t t = 0; t < C.size(); ++t)
                if (choice[t] >= 0) {
                    c[C[t]] = 2 * choice[t] + 1;
                    s.push_back(label(C[t], choice[t]));
                }
            if (s.empty() || (sub && !sub->count(c))) return;
            std::sort(s.begin(), s.end());
            simplices.push_back(std::move(s));
            return;
        }
        choice[j] = -1;
        self(self, j + 1);
        for (int e : T.trees[C[j]].incident_edges(q[C[j]] / 2)) {
            choice[j] = e;
            self(self, j + 1);
        }
        choice[j] = -1;
    };
    walk(walk, 0);
    out.complex = make_simplicial(simplices);
    for (const auto& s : simplices)
        if (s.size() == 1) out.colors[s[0]] = s[0].substr(0, s[0].find('/'));
    return out;
}

}  // namespace

ColoredComplex induced_link_coloring(const TreeProduct& T, const Cell& q) {
    return link_coloring(T, q, nullptr);
}

ColoredComplex induced_link_coloring(const TreeProduct& T, const Cell& q, const CellSet& sub) {
    return link_coloring(T, q, &sub);
}

CellSet down_closure(const TreeProduct& T, const CellSet& cells) {
    CellSet out;
    std::vector<Cell> stack(cells.begin(), cells.end());
    while (!stack.empty()) {
        Cell c = std::move(stack.back());
        stack.pop_back();
        if (!out.insert(c).second) continue;
        for (auto& f : T.faces(c)) stack.push_back(std::move(f));
    }
    return out;
}

}  // namespace treefold
