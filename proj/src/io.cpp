#include "treefold/io.hpp"

#include "treefold/classic.hpp"
#include "treefold/fixtures.hpp"
#include "treefold/telescope.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace treefold {

namespace {

[[noreturn]] void schema(const std::string& what) { throw ParseError(ParseFailure::Schema, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) schema("expected an object");
    auto it = j.find(name);
    if (it == j.end()) schema(std::string("missing field \"") + name + "\"");
    return *it;
}

std::string as_string(const Json& j, const std::string& what) {
    if (!j.is_string()) schema(what + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
    if (!j.is_array()) schema(what + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(as_string(x, what + " entry"));
    return out;
}

std::int64_t as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) schema(what + " must be an integer");
    return j.get<std::int64_t>();
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

FacePoset cubical_from_facets(const std::vector<std::vector<std::string>>& facets) {
    std::map<std::vector<std::string>, int> index;
    std::vector<std::string> ids;
    std::set<std::pair<int, int>> covers;
    auto element = [&](std::vector<std::string> verts) {
        std::sort(verts.begin(), verts.end());
        auto it = index.find(verts);
        if (it != index.end()) return it->second;
        const int e = static_cast<int>(ids.size());
        ids.push_back(verts.size() == 1 ? verts[0] : "[" + join(verts) + "]");
        index.emplace(std::move(verts), e);
        return e;
    };
    for (const auto& f : facets) {
        int d = 0;
        while ((std::size_t{1} << d) < f.size()) ++d;
        if (f.empty() || (std::size_t{1} << d) != f.size())
            throw ParseError(ParseFailure::Structure, "a cube facet needs 2^d vertices");
        if (std::set<std::string>(f.begin(), f.end()).size() != f.size())
            throw ParseError(ParseFailure::Structure, "repeated vertex in a cube facet");
        // Pattern digit 0/1 fixes a coordinate, 2 leaves it free.
        int patterns = 1;
        for (int i = 0; i < d; ++i) patterns *= 3;
        auto verts_of = [&](const std::vector<int>& p) {
            std::vector<std::string> v;
            for (std::size_t k = 0; k < f.size(); ++k) {
                bool ok = true;
                for (int i = 0; i < d; ++i) {
                    const int bit = static_cast<int>(k >> (d - 1 - i)) & 1;
                    ok = ok && (p[i] == 2 || p[i] == bit);
                }
                if (ok) v.push_back(f[k]);
            }
            return v;
        };
        for (int x = 0; x < patterns; ++x) {
            std::vector<int> p(d);
            for (int i = 0, r = x; i < d; ++i, r /= 3) p[i] = r % 3;
            const int e = element(verts_of(p));
            for (int i = 0; i < d; ++i) {
                if (p[i] != 2) continue;
                for (int b : {0, 1}) {
                    std::vector<int> q = p;
                    q[i] = b;
                    covers.insert({element(verts_of(q)), e});
                }
            }
        }
    }
    try {
        return FacePoset(ids, std::vector<std::pair<int, int>>(covers.begin(), covers.end()), PosetKind::Cubical);
    } catch (const Error& e) {
        throw ParseError(ParseFailure::Structure, std::string("not a cubical complex: ") + e.what());
    }
}

// Vertices of a cube in binary order: the least label first, axes by neighbour label.
std::vector<std::string> cube_binary_order(const FacePoset& K, int g) {
    std::vector<int> verts = K.vertices_of(g);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return K.id(a) < K.id(b); });
    const int v0 = verts.front();
    const std::vector<int> below = K.down_set(g);
    std::vector<int> axes;
    for (int e : below) {
        if (K.rank(e) != 1) continue;
        auto ends = K.vertices_of(e);
        if (ends[0] == v0) axes.push_back(ends[1]);
        else if (ends[1] == v0) axes.push_back(ends[0]);
    }
    std::sort(axes.begin(), axes.end(), [&](int a, int b) { return K.id(a) < K.id(b); });
    const int d = static_cast<int>(axes.size());
    std::vector<std::string> out(verts.size());
    for (int w : verts) {
        int best = -1;
        std::vector<int> best_verts;
        for (int f : below) {
            auto fv = K.vertices_of(f);
            if (std::find(fv.begin(), fv.end(), v0) == fv.end() || std::find(fv.begin(), fv.end(), w) == fv.end())
                continue;
            if (best < 0 || K.rank(f) < K.rank(best)) best = f, best_verts = fv;
        }
        std::size_t k = 0;
        for (int i = 0; i < d; ++i)
            if (std::find(best_verts.begin(), best_verts.end(), axes[i]) != best_verts.end())
                k |= std::size_t{1} << (d - 1 - i);
        if (k >= out.size() || !out[k].empty()) throw Error(ErrorKind::Internal, "cube vertices are not in a binary order");
        out[k] = K.id(w);
    }
    return out;
}

Json cell_json(const TreeProduct& T, const Cell& c) { return Json(T.cell_face_ids(c)); }

Cell cell_from_json(const TreeProduct& T, const Json& j) {
    try {
        return T.parse_cell(string_list(j, "cell"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        schema(e.what());
    }
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path_or_inline) {
    std::string text;
    const auto first = path_or_inline.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
        text = path_or_inline;
    } else {
        std::ifstream in(path_or_inline, std::ios::binary);
        if (!in) schema("cannot read " + path_or_inline);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        schema(std::string("invalid JSON: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Input, "cannot write " + path);
        out << text;
        if (!out) throw Error(ErrorKind::Input, "cannot write " + path);
    }
    std::filesystem::rename(tmp, path);
}

Json complex_to_json(const FacePoset& K) {
    Json j;
    std::vector<std::string> vertices;
    for (int v : K.minimal_elements()) vertices.push_back(K.id(v));
    std::sort(vertices.begin(), vertices.end());
    std::vector<std::vector<std::string>> facets;
    if (K.kind() == PosetKind::Simplicial) {
        j["kind"] = "simplicial";
        for (auto f : facets_of(K)) {
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        }
    } else if (K.kind() == PosetKind::Cubical) {
        j["kind"] = "cubical";
        for (int g : K.maximal_elements()) facets.push_back(cube_binary_order(K, g));
    } else {
        throw Error(ErrorKind::Input, "only simplicial and cubical complexes have a file format");
    }
    std::sort(facets.begin(), facets.end());
    j["vertices"] = vertices;
    j["facets"] = facets;
    return j;
}

FacePoset complex_from_json(const Json& j) {
    const std::string kind = as_string(field(j, "kind"), "kind");
    if (kind != "simplicial" && kind != "cubical") schema("kind must be simplicial or cubical");
    const std::vector<std::string> vertices = string_list(field(j, "vertices"), "vertices");
    std::set<std::string> known;
    for (const auto& v : vertices) {
        if (v.empty()) schema("empty vertex label");
        if (!known.insert(v).second) schema("duplicate vertex " + v);
    }
    const Json& fj = field(j, "facets");
    if (!fj.is_array()) schema("facets must be an array");
    std::vector<std::vector<std::string>> facets;
    std::set<std::string> used;
    for (const auto& f : fj) {
        auto verts = string_list(f, "facet");
        if (verts.empty()) schema("empty facet");
        for (const auto& v : verts) {
            if (!known.count(v)) schema("facet references unknown vertex " + v);
            used.insert(v);
        }
        facets.push_back(std::move(verts));
    }
    for (const auto& v : vertices)
        if (!used.count(v)) facets.push_back({v});
    if (kind == "cubical") return cubical_from_facets(facets);
    std::vector<Simplex> simplices;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) schema("repeated vertex in a facet");
        simplices.push_back(f);
    }
    try {
        return make_simplicial(simplices);
    } catch (const Error& e) {
        schema(e.what());
    }
}

FacePoset parse_complex(const std::string& path_or_inline) { return complex_from_json(read_json(path_or_inline)); }

Json tree_to_json(const Tree& t) {
    Json j;
    std::vector<std::string> vertices;
    for (int v = 0; v < t.vertex_count(); ++v) vertices.push_back(t.vertex_name(v));
    Json edges = Json::array();
    for (int e = 0; e < t.edge_count(); ++e) {
        auto [a, b] = t.edge(e);
        edges.push_back(Json::array({t.vertex_name(a), t.vertex_name(b)}));
    }
    j["vertices"] = vertices;
    j["edges"] = edges;
    if (t.base()) j["base"] = t.vertex_name(*t.base());
    return j;
}

Tree tree_from_json(const Json& j) {
    auto vertices = string_list(field(j, "vertices"), "tree vertices");
    const Json& ej = field(j, "edges");
    if (!ej.is_array()) schema("tree edges must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : ej) {
        auto ends = string_list(e, "tree edge");
        if (ends.size() != 2) schema("a tree edge has two ends");
        edges.emplace_back(ends[0], ends[1]);
    }
    std::optional<std::string> base;
    if (j.contains("base")) base = as_string(j["base"], "base");
    try {
        return Tree::from_edges(vertices, edges, base);
    } catch (const Error& e) {
        throw ParseError(ParseFailure::Structure, e.what());
    }
}

Json colored_to_json(const ColoredComplex& c) {
    Json j = complex_to_json(c.complex);
    j["palette"] = c.palette;
    Json colors = Json::object();
    for (const auto& [v, col] : c.colors) colors[v] = col;
    j["colors"] = colors;
    return j;
}

ColoredComplex colored_from_json(const Json& j) {
    ColoredComplex c;
    c.complex = complex_from_json(j);
    c.palette = string_list(field(j, "palette"), "palette");
    std::vector<std::string> sorted = c.palette;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) schema("duplicate palette colour");
    if (sorted != c.palette) schema("palette must be sorted");
    const Json& cj = field(j, "colors");
    if (!cj.is_object()) schema("colors must be an object");
    for (auto it = cj.begin(); it != cj.end(); ++it) {
        if (!c.complex.contains(it.key()) || c.complex.rank(c.complex.index_of(it.key())) != 0)
            schema("colour given for unknown vertex " + it.key());
        c.colors[it.key()] = as_string(it.value(), "colour");
    }
    if (auto v = check_coloring(c); !v) throw ParseError(ParseFailure::Coloring, v.message);
    return c;
}

Json certificate_to_json(const CollapseCertificate& c) {
    Json j;
    j["start"] = c.start;
    Json steps = Json::array();
    for (const auto& [s, t] : c.steps) steps.push_back(Json::array({s, t}));
    j["steps"] = steps;
    j["final"] = c.final;
    return j;
}

CollapseCertificate certificate_from_json(const Json& j) {
    CollapseCertificate c;
    c.start = field(j, "start");
    c.final = field(j, "final");
    const Json& sj = field(j, "steps");
    if (!sj.is_array()) schema("steps must be an array");
    for (const auto& s : sj) {
        auto pair = string_list(s, "step");
        if (pair.size() != 2) schema("a step is a pair of ids");
        c.steps.emplace_back(pair[0], pair[1]);
    }
    return c;
}

Json embedding_to_json(const CubulatedEmbedding& e, const PackedSteps* certificate) {
    const TreeProduct& T = e.target;
    Json j;
    j["source"] = complex_to_json(e.source);
    Json trees = Json::array();
    for (const auto& t : T.trees) trees.push_back(tree_to_json(t));
    j["trees"] = trees;
    Json vimg = Json::object();
    std::vector<std::string> vertices;
    for (int v : e.source.minimal_elements()) vertices.push_back(e.source.id(v));
    std::sort(vertices.begin(), vertices.end());
    for (const auto& v : vertices) vimg[v] = cell_json(T, e.vertex_image(v));
    j["vertex_images"] = vimg;
    Json simg = Json::object();
    for (const auto& [id, cells] : e.images) {
        Json list = Json::array();
        for (const auto& c : cells) list.push_back(cell_json(T, c));
        simg[id] = list;
    }
    j["simplex_images"] = simg;
    if (certificate) {
        Json steps = Json::array();
        for (const auto& [s, t] : *certificate)
            steps.push_back(Json::array({cell_json(T, unpack_cell(s, T.size())), cell_json(T, unpack_cell(t, T.size()))}));
        j["certificate"] = Json{{"start", "product"}, {"steps", steps}, {"final", "image"}};
    }
    return j;
}

LoadedEmbedding embedding_from_json(const Json& j) {
    LoadedEmbedding out;
    CubulatedEmbedding& e = out.embedding;
    e.source = complex_from_json(field(j, "source"));
    const Json& tj = field(j, "trees");
    if (!tj.is_array()) schema("trees must be an array");
    for (const auto& t : tj) e.target.trees.push_back(tree_from_json(t));
    const Json& sj = field(j, "simplex_images");
    if (!sj.is_object()) schema("simplex_images must be an object");
    for (auto it = sj.begin(); it != sj.end(); ++it) {
        if (!e.source.contains(it.key())) schema("image given for unknown simplex " + it.key());
        if (!it.value().is_array()) schema("an image is an array of cells");
        CellSet cells;
        for (const auto& c : it.value()) cells.insert(cell_from_json(e.target, c));
        e.images[it.key()] = std::move(cells);
    }
    const Json& vj = field(j, "vertex_images");
    if (!vj.is_object()) schema("vertex_images must be an object");
    for (auto it = vj.begin(); it != vj.end(); ++it) {
        auto img = e.images.find(it.key());
        if (img == e.images.end() || img->second != CellSet{cell_from_json(e.target, it.value())})
            throw ParseError(ParseFailure::Structure, "vertex image of " + it.key() + " disagrees with its simplex image");
    }
    if (j.contains("certificate")) {
        const Json& cj = j["certificate"];
        if (field(cj, "start") != "product" || field(cj, "final") != "image")
            schema("an embedding certificate runs from \"product\" to \"image\"");
        const Json& steps = field(cj, "steps");
        if (!steps.is_array()) schema("steps must be an array");
        PackedSteps packed;
        packed.reserve(steps.size());
        for (const auto& s : steps) {
            if (!s.is_array() || s.size() != 2) schema("a step is a pair of cells");
            packed.emplace_back(pack_cell(cell_from_json(e.target, s[0])), pack_cell(cell_from_json(e.target, s[1])));
        }
        out.certificate = std::move(packed);
    }
    return out;
}

Json tower_to_json(const GroupTower& t) {
    auto stage_json = [](const TowerStage& s, bool first) {
        Json j;
        j["rank"] = s.group.rank;
        j["torsion"] = s.group.torsion;
        j["map"] = first ? Json::array() : Json(s.map.rows() == 0 ? Json::array() : Json(s.map.to_rows()));
        return j;
    };
    Json j;
    j["prefix"] = Json::array();
    j["period"] = Json::array();
    for (std::size_t k = 0; k < t.prefix.size(); ++k) j["prefix"].push_back(stage_json(t.prefix[k], k == 0));
    for (const auto& s : t.period) j["period"].push_back(stage_json(s, false));
    return j;
}

GroupTower tower_from_json(const Json& j) {
    GroupTower t;
    std::vector<const Json*> raw;
    for (const char* part : {"prefix", "period"}) {
        const Json& pj = field(j, part);
        if (!pj.is_array()) schema(std::string(part) + " must be an array");
        for (const auto& s : pj) {
            TowerStage st;
            st.group.rank = static_cast<int>(as_int(field(s, "rank"), "rank"));
            if (st.group.rank < 0) schema("rank must be non-negative");
            const Json& tj = field(s, "torsion");
            if (!tj.is_array()) schema("torsion must be an array");
            for (const auto& x : tj) st.group.torsion.push_back(as_int(x, "torsion order"));
            (std::string(part) == "prefix" ? t.prefix : t.period).push_back(std::move(st));
            raw.push_back(&field(s, "map"));
        }
    }
    if (raw.empty()) schema("a tower needs at least one stage");
    const std::size_t np = t.prefix.size(), total = raw.size();
    for (std::size_t k = 0; k < total; ++k) {
        TowerStage& st = k < np ? t.prefix[k] : t.period[k - np];
        const int cols = st.group.generator_count();
        int rows = 0;
        if (k > 0) rows = (k < np ? t.prefix[k - 1] : (k == np ? t.prefix.back() : t.period[k - np - 1])).group.generator_count();
        else if (np == 0) rows = t.period.back().group.generator_count();
        const Json& m = *raw[k];
        if (!m.is_array()) schema("map must be an array of rows");
        if (k == 0 && np > 0) {
            if (!m.empty()) schema("the first stage has no map");
            st.map = IntMatrix(0, cols);
            continue;
        }
        if (m.empty()) {
            if (rows * cols != 0) schema("map is missing");
            st.map = IntMatrix(rows, cols);
            continue;
        }
        std::vector<std::vector<std::int64_t>> values;
        for (const auto& r : m) {
            if (!r.is_array()) schema("map must be an array of rows");
            std::vector<std::int64_t> row;
            for (const auto& x : r) row.push_back(as_int(x, "map entry"));
            values.push_back(std::move(row));
        }
        if (static_cast<int>(values.size()) != rows) schema("map has the wrong number of rows");
        for (const auto& r : values)
            if (static_cast<int>(r.size()) != cols) schema("map has the wrong number of columns");
        st.map = IntMatrix::from_rows(values, cols);
    }
    if (auto v = validate_tower(t); !v) throw ParseError(ParseFailure::Structure, v.message);
    return t;
}

namespace {

bool take_int(const std::string& s, const std::string& prefix, int& out) {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return false;
    const std::string rest = s.substr(prefix.size());
    if (rest.size() > 3 || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return false;
    out = std::stoi(rest);
    return true;
}

FacePoset fan_disk(int n) {
    std::vector<Simplex> f;
    for (int i = 0; i < n; ++i) f.push_back({"a", "b" + std::to_string(i), "b" + std::to_string(i + 1)});
    return make_simplicial(f);
}

FacePoset path_complex(int n) {
    std::vector<Simplex> f;
    for (int i = 0; i < n; ++i) f.push_back({"x" + std::to_string(i), "x" + std::to_string(i + 1)});
    if (n == 0) f.push_back({"x0"});
    return make_simplicial(f);
}

// Θ × Θ with one square coned off to a centre z, and I × I glued along the arc from a
// corner of that square to z.
FacePoset kks_theta() {
    const std::vector<std::pair<std::string, std::string>> theta{
        {"N", "m1"}, {"N", "m2"}, {"N", "m3"}, {"m1", "S"}, {"m2", "S"}, {"m3", "S"}};
    auto v = [](const std::string& a, const std::string& b) { return a + "." + b; };
    std::vector<Simplex> f;
    for (const auto& [a, b] : theta)
        for (const auto& [c, d] : theta) {
            if (a == "N" && b == "m1" && c == "N" && d == "m1") {
                const std::vector<std::string> ring{v(a, c), v(b, c), v(b, d), v(a, d)};
                for (int k = 0; k < 4; ++k) f.push_back({ring[k], ring[(k + 1) % 4], "z"});
                continue;
            }
            f.push_back({v(a, c), v(b, c), v(b, d)});
            f.push_back({v(a, c), v(a, d), v(b, d)});
        }
    f.push_back({"N.N", "z", "k1"});
    f.push_back({"N.N", "k0", "k1"});
    for (auto& s : f) std::sort(s.begin(), s.end());
    return make_simplicial(f);
}

}  // namespace

FacePoset fixture(const std::string& name) {
    int n = 0, m = 0;
    if (name == "point") return full_simplex(0);
    if (name == "dunce-hat") return dunce_hat();
    if (name == "remark-e2") return path_complex(2);
    if (name == "kks-theta") return kks_theta();
    if (name == "ball3") return make_simplicial({{"0", "1", "2", "3"}, {"1", "2", "3", "4"}});
    if (name.rfind("cone-", 0) == 0) return simplicial_cone(fixture(name.substr(5)), "c");
    if (take_int(name, "simplex", n) && n <= 8) return full_simplex(n);
    if (take_int(name, "sphere", n) && n <= 7) return simplex_boundary(n + 1);
    if (take_int(name, "path", n) && n <= 200) return path_complex(n);
    if (take_int(name, "disk", n) && n >= 1 && n <= 200) return fan_disk(n);
    if (name.size() >= 2 && name[0] == 'X') {
        const auto dash = name.find("-F");
        if (dash == std::string::npos) {
            if (take_int(name, "X", n) && n >= 1 && n <= 8) return build_telescope(n).X;
        } else if (take_int(name.substr(0, dash), "X", n) && take_int(name.substr(dash), "-F", m) && n >= 1 &&
                   n <= 8 && m >= 1 && m <= n) {
            return build_telescope(n).F[m - 1];
        }
    }
    throw Error(ErrorKind::Input, "unknown fixture " + name);
}

std::vector<std::string> fixture_names() {
    return {"point",   "simplex1", "simplex2", "simplex3",  "sphere1",     "sphere2",     "path3",
            "disk4",   "ball3",    "dunce-hat", "remark-e2", "kks-theta",  "X1",          "X2",
            "X3",      "X3-F1",    "X3-F2",    "X3-F3",     "cone-sphere1", "cone-disk4", "cone-path3"};
}

}  // namespace treefold
