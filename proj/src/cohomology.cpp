#include "treefold/cohomology.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace treefold {

FGAbelianGroup FGAbelianGroup::from_orders(int rank, const std::vector<std::int64_t>& orders) {
    std::vector<std::int64_t> finite;
    for (auto o : orders) {
        if (o < 0) throw Error(ErrorKind::Input, "negative cyclic order");
        if (o == 0)
            ++rank;
        else if (o > 1)
            finite.push_back(o);
    }
    FGAbelianGroup g;
    g.rank = rank;
    if (finite.empty()) return g;
    IntMatrix d(static_cast<int>(finite.size()), static_cast<int>(finite.size()));
    for (std::size_t i = 0; i < finite.size(); ++i) d(static_cast<int>(i), static_cast<int>(i)) = finite[i];
    for (auto x : smith_normal_form(d, {false, false}).diagonal)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

std::int64_t FGAbelianGroup::order_of(int generator) const {
    if (generator < 0 || generator >= generator_count()) throw Error(ErrorKind::Internal, "generator out of range");
    return generator < static_cast<int>(torsion.size()) ? torsion[generator] : 0;
}

bool FGAbelianGroup::canonical() const {
    if (rank < 0) return false;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) return false;
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0) return false;
    }
    return true;
}

std::string FGAbelianGroup::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (auto t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    return s;
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            std::string x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
            x.erase(0, std::min(x.find_first_not_of('0'), x.size() - 1));
            y.erase(0, std::min(y.find_first_not_of('0'), y.size() - 1));
            if (x.size() != y.size()) return x.size() < y.size();
            if (x != y) return x < y;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
    return a < b;
}

namespace {

std::vector<std::string> oriented_vertices(const FacePoset& K, int e) {
    Simplex v = vertex_labels(K, e);
    std::sort(v.begin(), v.end(), natural_less);
    return v;
}

// Parity of the permutation that sorts `v` by natural order.
int sort_sign(std::vector<std::string> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
            if (natural_less(v[j + 1], v[j])) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    return sign;
}

std::vector<char> relative_mask(const FacePoset& K, const FacePoset& L) {
    std::vector<char> in_l(K.size(), 0);
    for (int e = 0; e < static_cast<int>(L.size()); ++e) {
        auto idx = K.find(L.id(e));
        if (!idx) throw Error(ErrorKind::Input, "relative subcomplex has a simplex " + L.id(e) + " not in K");
        in_l[*idx] = 1;
    }
    for (int e = 0; e < static_cast<int>(K.size()); ++e)
        if (in_l[e])
            for (int f : K.lower_covers(e))
                if (!in_l[f]) throw Error(ErrorKind::Input, "relative subcomplex is not closed under faces");
    return in_l;
}

std::vector<int> cochain_basis(const FacePoset& K, const std::vector<char>& in_l, int degree) {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(K.size()); ++e)
        if (K.rank(e) == degree && !in_l[e]) out.push_back(e);
    return out;
}

// δ: C^d -> C^{d+1} in the given bases.
IntMatrix coboundary_matrix(const FacePoset& K, const std::vector<int>& from, const std::vector<int>& to) {
    IntMatrix m(static_cast<int>(to.size()), static_cast<int>(from.size()));
    std::map<int, int> col;
    for (int j = 0; j < static_cast<int>(from.size()); ++j) col[from[j]] = j;
    for (int i = 0; i < static_cast<int>(to.size()); ++i) {
        auto verts = oriented_vertices(K, to[i]);
        for (int f : K.lower_covers(to[i])) {
            auto it = col.find(f);
            if (it == col.end()) continue;
            auto face = oriented_vertices(K, f);
            std::size_t pos = 0;
            while (pos < face.size() && face[pos] == verts[pos]) ++pos;
            m(i, it->second) = pos % 2 == 0 ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

CohomologyGroup cohomology(const FacePoset& K, int degree, const FacePoset& L, bool reduced) {
    if (K.kind() != PosetKind::Simplicial && !K.empty())
        throw Error(ErrorKind::Input, "cohomology needs a simplicial complex");
    if (degree < 0) throw Error(ErrorKind::Input, "negative degree");
    const auto in_l = relative_mask(K, L);
    const bool augmented = reduced && L.empty();

    CohomologyGroup h;
    h.degree = degree;
    h.basis = cochain_basis(K, in_l, degree);
    const auto above = cochain_basis(K, in_l, degree + 1);
    const int n = static_cast<int>(h.basis.size());

    IntMatrix A = coboundary_matrix(K, h.basis, above);
    IntMatrix B;
    if (degree > 0) {
        B = coboundary_matrix(K, cochain_basis(K, in_l, degree - 1), h.basis);
    } else if (augmented && n > 0) {
        B = IntMatrix(n, 1);
        for (int i = 0; i < n; ++i) B(i, 0) = 1;
    } else {
        B = IntMatrix(n, 0);
    }

    SmithForm sa = smith_normal_form(A, {false, true});
    const int r = sa.rank, z = n - r;
    h.to_kernel = sa.V_inv;
    h.kernel_offset = r;
    IntMatrix C = (sa.V_inv * B).block(r, 0, z, B.cols());
    if (!(sa.V_inv * B).block(0, 0, r, B.cols()).is_zero())
        throw Error(ErrorKind::Internal, "coboundary of a coboundary is not zero");
    SmithForm sc = smith_normal_form(C, {true, false});
    h.kernel_to_smith = sc.U;

    std::vector<std::int64_t> orders;
    for (int j = 0; j < z; ++j) {
        std::int64_t d = j < sc.rank ? sc.diagonal[j] : 0;
        if (d == 1) continue;
        h.smith_index.push_back(j);
        orders.push_back(d);
    }
    for (auto d : orders)
        if (d > 1) h.group.torsion.push_back(d);
        else ++h.group.rank;
    for (int j : h.smith_index) {
        std::vector<std::int64_t> g(n, 0);
        for (int l = 0; l < z; ++l) {
            std::int64_t c = sc.U_inv(l, j);
            if (c == 0) continue;
            for (int i = 0; i < n; ++i)
                if (sa.V(i, r + l)) g[i] = checked_add(g[i], checked_mul(c, sa.V(i, r + l)));
        }
        h.generators.push_back(std::move(g));
    }
    return h;
}

std::vector<std::int64_t> CohomologyGroup::coordinates(const std::vector<std::int64_t>& x) const {
    const int n = static_cast<int>(basis.size());
    if (static_cast<int>(x.size()) != n) throw Error(ErrorKind::Input, "cochain has the wrong length");
    std::vector<std::int64_t> k(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (to_kernel(i, j) && x[j]) k[i] = checked_add(k[i], checked_mul(to_kernel(i, j), x[j]));
    for (int i = 0; i < kernel_offset; ++i)
        if (k[i] != 0) throw Error(ErrorKind::Input, "cochain is not a cocycle");
    const int z = n - kernel_offset;
    std::vector<std::int64_t> out;
    for (std::size_t g = 0; g < smith_index.size(); ++g) {
        const int j = smith_index[g];
        std::int64_t y = 0;
        for (int l = 0; l < z; ++l)
            if (kernel_to_smith(j, l)) y = checked_add(y, checked_mul(kernel_to_smith(j, l), k[kernel_offset + l]));
        const std::int64_t d = group.order_of(static_cast<int>(g));
        if (d > 0) y = ((y % d) + d) % d;
        out.push_back(y);
    }
    return out;
}

Verdict check_simplicial_map(const SimplicialMap& f) {
    for (int v : f.source.minimal_elements())
        if (!f.vertices.count(f.source.id(v))) return {false, "vertex " + f.source.id(v) + " has no image"};
    for (int e = 0; e < static_cast<int>(f.source.size()); ++e) {
        std::set<std::string> img;
        for (const auto& v : vertex_labels(f.source, e)) img.insert(f.vertices.at(v));
        Simplex s(img.begin(), img.end());
        if (!f.target.contains(simplex_id(s)))
            return {false, "image of " + f.source.id(e) + " is not a simplex of the target"};
    }
    return {};
}

SimplicialMap inclusion_map(const FacePoset& sub, const FacePoset& K) {
    SimplicialMap f{sub, K, {}};
    for (int v : sub.minimal_elements()) f.vertices[sub.id(v)] = sub.id(v);
    return f;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    SimplicialMap h{f.source, g.target, {}};
    for (const auto& [v, w] : f.vertices) h.vertices[v] = g.vertices.at(w);
    return h;
}

IntMatrix induced_map(const SimplicialMap& f, int degree, const FacePoset& source_rel, const FacePoset& target_rel) {
    if (auto v = check_simplicial_map(f); !v) throw Error(ErrorKind::Input, v.message);
    const CohomologyGroup hx = cohomology(f.source, degree, source_rel);
    const CohomologyGroup hy = cohomology(f.target, degree, target_rel);
    const auto in_lx = relative_mask(f.source, source_rel);
    const auto in_ly = relative_mask(f.target, target_rel);

    auto image_of = [&](int e) {
        std::set<std::string> img;
        for (const auto& v : vertex_labels(f.source, e)) img.insert(f.vertices.at(v));
        return *f.target.find(simplex_id(Simplex(img.begin(), img.end())));
    };
    for (int e = 0; e < static_cast<int>(f.source.size()); ++e)
        if (in_lx[e] && !in_ly[image_of(e)])
            throw Error(ErrorKind::Input, "map does not send the source pair into the target pair");

    std::map<int, int> ypos;
    for (int i = 0; i < static_cast<int>(hy.basis.size()); ++i) ypos[hy.basis[i]] = i;
    // Pullback matrix: for each source basis simplex, (target position, sign) or none.
    std::vector<std::pair<int, int>> pull(hx.basis.size(), {-1, 0});
    for (std::size_t i = 0; i < hx.basis.size(); ++i) {
        const int e = hx.basis[i];
        auto verts = oriented_vertices(f.source, e);
        std::vector<std::string> img;
        for (const auto& v : verts) img.push_back(f.vertices.at(v));
        if (std::set<std::string>(img.begin(), img.end()).size() != img.size()) continue;  // degenerate
        auto it = ypos.find(image_of(e));
        if (it == ypos.end()) continue;  // lands in the relative part
        pull[i] = {it->second, sort_sign(img)};
    }
    IntMatrix m(hx.group.generator_count(), hy.group.generator_count());
    for (int j = 0; j < hy.group.generator_count(); ++j) {
        std::vector<std::int64_t> x(hx.basis.size(), 0);
        for (std::size_t i = 0; i < hx.basis.size(); ++i)
            if (pull[i].first >= 0) x[i] = pull[i].second * hy.generators[j][pull[i].first];
        auto c = hx.coordinates(x);
        for (int i = 0; i < m.rows(); ++i) m(i, j) = c[i];
    }
    return m;
}

std::int64_t evaluate(const CohomologyGroup& h, const FacePoset& K, const std::vector<std::int64_t>& cochain,
                      const std::vector<std::pair<std::string, std::int64_t>>& chain) {
    std::map<int, int> pos;
    for (int i = 0; i < static_cast<int>(h.basis.size()); ++i) pos[h.basis[i]] = i;
    std::int64_t s = 0;
    for (const auto& [id, c] : chain) {
        auto e = K.find(id);
        if (!e) throw Error(ErrorKind::Input, "chain uses unknown simplex " + id);
        auto it = pos.find(*e);
        if (it != pos.end()) s = checked_add(s, checked_mul(c, cochain[it->second]));
    }
    return s;
}

}  // namespace treefold
