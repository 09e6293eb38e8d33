#include "treefold/colored.hpp"

#include "treefold/poset_ops.hpp"

#include <algorithm>
#include <set>

namespace treefold {

const std::string& ColoredComplex::color_of(const std::string& vertex) const {
    auto it = colors.find(vertex);
    if (it == colors.end()) throw Error(ErrorKind::Input, "vertex " + vertex + " has no colour");
    return it->second;
}

std::vector<std::string> ColoredComplex::element_labels() const {
    std::vector<std::string> out;
    out.reserve(complex.size());
    for (int e = 0; e < static_cast<int>(complex.size()); ++e) {
        std::vector<std::string> cs;
        for (const auto& v : vertex_labels(complex, e)) cs.push_back(color_of(v));
        std::sort(cs.begin(), cs.end());
        std::string label;
        for (const auto& c : cs) label += c + ",";
        out.push_back(std::move(label));
    }
    return out;
}

Verdict check_coloring(const ColoredComplex& X) {
    std::set<std::string> palette(X.palette.begin(), X.palette.end());
    for (int v : X.complex.minimal_elements()) {
        auto it = X.colors.find(X.complex.id(v));
        if (it == X.colors.end()) return {false, "vertex " + X.complex.id(v) + " is uncoloured"};
        if (!palette.count(it->second))
            return {false, "colour " + it->second + " of " + it->first + " is not in the palette"};
    }
    for (int e = 0; e < static_cast<int>(X.complex.size()); ++e) {
        if (X.complex.rank(e) != 1) continue;
        auto vs = X.complex.lower_covers(e);
        if (vs.size() == 2 && X.colors.at(X.complex.id(vs[0])) == X.colors.at(X.complex.id(vs[1])))
            return {false, "edge " + X.complex.id(e) + " is monochromatic"};
    }
    return {};
}

namespace {

struct Builder {
    std::vector<Simplex> facets;
    std::map<std::string, std::string> colors;
    std::vector<std::string> interior;
    std::set<std::string> taken;
    std::string prefix;

    std::string fresh(const std::string& color) {
        std::string name;
        int k = static_cast<int>(interior.size());
        do name = prefix + std::to_string(k++);
        while (taken.count(name));
        taken.insert(name);
        colors[name] = color;
        interior.push_back(name);
        return name;
    }
    void add(Simplex s) {
        std::sort(s.begin(), s.end());
        facets.push_back(std::move(s));
    }
};

const std::string* least_color_avoiding(const std::vector<std::string>& palette,
                                        std::initializer_list<std::string> avoid) {
    for (const auto& c : palette)
        if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return &c;
    return nullptr;
}

// Cyclic vertex order of a 1-sphere, starting at the least label toward its smaller neighbour.
std::vector<std::string> cycle_order(const FacePoset& S) {
    std::map<std::string, std::vector<std::string>> adj;
    for (int e = 0; e < static_cast<int>(S.size()); ++e)
        if (S.rank(e) == 1) {
            auto vs = vertex_labels(S, e);
            adj[vs[0]].push_back(vs[1]);
            adj[vs[1]].push_back(vs[0]);
        }
    for (auto& [v, n] : adj) std::sort(n.begin(), n.end());
    std::vector<std::string> order{adj.begin()->first};
    std::string prev = order[0], cur = adj.begin()->second.front();
    while (cur != order[0]) {
        order.push_back(cur);
        const auto& n = adj[cur];
        std::string next = n[0] == prev ? n[1] : n[0];
        prev = cur;
        cur = next;
    }
    return order;
}

std::set<std::string> colors_used(const std::vector<std::string>& vertices,
                                  const std::map<std::string, std::string>& colors) {
    std::set<std::string> used;
    for (const auto& v : vertices) used.insert(colors.at(v));
    return used;
}

// Properly coloured triangulation of a polygon by diagonals. Ears are clipped only when
// the ear tip's colour survives elsewhere, so at least three colours remain; a small
// backtracking search covers the rare dead end.
bool ear_clip(std::vector<std::string> poly, const std::map<std::string, std::string>& colors,
              std::vector<Simplex>& out, int& budget) {
    const std::size_t m = poly.size();
    if (m == 3) {
        out.push_back({poly[0], poly[1], poly[2]});
        return true;
    }
    if (--budget < 0) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& a = poly[(i + m - 1) % m];
        const auto& b = poly[i];
        const auto& c = poly[(i + 1) % m];
        if (colors.at(a) == colors.at(c)) continue;
        std::vector<std::string> rest = poly;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (colors_used(rest, colors).size() < 3) continue;
        out.push_back({a, b, c});
        if (ear_clip(rest, colors, out, budget)) return true;
        out.pop_back();
        if (budget < 0) return false;
    }
    return false;
}

void fill_polygon(Builder& b, const std::vector<std::string>& poly,
                  const std::vector<std::string>& palette) {
    auto used = colors_used(poly, b.colors);
    for (const auto& c : palette)
        if (!used.count(c)) {
            std::string apex = b.fresh(c);
            for (std::size_t i = 0; i < poly.size(); ++i)
                b.add({apex, poly[i], poly[(i + 1) % poly.size()]});
            return;
        }
    std::vector<Simplex> tris;
    int budget = 100000;
    if (!ear_clip(poly, b.colors, tris, budget))
        throw Error(ErrorKind::Budget, "fiw_ball: no coloured triangulation of the polygon found");
    for (auto& t : tris) b.add(std::move(t));
}

}  // namespace

FiwResult fiw_ball(const ColoredComplex& S, const std::vector<std::string>& palette_in,
                   const FiwOptions& options) {
    std::vector<std::string> palette = palette_in;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    const int d = S.complex.dimension() + 1;
    if (static_cast<int>(palette.size()) < d + 1)
        throw Error(ErrorKind::Input, "fiw_ball: palette has fewer than d+1 colours");
    {
        ColoredComplex check = S;
        check.palette = palette;
        if (auto v = check_coloring(check); !v) throw Error(ErrorKind::Input, "fiw_ball: " + v.message);
    }
    if (auto r = recognize_sphere(S.complex, d - 1); !r.yes())
        throw Error(r.verdict == Recognition::Unverifiable ? ErrorKind::Budget : ErrorKind::Input,
                    "fiw_ball: input is not a sphere: " + r.reason);

    Builder b;
    b.prefix = options.fresh_prefix;
    for (int v : S.complex.minimal_elements()) {
        b.taken.insert(S.complex.id(v));
        b.colors[S.complex.id(v)] = S.colors.at(S.complex.id(v));
    }
    std::vector<std::string> boundary;
    for (int v : S.complex.minimal_elements()) boundary.push_back(S.complex.id(v));
    auto used = colors_used(boundary, b.colors);
    const std::string* unused = nullptr;
    for (const auto& c : palette)
        if (!used.count(c)) {
            unused = &c;
            break;
        }
    auto cone = [&](const std::string& color) {
        std::string apex = b.fresh(color);
        for (Simplex f : facets_of(S.complex)) {
            f.push_back(apex);
            b.add(std::move(f));
        }
    };

    if (d == 0) {
        b.fresh(palette.front());
        b.facets.push_back({b.interior.front()});
    } else if (d == 1) {
        const std::string& u = boundary[0];
        const std::string& v = boundary[1];
        const std::string cu = b.colors[u], cv = b.colors[v];
        if (cu == cv) {
            std::string w = b.fresh(*least_color_avoiding(palette, {cu}));
            b.add({u, w});
            b.add({w, v});
        } else if (!options.require_induced) {
            b.add({u, v});
        } else if (const std::string* c = least_color_avoiding(palette, {cu, cv})) {
            std::string w = b.fresh(*c);
            b.add({u, w});
            b.add({w, v});
        } else {
            std::string w1 = b.fresh(cv), w2 = b.fresh(cu);
            b.add({u, w1});
            b.add({w1, w2});
            b.add({w2, v});
        }
    } else if (d == 2) {
        std::vector<std::string> cyc = cycle_order(S.complex);
        if (unused) {
            cone(*unused);
        } else if (!options.require_induced) {
            fill_polygon(b, cyc, palette);
        } else {
            // Collar: one fresh vertex per boundary edge, fanned around each boundary vertex,
            // then the inner polygon (all fresh vertices) is filled.
            const std::size_t m = cyc.size();
            std::vector<std::string> w(m), inner;
            for (std::size_t i = 0; i < m; ++i) {
                const auto& x = cyc[i];
                const auto& y = cyc[(i + 1) % m];
                w[i] = b.fresh(*least_color_avoiding(palette, {b.colors[x], b.colors[y]}));
                b.add({x, y, w[i]});
            }
            for (std::size_t i = 0; i < m; ++i) {
                const auto& v = cyc[(i + 1) % m];
                const auto& a = w[i];
                const auto& c = w[(i + 1) % m];
                inner.push_back(a);
                if (b.colors[a] != b.colors[c]) {
                    b.add({v, a, c});
                } else {
                    std::string mid = b.fresh(*least_color_avoiding(palette, {b.colors[v], b.colors[a]}));
                    b.add({v, a, mid});
                    b.add({v, mid, c});
                    inner.push_back(mid);
                }
            }
            fill_polygon(b, inner, palette);
        }
    } else {
        if (!unused)
            throw Error(ErrorKind::Budget,
                        "fiw_ball: every colour occurs on the sphere; no construction for d >= 3");
        cone(*unused);
    }

    FiwResult out;
    out.ball.complex = make_simplicial(b.facets);
    out.ball.palette = palette;
    out.ball.colors = std::move(b.colors);
    out.interior_vertices = std::move(b.interior);
    out.boundary_witness.forward.resize(S.complex.size());
    for (int e = 0; e < static_cast<int>(S.complex.size()); ++e)
        out.boundary_witness.forward[e] = out.ball.complex.index_of(S.complex.id(e));
    return out;
}

std::vector<std::string> odd_interior_edge_links(const FacePoset& D) {
    std::vector<char> on_boundary(D.size(), 0);
    for (int e : boundary_elements(D)) on_boundary[e] = 1;
    std::vector<std::string> bad;
    for (int e = 0; e < static_cast<int>(D.size()); ++e) {
        if (D.rank(e) != 1 || on_boundary[e]) continue;
        FacePoset lk = link(D, e);
        auto counts = lk.rank_counts();
        if (!recognize_sphere(lk, 1).yes() || counts[0] % 2 != 0) bad.push_back(D.id(e));
    }
    return bad;
}

BallVerdict verify_colored_ball(const ColoredComplex& D, const ColoredComplex& S) {
    const int d = D.complex.dimension();
    if (d > 3) return {Recognition::Unverifiable, "unverifiable at this dimension"};
    if (auto v = check_coloring(D); !v) return {Recognition::No, v.message};
    auto r = recognize_ball(D.complex, d);
    if (!r.yes()) return {r.verdict, "not a ball: " + r.reason};

    ColoredComplex bd;
    bd.complex = boundary_of(D.complex);
    bd.palette = D.palette;
    for (int v : bd.complex.minimal_elements()) bd.colors[bd.complex.id(v)] = D.color_of(bd.complex.id(v));
    if (d == 0) {
        if (!S.complex.empty()) return {Recognition::No, "a 0-ball has empty boundary"};
    } else {
        if (bd.complex.size() != S.complex.size())
            return {Recognition::No, "boundary size differs from the sphere"};
        bool same = true;
        for (int e = 0; e < static_cast<int>(S.complex.size()) && same; ++e)
            same = bd.complex.contains(S.complex.id(e));
        if (same)
            for (int v : S.complex.minimal_elements())
                same = same && S.color_of(S.complex.id(v)) == bd.color_of(S.complex.id(v));
        if (!same) {
            auto lb = bd.element_labels(), ls = S.element_labels();
            auto iso = is_isomorphic(bd.complex, S.complex, 5'000'000, &lb, &ls);
            if (iso.verdict == IsoVerdict::BudgetExhausted)
                return {Recognition::Unverifiable, "boundary comparison ran out of budget"};
            if (!iso) return {Recognition::No, "boundary is not colour-isomorphic to the sphere"};
        }
    }
    if (d == 3) {
        std::set<std::string> used;
        for (const auto& [v, c] : D.colors) used.insert(c);
        if (used.size() == 4 && !odd_interior_edge_links(D.complex).empty())
            return {Recognition::No, "interior edge link is not an even polygon"};
    }
    return {};
}

}  // namespace treefold
