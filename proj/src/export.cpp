#include "treefold/export.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace treefold {

TreeLayout radial_layout(const Tree& t) {
    const int V = t.vertex_count();
    TreeLayout pos(V, {0.0, 0.0});
    if (V == 0) return pos;
    const int root = t.base().value_or(0);
    std::vector<int> parent(V, -1), order{root};
    std::vector<std::vector<int>> children(V);
    std::vector<char> seen(V, 0);
    seen[root] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
        const int v = order[h];
        std::vector<int> next;
        for (int e : t.incident_edges(v)) {
            const int w = t.other_end(e, v);
            if (!seen[w]) next.push_back(w);
        }
        std::sort(next.begin(), next.end());
        for (int w : next) {
            seen[w] = 1;
            parent[w] = v;
            children[v].push_back(w);
            order.push_back(w);
        }
    }
    std::vector<int> leaves(V, 0), depth(V, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (children[v].empty()) leaves[v] = 1;
        for (int w : children[v]) leaves[v] += leaves[w];
    }
    std::vector<double> from(V, 0.0), span(V, 0.0);
    span[root] = 2 * std::numbers::pi;
    for (int v : order) {
        if (v != root) {
            depth[v] = depth[parent[v]] + 1;
            const double a = from[v] + span[v] / 2;
            auto snap = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
            pos[v] = {snap(depth[v] * std::cos(a)), snap(depth[v] * std::sin(a))};
        }
        double a = from[v];
        for (int w : children[v]) {
            from[w] = a;
            span[w] = span[v] * leaves[w] / leaves[v];
            a += span[w];
        }
    }
    return pos;
}

namespace {

// Vertices of a cube, first tree varying slowest; squares reordered to a cycle.
std::vector<Cell> cube_vertices(const TreeProduct& T, const Cell& c) {
    std::vector<Cell> out{Cell{}};
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<int> ends;
        if (is_vertex_code(c[i])) {
            ends = {c[i]};
        } else {
            auto [a, b] = T.trees[i].edge(c[i] / 2);
            ends = {2 * a, 2 * b};
        }
        std::vector<Cell> next;
        for (const auto& p : out)
            for (int x : ends) {
                Cell q = p;
                q.push_back(x);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    if (out.size() == 4) std::swap(out[2], out[3]);
    return out;
}

}  // namespace

Geometry export_coordinates(const TreeProduct& T, const CellSet& cells) {
    for (const auto& c : cells)
        if (!T.valid_cell(c)) throw Error(ErrorKind::Input, "cell is not in the product");
    Geometry g;
    for (const auto& t : T.trees) g.layouts.push_back(radial_layout(t));
    const CellSet all = down_closure(T, cells);
    std::map<Cell, int> index;
    for (const auto& c : all) {
        if (TreeProduct::dim(c) != 0) continue;
        index[c] = static_cast<int>(g.vertex_cells.size());
        g.vertex_cells.push_back(c);
        std::vector<double> row;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto& p = g.layouts[i][c[i] / 2];
            row.push_back(p[0]);
            row.push_back(p[1]);
        }
        g.coordinates.push_back(std::move(row));
    }
    for (const auto& c : all) {
        if (TreeProduct::dim(c) == 0) continue;
        std::vector<int> row;
        for (const auto& v : cube_vertices(T, c)) row.push_back(index.at(v));
        g.cells.push_back(std::move(row));
        g.cell_codes.push_back(c);
    }
    return g;
}

Geometry export_coordinates(const CubulatedEmbedding& e) {
    return export_coordinates(e.target, e.total_image());
}

std::string to_off(const Geometry& g) {
    std::ostringstream out;
    out.precision(12);
    const std::size_t dim = g.coordinates.empty() ? 0 : g.coordinates.front().size();
    out << "nOFF\n" << dim << "\n" << g.coordinates.size() << " " << g.cells.size() << " 0\n";
    for (const auto& row : g.coordinates) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
        out << "\n";
    }
    for (const auto& c : g.cells) {
        out << c.size();
        for (int v : c) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace treefold
