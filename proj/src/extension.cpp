#include "treefold/extension.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>
#include <limits>

namespace treefold {

const char* to_string(ChoicePolicy p) {
    switch (p) {
        case ChoicePolicy::Canonical: return "canonical";
        case ChoicePolicy::Consecutive: return "consecutive";
        case ChoicePolicy::EdgesFirst: return "edges-first";
    }
    return "canonical";
}

ChoicePolicy parse_policy(const std::string& name) {
    if (name == "canonical") return ChoicePolicy::Canonical;
    if (name == "consecutive") return ChoicePolicy::Consecutive;
    if (name == "edges-first") return ChoicePolicy::EdgesFirst;
    throw Error(ErrorKind::Input, "unknown policy " + name);
}

PackedCell pack_cell(const Cell& c) {
    const int n = static_cast<int>(c.size());
    if (n == 0) return 0;
    if (n > 8) throw Error(ErrorKind::Budget, "too many trees to pack a cell");
    const int bits = 64 / n;
    PackedCell x = 0;
    for (int code : c) {
        if (code < 0 || (bits < 64 && static_cast<std::uint64_t>(code) >> bits))
            throw Error(ErrorKind::Budget, "face code too large to pack");
        x = (bits == 64 ? 0 : x << bits) | static_cast<std::uint64_t>(code);
    }
    return x;
}

Cell unpack_cell(PackedCell x, int n) {
    Cell c(n);
    if (n == 0) return c;
    const int bits = 64 / n;
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (int i = n - 1; i >= 0; --i) {
        c[i] = static_cast<int>(x & mask);
        x = bits == 64 ? 0 : x >> bits;
    }
    return c;
}

PackedSteps pack_steps(const CollapseSteps& steps) {
    PackedSteps out;
    out.reserve(steps.size());
    for (const auto& [s, t] : steps) out.emplace_back(pack_cell(s), pack_cell(t));
    return out;
}

namespace {

// c >= q in the product face order.
bool above(const TreeProduct& T, const Cell& c, const Cell& q) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == q[i]) continue;
        if (!is_vertex_code(q[i]) || is_vertex_code(c[i])) return false;
        auto [a, b] = T.trees[i].edge(c[i] / 2);
        if (a != q[i] / 2 && b != q[i] / 2) return false;
    }
    return true;
}

bool vertex_less(const TreeProduct& T, const Cell& v, const Cell& w) {
    if (v == w) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!T.trees[i].is_ancestor(v[i] / 2, w[i] / 2)) return false;
    return true;
}

std::vector<Cell> policy_order(const ExtensionState& st, const std::vector<Cell>& interior,
                               const ExtensionOptions& opt) {
    const TreeProduct& T = st.product;
    std::vector<Cell> vertices, rest;
    for (const auto& c : interior) (TreeProduct::dim(c) == 0 ? vertices : rest).push_back(c);
    auto by_dim = [](bool ascending) {
        return [ascending](const Cell& a, const Cell& b) {
            int da = TreeProduct::dim(a), db = TreeProduct::dim(b);
            return da != db ? (ascending ? da < db : da > db) : false;
        };
    };
    // `interior` arrives sorted by cell id; stable sorts keep that as the tie-break.
    if (opt.policy == ChoicePolicy::EdgesFirst) {
        std::vector<Cell> all = interior;
        std::stable_sort(all.begin(), all.end(), by_dim(false));
        return all;
    }
    std::stable_sort(rest.begin(), rest.end(), by_dim(true));
    std::vector<Cell> order;
    if (opt.policy == ChoicePolicy::Consecutive) {
        int k = 0;
        for (const auto& c : st.frontier) k = std::max(k, TreeProduct::dim(c));
        if (k == 1 && !st.frontier_boundary.empty()) {
            Cell start = *std::min_element(st.frontier_boundary.begin(), st.frontier_boundary.end(),
                                           [&](const Cell& a, const Cell& b) { return T.cell_id(a) < T.cell_id(b); });
            Cell prev_edge, cur = start;
            std::set<Cell> interior_set(vertices.begin(), vertices.end());
            while (true) {
                Cell next_edge;
                for (const auto& e : T.cofaces(cur))
                    if (st.frontier.count(e) && e != prev_edge) next_edge = e;
                if (next_edge.empty()) break;
                for (const auto& f : T.faces(next_edge))
                    if (f != cur) cur = f;
                prev_edge = next_edge;
                if (interior_set.count(cur)) order.push_back(cur);
            }
            if (order.size() != vertices.size()) order = vertices;
        } else {
            order = vertices;
        }
    } else {
        // Kahn order over the ancestor order; candidates stay in id order.
        std::vector<Cell> remaining = vertices;
        while (!remaining.empty()) {
            std::vector<Cell> minimal;
            for (const auto& w : remaining) {
                bool is_min = true;
                for (const auto& v : remaining)
                    if (vertex_less(T, v, w)) is_min = false;
                if (is_min) minimal.push_back(w);
            }
            std::size_t pick = opt.pick ? opt.pick(minimal) : 0;
            if (pick >= minimal.size()) throw Error(ErrorKind::Input, "pick index out of range");
            order.push_back(minimal[pick]);
            remaining.erase(std::find(remaining.begin(), remaining.end(), minimal[pick]));
        }
    }
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
}

// Collapses the cells of T⁺ \ T that are not in `keep`. Every coface of a new cell is
// new, so freeness can be decided on the new cells alone. The new cells are the boxes
// old^{<j} × new_j × all^{>j}, indexed by mixed radix inside each box.
PackedSteps local_collapse(const TreeProduct& Tplus, const std::vector<int>& old_count,
                           const CellSet& keep, const ExtensionOptions& opt) {
    const int n = Tplus.size();
    std::vector<std::vector<int>> lo(n, std::vector<int>(n)), hi(n, std::vector<int>(n));
    std::vector<std::int64_t> offset(n + 1, 0);
    for (int j = 0; j < n; ++j) {
        std::int64_t size = 1;
        for (int i = 0; i < n; ++i) {
            lo[j][i] = (i == j) ? old_count[i] : 0;
            hi[j][i] = (i < j) ? old_count[i] : Tplus.trees[i].face_count();
            size *= std::max(0, hi[j][i] - lo[j][i]);
        }
        offset[j + 1] = offset[j] + size;
    }
    const std::int64_t total = offset[n];
    if (total > std::numeric_limits<int>::max()) throw Error(ErrorKind::Budget, "local collapse too large");
    auto index_of = [&](const Cell& c) -> int {
        int j = 0;
        while (j < n && c[j] < old_count[j]) ++j;
        if (j == n) return -1;
        std::int64_t idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * (hi[j][i] - lo[j][i]) + (c[i] - lo[j][i]);
        return static_cast<int>(offset[j] + idx);
    };

    CellGraph g;
    g.rank.resize(total);
    g.lower_offsets.reserve(total + 1);
    std::vector<PackedCell> packed(total);
    for (int j = 0; j < n; ++j) {
        if (offset[j + 1] == offset[j]) continue;
        Cell c = lo[j];
        for (std::int64_t k = offset[j]; k < offset[j + 1]; ++k) {
            packed[k] = pack_cell(c);
            int d = 0;
            for (int i = 0; i < n; ++i) {
                if (is_vertex_code(c[i])) continue;
                ++d;
                const int saved = c[i];
                auto [a, b] = Tplus.trees[i].edge(saved / 2);
                for (int v : {a, b}) {
                    c[i] = 2 * v;
                    if (int f = index_of(c); f >= 0) g.lower.push_back(f);
                }
                c[i] = saved;
            }
            g.rank[k] = d;
            g.lower_offsets.push_back(static_cast<int>(g.lower.size()));
            for (int i = n - 1; i >= 0; --i) {
                if (++c[i] < hi[j][i]) break;
                c[i] = lo[j][i];
            }
        }
    }
    g.finish_upper();
    std::vector<char> removable(total, 1);
    for (const auto& c : keep)
        if (int k = index_of(c); k >= 0) removable[k] = 0;
    std::vector<int> key(total);
    std::iota(key.begin(), key.end(), 0);
    auto steps = collapse_region(g, std::vector<char>(total, 1), removable, key, opt.restarts, opt.seed);
    if (!steps) throw Error(ErrorKind::Internal, "no local collapse of the grown product found");
    PackedSteps out;
    out.reserve(steps->size());
    for (auto [s, t] : *steps) out.emplace_back(packed[s], packed[t]);
    return out;
}

}  // namespace

CellSet cubical_boundary(const TreeProduct& T, const CellSet& cells) {
    int m = -1;
    for (const auto& c : cells) m = std::max(m, TreeProduct::dim(c));
    CellSet gens;
    for (const auto& c : cells) {
        if (TreeProduct::dim(c) != m - 1) continue;
        int n = 0;
        for (const auto& u : T.cofaces(c)) n += static_cast<int>(cells.count(u));
        if (n == 1) gens.insert(c);
    }
    return down_closure(T, gens);
}

ExtensionReport extend_across_collapse(ExtensionState& st, const ExtensionOptions& opt) {
    TreeProduct& T = st.product;
    const CellSet B0 = st.frontier;
    const CellSet Q0 = st.image;
    const CellSet& dB0 = st.frontier_boundary;
    for (const auto& c : dB0)
        if (!B0.count(c)) throw Error(ErrorKind::Input, "frontier boundary is not inside the frontier");
    for (const auto& c : B0)
        if (!Q0.count(c)) throw Error(ErrorKind::Input, "frontier is not inside the image");

    std::vector<std::pair<std::string, Cell>> named;
    for (const auto& c : B0)
        if (!dB0.count(c)) named.emplace_back(T.cell_id(c), c);
    std::sort(named.begin(), named.end());
    std::vector<Cell> interior;
    std::map<Cell, int> qindex;
    for (const auto& [id, c] : named) {
        qindex[c] = static_cast<int>(interior.size());
        interior.push_back(c);
    }

    ExtensionReport report;
    st.beta.clear();
    for (const Cell& q : policy_order(st, interior, opt)) {
        if (!st.frontier.count(q)) continue;
        const int n = T.size();
        std::vector<int> C;
        for (int i = 0; i < n; ++i)
            if (is_vertex_code(q[i])) C.push_back(i);

        ColoredComplex S = induced_link_coloring(T, q, st.frontier);
        const int d = S.complex.dimension() + 1;
        if (static_cast<int>(C.size()) < d + 1)
            throw Error(ErrorKind::Internal, "dimension bound violated at " + T.cell_id(q));
        report.fiw_dims.push_back(d);
        FiwOptions fo;
        fo.require_induced = true;
        fo.fresh_prefix = "w";
        FiwResult D = fiw_ball(S, S.palette, fo);

        // Each D vertex becomes a (tree, edge at q_i) pair; interior ones get new leaves.
        std::vector<int> old_count(n);
        for (int i = 0; i < n; ++i) old_count[i] = T.trees[i].face_count();
        std::map<std::string, std::pair<int, int>> where;
        for (int v : S.complex.minimal_elements()) {
            const std::string& label = S.complex.id(v);
            const auto slash = label.find('/');
            const int i = std::stoi(label.substr(0, slash));
            where[label] = {i, *T.trees[i].find_face(label.substr(slash + 1)) / 2};
        }
        std::map<int, int> slots;
        for (const auto& w : D.interior_vertices) {
            const int i = std::stoi(D.ball.color_of(w));
            const int slot = slots[i]++;
            const std::string name = "n" + std::to_string(opt.expansion_index) + "." +
                                     std::to_string(qindex.at(q)) + "." + std::to_string(slot);
            where[w] = {i, T.trees[i].add_leaf(q[i] / 2, name, st.stage + 1)};
        }

        // E = ⌊q⌋ × (C*D)^#, F = ⌊q⌋ × D^# ∪ ∂⌊q⌋ × (C*D)^#.
        CellSet E, F;
        std::vector<Simplex> bs = simplices_of(D.ball.complex);
        bs.push_back({});
        std::vector<int> free_axes;
        for (int i = 0; i < n; ++i)
            if (!is_vertex_code(q[i])) free_axes.push_back(i);
        for (const auto& b : bs) {
            const int m = static_cast<int>(b.size());
            for (int amask = 0; amask < (1 << m); ++amask) {
                Cell base = q;
                for (int t = 0; t < m; ++t) {
                    auto [i, e] = where.at(b[t]);
                    base[i] = (amask >> t & 1) ? 2 * T.trees[i].other_end(e, q[i] / 2) : 2 * e + 1;
                }
                int combos = 1;
                for (std::size_t t = 0; t < free_axes.size(); ++t) combos *= 3;
                for (int x = 0; x < combos; ++x) {
                    Cell c = base;
                    bool on_cube_boundary = false;
                    int rem = x;
                    for (int i : free_axes) {
                        int pick = rem % 3;
                        rem /= 3;
                        if (pick == 0) continue;
                        auto [a, z] = T.trees[i].edge(q[i] / 2);
                        c[i] = 2 * (pick == 1 ? a : z);
                        on_cube_boundary = true;
                    }
                    E.insert(c);
                    if (amask != 0 || on_cube_boundary) F.insert(c);
                }
            }
        }

        // Q⁺ ∩ T = Q: E meets the old product only inside the old image.
        for (const auto& c : E) {
            bool old = true;
            for (int i = 0; i < n; ++i) old = old && c[i] < old_count[i];
            if (old && !st.image.count(c))
                throw Error(ErrorKind::Verification, "new cell " + T.cell_id(c) + " lies in the old product");
        }
        if (opt.certify) st.certificate_blocks.push_back(local_collapse(T, old_count, E, opt));

        st.image.insert(E.begin(), E.end());
        st.beta.insert(E.begin(), E.end());
        CellSet next;
        for (const auto& c : st.frontier)
            if (!above(T, c, q)) next.insert(c);
        next.insert(F.begin(), F.end());
        st.frontier = std::move(next);
        st.consumed.push_back(q);
        ++st.stage;
        ++report.steps;
        report.order.push_back(q);
    }

    // Final identities.
    CellSet meet;
    for (const auto& c : st.frontier)
        if (B0.count(c)) meet.insert(c);
    if (meet != dB0) throw Error(ErrorKind::Verification, "B_r ∩ B_0 differs from ∂B_0");
    if (cubical_boundary(T, st.frontier) != dB0)
        throw Error(ErrorKind::Verification, "∂B_r differs from ∂B_0");
    CellSet beta_q0;
    for (const auto& c : st.beta)
        if (Q0.count(c)) beta_q0.insert(c);
    if (beta_q0 != B0) throw Error(ErrorKind::Verification, "β ∩ Q_0 differs from B_0");
    CellSet uni = Q0;
    uni.insert(st.beta.begin(), st.beta.end());
    if (uni != st.image) throw Error(ErrorKind::Verification, "β ∪ Q_0 differs from Q_r");
    return report;
}

namespace {

struct GrowthRun {
    double cost = 0;
    std::vector<std::pair<int, int>> expansions;  ///< (σ, τ) in build order
};

std::optional<GrowthRun> grow_from(const FacePoset& K, int root) {
    constexpr double factor = 4.2;
    const int N = static_cast<int>(K.size());
    std::vector<char> added(N, 0);
    std::vector<double> size(N, 0);
    std::vector<int> missing(N);
    for (int e = 0; e < N; ++e) missing[e] = static_cast<int>(K.lower_covers(e).size());
    GrowthRun run;
    int count = 0;
    auto add = [&](int e, double sz) {
        added[e] = 1;
        size[e] = sz;
        ++count;
        for (int u : K.upper_covers(e)) --missing[u];
    };

    // Breadth-first spanning tree; neighbours in id order.
    add(root, 1);
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int v = queue[h];
        std::vector<std::pair<std::string, std::pair<int, int>>> next;
        for (int e : K.upper_covers(v)) {
            for (int w : K.lower_covers(e))
                if (w != v && !added[w]) next.push_back({K.id(w), {w, e}});
        }
        std::sort(next.begin(), next.end());
        for (const auto& [id, we] : next) {
            auto [w, e] = we;
            if (added[w]) continue;
            add(w, 1);
            add(e, 3);
            run.cost += 3;
            run.expansions.emplace_back(w, e);
            queue.push_back(w);
        }
    }

    using Entry = std::tuple<double, int, int>;  // cost, τ, σ
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    auto offer = [&](int t) {
        if (added[t] || missing[t] != 1 || K.rank(t) < 2) return;
        int sigma = -1;
        double others = 0;
        for (int f : K.lower_covers(t)) {
            if (!added[f]) sigma = f;
            else others += size[f];
        }
        heap.emplace(factor * others, t, sigma);
    };
    for (int t = 0; t < N; ++t) offer(t);
    while (!heap.empty()) {
        auto [c, t, sigma] = heap.top();
        heap.pop();
        if (added[t] || added[sigma]) continue;
        add(sigma, c);
        add(t, c);
        run.cost += c;
        run.expansions.emplace_back(sigma, t);
        for (int e : {sigma, t})
            for (int u : K.upper_covers(e)) offer(u);
    }
    if (count != N) return std::nullopt;
    return run;
}

}  // namespace

std::optional<CollapseSequence> low_growth_collapse(const FacePoset& K) {
    if (K.empty() || K.kind() != PosetKind::Simplicial) return std::nullopt;
    std::optional<GrowthRun> best;
    for (int v : K.minimal_elements()) {
        auto run = grow_from(K, v);
        if (run && (!best || run->cost < best->cost)) best = std::move(run);
    }
    if (!best) return std::nullopt;
    CollapseSequence seq;
    for (auto it = best->expansions.rbegin(); it != best->expansions.rend(); ++it)
        seq.steps.emplace_back(K.id(it->first), K.id(it->second));
    if (!verify_collapse_sequence(K, seq).ok) return std::nullopt;
    return seq;
}

PackedSteps chained_certificate(const ExtensionState& state) {
    PackedSteps all;
    for (auto it = state.certificate_blocks.rbegin(); it != state.certificate_blocks.rend(); ++it)
        all.insert(all.end(), it->begin(), it->end());
    return all;
}

EmbedResult embed_collapsible(const FacePoset& K, const CollapseSequence& seq, const EmbedOptions& options) {
    if (K.empty()) throw Error(ErrorKind::Input, "cannot embed the empty complex");
    if (K.kind() != PosetKind::Simplicial) throw Error(ErrorKind::Input, "embed_collapsible needs a simplicial complex");
    auto check = verify_collapse_sequence(K, seq);
    if (!check.ok)
        throw Error(ErrorKind::Input, "collapse sequence invalid at step " + std::to_string(check.failed_step) +
                                          ": " + check.message);
    if (seq.steps.size() * 2 + 1 != K.size())
        throw Error(ErrorKind::Input, "collapse sequence does not end at a single vertex");
    std::vector<char> removed(K.size(), 0);
    for (const auto& [s, t] : seq.steps) removed[K.index_of(s)] = removed[K.index_of(t)] = 1;
    const int last = static_cast<int>(std::find(removed.begin(), removed.end(), 0) - removed.begin());

    const int n = K.dimension();
    ExtensionState st;
    for (int i = 0; i < n; ++i) st.product.trees.push_back(Tree::point("o"));
    std::map<std::string, CellSet> images;
    images[K.id(last)] = {Cell(n, 0)};
    st.image = images[K.id(last)];

    int expansion = 0;
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it, ++expansion) {
        const int sigma = K.index_of(it->first), tau = K.index_of(it->second);
        CellSet B0, dB0;
        for (int f : K.lower_covers(tau))
            if (f != sigma) B0.insert(images.at(K.id(f)).begin(), images.at(K.id(f)).end());
        for (int g : K.lower_covers(sigma)) dB0.insert(images.at(K.id(g)).begin(), images.at(K.id(g)).end());
        st.frontier = std::move(B0);
        st.frontier_boundary = std::move(dB0);
        st.consumed.clear();
        ExtensionOptions eo;
        eo.policy = options.policy;
        eo.pick = options.pick;
        eo.expansion_index = expansion;
        eo.certify = options.certify;
        eo.seed = options.seed;
        extend_across_collapse(st, eo);
        images[K.id(tau)] = st.beta;
        images[K.id(sigma)] = st.frontier;
    }

    EmbedResult out;
    out.embedding.source = K;
    out.embedding.target = st.product;
    out.embedding.images = std::move(images);
    std::size_t total = 0;
    for (const auto& b : st.certificate_blocks) total += b.size();
    out.certificate.reserve(total);
    for (auto b = st.certificate_blocks.rbegin(); b != st.certificate_blocks.rend(); ++b) {
        out.certificate.insert(out.certificate.end(), b->begin(), b->end());
        PackedSteps().swap(*b);
    }
    out.total_steps = st.stage;
    return out;
}

CollapseCheck verify_product_certificate(const TreeProduct& T, const PackedSteps& steps, const CellSet& image) {
    const int n = T.size();
    const std::size_t total = T.cell_count();
    if (total > std::size_t{1} << 30) return {false, -1, "tree product too large to replay"};
    for (const auto& c : image)
        if (!T.valid_cell(c)) return {false, -1, "image has an invalid cell"};

    // alive[x] and the number of alive cofaces up[x], for x the flat index.
    std::vector<char> alive(total, 1);
    std::vector<std::uint32_t> up(total);
    {
        Cell c(n, 0);
        for (std::size_t x = 0; x < total; ++x) {
            std::uint32_t u = 0;
            for (int i = 0; i < n; ++i)
                if (is_vertex_code(c[i])) u += static_cast<std::uint32_t>(T.trees[i].incident_edges(c[i] / 2).size());
            up[x] = u;
            for (int i = n - 1; i >= 0; --i) {
                if (++c[i] < T.trees[i].face_count()) break;
                c[i] = 0;
            }
        }
    }
    std::vector<std::size_t> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * T.trees[i + 1].face_count();
    auto drop_faces = [&](const Cell& c, std::size_t x) {
        for (int i = 0; i < n; ++i) {
            if (is_vertex_code(c[i])) continue;
            auto [a, b] = T.trees[i].edge(c[i] / 2);
            for (int v : {a, b}) {
                const std::size_t f = x - stride[i] * c[i] + stride[i] * (2 * v);
                if (alive[f]) --up[f];
            }
        }
    };
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const int at = static_cast<int>(std::min<std::size_t>(k, std::numeric_limits<int>::max()));
        const Cell s = unpack_cell(steps[k].first, n), t = unpack_cell(steps[k].second, n);
        if (!T.valid_cell(s) || !T.valid_cell(t)) return {false, at, "invalid cell in step"};
        int differ = -1, count = 0;
        for (int i = 0; i < n; ++i)
            if (s[i] != t[i]) differ = i, ++count;
        if (count != 1 || !is_vertex_code(s[differ]) || is_vertex_code(t[differ]))
            return {false, at, "dimensions do not differ by one"};
        auto [a, b] = T.trees[differ].edge(t[differ] / 2);
        if (s[differ] != 2 * a && s[differ] != 2 * b) return {false, at, "not a face"};
        const std::size_t xs = T.flat_index(s), xt = T.flat_index(t);
        if (!alive[xs] || !alive[xt] || up[xs] != 1 || up[xt] != 0) return {false, at, "pair is not free"};
        alive[xs] = 0;
        drop_faces(s, xs);
        alive[xt] = 0;
        drop_faces(t, xt);
    }
    std::size_t survivors = 0;
    for (char a : alive) survivors += a;
    if (survivors != image.size()) return {false, -1, "final complex does not match"};
    for (const auto& c : image)
        if (!alive[T.flat_index(c)]) return {false, -1, "final complex does not match"};
    return {};
}

CollapseCheck verify_product_certificate(const TreeProduct& T, const CollapseSteps& steps, const CellSet& image) {
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (!T.valid_cell(steps[i].first) || !T.valid_cell(steps[i].second))
            return {false, static_cast<int>(i), "invalid cell in step"};
    return verify_product_certificate(T, pack_steps(steps), image);
}

}  // namespace treefold
