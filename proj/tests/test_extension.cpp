#include "doctest.h"

#include "treefold/extension.hpp"
#include "treefold/fixtures.hpp"
#include "treefold/complex_checks.hpp"
#include "treefold/poset_ops.hpp"
#include "treefold/telescope.hpp"

#include <random>

using namespace treefold;

namespace {

CellSet all_cells(const TreeProduct& T) {
    CellSet out;
    Cell c(T.size(), 0);
    for (std::size_t k = 0; k < T.cell_count(); ++k) {
        out.insert(c);
        for (int i = T.size() - 1; i >= 0; --i) {
            if (++c[i] < T.trees[i].face_count()) break;
            c[i] = 0;
        }
    }
    return out;
}

std::size_t count_dim(const CellSet& s, int d) {
    std::size_t n = 0;
    for (const auto& c : s) n += TreeProduct::dim(c) == d;
    return n;
}

FacePoset path(int edges) {
    std::vector<Simplex> f;
    for (int i = 0; i < edges; ++i) f.push_back({"x" + std::to_string(i), "x" + std::to_string(i + 1)});
    return make_simplicial(f);
}

}  // namespace

TEST_CASE("remark: consecutive policy") {
    ExtensionState st = remark_e2_state();
    ExtensionOptions opt;
    opt.policy = ChoicePolicy::Consecutive;
    auto rep = extend_across_collapse(st, opt);
    CHECK(rep.steps == 1);
    const TreeProduct& T = st.product;
    CHECK(T.trees[0].edge_count() == 2);
    CHECK(T.trees[1].edge_count() == 1);
    CHECK(st.image == all_cells(T));
    CHECK(st.beta == all_cells(T));
    CHECK(count_dim(st.beta, 2) == 2);
    auto iso = is_isomorphic(T.poset_of(st.beta), product(path(2), path(1)));
    REQUIRE(iso);
    CHECK(verify_product_certificate(T, st.certificate_blocks.front(), st.image).ok);
}

TEST_CASE("remark: edges-first policy") {
    ExtensionState st = remark_e2_state();
    ExtensionOptions opt;
    opt.policy = ChoicePolicy::EdgesFirst;
    auto rep = extend_across_collapse(st, opt);
    CHECK(rep.steps == 3);
    const TreeProduct& T = st.product;
    CHECK(T.trees[0].edge_count() == 3);
    CHECK(T.trees[1].edge_count() == 2);
    int leaves = 0;
    for (int v = 0; v < T.trees[0].vertex_count(); ++v) leaves += T.trees[0].incident_edges(v).size() == 1;
    CHECK(leaves == 3);  // a triod
    CHECK(count_dim(st.beta, 2) == 4);
    // Four squares fanned around (b,p): the link of (b,p) in β is a path of four edges.
    FacePoset beta = T.poset_of(st.beta);
    CHECK(is_isomorphic(beta, interval_subdivision(cone_star(path(4)))));
    CHECK_FALSE(is_isomorphic(beta, product(path(2), path(2))));
    CHECK(recognize_ball(beta, 2).yes());
}

TEST_CASE("extension from a point") {
    ExtensionState st;
    st.product.trees.push_back(Tree::point("o"));
    st.product.trees.push_back(Tree::point("o"));
    st.image = {{0, 0}};
    st.frontier = st.image;
    auto rep = extend_across_collapse(st, {});
    CHECK(rep.steps == 1);
    CHECK(st.beta.size() == 3);
    CHECK(count_dim(st.beta, 1) == 1);
    CHECK(st.frontier.size() == 1);
    CHECK(st.product.trees[0].edge_count() == 1);
}

TEST_CASE("embed_collapsible small cases") {
    for (int n = 1; n <= 3; ++n) {
        FacePoset K = full_simplex(n);
        auto seq = find_collapse_sequence(K);
        REQUIRE(seq.sequence);
        for (auto policy : {ChoicePolicy::Canonical, ChoicePolicy::Consecutive, ChoicePolicy::EdgesFirst}) {
            EmbedOptions o;
            o.policy = policy;
            auto r = embed_collapsible(K, *seq.sequence, o);
            CHECK(r.embedding.target.size() == n);
            auto v = verify_cubulated_embedding(r.embedding);
            CHECK_MESSAGE(v.ok, v.check << ": " << v.message);
            auto c = verify_product_certificate(r.embedding.target, r.certificate, r.embedding.total_image());
            CHECK_MESSAGE(c.ok, c.message);
        }
    }
}

namespace {

std::string signature(const TreeProduct& T, const CellSet& cells) {
    std::vector<std::string> parts;
    for (int i = 0; i < T.size(); ++i)
        for (int c = 0; c < T.trees[i].face_count(); ++c) parts.push_back(std::to_string(i) + ":" + T.trees[i].face_id(c));
    for (const auto& c : cells) parts.push_back(T.cell_id(c));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += p + " ";
    return s;
}

// Runs `run` once per sequence of pick decisions, enumerating every branch.
// Returns the set of signatures and the number of runs; stops after max_runs.
template <class Run>
std::pair<std::set<std::string>, int> over_all_picks(Run run, int max_runs = 2000) {
    std::set<std::string> out;
    std::vector<std::pair<std::size_t, std::size_t>> script;  // (choice, branching)
    int runs = 0;
    while (true) {
        std::size_t depth = 0;
        auto pick = [&](const std::vector<Cell>& cands) -> std::size_t {
            if (depth == script.size()) script.emplace_back(0, cands.size());
            REQUIRE(script[depth].second == cands.size());
            return script[depth++].first;
        };
        out.insert(run(pick));
        if (++runs == max_runs) break;
        script.resize(depth);
        while (!script.empty() && script.back().first + 1 == script.back().second) script.pop_back();
        if (script.empty()) break;
        ++script.back().first;
    }
    return {out, runs};
}

}  // namespace

TEST_CASE("canonical policy: Q_r does not depend on the linear extension") {
    SUBCASE("arc grown in stages from its middle") {
        auto [sigs, runs] = over_all_picks([](auto pick) {
            ExtensionState st;
            Tree arc = Tree::point("c");
            arc.add_leaf(0, "b", 1);
            arc.add_leaf(0, "d", 1);
            arc.add_leaf(*arc.find_vertex("b"), "a", 2);
            arc.add_leaf(*arc.find_vertex("d"), "e", 2);
            st.product.trees.push_back(arc);
            st.product.trees.push_back(Tree::point("p"));
            const TreeProduct& T = st.product;
            for (int x = 0; x < T.trees[0].face_count(); ++x) st.image.insert({x, 0});
            st.frontier = st.image;
            st.frontier_boundary = {T.parse_cell({"a", "p"}), T.parse_cell({"e", "p"})};
            ExtensionOptions opt;
            opt.pick = pick;
            extend_across_collapse(st, opt);
            return signature(st.product, st.image);
        });
        CHECK(runs == 2);
        CHECK(sigs.size() == 1);
    }
    SUBCASE("the e = 2 fixture") {
        auto [sigs, runs] = over_all_picks([](auto pick) {
            ExtensionState st = remark_e2_state();
            ExtensionOptions opt;
            opt.pick = pick;
            extend_across_collapse(st, opt);
            return signature(st.product, st.image);
        });
        CHECK(runs == 1);
        CHECK(sigs.size() == 1);
    }
    SUBCASE("whole pipelines, exhaustive prefix and random picks") {
        std::vector<FacePoset> fixtures{full_simplex(2), path(3), full_simplex(3),
                                        make_simplicial({{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"}}),
                                        make_simplicial({{"a", "b", "c"}, {"a", "c", "d"}, {"a", "d", "e"}, {"e", "f"}})};
        for (const auto& K : fixtures) {
            auto seq = find_collapse_sequence(K);
            REQUIRE(seq.sequence);
            auto embed_sig = [&](auto pick) {
                EmbedOptions o;
                o.pick = pick;
                o.certify = false;
                auto r = embed_collapsible(K, *seq.sequence, o);
                std::string s = signature(r.embedding.target, r.embedding.total_image());
                for (const auto& [id, cells] : r.embedding.images) s += "|" + id + "=" + signature(r.embedding.target, cells);
                return s;
            };
            auto [sigs, runs] = over_all_picks(embed_sig, 200);
            for (unsigned seed = 0; seed < 50; ++seed) {
                std::mt19937 rng(seed);
                sigs.insert(embed_sig([&](const std::vector<Cell>& c) -> std::size_t { return rng() % c.size(); }));
            }
            CAPTURE(K.size());
            CHECK(runs >= 1);
            CHECK(sigs.size() == 1);
        }
    }
}

TEST_CASE("embed_collapsible on telescopes, a disk and a cone") {
    std::vector<std::pair<std::string, FacePoset>> fixtures{
        {"X1", build_telescope(1).X},
        {"X2", build_telescope(2).X},
        {"disk", make_simplicial({{"a", "b", "c"}, {"a", "c", "d"}, {"a", "d", "e"}, {"a", "e", "f"}})},
        {"cone", join(simplex_boundary(2), full_simplex(0))},
    };
    for (const auto& [name, K] : fixtures) {
        CAPTURE(name);
        auto seq = low_growth_collapse(K);
        REQUIRE(seq);
        auto r = embed_collapsible(K, *seq);
        CHECK(r.embedding.target.size() == K.dimension());
        auto v = verify_cubulated_embedding(r.embedding);
        CHECK_MESSAGE(v.ok, v.check << ": " << v.message);
        auto c = verify_product_certificate(r.embedding.target, r.certificate, r.embedding.total_image());
        CHECK_MESSAGE(c.ok, c.message);
    }
}

TEST_CASE("low_growth_collapse gives valid and smaller embeddings") {
    std::vector<FacePoset> fixtures{full_simplex(0), full_simplex(1), full_simplex(3), build_telescope(1).X,
                                    join(simplex_boundary(2), full_simplex(0)),
                                    make_simplicial({{"a", "b", "c"}, {"b", "c", "d"}, {"d", "e"}})};
    for (const auto& K : fixtures) {
        auto seq = low_growth_collapse(K);
        REQUIRE(seq);
        CHECK(seq->steps.size() * 2 + 1 == K.size());
        CHECK(verify_collapse_sequence(K, *seq).ok);
    }
    CHECK_FALSE(low_growth_collapse(dunce_hat()));
    CHECK_FALSE(low_growth_collapse(simplex_boundary(2)));

    // On X_2 the greedy order gives a product of 2,262,007 cells.
    const FacePoset X2 = build_telescope(2).X;
    EmbedOptions o;
    o.certify = false;
    auto r = embed_collapsible(X2, *low_growth_collapse(X2), o);
    CHECK(r.embedding.target.cell_count() == 74465);
    auto g = embed_collapsible(X2, *find_collapse_sequence(X2).sequence, o);
    CHECK(g.embedding.target.cell_count() == 2262007);
}
