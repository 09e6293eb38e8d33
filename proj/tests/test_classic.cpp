#include "doctest.h"

#include "oracles.hpp"
#include "treefold/classic.hpp"
#include "treefold/complex_checks.hpp"
#include "treefold/poset_ops.hpp"

#include <random>

using namespace treefold;

namespace {

FacePoset cycle(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::to_string(i), std::to_string((i + 1) % n)});
    return make_simplicial(edges);
}

FacePoset path(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::to_string(i), std::to_string(i + 1)});
    return make_simplicial(edges);
}

bool iso(const FacePoset& a, const FacePoset& b) { return is_isomorphic(a, b).verdict == IsoVerdict::Isomorphic; }

}  // namespace

TEST_CASE("join embedding of the triangle boundary is a hexagon in K33") {
    auto e = join_embedding(simplex_boundary(2));
    REQUIRE(e.factors.size() == 2);
    CHECK(e.factors[0].size() == 3);
    CHECK(e.factors[1].size() == 3);
    FacePoset J = join_complex(e);
    CHECK(J.rank_counts() == std::vector<std::size_t>{6, 9});
    CHECK(iso(e.subdivision, cycle(6)));
    int used = 0;
    for (const auto& s : simplices_of(e.subdivision)) {
        if (s.size() != 2) continue;
        CHECK(J.contains(simplex_id(s)));
        ++used;
    }
    CHECK(used == 6);
    CHECK(verify_join_embedding(e));
}

TEST_CASE("join embedding of a point and of the 2-simplex") {
    auto p = join_embedding(full_simplex(0));
    CHECK(p.factors.size() == 1);
    CHECK(p.subdivision.size() == 1);
    CHECK(verify_join_embedding(p));

    auto t = join_embedding(full_simplex(2));
    CHECK(t.subdivision.rank_counts()[0] == 7);
    CHECK(t.factors[0].size() == 3);
    CHECK(t.factors[1].size() == 3);
    CHECK(t.factors[2].size() == 1);
    CHECK(verify_join_embedding(t));
}

TEST_CASE("join embedding verifier rejects a bad subdivision") {
    auto e = join_embedding(simplex_boundary(2));
    e.subdivision = make_simplicial({{"0", "1"}});
    auto v = verify_join_embedding(e);
    CHECK_FALSE(v.ok);
    CHECK(v.message.find("one factor") != std::string::npos);
}

TEST_CASE("standard tree embedding of an edge is a path of four edges") {
    auto te = standard_tree_embedding(full_simplex(1));
    const auto& T = te.embedding.target;
    REQUIRE(T.size() == 2);
    CHECK(T.trees[0].edge_count() == 2);
    CHECK(T.trees[1].edge_count() == 1);
    CHECK(verify_cubulated_embedding(te.embedding));
    CHECK(iso(T.poset_of(te.embedding.total_image()), path(4)));
}

TEST_CASE("standard tree embedding of a point") {
    auto te = standard_tree_embedding(full_simplex(0));
    CHECK(te.embedding.target.size() == 1);
    CHECK(te.embedding.total_image().size() == 1);
    CHECK(verify_cubulated_embedding(te.embedding));
}

TEST_CASE("standard tree embedding of the triangle boundary is a 12-gon") {
    FacePoset L = simplex_boundary(2);
    auto te = standard_tree_embedding(L);
    const auto& T = te.embedding.target;
    REQUIRE(T.size() == 2);
    CHECK(T.trees[0].edge_count() == 3);
    CHECK(T.trees[1].edge_count() == 3);
    CHECK(verify_cubulated_embedding(te.embedding));
    FacePoset img = T.poset_of(te.embedding.total_image());
    CHECK(iso(img, cycle(12)));
    CHECK(iso(img, interval_subdivision(join_embedding(L).subdivision)));
}

TEST_CASE("standard tree embedding of the 3-simplex passes verification") {
    auto te = standard_tree_embedding(full_simplex(3));
    CHECK(verify_cubulated_embedding(te.embedding));
    FacePoset img = te.embedding.target.poset_of(te.embedding.total_image());
    CHECK(iso(img, interval_subdivision(barycentric(full_simplex(3)))));
}

TEST_CASE("cone product embedding") {
    SUBCASE("three points give a triod") {
        FacePoset L = make_simplicial({{"a"}, {"b"}, {"c"}});
        auto te = cone_product_embedding(L);
        const auto& T = te.embedding.target;
        REQUIRE(T.size() == 1);
        CHECK(T.trees[0].edge_count() == 3);
        CHECK(te.embedding.source.rank_counts() == std::vector<std::size_t>{4, 3});
        CHECK(te.embedding.images.count("c'") == 1);
        CHECK(te.embedding.total_image().size() == T.cell_count());
        CHECK(verify_cubulated_embedding(te.embedding));
    }
    SUBCASE("triangle boundary gives a disk") {
        auto te = cone_product_embedding(simplex_boundary(2));
        CHECK(te.embedding.target.size() == 2);
        CHECK(verify_cubulated_embedding(te.embedding));
        FacePoset img = te.embedding.target.poset_of(te.embedding.total_image());
        CHECK(recognize_ball(img, 2).yes());
    }
    SUBCASE("labels sorting after the apex") {
        auto te = cone_product_embedding(make_simplicial({{"x0", "x1"}, {"x1", "x2"}}));
        CHECK(te.embedding.images.count("{c,x0,x1}") == 1);
        CHECK(verify_cubulated_embedding(te.embedding));
    }
    SUBCASE("empty complex gives a point in a point") {
        auto te = cone_product_embedding(FacePoset{});
        CHECK(te.embedding.target.size() == 1);
        CHECK(te.embedding.target.cell_count() == 1);
        CHECK(te.embedding.source.size() == 1);
        CHECK(verify_cubulated_embedding(te.embedding));
    }
}

TEST_CASE("cube coordinates") {
    SUBCASE("point goes to the origin") {
        auto cc = cube_coordinates(full_simplex(0));
        REQUIRE(cc.points.size() == 1);
        CHECK(cc.points.begin()->second == std::vector<Rational>{Rational(0)});
    }
    SUBCASE("edge gives three distinct points in I^3") {
        auto cc = cube_coordinates(full_simplex(1));
        CHECK(cc.n == 1);
        REQUIRE(cc.points.size() == 3);
        std::set<std::vector<Rational>> distinct;
        for (const auto& [v, p] : cc.points) {
            CHECK(p.size() == 3);
            for (const auto& x : p) CHECK((!(x < Rational(0)) && !(Rational(1) < x)));
            distinct.insert(p);
        }
        CHECK(distinct.size() == 3);
        CHECK(oracle::check_edges_embedded(cc) == "");
    }
    SUBCASE("triangle boundary: six points, edges meet only at shared ends") {
        auto cc = cube_coordinates(simplex_boundary(2));
        CHECK(cc.points.size() == 6);
        CHECK(oracle::check_edges_embedded(cc) == "");
        // Moving a vertex onto another edge must be caught.
        auto bad = cc;
        bad.points.at("{0,1}") = bad.points.at("0");
        CHECK(oracle::check_edges_embedded(bad) != "");
    }
}

TEST_CASE("segment oracle") {
    using oracle::Point;
    Point a{Rational(0), Rational(0)}, b{Rational(2), Rational(0)}, c{Rational(1), Rational(-1)},
        d{Rational(1), Rational(1)}, e{Rational(3), Rational(0)};
    CHECK(oracle::segment_meet(a, b, c, d).size() == 1);
    CHECK(oracle::segment_meet(a, c, b, d).empty());
    CHECK(oracle::segment_meet(a, b, b, e) == std::vector<Point>{b});
    CHECK(oracle::segment_meet(a, e, b, d).size() == 1);
    CHECK(oracle::segment_meet(a, b, d, e).empty());
    CHECK(oracle::segment_meet(a, e, d, c).size() == 1);
    CHECK(oracle::segment_meet(a, e, c, b) == std::vector<Point>{b});
    CHECK(oracle::segment_meet(a, b, a, e).size() == 2);
}

TEST_CASE("classic embeddings verify on random small complexes") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        std::mt19937 rng(seed);
        std::vector<Simplex> facets;
        int nf = 1 + static_cast<int>(rng() % 4);
        for (int f = 0; f < nf; ++f) {
            Simplex s;
            for (int v = 0; v < 5; ++v)
                if (rng() % 2) s.push_back(std::to_string(v));
            if (s.empty()) s.push_back("0");
            if (s.size() > 3) s.resize(3);
            facets.push_back(s);
        }
        FacePoset K = make_simplicial(facets);
        CAPTURE(seed);
        CHECK(verify_join_embedding(join_embedding(K)));
        CHECK(verify_cubulated_embedding(standard_tree_embedding(K).embedding));
        CHECK(verify_cubulated_embedding(cone_product_embedding(K).embedding));
        if (K.dimension() == 1) CHECK(oracle::check_edges_embedded(cube_coordinates(K)) == "");
    }
}
