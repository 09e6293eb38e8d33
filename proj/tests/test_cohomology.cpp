#include "doctest.h"

#include "treefold/cohomology.hpp"
#include "treefold/fixtures.hpp"
#include "treefold/poset_ops.hpp"

#include <numeric>
#include <random>

using namespace treefold;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

// Laplace expansion; only used on tiny matrices.
std::int64_t laplace(const Rows& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Rows minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        s += (j % 2 ? -1 : 1) * m[0][j] * laplace(minor);
    }
    return s;
}

// gcd of all k x k minors.
std::int64_t minor_gcd(const Rows& m, std::size_t k) {
    const std::size_t R = m.size(), C = m.front().size();
    std::int64_t g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    auto choose = [](std::size_t n, std::size_t k, auto&& each) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            each(idx);
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) return;
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    choose(R, k, [&](const std::vector<std::size_t>& ri) {
        choose(C, k, [&](const std::vector<std::size_t>& ci) {
            Rows sub;
            for (auto r : ri) {
                std::vector<std::int64_t> row;
                for (auto c : ci) row.push_back(m[r][c]);
                sub.push_back(row);
            }
            g = std::gcd(g, laplace(sub));
        });
    });
    return g;
}

FacePoset rp2() {
    return make_simplicial({{"1", "2", "4"}, {"2", "3", "4"}, {"3", "4", "5"}, {"1", "3", "5"}, {"1", "2", "5"},
                            {"2", "5", "6"}, {"2", "3", "6"}, {"1", "3", "6"}, {"1", "4", "6"}, {"4", "5", "6"}});
}

SimplicialMap wrap(int from, int to) {
    SimplicialMap f{polygon(from, "a"), polygon(to, "b"), {}};
    for (int k = 0; k < from; ++k) f.vertices["a" + std::to_string(k)] = "b" + std::to_string(k % to);
    return f;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto I = IntMatrix::identity(3);
    auto f = smith_normal_form(I);
    CHECK(f.D == I);
    CHECK(f.U == I);
    CHECK(f.V == I);
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).diagonal == std::vector<std::int64_t>{1, 6});
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})).diagonal == std::vector<std::int64_t>{2, 4});
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int R = 1 + rng() % 4, C = 1 + rng() % 4;
        Rows rows(R, std::vector<std::int64_t>(C));
        for (auto& r : rows)
            for (auto& x : r) x = static_cast<std::int64_t>(rng() % 13) - 6;
        IntMatrix M = IntMatrix::from_rows(rows);
        auto f = smith_normal_form(M);
        CAPTURE(M.str());
        CHECK(f.U * M * f.V == f.D);
        CHECK(f.U * f.U_inv == IntMatrix::identity(R));
        CHECK(f.V * f.V_inv == IntMatrix::identity(C));
        CHECK(std::llabs(determinant(f.U)) == 1);
        CHECK(std::llabs(determinant(f.V)) == 1);
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                if (i != j) CHECK(f.D(i, j) == 0);
        for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i)
            if (f.diagonal[i + 1] != 0) CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
        // d_1 ... d_k = gcd of the k x k minors.
        std::int64_t prod = 1;
        for (std::size_t k = 1; k <= f.diagonal.size(); ++k) {
            prod *= f.diagonal[k - 1];
            CHECK(prod == minor_gcd(rows, k));
        }
    }
}

TEST_CASE("lattices") {
    Lattice L(IntMatrix::from_rows({{2, 0}, {0, 2}}));
    Lattice M(IntMatrix::from_rows({{4, 0}, {0, 2}}));
    CHECK(L.rank() == 2);
    CHECK(L.contains(M));
    CHECK_FALSE(M.contains(L));
    CHECK(L.index_of(M) == 2);
    CHECK(L == Lattice(IntMatrix::from_rows({{2, 2}, {0, 2}})));
    CHECK_FALSE(L.coordinates({1, 0}));
    CHECK(L.coordinates({2, 4}).has_value());
}

TEST_CASE("cohomology of spheres, a point and RP2") {
    FacePoset S2 = simplex_boundary(3);
    CHECK(cohomology(S2, 0).group.str() == "Z");
    CHECK(cohomology(S2, 1).group.is_zero());
    CHECK(cohomology(S2, 2).group.str() == "Z");
    CHECK(cohomology(full_simplex(0), 0).group.str() == "Z");
    CHECK(cohomology(full_simplex(0), 0, {}, true).group.is_zero());
    CHECK(cohomology(polygon(5, "v"), 1).group.str() == "Z");
    FacePoset P = rp2();
    CHECK(cohomology(P, 0).group.str() == "Z");
    CHECK(cohomology(P, 1).group.is_zero());
    CHECK(cohomology(P, 2).group.str() == "Z/2");
}

TEST_CASE("dunce hat is acyclic") {
    FacePoset D = dunce_hat();
    for (int i = 0; i <= 2; ++i) CHECK(cohomology(D, i, {}, true).group.is_zero());
}

TEST_CASE("relative cohomology") {
    // (disk, boundary) has H^2 = Z and nothing else.
    FacePoset disk = full_simplex(2);
    FacePoset bd = simplex_boundary(2);
    CHECK(cohomology(disk, 0, bd).group.is_zero());
    CHECK(cohomology(disk, 1, bd).group.is_zero());
    CHECK(cohomology(disk, 2, bd).group.str() == "Z");
    CHECK_THROWS_AS(cohomology(disk, 1, make_simplicial({{"7"}})), Error);
}

TEST_CASE("euler characteristic identity") {
    for (const FacePoset& K : {simplex_boundary(3), rp2(), dunce_hat(), polygon(7, "x"),
                               join(polygon(4, "a"), make_simplicial({{"p"}, {"q"}}))}) {
        std::int64_t chi = 0;
        for (int i = 0; i <= K.dimension(); ++i) chi += (i % 2 ? -1 : 1) * cohomology(K, i).group.rank;
        CHECK(chi == K.euler_characteristic());
    }
}

TEST_CASE("generators are cocycles with the right coordinates") {
    auto h = cohomology(rp2(), 2);
    REQUIRE(h.generators.size() == 1);
    CHECK(h.coordinates(h.generators[0]) == std::vector<std::int64_t>{1});
    auto twice = h.generators[0];
    for (auto& x : twice) x *= 2;
    CHECK(h.coordinates(twice) == std::vector<std::int64_t>{0});
    auto c = cohomology(polygon(4, "v"), 0);
    CHECK_THROWS_AS(c.coordinates({1, 0, 0, 0}), Error);
}

TEST_CASE("induced maps") {
    SUBCASE("identity") {
        FacePoset K = rp2();
        for (int i = 0; i <= 2; ++i) {
            auto m = induced_map(inclusion_map(K, K), i);
            CHECK(m == IntMatrix::identity(m.rows()));
        }
    }
    SUBCASE("double cover of a circle") {
        auto m = induced_map(wrap(6, 3), 1);
        REQUIRE(m.rows() == 1);
        REQUIRE(m.cols() == 1);
        CHECK(std::llabs(m(0, 0)) == 2);
        CHECK(std::llabs(induced_map(wrap(9, 3), 1)(0, 0)) == 3);
    }
    SUBCASE("functoriality") {
        SimplicialMap f = wrap(12, 6), g = wrap(6, 3);
        for (auto& [v, w] : f.vertices) w = "a" + w.substr(1);  // land in g's source labels
        f.target = g.source;
        SimplicialMap gf = compose(f, g);
        for (int i = 0; i <= 1; ++i) CHECK(induced_map(gf, i) == induced_map(f, i) * induced_map(g, i));
        CHECK(std::llabs(induced_map(gf, 1)(0, 0)) == 4);
    }
    SUBCASE("bad map data") {
        SimplicialMap f{polygon(4, "a"), polygon(3, "b"), {{"a0", "b0"}, {"a1", "b1"}, {"a2", "b0"}, {"a3", "b1"}}};
        CHECK(check_simplicial_map(f));
        f.vertices.erase("a3");
        CHECK_FALSE(check_simplicial_map(f));
        CHECK_THROWS_AS(induced_map(f, 1), Error);
    }
}
