#include "treefold/telescope.hpp"

#include <cstdlib>

namespace treefold {

namespace {

std::string circle_vertex(int j, int k) { return "s" + std::to_string(j) + "." + std::to_string(k); }

}  // namespace

TelescopeComplex build_telescope(int stages, std::size_t max_simplices) {
    if (stages < 1) throw Error(ErrorKind::Input, "a telescope needs at least one stage");
    if (stages > 24) throw Error(ErrorKind::Budget, "telescope stage count too large");
    // S^1_1 has the most vertices; each cylinder has about 6 simplices per source vertex.
    const std::size_t estimate = 8 * (std::size_t{1} << (stages + 2));
    if (estimate > max_simplices) throw Error(ErrorKind::Budget, "telescope exceeds the size budget");

    TelescopeComplex t;
    t.stages = stages;
    for (int j = 1; j <= stages; ++j) {
        const int n = 1 << (stages - j + 2);
        std::vector<std::string> c;
        for (int k = 0; k < n; ++k) c.push_back(circle_vertex(j, k));
        t.circles.push_back(std::move(c));
    }
    // Facets of the mapping cylinders, cumulatively.
    std::vector<Simplex> facets;
    auto circle_edges = [&](int j) {
        std::vector<Simplex> e;
        const auto& c = t.circles[j - 1];
        for (std::size_t k = 0; k < c.size(); ++k) e.push_back({c[k], c[(k + 1) % c.size()]});
        return e;
    };
    for (int j = 1; j <= stages; ++j) {
        if (j == 1) {
            facets = circle_edges(1);
        } else {
            const auto& a = t.circles[j - 2];
            const auto& b = t.circles[j - 1];
            const std::size_t n = a.size(), m = b.size();
            for (std::size_t k = 0; k < n; ++k) {
                const std::string& a0 = a[k];
                const std::string& a1 = a[(k + 1) % n];
                const std::string& b0 = b[k % m];
                const std::string& b1 = b[(k + 1) % m];
                facets.push_back({a0, a1, b1});
                facets.push_back({a0, b0, b1});
            }
        }
        t.F.push_back(make_simplicial(facets));
    }
    for (const auto& e : circle_edges(stages)) facets.push_back({e[0], e[1], "c"});
    t.X = make_simplicial(facets);
    return t;
}

std::vector<std::pair<std::string, std::int64_t>> circle_chain(const std::vector<std::string>& circle) {
    std::vector<std::pair<std::string, std::int64_t>> chain;
    for (std::size_t k = 0; k < circle.size(); ++k) {
        const std::string& u = circle[k];
        const std::string& v = circle[(k + 1) % circle.size()];
        Simplex s{u, v};
        std::sort(s.begin(), s.end());
        chain.emplace_back(simplex_id(s), natural_less(u, v) ? 1 : -1);
    }
    return chain;
}

ObstructionReport skliarienko_obstruction(int k, int stages) {
    if (k < 0) throw Error(ErrorKind::Input, "k must be non-negative");
    if (stages < 2) throw Error(ErrorKind::Input, "the obstruction needs at least two stages");
    ObstructionReport rep;
    rep.k = k;
    rep.stages = stages;
    rep.degree = 2 + k;
    const TelescopeComplex tel = build_telescope(stages);

    // Orient each H^1(F_j) generator so it is positive on S^1_j.
    std::vector<std::int64_t> orientation;
    for (int j = 1; j <= stages; ++j) {
        const FacePoset& F = tel.F[j - 1];
        CohomologyGroup h = cohomology(F, 1);
        rep.h1.push_back(h.group);
        if (!(h.group == FGAbelianGroup{1, {}}))
            throw Error(ErrorKind::Internal, "H^1(F_" + std::to_string(j) + ") is " + h.group.str() + ", not Z");
        const std::int64_t e = evaluate(h, F, h.generators[0], circle_chain(tel.circles[j - 1]));
        if (std::llabs(e) != 1) throw Error(ErrorKind::Internal, "generator does not detect the circle");
        orientation.push_back(e);
    }
    for (int j = 1; j < stages; ++j) {
        IntMatrix m = induced_map(inclusion_map(tel.F[j - 1], tel.F[j]), 1);
        const std::int64_t v = orientation[j - 1] * m(0, 0) * orientation[j];
        if (v != 2) throw Error(ErrorKind::Internal, "H^1 tower map is " + std::to_string(v) + ", not 2");
        rep.h1_maps.push_back(v);
    }

    // The same tower, read off from the pairs (X_s, F_j).
    const SimplicialMap id = inclusion_map(tel.X, tel.X);
    for (int j = 1; j <= stages; ++j) {
        auto g = cohomology(tel.X, 2, tel.F[j - 1]).group;
        if (!(g == FGAbelianGroup{1, {}}))
            throw Error(ErrorKind::Internal, "H^2(X, F_" + std::to_string(j) + ") is " + g.str() + ", not Z");
        rep.relative.push_back(g);
    }
    for (int j = 1; j < stages; ++j) {
        IntMatrix m = induced_map(id, 2, tel.F[j - 1], tel.F[j]);
        if (std::llabs(m(0, 0)) != 2)
            throw Error(ErrorKind::Internal, "relative tower map is " + std::to_string(m(0, 0)) + ", not ±2");
        rep.relative_maps.push_back(m(0, 0));
    }

    // Degree shift by k leaves groups and maps unchanged.
    for (int j = 0; j < stages; ++j) {
        TowerStage s{rep.relative[j], j == 0 ? IntMatrix(0, 1) : IntMatrix::from_rows({{rep.relative_maps[j - 1]}})};
        rep.tower.prefix.push_back(std::move(s));
    }
    rep.tower.period.push_back({FGAbelianGroup{1, {}}, IntMatrix::from_rows({{rep.relative_maps.back()}})});
    rep.lim1 = lim1_vanishes(rep.tower);
    rep.nonzero = rep.lim1.verdict == Lim1Verdict::Nonzero;
    rep.summary = std::string("H^") + std::to_string(rep.degree) + " tower is the doubling tower; Mittag-Leffler " +
                  to_string(rep.lim1.ml.verdict) + ", lim^1 " + to_string(rep.lim1.verdict) + "; so H^" +
                  std::to_string(3 + k) + "(X x I^" + std::to_string(k) + ", X x I^" + std::to_string(k) +
                  " minus (inf,0)) is " + (rep.nonzero ? "non-zero" : "not shown non-zero") + ": obstruction " +
                  (rep.nonzero ? "nonzero" : "undecided");
    return rep;
}

}  // namespace treefold
