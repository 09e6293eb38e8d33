#include "treefold/poset_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treefold {

FacePoset link(const FacePoset& P, int sigma) {
    if (sigma < 0 || sigma >= static_cast<int>(P.size()))
        throw Error(ErrorKind::Input, "link: unknown element");
    std::vector<int> above = P.up_set(sigma);
    above.erase(std::find(above.begin(), above.end(), sigma));
    std::vector<int> local(P.size(), -1);
    std::vector<std::string> ids;
    for (int e : above) {
        local[e] = static_cast<int>(ids.size());
        ids.push_back(P.id(e));
    }
    // Intervals between two strict upper bounds of sigma stay above sigma, so the
    // covers of the induced poset are the restricted covers.
    std::vector<std::pair<int, int>> covers;
    for (int e : above)
        for (int l : P.lower_covers(e))
            if (local[l] >= 0) covers.emplace_back(local[l], local[e]);
    const PosetKind kind = P.kind() == PosetKind::General ? PosetKind::General : PosetKind::Simplicial;
    return FacePoset(std::move(ids), covers, kind);
}

FacePoset link(const FacePoset& P, const std::string& sigma) { return link(P, P.index_of(sigma)); }

FacePoset closure_of(const FacePoset& P, int sigma) {
    return P.restrict_down_closed(P.down_set(sigma));
}

StarResult star(const FacePoset& P, int sigma) {
    if (sigma < 0 || sigma >= static_cast<int>(P.size()))
        throw Error(ErrorKind::Input, "star: unknown element");
    StarResult out{SubComplex(P, P.down_closure(P.up_set(sigma))), std::nullopt, std::nullopt};
    if (P.kind() == PosetKind::Cubical || (P.kind() != PosetKind::General && P.has_cubical_shape())) {
        FacePoset model =
            product(closure_of(P, sigma), interval_subdivision(cone_star(link(P, sigma))));
        auto iso = is_isomorphic(out.star.as_poset(), model);
        if (iso) out.factorization = iso.witness;
        out.model = std::move(model);
    }
    return out;
}

StarResult star(const FacePoset& P, const std::string& sigma) { return star(P, P.index_of(sigma)); }

FacePoset join(const FacePoset& P, const FacePoset& Q) {
    auto simplicial = [](const FacePoset& X) { return X.empty() || X.kind() == PosetKind::Simplicial; };
    if (!simplicial(P) || !simplicial(Q))
        throw Error(ErrorKind::Input, "join requires simplicial complexes");
    auto tagged = [](const FacePoset& X, const char* tag) {
        std::vector<Simplex> out;
        for (Simplex s : facets_of(X)) {
            for (auto& v : s) v = tag + v;
            out.push_back(std::move(s));
        }
        return out;
    };
    auto fp = tagged(P, "l:");
    auto fq = tagged(Q, "r:");
    if (fp.empty()) return make_simplicial(fq);
    if (fq.empty()) return make_simplicial(fp);
    std::vector<Simplex> facets;
    for (const auto& a : fp)
        for (const auto& b : fq) {
            Simplex s = a;
            s.insert(s.end(), b.begin(), b.end());
            facets.push_back(std::move(s));
        }
    return make_simplicial(facets);
}

FacePoset prejoin(const FacePoset& P, const FacePoset& Q) {
    std::vector<std::string> ids;
    const int np = static_cast<int>(P.size());
    for (int e = 0; e < np; ++e) ids.push_back("l:" + P.id(e));
    for (int e = 0; e < static_cast<int>(Q.size()); ++e) ids.push_back("r:" + Q.id(e));
    std::vector<std::pair<int, int>> covers;
    for (auto [lo, hi] : P.cover_pairs()) covers.emplace_back(lo, hi);
    for (auto [lo, hi] : Q.cover_pairs()) covers.emplace_back(np + lo, np + hi);
    for (int top : P.maximal_elements())
        for (int bottom : Q.minimal_elements()) covers.emplace_back(top, np + bottom);
    return FacePoset::classified(std::move(ids), covers);
}

FacePoset product(const FacePoset& P, const FacePoset& Q) {
    const int np = static_cast<int>(P.size()), nq = static_cast<int>(Q.size());
    std::vector<std::string> ids;
    ids.reserve(static_cast<std::size_t>(np) * nq);
    for (int p = 0; p < np; ++p)
        for (int q = 0; q < nq; ++q) ids.push_back("(" + P.id(p) + "," + Q.id(q) + ")");
    std::vector<std::pair<int, int>> covers;
    for (auto [lo, hi] : P.cover_pairs())
        for (int q = 0; q < nq; ++q) covers.emplace_back(lo * nq + q, hi * nq + q);
    for (auto [lo, hi] : Q.cover_pairs())
        for (int p = 0; p < np; ++p) covers.emplace_back(p * nq + lo, p * nq + hi);
    FacePoset out = FacePoset::classified(std::move(ids), covers);
    return out;
}

FacePoset cone_star(const FacePoset& P) {
    std::string bottom = kConeBottom;
    while (P.contains(bottom)) bottom += "^";
    std::vector<std::string> ids{bottom};
    for (int e = 0; e < static_cast<int>(P.size()); ++e) ids.push_back(P.id(e));
    std::vector<std::pair<int, int>> covers;
    for (auto [lo, hi] : P.cover_pairs()) covers.emplace_back(lo + 1, hi + 1);
    for (int m : P.minimal_elements()) covers.emplace_back(0, m + 1);
    return FacePoset(std::move(ids), covers, PosetKind::General);
}

FacePoset coboundary(const FacePoset& Q) {
    auto mins = Q.minimal_elements();
    if (mins.size() != 1 || Q.up_set(mins.front()).size() != Q.size())
        throw Error(ErrorKind::Input, "coboundary requires a poset with a least element");
    const int bottom = mins.front();
    std::vector<int> local(Q.size(), -1);
    std::vector<std::string> ids;
    for (int e = 0; e < static_cast<int>(Q.size()); ++e)
        if (e != bottom) {
            local[e] = static_cast<int>(ids.size());
            ids.push_back(Q.id(e));
        }
    std::vector<std::pair<int, int>> covers;
    for (auto [lo, hi] : Q.cover_pairs())
        if (lo != bottom) covers.emplace_back(local[lo], local[hi]);
    return FacePoset::classified(std::move(ids), covers);
}

FacePoset barycentric(const FacePoset& P) {
    // Maximal chains are saturated cover paths from a minimal to a maximal element.
    std::vector<Simplex> facets;
    std::vector<int> path;
    auto walk = [&](auto&& self, int e) -> void {
        path.push_back(e);
        if (P.upper_covers(e).empty()) {
            Simplex s;
            for (int x : path) s.push_back(P.id(x));
            facets.push_back(std::move(s));
        } else {
            for (int u : P.upper_covers(e)) self(self, u);
        }
        path.pop_back();
    };
    for (int m : P.minimal_elements()) walk(walk, m);
    return make_simplicial(facets);
}

std::string interval_id(const std::string& lo, const std::string& hi) {
    return "[" + lo + ";" + hi + "]";
}

FacePoset interval_subdivision(const FacePoset& P) {
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> intervals;
    std::vector<std::string> ids;
    for (int a = 0; a < static_cast<int>(P.size()); ++a)
        for (int b : P.up_set(a)) {
            index.emplace(std::make_pair(a, b), static_cast<int>(intervals.size()));
            intervals.emplace_back(a, b);
            ids.push_back(interval_id(P.id(a), P.id(b)));
        }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        auto [a, b] = intervals[i];
        for (int c : P.lower_covers(a)) covers.emplace_back(static_cast<int>(i), index.at({c, b}));
        for (int d : P.upper_covers(b)) covers.emplace_back(static_cast<int>(i), index.at({a, d}));
    }
    // Cubical first: a one-dimensional interval complex (a graph) is tagged cubical.
    FacePoset out(ids, covers, PosetKind::General);
    if (out.has_cubical_shape()) return FacePoset(std::move(ids), covers, PosetKind::Cubical);
    return FacePoset::classified(std::move(ids), covers);
}

}  // namespace treefold
