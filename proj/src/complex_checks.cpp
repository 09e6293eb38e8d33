#include "treefold/complex_checks.hpp"

#include "treefold/collapse.hpp"
#include "treefold/poset_ops.hpp"

#include <numeric>

namespace treefold {

namespace {

RecognitionResult no(std::string why) { return {Recognition::No, std::move(why)}; }

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

// Every codimension-one cell has between lo and hi cofaces.
bool codim_one_degrees(const FacePoset& P, int d, std::size_t lo, std::size_t hi) {
    for (int e = 0; e < static_cast<int>(P.size()); ++e)
        if (P.rank(e) == d - 1) {
            auto n = P.upper_covers(e).size();
            if (n < lo || n > hi) return false;
        }
    return true;
}

}  // namespace

bool is_pure(const FacePoset& P) {
    const int d = P.dimension();
    for (int m : P.maximal_elements())
        if (P.rank(m) != d) return false;
    return true;
}

bool is_connected(const FacePoset& P) {
    const int n = static_cast<int>(P.size());
    if (n == 0) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < n; ++e)
        for (int l : P.lower_covers(e)) parent[find_root(parent, l)] = find_root(parent, e);
    const int r = find_root(parent, 0);
    for (int e = 1; e < n; ++e)
        if (find_root(parent, e) != r) return false;
    return true;
}

std::vector<int> boundary_elements(const FacePoset& P) {
    const int d = P.dimension();
    std::vector<int> gens;
    for (int e = 0; e < static_cast<int>(P.size()); ++e)
        if (P.rank(e) == d - 1 && P.upper_covers(e).size() == 1) gens.push_back(e);
    return P.down_closure(gens);
}

FacePoset boundary_of(const FacePoset& P) { return P.restrict_down_closed(boundary_elements(P)); }

RecognitionResult recognize_sphere(const FacePoset& P, int d) {
    if (d < -1) return no("negative dimension");
    if (d == -1) return P.empty() ? RecognitionResult{} : no("expected the empty complex");
    if (P.dimension() != d) return no("wrong dimension");
    if (d == 0) {
        if (P.size() == 2) return {};
        return no("a 0-sphere has exactly two points");
    }
    if (d > 2) return {Recognition::Unverifiable, "sphere recognition is implemented up to dimension 2"};
    if (!is_pure(P)) return no("not pure");
    if (!is_connected(P)) return no("not connected");
    if (!codim_one_degrees(P, d, 2, 2)) return no("codimension-one cell without exactly two cofaces");
    if (d == 2) {
        for (int v : P.minimal_elements()) {
            auto r = recognize_sphere(link(P, v), 1);
            if (!r.yes()) return no("vertex link " + P.id(v) + " is not a circle");
        }
        if (P.euler_characteristic() != 2) return no("Euler characteristic is not 2");
    }
    return {};
}

RecognitionResult recognize_ball(const FacePoset& P, int d) {
    if (d < 0) return no("negative dimension");
    if (P.dimension() != d) return no("wrong dimension");
    if (d == 0) return P.size() == 1 ? RecognitionResult{} : no("a 0-ball is a single point");
    if (d > 3) return {Recognition::Unverifiable, "ball recognition is implemented up to dimension 3"};
    if (!is_pure(P)) return no("not pure");
    if (!is_connected(P)) return no("not connected");
    if (!codim_one_degrees(P, d, 1, 2)) return no("codimension-one cell with more than two cofaces");
    if (P.euler_characteristic() != 1) return no("Euler characteristic is not 1");
    FacePoset bd = boundary_of(P);
    auto rb = recognize_sphere(bd, d - 1);
    if (rb.verdict == Recognition::Unverifiable) return rb;
    if (!rb.yes()) return no("boundary is not a sphere: " + rb.reason);
    if (d == 1) return {};
    std::vector<char> on_boundary(P.size(), 0);
    for (int e : boundary_elements(P)) on_boundary[e] = 1;
    for (int v : P.minimal_elements()) {
        FacePoset lk = link(P, v);
        auto r = on_boundary[v] ? recognize_ball(lk, d - 1) : recognize_sphere(lk, d - 1);
        if (r.verdict == Recognition::Unverifiable) return r;
        if (!r.yes())
            return no(std::string("vertex link at ") + P.id(v) +
                      (on_boundary[v] ? " is not a ball" : " is not a sphere"));
    }
    if (d == 3) {
        // A collapsible 3-manifold with boundary is a regular neighbourhood of a point.
        auto c = find_collapse_sequence(P);
        if (c.verdict != CollapseVerdict::Collapsible) {
            if (c.verdict == CollapseVerdict::Unknown)
                return {Recognition::Unverifiable, "no collapse found within budget"};
            return no("not collapsible");
        }
    }
    return {};
}

}  // namespace treefold
