#include "treefold/collapse.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace treefold {

CellGraph CellGraph::from_poset(const FacePoset& P) {
    CellGraph g;
    const int n = static_cast<int>(P.size());
    g.rank.resize(n);
    for (int e = 0; e < n; ++e) {
        g.rank[e] = P.rank(e);
        for (int l : P.lower_covers(e)) g.lower.push_back(l);
        g.lower_offsets.push_back(static_cast<int>(g.lower.size()));
    }
    g.finish_upper();
    return g;
}

void CellGraph::finish_upper() {
    const int n = size();
    std::vector<int> count(n + 1, 0);
    for (int l : lower) ++count[l + 1];
    upper_offsets.assign(n + 1, 0);
    for (int c = 0; c < n; ++c) upper_offsets[c + 1] = upper_offsets[c] + count[c + 1];
    upper.assign(lower.size(), 0);
    std::vector<int> fill(upper_offsets.begin(), upper_offsets.end() - 1);
    for (int c = 0; c < n; ++c)
        for (int i = lower_offsets[c]; i < lower_offsets[c + 1]; ++i) upper[fill[lower[i]]++] = c;
}

const char* to_string(CollapseVerdict v) {
    switch (v) {
        case CollapseVerdict::Collapsible: return "collapsible";
        case CollapseVerdict::NoFreeFaces: return "no-free-faces";
        case CollapseVerdict::NotCollapsible: return "not-collapsible";
        case CollapseVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Number of alive upper covers per cell.
std::vector<int> alive_up_counts(const CellGraph& g, const std::vector<char>& alive) {
    std::vector<int> up(g.size(), 0);
    for (int c = 0; c < g.size(); ++c) {
        if (!alive[c]) continue;
        auto [b, e] = g.uppers(c);
        for (auto it = b; it != e; ++it) up[c] += alive[*it];
    }
    return up;
}

int unique_alive_upper(const CellGraph& g, const std::vector<char>& alive, int c) {
    auto [b, e] = g.uppers(c);
    for (auto it = b; it != e; ++it)
        if (alive[*it]) return *it;
    return -1;
}

// A pair is free when sigma has exactly one alive cover tau and tau is maximal. Every
// strict coface of sigma lies above some cover, so this is the strict-coface condition.
bool is_free(const CellGraph& g, const std::vector<char>& alive, const std::vector<int>& up,
             int sigma, int tau) {
    if (!alive[sigma] || !alive[tau] || up[sigma] != 1 || up[tau] != 0) return false;
    return unique_alive_upper(g, alive, sigma) == tau;
}

void remove_pair(const CellGraph& g, std::vector<char>& alive, std::vector<int>& up, int sigma,
                 int tau) {
    alive[sigma] = 0;
    alive[tau] = 0;
    for (int c : {sigma, tau}) {
        auto [b, e] = g.lowers(c);
        for (auto it = b; it != e; ++it)
            if (alive[*it]) --up[*it];
    }
}

}  // namespace

std::vector<std::pair<int, int>> greedy_collapse(const CellGraph& g, std::vector<char>& alive,
                                                 const std::vector<char>& removable,
                                                 const std::vector<int>& key, std::mt19937_64* rng) {
    std::vector<int> up = alive_up_counts(g, alive);
    auto candidate_of = [&](int sigma) -> int {
        if (!alive[sigma] || !removable[sigma] || up[sigma] != 1) return -1;
        int tau = unique_alive_upper(g, alive, sigma);
        if (tau < 0 || !removable[tau] || up[tau] != 0) return -1;
        return tau;
    };
    std::vector<std::pair<int, int>> steps;
    // Candidates keyed by (key[sigma], key[tau]); validity is rechecked on extraction.
    using Entry = std::pair<std::pair<int, int>, std::pair<int, int>>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ordered;
    std::vector<std::pair<int, int>> pool;
    auto offer = [&](int sigma) {
        int tau = candidate_of(sigma);
        if (tau < 0) return;
        if (rng)
            pool.emplace_back(sigma, tau);
        else
            ordered.push({{key[sigma], key[tau]}, {sigma, tau}});
    };
    for (int c = 0; c < g.size(); ++c) offer(c);
    while (true) {
        int sigma = -1, tau = -1;
        if (rng) {
            while (!pool.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                std::size_t i = pick(*rng);
                std::swap(pool[i], pool.back());
                auto [s, t] = pool.back();
                pool.pop_back();
                if (removable[s] && removable[t] && is_free(g, alive, up, s, t)) {
                    sigma = s;
                    tau = t;
                    break;
                }
            }
        } else {
            while (!ordered.empty()) {
                auto [s, t] = ordered.top().second;
                ordered.pop();
                if (is_free(g, alive, up, s, t)) {
                    sigma = s;
                    tau = t;
                    break;
                }
            }
        }
        if (sigma < 0) break;
        remove_pair(g, alive, up, sigma, tau);
        steps.emplace_back(sigma, tau);
        // Cells whose cover count dropped may now be free, or may now be the maximal
        // coface making one of their own faces free.
        for (int c : {sigma, tau}) {
            auto [b, e] = g.lowers(c);
            for (auto it = b; it != e; ++it) {
                int x = *it;
                if (!alive[x]) continue;
                offer(x);
                if (up[x] == 0) {
                    auto [lb, le] = g.lowers(x);
                    for (auto jt = lb; jt != le; ++jt) offer(*jt);
                }
            }
        }
    }
    return steps;
}

std::optional<std::vector<std::pair<int, int>>> collapse_region(const CellGraph& g,
                                                                const std::vector<char>& alive,
                                                                const std::vector<char>& removable,
                                                                const std::vector<int>& key,
                                                                int restarts, std::uint64_t seed) {
    auto done = [&](const std::vector<char>& a) {
        for (int c = 0; c < g.size(); ++c)
            if (a[c] && removable[c]) return false;
        return true;
    };
    {
        std::vector<char> a = alive;
        auto steps = greedy_collapse(g, a, removable, key, nullptr);
        if (done(a)) return steps;
    }
    std::mt19937_64 rng(seed);
    for (int r = 0; r < restarts; ++r) {
        std::vector<char> a = alive;
        auto steps = greedy_collapse(g, a, removable, key, &rng);
        if (done(a)) return steps;
    }
    return std::nullopt;
}

CollapseCheck verify_collapse_steps(const CellGraph& g, const std::vector<std::pair<int, int>>& steps,
                                    const std::vector<char>& survivors_expected) {
    std::vector<char> alive(g.size(), 1);
    std::vector<int> up = alive_up_counts(g, alive);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        auto [sigma, tau] = steps[i];
        if (sigma < 0 || tau < 0 || sigma >= g.size() || tau >= g.size())
            return {false, static_cast<int>(i), "cell index out of range"};
        if (g.rank[tau] != g.rank[sigma] + 1)
            return {false, static_cast<int>(i), "dimensions do not differ by one"};
        if (!is_free(g, alive, up, sigma, tau))
            return {false, static_cast<int>(i), "pair is not free"};
        remove_pair(g, alive, up, sigma, tau);
    }
    if (!survivors_expected.empty()) {
        for (int c = 0; c < g.size(); ++c)
            if (static_cast<bool>(alive[c]) != static_cast<bool>(survivors_expected[c]))
                return {false, -1, "final complex does not match"};
    }
    return {};
}

std::vector<std::pair<std::string, std::string>> free_faces(const FacePoset& P) {
    CellGraph g = CellGraph::from_poset(P);
    std::vector<char> alive(g.size(), 1);
    std::vector<int> up = alive_up_counts(g, alive);
    std::vector<std::pair<std::string, std::string>> out;
    for (int s = 0; s < g.size(); ++s) {
        if (up[s] != 1) continue;
        int t = unique_alive_upper(g, alive, s);
        if (up[t] == 0) out.emplace_back(P.id(s), P.id(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FacePoset apply_elementary_collapse(const FacePoset& P, const std::string& sigma,
                                    const std::string& tau) {
    auto s = P.find(sigma), t = P.find(tau);
    if (!s || !t) throw Error(ErrorKind::Input, "collapse: unknown element");
    CellGraph g = CellGraph::from_poset(P);
    std::vector<char> alive(g.size(), 1);
    std::vector<int> up = alive_up_counts(g, alive);
    if (!is_free(g, alive, up, *s, *t))
        throw Error(ErrorKind::Input, "collapse: (" + sigma + ", " + tau + ") is not a free pair");
    std::vector<int> keep;
    for (int e = 0; e < g.size(); ++e)
        if (e != *s && e != *t) keep.push_back(e);
    return P.restrict_down_closed(keep);
}

CollapseCheck verify_collapse_sequence(const FacePoset& start, const CollapseSequence& seq,
                                       const FacePoset* final_complex) {
    CellGraph g = CellGraph::from_poset(start);
    std::vector<std::pair<int, int>> steps;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        auto s = start.find(seq.steps[i].first), t = start.find(seq.steps[i].second);
        if (!s || !t) return {false, static_cast<int>(i), "unknown element in step"};
        steps.emplace_back(*s, *t);
    }
    std::vector<char> expected;
    if (final_complex) {
        expected.assign(g.size(), 0);
        for (int e = 0; e < static_cast<int>(final_complex->size()); ++e) {
            auto x = start.find(final_complex->id(e));
            if (!x) return {false, -1, "final complex has elements outside the start"};
            expected[*x] = 1;
        }
    }
    auto check = verify_collapse_steps(g, steps, {});
    if (!check.ok || !final_complex) return check;
    std::vector<char> alive(g.size(), 1);
    for (auto [s, t] : steps) alive[s] = alive[t] = 0;
    if (alive != expected) return {false, -1, "final complex does not match"};
    return {};
}

namespace {

struct ExhaustiveSearch {
    const CellGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::unordered_set<std::string> dead{};  // alive masks known to be stuck
    std::vector<std::pair<int, int>> path{};

    bool run(std::vector<char>& alive, std::vector<int>& up, int remaining) {
        if (remaining == 1) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        std::string mask(alive.begin(), alive.end());
        if (dead.count(mask)) return false;
        for (int s = 0; s < g.size(); ++s) {
            if (!alive[s] || up[s] != 1) continue;
            int t = unique_alive_upper(g, alive, s);
            if (up[t] != 0) continue;
            remove_pair(g, alive, up, s, t);
            path.emplace_back(s, t);
            bool ok = run(alive, up, remaining - 2);
            if (ok) return true;
            path.pop_back();
            alive[s] = alive[t] = 1;
            for (int c : {s, t}) {
                auto [b, e] = g.lowers(c);
                for (auto it = b; it != e; ++it)
                    if (*it != s) ++up[*it];
            }
            if (exhausted) return false;
        }
        dead.insert(std::move(mask));
        return false;
    }
};

CollapseSequence to_sequence(const FacePoset& P, const std::vector<std::pair<int, int>>& steps) {
    CollapseSequence seq;
    for (auto [s, t] : steps) seq.steps.emplace_back(P.id(s), P.id(t));
    return seq;
}

}  // namespace

CollapseSearchResult find_collapse_sequence(const FacePoset& P, const CollapseSearchOptions& options) {
    CollapseSearchResult result;
    if (P.empty()) {
        result.verdict = CollapseVerdict::NotCollapsible;
        result.note = "empty complex";
        return result;
    }
    CellGraph g = CellGraph::from_poset(P);
    std::vector<int> key(g.size());
    {
        std::vector<int> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return P.id(a) < P.id(b); });
        for (int i = 0; i < g.size(); ++i) key[order[i]] = i;
    }
    std::vector<char> all(g.size(), 1);
    auto point_left = [&](const std::vector<char>& a) {
        return std::count(a.begin(), a.end(), 1) == 1;
    };
    if (free_faces(P).empty()) {
        if (P.size() == 1) {
            result.verdict = CollapseVerdict::Collapsible;
            result.sequence = CollapseSequence{};
        } else {
            result.verdict = CollapseVerdict::NoFreeFaces;
            result.note = "no free faces; not a point";
        }
        return result;
    }
    {
        std::vector<char> a = all;
        auto steps = greedy_collapse(g, a, all, key, nullptr);
        if (point_left(a)) {
            result.verdict = CollapseVerdict::Collapsible;
            result.sequence = to_sequence(P, steps);
            result.note = "greedy";
            return result;
        }
    }
    std::mt19937_64 rng(options.seed);
    for (int r = 0; r < options.restarts; ++r) {
        std::vector<char> a = all;
        auto steps = greedy_collapse(g, a, all, key, &rng);
        if (point_left(a)) {
            result.verdict = CollapseVerdict::Collapsible;
            result.sequence = to_sequence(P, steps);
            result.note = "randomized restart " + std::to_string(r + 1);
            return result;
        }
    }
    ExhaustiveSearch search{g, options.budget};
    std::vector<char> a = all;
    std::vector<int> up = alive_up_counts(g, a);
    if (search.run(a, up, g.size())) {
        result.verdict = CollapseVerdict::Collapsible;
        result.sequence = to_sequence(P, search.path);
        result.note = "backtracking";
        return result;
    }
    if (!search.exhausted && P.size() <= options.exhaustive_size_bound) {
        result.verdict = CollapseVerdict::NotCollapsible;
        result.note = "exhaustive search found no sequence";
    } else {
        result.verdict = CollapseVerdict::Unknown;
        result.note = search.exhausted ? "search budget exhausted" : "complex above exhaustive size bound";
    }
    return result;
}

FacePoset attach_cone(const FacePoset& P, const SubComplex& Q, std::string apex) {
    if (&Q.ambient() != &P && !(Q.ambient() == P))
        throw Error(ErrorKind::Input, "attach_cone: subcomplex of a different complex");
    if (P.kind() != PosetKind::Simplicial)
        throw Error(ErrorKind::Input, "attach_cone requires a simplicial complex");
    if (!P.is_down_closed(Q.elements()))
        throw Error(ErrorKind::Input, "attach_cone: subcomplex is not down-closed");
    std::set<std::string> labels;
    for (int m : P.minimal_elements()) labels.insert(P.id(m));
    while (labels.count(apex)) apex += "'";
    std::vector<Simplex> facets = facets_of(P);
    facets.push_back({apex});
    for (int e : Q.elements()) {
        Simplex s = vertex_labels(P, e);
        s.push_back(apex);
        std::sort(s.begin(), s.end());
        facets.push_back(std::move(s));
    }
    return make_simplicial(facets);
}

CoreResult core(const FacePoset& P) {
    CellGraph g = CellGraph::from_poset(P);
    std::vector<int> key(g.size());
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return P.id(a) < P.id(b); });
    for (int i = 0; i < g.size(); ++i) key[order[i]] = i;
    std::vector<char> alive(g.size(), 1), all(g.size(), 1);
    auto steps = greedy_collapse(g, alive, all, key, nullptr);
    std::vector<int> keep;
    for (int e = 0; e < g.size(); ++e)
        if (alive[e]) keep.push_back(e);
    return {P.restrict_down_closed(keep), to_sequence(P, steps)};
}

}  // namespace treefold
