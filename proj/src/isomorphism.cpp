#include "treefold/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

namespace treefold {

namespace {

// Joint colour refinement over both posets so colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const FacePoset& P, const FacePoset& Q,
                                                     const std::vector<std::string>* lp,
                                                     const std::vector<std::string>* lq) {
    using Key = std::tuple<int, int, int, std::string>;
    std::map<Key, int> init;
    auto initial = [&](const FacePoset& X, const std::vector<std::string>* labels) {
        std::vector<int> c(X.size());
        for (int e = 0; e < static_cast<int>(X.size()); ++e) {
            Key k{X.rank(e), static_cast<int>(X.lower_covers(e).size()),
                  static_cast<int>(X.upper_covers(e).size()), labels ? (*labels)[e] : std::string{}};
            c[e] = init.emplace(k, static_cast<int>(init.size())).first->second;
        }
        return c;
    };
    std::vector<int> cp = initial(P, lp), cq = initial(Q, lq);
    std::size_t classes = init.size();
    for (int round = 0; round < 64; ++round) {
        using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::map<Sig, int> next;
        auto step = [&](const FacePoset& X, const std::vector<int>& c) {
            std::vector<int> out(X.size());
            for (int e = 0; e < static_cast<int>(X.size()); ++e) {
                std::vector<int> lo, hi;
                for (int l : X.lower_covers(e)) lo.push_back(c[l]);
                for (int u : X.upper_covers(e)) hi.push_back(c[u]);
                std::sort(lo.begin(), lo.end());
                std::sort(hi.begin(), hi.end());
                Sig s{c[e], std::move(lo), std::move(hi)};
                out[e] = next.emplace(std::move(s), static_cast<int>(next.size())).first->second;
            }
            return out;
        };
        auto np = step(P, cp);
        auto nq = step(Q, cq);
        cp = std::move(np);
        cq = std::move(nq);
        if (next.size() == classes) break;
        classes = next.size();
    }
    return {cp, cq};
}

struct Search {
    const FacePoset& P;
    const FacePoset& Q;
    const std::vector<int>& cp;
    const std::vector<int>& cq;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> order{};
    std::vector<int> forward{}, backward{};
    std::vector<std::vector<int>> by_colour{};
    bool exhausted = false;

    bool consistent(int x, int c) const {
        int mapped_lo = 0, mapped_hi = 0;
        for (int z : P.lower_covers(x))
            if (forward[z] >= 0) {
                ++mapped_lo;
                const auto& lc = Q.lower_covers(c);
                if (!std::binary_search(lc.begin(), lc.end(), forward[z])) return false;
            }
        for (int z : P.upper_covers(x))
            if (forward[z] >= 0) {
                ++mapped_hi;
                const auto& uc = Q.upper_covers(c);
                if (!std::binary_search(uc.begin(), uc.end(), forward[z])) return false;
            }
        int used_lo = 0, used_hi = 0;
        for (int w : Q.lower_covers(c)) used_lo += backward[w] >= 0;
        for (int w : Q.upper_covers(c)) used_hi += backward[w] >= 0;
        return used_lo == mapped_lo && used_hi == mapped_hi;
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        const int x = order[depth];
        std::vector<int> candidates;
        int anchor = -1;
        bool anchor_below = false;
        for (int z : P.lower_covers(x))
            if (forward[z] >= 0) {
                anchor = z;
                anchor_below = true;
                break;
            }
        if (anchor < 0)
            for (int z : P.upper_covers(x))
                if (forward[z] >= 0) {
                    anchor = z;
                    break;
                }
        if (anchor >= 0) {
            const auto& pool = anchor_below ? Q.upper_covers(forward[anchor])
                                            : Q.lower_covers(forward[anchor]);
            for (int c : pool)
                if (backward[c] < 0 && cq[c] == cp[x]) candidates.push_back(c);
        } else {
            for (int c : by_colour[cp[x]])
                if (backward[c] < 0) candidates.push_back(c);
        }
        for (int c : candidates) {
            if (!consistent(x, c)) continue;
            forward[x] = c;
            backward[c] = x;
            if (run(depth + 1)) return true;
            forward[x] = -1;
            backward[c] = -1;
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const FacePoset& P, const FacePoset& Q, std::uint64_t budget,
                        const std::vector<std::string>* labels_p,
                        const std::vector<std::string>* labels_q) {
    IsoResult result;
    if (P.size() != Q.size() || P.rank_counts() != Q.rank_counts()) return result;
    if ((labels_p == nullptr) != (labels_q == nullptr)) return result;
    const int n = static_cast<int>(P.size());
    if (n == 0) {
        result.verdict = IsoVerdict::Isomorphic;
        return result;
    }
    auto [cp, cq] = refine(P, Q, labels_p, labels_q);
    {
        std::vector<int> a = cp, b = cq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return result;
    }
    int colours = 0;
    for (int c : cp) colours = std::max(colours, c + 1);
    for (int c : cq) colours = std::max(colours, c + 1);
    std::vector<int> class_size(colours, 0);
    for (int c : cp) ++class_size[c];

    Search s{P, Q, cp, cq, budget};
    s.forward.assign(n, -1);
    s.backward.assign(n, -1);
    s.by_colour.assign(colours, {});
    for (int c = 0; c < n; ++c) s.by_colour[cq[c]].push_back(c);

    // BFS order over the undirected cover graph, each component rooted at its rarest colour.
    std::vector<char> placed(n, 0);
    std::vector<int> roots(n);
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) {
        return class_size[cp[a]] < class_size[cp[b]];
    });
    for (int root : roots) {
        if (placed[root]) continue;
        std::queue<int> bfs;
        bfs.push(root);
        placed[root] = 1;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            s.order.push_back(x);
            for (const auto* adj : {&P.lower_covers(x), &P.upper_covers(x)})
                for (int y : *adj)
                    if (!placed[y]) {
                        placed[y] = 1;
                        bfs.push(y);
                    }
        }
    }
    const bool found = s.run(0);
    result.nodes = s.nodes;
    if (found) {
        result.verdict = IsoVerdict::Isomorphic;
        result.witness.forward = s.forward;
    } else {
        result.verdict = s.exhausted ? IsoVerdict::BudgetExhausted : IsoVerdict::NotIsomorphic;
    }
    return result;
}

bool check_isomorphism(const FacePoset& P, const FacePoset& Q, const Isomorphism& witness) {
    const int n = static_cast<int>(P.size());
    if (Q.size() != P.size() || witness.forward.size() != P.size()) return false;
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
        int y = witness.forward[x];
        if (y < 0 || y >= n || hit[y]) return false;
        hit[y] = 1;
    }
    std::size_t covers = 0;
    for (int x = 0; x < n; ++x)
        for (int z : P.lower_covers(x)) {
            const auto& lc = Q.lower_covers(witness.forward[x]);
            if (!std::binary_search(lc.begin(), lc.end(), witness.forward[z])) return false;
            ++covers;
        }
    return covers == Q.cover_pairs().size();
}

}  // namespace treefold
