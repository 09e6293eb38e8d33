#pragma once

// All simplicial complexes on at most six vertices, one per isomorphism class.
// A complex is a 64-bit mask over the 63 non-empty subsets of {0..5}; classes are found by
// breadth-first search from the empty complex, adding one face at a time, and keyed by the
// least mask over all 720 vertex permutations.

#include "treefold/poset.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

namespace oracle {

class SmallComplexes {
public:
    SmallComplexes() {
        std::array<int, 6> p;
        std::iota(p.begin(), p.end(), 0);
        do {
            auto& t = tables_.emplace_back();
            for (int byte = 0; byte < 8; ++byte)
                for (int v = 0; v < 256; ++v) {
                    std::uint64_t out = 0;
                    for (int b = 0; b < 8; ++b) {
                        const int s = byte * 8 + b;  // bit s stands for subset s + 1
                        if (!(v >> b & 1) || s >= 63) continue;
                        const int subset = s + 1;
                        int image = 0;
                        for (int i = 0; i < 6; ++i)
                            if (subset >> i & 1) image |= 1 << p[i];
                        out |= std::uint64_t{1} << (image - 1);
                    }
                    t[byte][v] = out;
                }
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::uint64_t canonical(std::uint64_t m) const {
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& t : tables_) {
            std::uint64_t x = 0;
            for (int byte = 0; byte < 8; ++byte) x |= t[byte][(m >> (8 * byte)) & 0xff];
            best = std::min(best, x);
        }
        return best;
    }

    /// Canonical masks of all non-empty complexes, in BFS order (by number of faces).
    std::vector<std::uint64_t> enumerate() const {
        std::vector<std::uint64_t> level{0}, out;
        std::unordered_set<std::uint64_t> seen{0};
        while (!level.empty()) {
            std::vector<std::uint64_t> next;
            for (std::uint64_t m : level)
                for (int subset = 1; subset < 64; ++subset) {
                    const std::uint64_t bit = std::uint64_t{1} << (subset - 1);
                    if (m & bit) continue;
                    bool ok = true;  // every facet of the new face must be present
                    for (int i = 0; i < 6 && ok; ++i)
                        if ((subset >> i & 1) && subset != (1 << i))
                            ok = m >> ((subset & ~(1 << i)) - 1) & 1;
                    if (!ok) continue;
                    const std::uint64_t c = canonical(m | bit);
                    if (seen.insert(c).second) next.push_back(c);
                }
            out.insert(out.end(), next.begin(), next.end());
            level = std::move(next);
        }
        return out;
    }

    static treefold::FacePoset complex_of(std::uint64_t m) {
        std::vector<treefold::Simplex> faces;
        for (int subset = 1; subset < 64; ++subset)
            if (m >> (subset - 1) & 1) {
                treefold::Simplex s;
                for (int i = 0; i < 6; ++i)
                    if (subset >> i & 1) s.push_back("v" + std::to_string(i));
                faces.push_back(s);
            }
        return treefold::make_simplicial(faces);
    }

private:
    std::vector<std::array<std::array<std::uint64_t, 256>, 8>> tables_;
};

}  // namespace oracle
