#pragma once

#include "treefold/poset.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace treefold {

/// Compact cover graph (CSR) that the collapse machinery runs on. Built from a
/// FacePoset or directly from a tree product.
struct CellGraph {
    std::vector<int> rank;
    std::vector<int> lower_offsets{0}, lower;
    std::vector<int> upper_offsets{0}, upper;

    static CellGraph from_poset(const FacePoset& P);
    /// Fills the upper-cover arrays from the lower ones.
    void finish_upper();

    int size() const { return static_cast<int>(rank.size()); }
    std::pair<const int*, const int*> lowers(int c) const {
        return {lower.data() + lower_offsets[c], lower.data() + lower_offsets[c + 1]};
    }
    std::pair<const int*, const int*> uppers(int c) const {
        return {upper.data() + upper_offsets[c], upper.data() + upper_offsets[c + 1]};
    }
};

/// Ordered elementary collapses (free face, its unique coface), by element id.
struct CollapseSequence {
    std::vector<std::pair<std::string, std::string>> steps;
};

struct CollapseCheck {
    bool ok = true;
    int failed_step = -1;  ///< index of the first invalid step
    std::string message;
};

/// All (sigma, tau) with tau the unique strict coface of sigma, sorted by ids.
std::vector<std::pair<std::string, std::string>> free_faces(const FacePoset& P);

/// Removes a free pair. Throws Error(Input) when the pair is not free.
FacePoset apply_elementary_collapse(const FacePoset& P, const std::string& sigma,
                                    const std::string& tau);

/// Replays the sequence, checking freeness at each step. When `final_complex` is given
/// the surviving element ids must match it exactly.
CollapseCheck verify_collapse_sequence(const FacePoset& start, const CollapseSequence& seq,
                                       const FacePoset* final_complex = nullptr);

/// Replays index-based steps on a cell graph; `keep` (if non-empty) must equal the
/// surviving cells at the end.
CollapseCheck verify_collapse_steps(const CellGraph& graph,
                                    const std::vector<std::pair<int, int>>& steps,
                                    const std::vector<char>& survivors_expected);

enum class CollapseVerdict {
    Collapsible,      ///< a verified sequence to a single vertex was found
    NoFreeFaces,      ///< certified: not a point and no free face at all
    NotCollapsible,   ///< certified by exhaustive search under the size bound
    Unknown           ///< budget ran out; no claim either way
};

const char* to_string(CollapseVerdict v);

struct CollapseSearchOptions {
    std::uint64_t budget = 2'000'000;  ///< search nodes for the backtracking phase
    int restarts = 16;
    std::uint64_t seed = 0x5eed;
    std::size_t exhaustive_size_bound = 48;  ///< complexes at most this large are searched fully
};

struct CollapseSearchResult {
    CollapseVerdict verdict = CollapseVerdict::Unknown;
    std::optional<CollapseSequence> sequence;
    std::string note;
};

CollapseSearchResult find_collapse_sequence(const FacePoset& P, const CollapseSearchOptions& options = {});

/// Greedy collapse of the cells flagged removable; `alive` is updated in place. With a
/// null rng the lexicographically least free pair (by `key`) is taken each time.
std::vector<std::pair<int, int>> greedy_collapse(const CellGraph& graph, std::vector<char>& alive,
                                                 const std::vector<char>& removable,
                                                 const std::vector<int>& key, std::mt19937_64* rng);

/// Collapses a region (cells flagged removable) away: lexicographic greedy first, then
/// seeded randomized restarts. Returns nullopt if every attempt gets stuck.
std::optional<std::vector<std::pair<int, int>>> collapse_region(const CellGraph& graph,
                                                                const std::vector<char>& alive,
                                                                const std::vector<char>& removable,
                                                                const std::vector<int>& key,
                                                                int restarts, std::uint64_t seed);

/// P ∪_Q (cone over Q) with a fresh apex vertex. P must be simplicial.
FacePoset attach_cone(const FacePoset& P, const SubComplex& Q, std::string apex = "apex");

struct CoreResult {
    FacePoset complex;
    CollapseSequence sequence;
};

/// Collapses with the lexicographically least free pair until none is left.
CoreResult core(const FacePoset& P);

}  // namespace treefold
