#pragma once

#include "treefold/collapse.hpp"
#include "treefold/embedding.hpp"
#include "treefold/tree.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace treefold {

enum class ChoicePolicy {
    Canonical,    ///< interior vertices in a linear extension of the stage order, then the rest
    Consecutive,  ///< interior vertices consecutively (along the arc when k = 1), then the rest
    EdgesFirst    ///< interior cells by decreasing dimension
};

const char* to_string(ChoicePolicy p);
ChoicePolicy parse_policy(const std::string& name);  ///< throws Error(Input)

using CollapseSteps = std::vector<std::pair<Cell, Cell>>;

/// A product cell in one word: 64 / n bits per face code, first tree in the high bits.
using PackedCell = std::uint64_t;
PackedCell pack_cell(const Cell& c);  ///< throws Error(Budget) when a code does not fit
Cell unpack_cell(PackedCell x, int n);
using PackedSteps = std::vector<std::pair<PackedCell, PackedCell>>;
PackedSteps pack_steps(const CollapseSteps& steps);

/// Everything the extension across one frontier ball needs and produces.
struct ExtensionState {
    TreeProduct product;
    CellSet image;               ///< Q_i
    CellSet frontier;            ///< B_i (B_0 on entry, B_r on exit)
    CellSet frontier_boundary;   ///< ∂B_0
    std::vector<Cell> consumed;  ///< q_1, ..., q_i
    CellSet beta;                ///< union of the E cells
    /// Local collapses T⁺ ↘ T ∪ E, one block per step, in chronological order.
    std::vector<PackedSteps> certificate_blocks;
    int stage = 0;               ///< total number of steps taken so far
};

struct ExtensionOptions {
    ChoicePolicy policy = ChoicePolicy::Canonical;
    int expansion_index = 0;  ///< used in fresh vertex names
    /// Canonical policy only: picks which of the currently minimal vertices comes next.
    /// Receives candidates sorted by cell; the default takes the first.
    std::function<std::size_t(const std::vector<Cell>&)> pick;
    bool certify = true;  ///< compute the local collapse blocks
    int restarts = 32;
    std::uint64_t seed = 0x7ee;
};

struct ExtensionReport {
    int steps = 0;  ///< r
    std::vector<Cell> order;  ///< the q's actually used
    std::vector<int> fiw_dims;
};

/// Extends the image across the frontier ball state.frontier (with boundary
/// state.frontier_boundary). On return state.frontier is B_r and state.beta is β.
/// Checks B_r ∩ B_0 = ∂B_0 = ∂B_r, β ∩ Q_0 = B_0 and β ∪ Q_0 = Q_r; throws
/// Error(Verification) when one fails.
ExtensionReport extend_across_collapse(ExtensionState& state, const ExtensionOptions& options);

/// The blocks latest first: a collapse of the current product onto the current image.
PackedSteps chained_certificate(const ExtensionState& state);

/// Cells of the boundary of a pure cubical subcomplex.
CellSet cubical_boundary(const TreeProduct& T, const CellSet& cells);

struct EmbedOptions {
    ChoicePolicy policy = ChoicePolicy::Canonical;
    std::function<std::size_t(const std::vector<Cell>&)> pick;
    bool certify = true;
    std::uint64_t seed = 0x7ee;  ///< for randomized restarts of the local collapses
};

struct EmbedResult {
    CubulatedEmbedding embedding;
    /// Collapse of the whole tree product onto the image, in order.
    PackedSteps certificate;
    int total_steps = 0;
};

/// A collapse of K to a vertex picked to keep the images small. Each expansion (σ, τ)
/// makes the image of σ a fixed factor larger than the images of the other facets of τ,
/// so sizes multiply along chains of expansions. In reverse order: all vertices are
/// attached along a breadth-first tree from the root, then the cheapest available
/// expansion under that size model is taken. Every vertex is tried as root and the
/// cheapest run wins. Returns nullopt when the greedy build gets stuck.
std::optional<CollapseSequence> low_growth_collapse(const FacePoset& K);

/// Embeds a collapsible simplicial complex into a product of dim K trees by replaying
/// the collapse sequence backwards. `seq` must collapse K to a single vertex.
EmbedResult embed_collapsible(const FacePoset& K, const CollapseSequence& seq,
                              const EmbedOptions& options = {});

/// Replays `steps` on the full tree product and checks that exactly `image` survives.
/// Works on flat arrays (one byte and one counter per cell), so products of about 10^8
/// cells fit; larger ones are refused.
CollapseCheck verify_product_certificate(const TreeProduct& T, const PackedSteps& steps,
                                         const CellSet& image);
CollapseCheck verify_product_certificate(const TreeProduct& T, const CollapseSteps& steps,
                                         const CellSet& image);

}  // namespace treefold
