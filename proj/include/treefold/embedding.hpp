#pragma once

#include "treefold/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace treefold {

/// A simplicial complex K mapped into a tree product so that every simplex goes to a
/// subcomplex (its image) that is a cubical ball of the same dimension.
struct CubulatedEmbedding {
    FacePoset source;
    TreeProduct target;
    std::map<std::string, CellSet> images;  ///< simplex id -> down-closed cell set

    const CellSet& image_of(const std::string& simplex) const;
    Cell vertex_image(const std::string& vertex) const;
    CellSet total_image() const;
};

struct EmbeddingVerdict {
    bool ok = true;
    std::string check;    ///< name of the failing check
    std::string message;
    /// Images above dimension 3 only get the local manifold checks, not full ball recognition.
    int balls_checked_locally = 0;
    explicit operator bool() const { return ok; }
};

EmbeddingVerdict verify_cubulated_embedding(const CubulatedEmbedding& e);

}  // namespace treefold
