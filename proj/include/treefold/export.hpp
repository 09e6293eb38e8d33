#pragma once

#include "treefold/embedding.hpp"

#include <array>
#include <string>
#include <vector>

namespace treefold {

/// Planar positions of a tree's vertices, indexed by vertex.
using TreeLayout = std::vector<std::array<double, 2>>;

/// Radial layout: the base vertex (or vertex 0) at the origin, depth as radius, and each
/// subtree given an angular wedge proportional to its number of leaves. Children are
/// visited in vertex order, so the layout is deterministic.
TreeLayout radial_layout(const Tree& t);

struct Geometry {
    std::vector<TreeLayout> layouts;              ///< one per tree
    std::vector<Cell> vertex_cells;               ///< product vertices of the listed cells
    std::vector<std::vector<double>> coordinates; ///< 2n numbers per vertex, planes concatenated
    /// Cells of positive dimension as vertex indices. Squares are in cyclic order; other
    /// cubes list their vertices with the first tree varying slowest.
    std::vector<std::vector<int>> cells;
    std::vector<Cell> cell_codes;
};

/// Coordinates for a set of cells in a tree product (all faces are included).
/// Throws Error(Input) on a cell that is not in the product.
Geometry export_coordinates(const TreeProduct& T, const CellSet& cells);
Geometry export_coordinates(const CubulatedEmbedding& e);

/// nOFF listing: dimension, counts, one coordinate row per vertex, one row per cell.
std::string to_off(const Geometry& g);

}  // namespace treefold
