#pragma once

#include "treefold/collapse.hpp"
#include "treefold/colored.hpp"
#include "treefold/poset.hpp"

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace treefold {

/// A finite tree that only grows by attaching leaves.
///
/// Faces are addressed by codes: vertex v is 2v, edge e is 2e+1. Because V = E + 1 the
/// codes of a tree are exactly 0 .. V+E-1, and they never change as the tree grows.
class Tree {
public:
    Tree() = default;
    static Tree point(const std::string& name);
    /// Validates connectivity and acyclicity. All given vertices get stage 0 and no parent.
    static Tree from_edges(const std::vector<std::string>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           std::optional<std::string> base = std::nullopt);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return vertex_count() + edge_count(); }

    const std::string& vertex_name(int v) const { return names_[v]; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    int other_end(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }
    int stage(int v) const { return stage_[v]; }
    int parent(int v) const { return parent_[v]; }
    std::optional<int> base() const { return base_; }
    std::optional<int> find_vertex(const std::string& name) const;

    /// Attaches a new leaf at `at`; returns the new edge index.
    int add_leaf(int at, const std::string& name, int stage);

    std::string face_id(int code) const;
    std::optional<int> find_face(const std::string& id) const;

    /// v equals w or lies on the parent chain above w.
    bool is_ancestor(int v, int w) const;

private:
    void add_vertex(const std::string& name, int stage, int parent);

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> stage_, parent_;
    std::vector<std::vector<int>> incident_;
    std::unordered_map<std::string, int> index_;
    std::optional<int> base_;
};

inline bool is_vertex_code(int code) { return code % 2 == 0; }

/// A cell of a tree product: one face code per factor.
using Cell = std::vector<int>;
using CellSet = std::set<Cell>;

struct TreeProduct {
    std::vector<Tree> trees;

    int size() const { return static_cast<int>(trees.size()); }
    std::size_t cell_count() const;
    static int dim(const Cell& c);
    std::vector<Cell> faces(const Cell& c) const;    ///< lower covers
    std::vector<Cell> cofaces(const Cell& c) const;  ///< upper covers
    std::string cell_id(const Cell& c) const;
    std::vector<std::string> cell_face_ids(const Cell& c) const;
    Cell parse_cell(const std::vector<std::string>& face_ids) const;  ///< throws Error(Input)
    bool valid_cell(const Cell& c) const;

    /// Face poset on a down-closed set of cells (kind cubical). Throws when not down-closed.
    FacePoset poset_of(const CellSet& cells) const;

    /// The whole product as a cell graph; cell index is the mixed-radix number of the codes.
    CellGraph full_graph() const;
    std::size_t flat_index(const Cell& c) const;
};

/// lk(q, T) for the whole product: vertices are (i, edge at q_i) labelled "i/edge-id" and
/// coloured by the tree index i; palette is { i : q_i is a vertex }.
ColoredComplex induced_link_coloring(const TreeProduct& T, const Cell& q);

/// Same link, restricted to the cells above q that lie in `sub`.
ColoredComplex induced_link_coloring(const TreeProduct& T, const Cell& q, const CellSet& sub);

/// Down-closure of a set of cells.
CellSet down_closure(const TreeProduct& T, const CellSet& cells);

}  // namespace treefold
