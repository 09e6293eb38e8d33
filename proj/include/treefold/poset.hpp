#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treefold {

/// Error categories map onto the CLI exit codes (2 input, 3 verification, 4 budget).
enum class ErrorKind { Input, Verification, Budget, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

enum class PosetKind { Simplicial, Cubical, General };

const char* to_string(PosetKind kind);

/// A finite poset presenting a regular cell complex.
///
/// Elements carry canonical string identifiers and a rank equal to the length of the
/// longest chain below them. Only cover relations are stored; the full order is
/// recovered by walking covers. Instances are immutable after construction.
class FacePoset {
public:
    struct Element {
        std::string id;
        int rank = 0;
    };

    FacePoset() = default;

    /// Builds from element ids and cover pairs (lower, upper) given as indices.
    /// Ranks are recomputed from the covers. Throws on cycles, duplicate ids, or when
    /// the declared kind's shape invariants fail.
    FacePoset(std::vector<std::string> ids, const std::vector<std::pair<int, int>>& covers,
              PosetKind kind);

    /// Same as above, but classifies the kind from the shape (simplicial before cubical).
    static FacePoset classified(std::vector<std::string> ids,
                                const std::vector<std::pair<int, int>>& covers);

    /// Builds from an arbitrary strict order relation; transitive pairs are dropped.
    static FacePoset from_order(std::vector<std::string> ids,
                                const std::vector<std::pair<int, int>>& less_than, PosetKind kind);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    PosetKind kind() const noexcept { return kind_; }

    const std::string& id(int e) const { return elements_[e].id; }
    int rank(int e) const { return elements_[e].rank; }
    int dimension() const;  ///< max rank, -1 when empty
    const std::vector<int>& lower_covers(int e) const { return lower_[e]; }
    const std::vector<int>& upper_covers(int e) const { return upper_[e]; }

    std::optional<int> find(const std::string& id) const;
    int index_of(const std::string& id) const;  ///< throws Error(Input) if absent
    bool contains(const std::string& id) const { return find(id).has_value(); }

    bool leq(int a, int b) const;
    std::vector<int> down_set(int e) const;  ///< sorted, includes e
    std::vector<int> up_set(int e) const;    ///< sorted, includes e
    /// Minimal elements below e (for simplicial/cubical posets: the vertices of e).
    std::vector<int> vertices_of(int e) const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// Number of elements of each rank (index = rank).
    std::vector<std::size_t> rank_counts() const;
    long long euler_characteristic() const;

    /// Induced subposet on the given elements (covers recomputed from the order).
    FacePoset induced(const std::vector<int>& elements, PosetKind kind) const;
    /// Induced subposet on a down-closed subset; covers are restricted directly.
    FacePoset restrict_down_closed(const std::vector<int>& elements) const;

    bool is_down_closed(const std::vector<int>& elements) const;
    std::vector<int> down_closure(const std::vector<int>& elements) const;

    bool has_simplicial_shape() const;
    bool has_cubical_shape() const;

    std::vector<std::pair<int, int>> cover_pairs() const;

    friend bool operator==(const FacePoset& a, const FacePoset& b);

private:
    void build(std::vector<std::string> ids, const std::vector<std::pair<int, int>>& covers);

    std::vector<Element> elements_;
    std::vector<std::vector<int>> lower_;
    std::vector<std::vector<int>> upper_;
    std::unordered_map<std::string, int> index_;
    PosetKind kind_ = PosetKind::General;
};

/// A down-closed subset of an ambient poset, stored as sorted element indices.
class SubComplex {
public:
    SubComplex(const FacePoset& ambient, std::vector<int> elements);

    const FacePoset& ambient() const { return *ambient_; }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int e) const;
    FacePoset as_poset() const { return ambient_->restrict_down_closed(elements_); }

private:
    const FacePoset* ambient_;
    std::vector<int> elements_;
};

// --- simplicial complexes -------------------------------------------------------------

using Simplex = std::vector<std::string>;  ///< sorted vertex labels

/// Canonical id of a simplex: the label itself for a vertex, "{a,b,...}" otherwise.
std::string simplex_id(const Simplex& vertices);

/// Simplicial complex generated by the given facets (down-closure computed).
FacePoset make_simplicial(const std::vector<Simplex>& facets);

/// All simplices of a simplicial poset, in element order.
std::vector<Simplex> simplices_of(const FacePoset& complex);
Simplex vertex_labels(const FacePoset& complex, int e);
std::vector<Simplex> facets_of(const FacePoset& complex);

/// Full n-simplex on vertices "0".."n" and its boundary.
FacePoset full_simplex(int n);
FacePoset simplex_boundary(int n);

}  // namespace treefold
