#pragma once

#include "treefold/colored.hpp"
#include "treefold/integer_matrix.hpp"
#include "treefold/poset.hpp"

#include <map>
#include <string>
#include <vector>

namespace treefold {

/// Z^rank plus cyclic groups of the given orders, each >= 2 and dividing the next.
/// Presentation coordinates list the torsion generators first, then the free ones.
struct FGAbelianGroup {
    int rank = 0;
    std::vector<std::int64_t> torsion;

    /// Canonical form of Z^rank + sum of Z/orders[i] (orders of 0 count as free, 1 is dropped).
    static FGAbelianGroup from_orders(int rank, const std::vector<std::int64_t>& orders);

    int generator_count() const { return static_cast<int>(torsion.size()) + rank; }
    /// 0 for a free generator, else its order.
    std::int64_t order_of(int generator) const;
    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_finite() const { return rank == 0; }
    bool canonical() const;
    std::string str() const;
    friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

/// Orders label strings with digit runs compared as numbers ("s2" < "s10").
bool natural_less(const std::string& a, const std::string& b);

/// H^degree(K, L; Z) of a simplicial complex with an explicit presentation.
/// Simplices are oriented by the natural order of their vertex labels.
struct CohomologyGroup {
    int degree = 0;
    FGAbelianGroup group;
    std::vector<int> basis;  ///< simplices of K (not in L) indexing the cochains
    /// One cocycle per presentation generator, in the cochain basis.
    std::vector<std::vector<std::int64_t>> generators;

    /// Presentation coordinates of a cocycle (torsion entries reduced). Throws Error(Input)
    /// if the cochain is not a cocycle.
    std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& cocycle) const;

    // Kernel coordinates of a cochain, then the change of basis to the Smith generators.
    IntMatrix to_kernel;
    int kernel_offset = 0;
    IntMatrix kernel_to_smith;
    std::vector<int> smith_index;  ///< Smith coordinate of each presentation generator
};

/// `L` is a subcomplex of K given by simplex ids; empty means absolute cohomology.
/// `reduced` uses the augmented complex (only matters when L is empty).
CohomologyGroup cohomology(const FacePoset& K, int degree, const FacePoset& L = {}, bool reduced = false);

/// Vertex map between simplicial complexes; images of simplices must be simplices.
struct SimplicialMap {
    FacePoset source, target;
    std::map<std::string, std::string> vertices;
};

Verdict check_simplicial_map(const SimplicialMap& f);
SimplicialMap inclusion_map(const FacePoset& sub, const FacePoset& K);
/// g after f.
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

/// Matrix of H^degree(f): H(target, target_rel) -> H(source, source_rel), rows indexed by the
/// source presentation generators, columns by the target ones. Throws Error(Input) for bad
/// map data or when f does not send source_rel into target_rel.
IntMatrix induced_map(const SimplicialMap& f, int degree, const FacePoset& source_rel = {},
                      const FacePoset& target_rel = {});

/// Value of a cochain (in `h`'s basis) on a chain given as (simplex id, coefficient) pairs.
std::int64_t evaluate(const CohomologyGroup& h, const FacePoset& K, const std::vector<std::int64_t>& cochain,
                      const std::vector<std::pair<std::string, std::int64_t>>& chain);

}  // namespace treefold
