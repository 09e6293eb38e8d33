#pragma once

#include "treefold/isomorphism.hpp"
#include "treefold/poset.hpp"

#include <optional>

namespace treefold {

/// Induced poset on the strict upper bounds of `sigma`, re-ranked from zero.
/// Links in simplicial and cubical posets come out simplicial.
FacePoset link(const FacePoset& P, int sigma);
FacePoset link(const FacePoset& P, const std::string& sigma);

struct StarResult {
    SubComplex star;
    /// For cubical posets: st(q) matched against the cell's closure times the
    /// canonical subdivision of the dual cone over the link. Indices refer to
    /// star.as_poset() and `model` respectively.
    std::optional<FacePoset> model;
    std::optional<Isomorphism> factorization;
};

StarResult star(const FacePoset& P, int sigma);
StarResult star(const FacePoset& P, const std::string& sigma);

/// The closure ⌊sigma⌋ as a standalone poset.
FacePoset closure_of(const FacePoset& P, int sigma);

/// Simplicial join. Vertex labels are tagged "l:" / "r:" to keep the union disjoint.
FacePoset join(const FacePoset& P, const FacePoset& Q);

/// Every element of P placed below every element of Q; ids tagged "l:" / "r:".
FacePoset prejoin(const FacePoset& P, const FacePoset& Q);

/// Componentwise product, element ids "(p,q)".
FacePoset product(const FacePoset& P, const FacePoset& Q);

/// P with a new bottom element "0^".
FacePoset cone_star(const FacePoset& P);

/// Inverse of cone_star: removes the unique bottom element. Throws if there is none.
FacePoset coboundary(const FacePoset& Q);

/// Order complex: vertices are the elements of P, simplices its chains.
FacePoset barycentric(const FacePoset& P);

/// Poset of order intervals [a;b], a <= b, ordered by inclusion.
FacePoset interval_subdivision(const FacePoset& P);

/// Id used for the interval [a;b] by interval_subdivision.
std::string interval_id(const std::string& lo, const std::string& hi);

/// Id of the bottom added by cone_star.
inline constexpr const char* kConeBottom = "0^";

}  // namespace treefold
