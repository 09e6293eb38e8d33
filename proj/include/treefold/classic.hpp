#pragma once

#include "treefold/colored.hpp"
#include "treefold/embedding.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace treefold {

/// K′ written as a subcomplex of S_0 * ... * S_n, where S_i is the set of i-simplices of K.
/// Vertices of K′ are the simplex ids of K, so the inclusion is the identity on labels.
struct JoinEmbedding {
    FacePoset complex;                              ///< K
    std::vector<std::vector<std::string>> factors;  ///< S_i, sorted
    FacePoset subdivision;                          ///< K′ = barycentric(K)
};

JoinEmbedding join_embedding(const FacePoset& K);

/// Materializes S_0 * ... * S_n. Throws Error(Budget) above `max_simplices`.
FacePoset join_complex(const JoinEmbedding& e, std::size_t max_simplices = std::size_t{1} << 20);

/// Checks that every vertex of K′ lies in exactly one factor, that no simplex of K′ uses
/// two vertices of the same factor, and that the simplices of K′ are exactly the chains of K.
Verdict verify_join_embedding(const JoinEmbedding& e);

struct TreeEmbedding {
    std::vector<std::vector<std::string>> factors;  ///< S_0 .. S_k
    CubulatedEmbedding embedding;
};

/// (L♭)^# inside the product of the stars (C*S_i)^#, i = 0..k. k < 0 means dim L.
/// Tree i has centre "o" and one leaf per i-simplex, named by its vertices joined with '+'.
TreeEmbedding standard_tree_embedding(const FacePoset& L, int k = -1);

/// The cone CL (apex "c", primed until unused) in the same product of k+1 stars.
TreeEmbedding cone_product_embedding(const FacePoset& L, int k = -1);

/// Simplicial cone over L with the given apex label.
FacePoset simplicial_cone(const FacePoset& L, const std::string& apex);

/// Exact rational with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);
    std::string str() const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
};

struct CubeCoordinates {
    int n = 0;  ///< dim K; points live in I^{2n+1}
    JoinEmbedding join;
    /// Vertex id of K′ -> 2n+1 coordinates in [0,1]. Coordinate 0 is the join parameter,
    /// coordinates 2i-1, 2i hold the star of S_i in a square.
    std::map<std::string, std::vector<Rational>> points;
    /// Simplices of K′ as lists of vertex ids; the map is linear on each.
    std::vector<std::vector<std::string>> simplices;
};

/// S_0 goes to distinct points of the join axis; each star CS_i sits in a square with its
/// centre in the middle and its leaves on the boundary. A simplex of K′ has at most one
/// vertex per S_i, so the map is linear on the simplices of S_0 * ... * S_n and injective.
CubeCoordinates cube_coordinates(const FacePoset& K);

}  // namespace treefold
