#pragma once

#include "treefold/tower.hpp"

#include <string>
#include <vector>

namespace treefold {

/// X_s = Tel(S^1_1 -2-> ... -2-> S^1_s -> pt) with F_j = Tel(S^1_1 -> ... -> S^1_j) inside it.
/// S^1_j is a 2^(s-j+2)-gon on the vertices "s<j>.<k>" so the doubling maps are simplicial;
/// the cone point is "c".
struct TelescopeComplex {
    int stages = 0;
    FacePoset X;
    std::vector<FacePoset> F;                         ///< F[j-1] = F_j
    std::vector<std::vector<std::string>> circles;    ///< vertices of S^1_j in cyclic order
};

/// Throws Error(Input) for stages < 1 and Error(Budget) when X would exceed max_simplices.
TelescopeComplex build_telescope(int stages, std::size_t max_simplices = 200000);

/// The cyclic 1-chain of S^1_j (counterclockwise, increasing k) in simplex ids and signs.
std::vector<std::pair<std::string, std::int64_t>> circle_chain(const std::vector<std::string>& circle);

struct ObstructionReport {
    int k = 0;
    int stages = 0;
    int degree = 0;  ///< 2 + k
    std::vector<FGAbelianGroup> h1;            ///< H^1(F_j)
    std::vector<std::int64_t> h1_maps;         ///< H^1(F_{j+1}) -> H^1(F_j), generators oriented by S^1_j
    std::vector<FGAbelianGroup> relative;      ///< H^2(X_s, F_j)
    std::vector<std::int64_t> relative_maps;   ///< H^2(X_s, F_{j+1}) -> H^2(X_s, F_j)
    GroupTower tower;                          ///< degree-shifted tower, declared periodic
    Lim1Report lim1;
    bool nonzero = false;
    std::string summary;
};

/// Computes the H^1 tower of the F_j and the tower H^2(X_s, F_j), checks both are the doubling
/// tower, moves it to degree 2 + k (the product with I^k does not change the groups or maps),
/// and decides lim^1. Throws Error(Internal) if a computed map is not ±2.
ObstructionReport skliarienko_obstruction(int k, int stages);

}  // namespace treefold
