#pragma once

#include "treefold/poset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace treefold {

/// Witness bijection: forward[i] is the image in the target of source element i.
struct Isomorphism {
    std::vector<int> forward;
};

enum class IsoVerdict { Isomorphic, NotIsomorphic, BudgetExhausted };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::NotIsomorphic;
    Isomorphism witness;  ///< filled when verdict == Isomorphic
    std::uint64_t nodes = 0;

    explicit operator bool() const { return verdict == IsoVerdict::Isomorphic; }
};

/// Backtracking search pruned by rank/degree colour refinement. Optional labels force
/// label-preserving maps (used for colour-preserving complex isomorphisms).
IsoResult is_isomorphic(const FacePoset& P, const FacePoset& Q, std::uint64_t budget = 5'000'000,
                        const std::vector<std::string>* labels_p = nullptr,
                        const std::vector<std::string>* labels_q = nullptr);

/// Checks that `witness` is a cover-preserving bijection in both directions.
bool check_isomorphism(const FacePoset& P, const FacePoset& Q, const Isomorphism& witness);

}  // namespace treefold
