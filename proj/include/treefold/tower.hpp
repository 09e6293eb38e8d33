#pragma once

#include "treefold/cohomology.hpp"

#include <string>
#include <vector>

namespace treefold {

/// One stage of an inverse sequence: its group and the bonding map to the previous stage,
/// in presentation coordinates (rows: previous generators, columns: this stage's).
struct TowerStage {
    FGAbelianGroup group;
    IntMatrix map;  ///< ignored for stage 0
};

/// G_0 <- G_1 <- G_2 <- ... given by a finite prefix followed by a block that repeats forever.
/// An empty period means the tower stops after the prefix.
struct GroupTower {
    std::vector<TowerStage> prefix;
    std::vector<TowerStage> period;

    const TowerStage& stage(std::size_t k) const;
    bool finite() const { return period.empty(); }
};

/// Shapes, canonical groups, and maps well defined modulo torsion.
Verdict validate_tower(const GroupTower& t);

/// Z <-m- Z <-m- ...
GroupTower multiplication_tower(std::int64_t m);

enum class TowerVerdict { Holds, Fails, Unknown };
enum class Lim1Verdict { Zero, Nonzero, Unknown };
const char* to_string(TowerVerdict v);
const char* to_string(Lim1Verdict v);

struct MLReport {
    TowerVerdict verdict = TowerVerdict::Unknown;
    int core_rank = 0;  ///< rank of the eventual image of the free part
    /// [im φ^t : im φ^{t+1}] for t >= core dimension, φ the composite over one period.
    std::int64_t period_index = 1;
    std::string note;
};

/// Mittag-Leffler for the images im(G_{k+j} -> G_k). The images at any index are images of
/// those at the first periodic index, so only the period composite φ matters; torsion never
/// blocks stabilization, and on the free part the chain im φ^t is constant from t = rank on
/// exactly when the index of one step is 1. Unknown only on integer overflow.
MLReport ml_check(const GroupTower& t);

struct Lim1Report {
    Lim1Verdict verdict = Lim1Verdict::Unknown;
    MLReport ml;
    std::string note;
};

/// For towers of finitely generated groups lim^1 = 0 exactly when Mittag-Leffler holds.
Lim1Report lim1_vanishes(const GroupTower& t);

}  // namespace treefold
