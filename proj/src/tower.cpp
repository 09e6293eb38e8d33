#include "treefold/tower.hpp"

#include <cstdlib>

namespace treefold {

const TowerStage& GroupTower::stage(std::size_t k) const {
    if (k < prefix.size()) return prefix[k];
    if (period.empty()) throw Error(ErrorKind::Input, "stage beyond the end of a finite tower");
    return period[(k - prefix.size()) % period.size()];
}

const char* to_string(TowerVerdict v) {
    switch (v) {
        case TowerVerdict::Holds: return "holds";
        case TowerVerdict::Fails: return "fails";
        case TowerVerdict::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Lim1Verdict v) {
    switch (v) {
        case Lim1Verdict::Zero: return "zero";
        case Lim1Verdict::Nonzero: return "nonzero";
        case Lim1Verdict::Unknown: return "unknown";
    }
    return "?";
}

Verdict validate_tower(const GroupTower& t) {
    const std::size_t total = t.prefix.size() + t.period.size();
    if (total == 0) return {false, "tower has no stages"};
    for (std::size_t k = 0; k < total; ++k)
        if (!t.stage(k).group.canonical())
            return {false, "stage " + std::to_string(k) + " group is not in canonical form"};
    // Check every map once, including the wrap from the period back onto itself.
    const std::size_t last = t.finite() ? total - 1 : total;
    for (std::size_t k = 1; k <= last; ++k) {
        const auto& g = t.stage(k).group;
        const auto& prev = t.stage(k - 1).group;
        const IntMatrix& m = t.stage(k).map;
        const std::string where = "map into stage " + std::to_string(k - 1);
        if (m.rows() != prev.generator_count() || m.cols() != g.generator_count())
            return {false, where + " has the wrong shape"};
        for (int c = 0; c < m.cols(); ++c) {
            const std::int64_t tc = g.order_of(c);
            if (tc == 0) continue;
            for (int r = 0; r < m.rows(); ++r) {
                const std::int64_t tr = prev.order_of(r);
                const std::int64_t v = checked_mul(tc, m(r, c));
                if (tr == 0 ? v != 0 : v % tr != 0)
                    return {false, where + " is not well defined on a torsion generator"};
            }
        }
    }
    return {};
}

GroupTower multiplication_tower(std::int64_t m) {
    GroupTower t;
    t.period.push_back({FGAbelianGroup{1, {}}, IntMatrix::from_rows({{m}})});
    return t;
}

namespace {

IntMatrix free_block(const IntMatrix& m, const FGAbelianGroup& rows, const FGAbelianGroup& cols) {
    const int tr = static_cast<int>(rows.torsion.size()), tc = static_cast<int>(cols.torsion.size());
    return m.block(tr, tc, rows.rank, cols.rank);
}

}  // namespace

MLReport ml_check(const GroupTower& t) {
    if (auto v = validate_tower(t); !v) throw Error(ErrorKind::Input, "malformed tower: " + v.message);
    MLReport rep;
    if (t.finite()) {
        rep.verdict = TowerVerdict::Holds;
        rep.note = "finite tower: images stabilize at the last stage";
        return rep;
    }
    const std::size_t m0 = t.prefix.size(), p = t.period.size();
    try {
        // φ: G_{m0+p} -> G_{m0} on the free parts.
        const int r = t.stage(m0).group.rank;
        IntMatrix phi = IntMatrix::identity(r);
        for (std::size_t k = m0 + 1; k <= m0 + p; ++k)
            phi = phi * free_block(t.stage(k).map, t.stage(k - 1).group, t.stage(k).group);
        IntMatrix power = IntMatrix::identity(r);
        for (int i = 0; i < r; ++i) power = power * phi;
        Lattice now(power), next(power * phi);
        rep.core_rank = now.rank();
        auto index = now.index_of(next);
        if (!index) {
            rep.note = "eventual image did not settle after rank-many periods";
            return rep;
        }
        rep.period_index = *index;
        if (*index == 1) {
            rep.verdict = TowerVerdict::Holds;
            rep.note = "image chain is constant from period " + std::to_string(r);
        } else {
            rep.verdict = TowerVerdict::Fails;
            rep.note = "each period shrinks the image by index " + std::to_string(*index);
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Budget) throw;
        rep.verdict = TowerVerdict::Unknown;
        rep.note = e.what();
    }
    return rep;
}

Lim1Report lim1_vanishes(const GroupTower& t) {
    Lim1Report rep;
    rep.ml = ml_check(t);
    switch (rep.ml.verdict) {
        case TowerVerdict::Holds: rep.verdict = Lim1Verdict::Zero; break;
        case TowerVerdict::Fails: rep.verdict = Lim1Verdict::Nonzero; break;
        case TowerVerdict::Unknown: rep.verdict = Lim1Verdict::Unknown; break;
    }
    // Known value for the doubling tower; recorded, not computed.
    if (t.period.size() == 1 && t.period[0].group == FGAbelianGroup{1, {}} &&
        std::llabs(t.period[0].map(0, 0)) == 2)
        rep.note = "lim^1 of Z <-2- Z <-2- ... is Z_2/Z (2-adic integers modulo Z)";
    return rep;
}

}  // namespace treefold
