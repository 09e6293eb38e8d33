#pragma once

#include "treefold/complex_checks.hpp"
#include "treefold/isomorphism.hpp"
#include "treefold/poset.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace treefold {

/// Simplicial complex whose vertices carry colours from a palette.
struct ColoredComplex {
    FacePoset complex;
    std::vector<std::string> palette;            ///< sorted, unique
    std::map<std::string, std::string> colors;   ///< vertex label -> colour

    const std::string& color_of(const std::string& vertex) const;
    /// Per element: the sorted colours of its vertices joined by ','. Used as
    /// isomorphism labels so that matches preserve colours.
    std::vector<std::string> element_labels() const;
};

struct Verdict {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }
};

/// Every vertex has a palette colour and no edge is monochromatic.
Verdict check_coloring(const ColoredComplex& X);

struct FiwOptions {
    /// Also make S an induced subcomplex of the ball (every simplex of D spanned by
    /// boundary vertices lies in S). The tree extension step needs this.
    bool require_induced = false;
    /// Prefix for fresh interior vertex labels.
    std::string fresh_prefix = "i";
};

struct FiwResult {
    ColoredComplex ball;
    /// Maps element index of S to the element of ball.complex with the same id.
    Isomorphism boundary_witness;
    std::vector<std::string> interior_vertices;  ///< fresh labels, in creation order
};

/// Fills a C-coloured combinatorial (d-1)-sphere S with a C-coloured d-ball, #C >= d+1.
/// Interior vertices get fresh labels; boundary vertices keep theirs.
/// Throws Error(Input) when the hypotheses fail and Error(Budget) for d >= 3 without
/// an unused colour.
FiwResult fiw_ball(const ColoredComplex& S, const std::vector<std::string>& palette,
                   const FiwOptions& options = {});

struct BallVerdict {
    Recognition verdict = Recognition::Yes;
    std::string reason;
    bool accepted() const { return verdict == Recognition::Yes; }
};

/// Checks that D is a properly coloured combinatorial ball whose boundary is S up to
/// a colour-preserving isomorphism. For 3-balls using exactly four colours, also checks
/// that interior edge links are even cycles.
BallVerdict verify_colored_ball(const ColoredComplex& D, const ColoredComplex& S);

/// Interior edges of a 3-ball whose links are not even cycles (empty when all are even).
std::vector<std::string> odd_interior_edge_links(const FacePoset& D);

}  // namespace treefold
