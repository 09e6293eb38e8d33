#pragma once

#include "treefold/poset.hpp"

#include <string>
#include <vector>

namespace treefold {

enum class Recognition { Yes, No, Unverifiable };

struct RecognitionResult {
    Recognition verdict = Recognition::Yes;
    std::string reason;

    bool yes() const { return verdict == Recognition::Yes; }
};

/// Every maximal element has rank dimension().
bool is_pure(const FacePoset& P);

/// Connected as a cell complex (vertices joined through edges).
bool is_connected(const FacePoset& P);

/// Codimension-one cells with exactly one coface, closed downwards. P should be pure.
std::vector<int> boundary_elements(const FacePoset& P);
FacePoset boundary_of(const FacePoset& P);

/// Combinatorial d-sphere recognition for regular complexes, d <= 2
/// (d = -1 is the empty complex). Higher d is Unverifiable.
RecognitionResult recognize_sphere(const FacePoset& P, int d);

/// Combinatorial d-ball recognition for regular complexes, d <= 3. Dimension 3 uses a
/// collapse certificate together with the manifold checks.
RecognitionResult recognize_ball(const FacePoset& P, int d);

}  // namespace treefold
