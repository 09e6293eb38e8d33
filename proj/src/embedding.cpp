#include "treefold/embedding.hpp"

#include "treefold/complex_checks.hpp"

#include <algorithm>

namespace treefold {

const CellSet& CubulatedEmbedding::image_of(const std::string& simplex) const {
    auto it = images.find(simplex);
    if (it == images.end()) throw Error(ErrorKind::Input, "no image recorded for " + simplex);
    return it->second;
}

Cell CubulatedEmbedding::vertex_image(const std::string& vertex) const {
    const CellSet& im = image_of(vertex);
    if (im.size() != 1) throw Error(ErrorKind::Verification, "vertex image of " + vertex + " is not one cell");
    return *im.begin();
}

CellSet CubulatedEmbedding::total_image() const {
    CellSet all;
    for (const auto& [id, cells] : images) all.insert(cells.begin(), cells.end());
    return all;
}

namespace {

EmbeddingVerdict fail(std::string check, std::string message) {
    EmbeddingVerdict v;
    v.ok = false;
    v.check = std::move(check);
    v.message = std::move(message);
    return v;
}

// Local manifold-with-boundary checks used above dimension 3.
bool local_ball_checks(const FacePoset& P, int d) {
    if (P.dimension() != d || !is_pure(P) || !is_connected(P)) return false;
    for (int e = 0; e < static_cast<int>(P.size()); ++e)
        if (P.rank(e) == d - 1) {
            auto n = P.upper_covers(e).size();
            if (n < 1 || n > 2) return false;
        }
    if (P.euler_characteristic() != 1) return false;
    FacePoset bd = boundary_of(P);
    return bd.euler_characteristic() == (d % 2 == 1 ? 2 : 0);
}

}  // namespace

EmbeddingVerdict verify_cubulated_embedding(const CubulatedEmbedding& emb) {
    EmbeddingVerdict verdict;
    const FacePoset& K = emb.source;
    const TreeProduct& T = emb.target;
    const int n = static_cast<int>(K.size());
    if (K.kind() != PosetKind::Simplicial && !K.empty())
        return fail("source", "source complex is not simplicial");
    if (static_cast<int>(emb.images.size()) != n)
        return fail("images", "image table does not match the simplices of the source");

    std::vector<const CellSet*> image(n);
    for (int s = 0; s < n; ++s) {
        auto it = emb.images.find(K.id(s));
        if (it == emb.images.end()) return fail("images", "missing image for " + K.id(s));
        image[s] = &it->second;
        for (const auto& c : *image[s]) {
            if (!T.valid_cell(c)) return fail("cells", "invalid cell in image of " + K.id(s));
            for (const auto& f : T.faces(c))
                if (!image[s]->count(f))
                    return fail("down-closed", "image of " + K.id(s) + " is not down-closed at " + T.cell_id(c));
        }
    }

    // Vertices go to distinct 0-cells.
    CellSet vertex_cells;
    for (int v : K.minimal_elements()) {
        if (image[v]->size() != 1 || TreeProduct::dim(*image[v]->begin()) != 0)
            return fail("vertex", "vertex " + K.id(v) + " does not map to a single 0-cell");
        if (!vertex_cells.insert(*image[v]->begin()).second)
            return fail("injectivity", "two vertices share the cell " + T.cell_id(*image[v]->begin()));
    }

    // Faces map into the image of the simplex.
    for (int s = 0; s < n; ++s)
        for (int f : K.lower_covers(s))
            for (const auto& c : *image[f])
                if (!image[s]->count(c))
                    return fail("faces", "image of " + K.id(f) + " is not inside the image of " + K.id(s));

    // Every cell has a unique minimal carrier simplex and lies in exactly the images of
    // the simplices above it; equivalently image(a) ∩ image(b) = image(a ∩ b).
    std::map<Cell, std::vector<int>> carriers;
    for (int s = 0; s < n; ++s)
        for (const auto& c : *image[s]) carriers[c].push_back(s);
    for (auto& [c, list] : carriers) {
        std::vector<int> minimal;
        for (int s : list) {
            bool has_lower = false;
            for (int f : K.lower_covers(s))
                if (std::binary_search(list.begin(), list.end(), f)) has_lower = true;
            if (!has_lower) minimal.push_back(s);
        }
        if (minimal.size() != 1)
            return fail("intersection", "cell " + T.cell_id(c) + " has several minimal carriers");
        if (K.up_set(minimal.front()) != list)
            return fail("intersection", "cell " + T.cell_id(c) + " is missing from the image of a coface of " +
                                            K.id(minimal.front()));
    }

    for (int s = 0; s < n; ++s) {
        const int d = K.rank(s);
        if (d == 0) continue;
        FacePoset P = T.poset_of(*image[s]);
        if (P.dimension() != d) return fail("dimension", "image of " + K.id(s) + " has the wrong dimension");
        // The boundary of the image is the union of the images of the facets.
        CellSet bd_expected;
        for (int f : K.lower_covers(s)) bd_expected.insert(image[f]->begin(), image[f]->end());
        std::vector<std::string> bd_ids;
        for (int e : boundary_elements(P)) bd_ids.push_back(P.id(e));
        std::vector<std::string> exp_ids;
        for (const auto& c : bd_expected) exp_ids.push_back(T.cell_id(c));
        std::sort(bd_ids.begin(), bd_ids.end());
        std::sort(exp_ids.begin(), exp_ids.end());
        if (bd_ids != exp_ids)
            return fail("boundary", "boundary of the image of " + K.id(s) + " is not the image of its boundary");
        if (d <= 3) {
            auto r = recognize_ball(P, d);
            if (!r.yes()) return fail("ball", "image of " + K.id(s) + " is not a ball: " + r.reason);
        } else {
            if (!local_ball_checks(P, d))
                return fail("ball", "image of " + K.id(s) + " fails the local manifold checks");
            ++verdict.balls_checked_locally;
        }
    }
    return verdict;
}

}  // namespace treefold
