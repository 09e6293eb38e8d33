#include "treefold/fixtures.hpp"

namespace treefold {

FacePoset dunce_hat() {
    const int tri[17][3] = {{1, 2, 4}, {1, 2, 5}, {1, 2, 8}, {1, 3, 6}, {1, 3, 7}, {1, 3, 8},
                            {1, 4, 5}, {1, 6, 7}, {2, 3, 4}, {2, 3, 6}, {2, 3, 7}, {2, 5, 7},
                            {2, 6, 8}, {3, 4, 8}, {4, 5, 8}, {5, 6, 7}, {5, 6, 8}};
    std::vector<Simplex> f;
    for (auto& t : tri) f.push_back({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
    return make_simplicial(f);
}

FacePoset polygon(int n, const std::string& prefix) {
    if (n < 3) throw Error(ErrorKind::Input, "a polygon needs at least three vertices");
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back({prefix + std::to_string(i), prefix + std::to_string((i + 1) % n)});
    return make_simplicial(edges);
}

ExtensionState remark_e2_state() {
    ExtensionState st;
    st.product.trees.push_back(Tree::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
    st.product.trees.push_back(Tree::point("p"));
    const TreeProduct& T = st.product;
    for (int x = 0; x < T.trees[0].face_count(); ++x) st.image.insert({x, 0});
    st.frontier = st.image;
    st.frontier_boundary = {T.parse_cell({"a", "p"}), T.parse_cell({"c", "p"})};
    return st;
}

}  // namespace treefold
