#pragma once

#include "json.hpp"
#include "treefold/colored.hpp"
#include "treefold/extension.hpp"
#include "treefold/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treefold {

using Json = nlohmann::ordered_json;

/// Why an input file was rejected. All three are Error(Input); the CLI maps them to
/// separate exit codes.
enum class ParseFailure { Schema, Structure, Coloring };

class ParseError : public Error {
public:
    ParseError(ParseFailure f, const std::string& what) : Error(ErrorKind::Input, what), failure_(f) {}
    ParseFailure failure() const noexcept { return failure_; }

private:
    ParseFailure failure_;
};

/// Two-space indented with a trailing newline; the form all files are written in.
std::string dump_json(const Json& j);
/// Reads a file, or parses the argument itself when it starts with '{' or '['.
Json read_json(const std::string& path_or_inline);
void write_file(const std::string& path, const std::string& text);  ///< via a temporary and rename

/// {"kind": "simplicial"|"cubical", "vertices": [..], "facets": [[..]]}. Cubical facets list
/// the 2^d vertices of a cube in binary order (first axis slowest); cube ids are
/// "[v,w,...]" over the sorted vertex labels.
Json complex_to_json(const FacePoset& K);
FacePoset complex_from_json(const Json& j);
FacePoset parse_complex(const std::string& path_or_inline);

/// {"vertices": [..], "edges": [[a, b]], "base": name?}; vertex and edge order are kept,
/// so face codes survive the round trip.
Json tree_to_json(const Tree& t);
Tree tree_from_json(const Json& j);

/// Complex format plus {"palette": [..], "colors": {vertex: colour}}.
Json colored_to_json(const ColoredComplex& c);
ColoredComplex colored_from_json(const Json& j);

/// A complex reference is either a name (such as "product" or "image") or an inline complex.
struct CollapseCertificate {
    Json start;
    std::vector<std::pair<std::string, std::string>> steps;
    Json final;
};
Json certificate_to_json(const CollapseCertificate& c);
CollapseCertificate certificate_from_json(const Json& j);

/// {"source": complex, "trees": [tree], "vertex_images": {v: [face per tree]},
///  "simplex_images": {simplex: [[face per tree]]}, "certificate": {...}?}. Product
/// cells are written as arrays of face ids; the certificate starts at "product" and
/// ends at "image".
Json embedding_to_json(const CubulatedEmbedding& e, const PackedSteps* certificate);
struct LoadedEmbedding {
    CubulatedEmbedding embedding;
    std::optional<PackedSteps> certificate;
};
LoadedEmbedding embedding_from_json(const Json& j);

/// {"prefix": [{"rank": n, "torsion": [..], "map": [[..]]}], "period": [..]}. The map of
/// the very first stage is written as [].
Json tower_to_json(const GroupTower& t);
GroupTower tower_from_json(const Json& j);

/// Built-in fixtures: point, simplex<N>, sphere<N> (boundary of simplex<N+1>), path<N>,
/// disk<N> (fan of N triangles), ball3, dunce-hat, remark-e2, kks-theta, X<s>, X<s>-F<j>,
/// cone-<fixture>. Throws Error(Input) for unknown names.
FacePoset fixture(const std::string& name);
/// One representative name per family.
std::vector<std::string> fixture_names();

}  // namespace treefold
