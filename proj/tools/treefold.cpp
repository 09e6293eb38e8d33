// treefold: command-line front end. Every command prints a JSON report (or a flat text
// summary with --format text); artifacts go to --out when given and into the report otherwise.
//
// Exit codes: 0 ok, 1 internal error, 2 input or schema error, 3 verification failure,
// 4 budget exhausted or no result, 5 structurally invalid input, 6 bad colouring.

#include "CLI11.hpp"
#include "treefold/classic.hpp"
#include "treefold/cohomology.hpp"
#include "treefold/collapse.hpp"
#include "treefold/colored.hpp"
#include "treefold/embedding.hpp"
#include "treefold/export.hpp"
#include "treefold/extension.hpp"
#include "treefold/fixtures.hpp"
#include "treefold/io.hpp"
#include "treefold/telescope.hpp"
#include "treefold/tower.hpp"

#include <cstdlib>
#include <iostream>
#include <set>

using namespace treefold;

namespace {

enum Exit { Ok = 0, Internal = 1, BadInput = 2, VerifyFailed = 3, NoResult = 4, BadStructure = 5, BadColoring = 6 };

struct Globals {
    std::uint64_t seed = 0x5eed;
    bool verify = false;
    std::string format = "json";
};

struct Source {
    std::string input;
    std::string fixture;
};

void add_source(CLI::App* app, Source& s) {
    auto* in = app->add_option("--input,-i", s.input, "complex JSON file or inline JSON");
    auto* fx = app->add_option("--fixture", s.fixture, "built-in fixture name");
    in->excludes(fx);
}

FacePoset load(const Source& s) {
    if (!s.fixture.empty()) return fixture(s.fixture);
    if (s.input.empty()) throw Error(ErrorKind::Input, "give --input or --fixture");
    return parse_complex(s.input);
}

std::uint64_t budget_from_env() {
    const char* b = std::getenv("TREEFOLD_BUDGET");
    if (!b || !*b) return CollapseSearchOptions{}.budget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(b, &end, 10);
    if (*end != '\0' || v == 0) throw Error(ErrorKind::Input, "TREEFOLD_BUDGET must be a positive integer");
    return v;
}

void print_text(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
        return;
    }
    std::string d = j.dump();
    if (!prefix.empty() && d.size() > 400) {
        os << prefix << ": <" << j.size() << " entries; use --out or --format json>\n";
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << d << "\n";
    }
}

void emit(const Globals& g, const Json& report) {
    if (g.format == "text")
        print_text(report, "", std::cout);
    else
        std::cout << dump_json(report);
}

// Writes the artifact to `out`, or stores it in the report.
void deliver(Json& report, const std::string& key, const Json& artifact, const std::string& out) {
    if (out.empty()) {
        report[key] = artifact;
    } else {
        write_file(out, dump_json(artifact));
        report["out"] = out;
    }
}

Json shape(const FacePoset& K) {
    Json j;
    j["kind"] = to_string(K.kind());
    j["dimension"] = K.dimension();
    j["vertices"] = K.minimal_elements().size();
    j["cells"] = K.size();
    return j;
}

Json cell_json(const TreeProduct& T, const Cell& c) {
    Json a = Json::array();
    for (const auto& f : T.cell_face_ids(c)) a.push_back(f);
    return a;
}

Json packed_steps_json(const TreeProduct& T, const PackedSteps& steps) {
    Json s = Json::array();
    const int n = T.size();
    for (const auto& [a, b] : steps)
        s.push_back(Json::array({cell_json(T, unpack_cell(a, n)), cell_json(T, unpack_cell(b, n))}));
    return s;
}

[[noreturn]] void fail_verification(const std::string& what) { throw Error(ErrorKind::Verification, what); }

void check_embedding(const CubulatedEmbedding& e, const PackedSteps* cert, Json& report) {
    auto v = verify_cubulated_embedding(e);
    report["verified"] = v.ok;
    if (!v.ok) fail_verification(v.check + ": " + v.message);
    if (v.balls_checked_locally > 0) report["balls_checked_locally"] = v.balls_checked_locally;
    if (cert) {
        auto c = verify_product_certificate(e.target, *cert, e.total_image());
        report["certificate_verified"] = c.ok;
        if (!c.ok) fail_verification("certificate: " + c.message);
    }
}

Json tree_summary(const TreeProduct& T) {
    Json a = Json::array();
    for (const auto& t : T.trees) a.push_back(Json{{"vertices", t.vertex_count()}, {"edges", t.edge_count()}});
    return a;
}

// ---- embed ----------------------------------------------------------------

struct EmbedArgs {
    Source src;
    std::string policy = "canonical";
    std::string out;
    std::string certificate_out;
    bool no_certificate = false;
    int k = -1;
};

int embed_collapsible_cmd(const Globals& g, const EmbedArgs& a) {
    FacePoset K = load(a.src);
    Json report;
    report["command"] = "embed collapsible";
    report["source"] = shape(K);

    std::optional<CollapseSequence> seq = low_growth_collapse(K);
    report["collapse_order"] = seq ? "low-growth" : "search";
    if (!seq) {
        CollapseSearchOptions so;
        so.budget = budget_from_env();
        so.seed = g.seed;
        auto r = find_collapse_sequence(K, so);
        if (r.verdict != CollapseVerdict::Collapsible)
            throw Error(ErrorKind::Budget, std::string("no collapse sequence: ") + to_string(r.verdict) +
                                               (r.note.empty() ? "" : " (" + r.note + ")"));
        seq = std::move(r.sequence);
    }
    EmbedOptions eo;
    eo.policy = parse_policy(a.policy);
    eo.certify = !a.no_certificate;
    eo.seed = g.seed;
    EmbedResult r = embed_collapsible(K, *seq, eo);
    const CubulatedEmbedding& e = r.embedding;
    const PackedSteps* cert = eo.certify ? &r.certificate : nullptr;

    report["policy"] = to_string(eo.policy);
    report["trees"] = tree_summary(e.target);
    report["image_cells"] = e.total_image().size();
    if (cert) report["certificate_steps"] = cert->size();
    if (g.verify) check_embedding(e, cert, report);

    if (!a.certificate_out.empty()) {
        if (!cert) throw Error(ErrorKind::Input, "--certificate needs the certificate to be built");
        Json c;
        c["start"] = "product";
        c["steps"] = packed_steps_json(e.target, *cert);
        c["final"] = "image";
        write_file(a.certificate_out, dump_json(c));
        report["certificate_out"] = a.certificate_out;
    }
    deliver(report, "embedding", embedding_to_json(e, cert), a.out);
    emit(g, report);
    return Ok;
}

int embed_tree_cmd(const Globals& g, const EmbedArgs& a, bool cone) {
    FacePoset K = load(a.src);
    TreeEmbedding te = cone ? cone_product_embedding(K, a.k) : standard_tree_embedding(K, a.k);
    Json report;
    report["command"] = cone ? "embed cone" : "embed standard";
    report["source"] = shape(K);
    report["trees"] = tree_summary(te.embedding.target);
    report["image_cells"] = te.embedding.total_image().size();
    if (g.verify) check_embedding(te.embedding, nullptr, report);
    Json art = embedding_to_json(te.embedding, nullptr);
    art["factors"] = te.factors;
    deliver(report, "embedding", art, a.out);
    emit(g, report);
    return Ok;
}

int embed_join_cmd(const Globals& g, const EmbedArgs& a) {
    FacePoset K = load(a.src);
    JoinEmbedding je = join_embedding(K);
    Json report;
    report["command"] = "embed join";
    report["source"] = shape(K);
    report["factor_sizes"] = Json::array();
    for (const auto& f : je.factors) report["factor_sizes"].push_back(f.size());
    report["subdivision"] = shape(je.subdivision);
    if (g.verify) {
        auto v = verify_join_embedding(je);
        report["verified"] = v.ok;
        if (!v.ok) fail_verification(v.message);
    }
    Json art;
    art["complex"] = complex_to_json(je.complex);
    art["factors"] = je.factors;
    art["subdivision"] = complex_to_json(je.subdivision);
    deliver(report, "join", art, a.out);
    emit(g, report);
    return Ok;
}

int embed_cube_cmd(const Globals& g, const EmbedArgs& a) {
    FacePoset K = load(a.src);
    CubeCoordinates cc = cube_coordinates(K);
    Json report;
    report["command"] = "embed cube";
    report["source"] = shape(K);
    report["ambient_dimension"] = 2 * cc.n + 1;
    report["points"] = cc.points.size();
    report["simplices"] = cc.simplices.size();
    if (g.verify) {
        // Distinct vertices inside the cube; injectivity on simplices follows from the join structure.
        std::set<std::vector<Rational>> seen;
        for (const auto& [v, p] : cc.points) {
            if (static_cast<int>(p.size()) != 2 * cc.n + 1) fail_verification("wrong coordinate count at " + v);
            for (const auto& x : p)
                if (x < Rational(0) || Rational(1) < x) fail_verification("coordinate outside [0,1] at " + v);
            if (!seen.insert(p).second) fail_verification("two vertices share the point of " + v);
        }
        auto jv = verify_join_embedding(cc.join);
        if (!jv.ok) fail_verification(jv.message);
        report["verified"] = true;
    }
    Json art;
    art["n"] = cc.n;
    Json pts = Json::object();
    for (const auto& [v, p] : cc.points) {
        Json row = Json::array();
        for (const auto& x : p) row.push_back(x.str());
        pts[v] = row;
    }
    art["points"] = pts;
    art["simplices"] = cc.simplices;
    deliver(report, "coordinates", art, a.out);
    emit(g, report);
    return Ok;
}

// ---- collapse ---------------------------------------------------------------

int collapse_find_cmd(const Globals& g, const Source& src, const std::string& out) {
    FacePoset K = load(src);
    CollapseSearchOptions so;
    so.budget = budget_from_env();
    so.seed = g.seed;
    auto r = find_collapse_sequence(K, so);
    Json report;
    report["command"] = "collapse find";
    report["source"] = shape(K);
    report["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) report["note"] = r.note;
    if (r.verdict != CollapseVerdict::Collapsible) {
        if (r.verdict == CollapseVerdict::NoFreeFaces && r.note.empty()) report["note"] = "no free faces";
        emit(g, report);
        std::cerr << "treefold: " << report.value("note", std::string(to_string(r.verdict))) << "\n";
        return NoResult;
    }
    std::set<std::string> removed;
    for (const auto& [s, t] : r.sequence->steps) removed.insert(s), removed.insert(t);
    std::string last;
    for (int v : K.minimal_elements())
        if (!removed.count(K.id(v))) last = K.id(v);
    FacePoset point = make_simplicial({{last}});
    report["steps"] = r.sequence->steps.size();
    if (g.verify) {
        auto c = verify_collapse_sequence(K, *r.sequence, &point);
        report["verified"] = c.ok;
        if (!c.ok) fail_verification(c.message);
    }
    CollapseCertificate cert{complex_to_json(K), r.sequence->steps, complex_to_json(point)};
    deliver(report, "certificate", certificate_to_json(cert), out);
    emit(g, report);
    return Ok;
}

// ---- verify -----------------------------------------------------------------

int verify_embedding_cmd(const Globals& g, const std::string& file) {
    Json j = read_json(file);
    Json report;
    report["command"] = "verify embedding";
    report["file"] = file;
    LoadedEmbedding le;
    try {
        le = embedding_from_json(j);
    } catch (const ParseError& e) {
        // A well-formed file whose contents contradict themselves failed verification.
        if (e.failure() != ParseFailure::Structure) throw;
        fail_verification(e.what());
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Input) throw;
        fail_verification(e.what());
    }
    report["source"] = shape(le.embedding.source);
    report["trees"] = tree_summary(le.embedding.target);
    report["has_certificate"] = le.certificate.has_value();
    check_embedding(le.embedding, le.certificate ? &*le.certificate : nullptr, report);
    emit(g, report);
    return Ok;
}

int verify_collapse_cmd(const Globals& g, const std::string& file) {
    CollapseCertificate c = certificate_from_json(read_json(file));
    if (!c.start.is_object() || !c.final.is_object())
        throw Error(ErrorKind::Input, "a collapse certificate needs inline start and final complexes");
    FacePoset start = complex_from_json(c.start);
    FacePoset fin = complex_from_json(c.final);
    auto r = verify_collapse_sequence(start, CollapseSequence{c.steps}, &fin);
    Json report;
    report["command"] = "verify collapse";
    report["file"] = file;
    report["steps"] = c.steps.size();
    report["verified"] = r.ok;
    if (!r.ok) {
        report["failed_step"] = r.failed_step;
        report["message"] = r.message;
        emit(g, report);
        return VerifyFailed;
    }
    emit(g, report);
    return Ok;
}

// ---- towers and cohomology -------------------------------------------------

int tower_cmd(const Globals& g, const std::string& input, bool lim1) {
    GroupTower t = tower_from_json(read_json(input));
    Json report;
    report["command"] = lim1 ? "tower lim1" : "tower ml";
    Lim1Report r = lim1_vanishes(t);
    report["mittag_leffler"] = to_string(r.ml.verdict);
    report["core_rank"] = r.ml.core_rank;
    report["period_index"] = r.ml.period_index;
    if (lim1) report["lim1"] = to_string(r.verdict);
    std::string note = lim1 ? r.note : r.ml.note;
    if (!note.empty()) report["note"] = note;
    emit(g, report);
    bool unknown = lim1 ? r.verdict == Lim1Verdict::Unknown : r.ml.verdict == TowerVerdict::Unknown;
    return unknown ? NoResult : Ok;
}

int telescope_cmd(const Globals& g, int stages, const std::string& what, int sub, const std::string& out) {
    Json report;
    report["command"] = "telescope";
    report["stages"] = stages;
    if (what == "tower") {
        ObstructionReport r = skliarienko_obstruction(0, stages);
        deliver(report, "tower", tower_to_json(r.tower), out);
    } else {
        TelescopeComplex tc = build_telescope(stages);
        if (sub < 0 || sub > stages) throw Error(ErrorKind::Input, "--subcomplex must be between 0 and --stages");
        const FacePoset& K = sub == 0 ? tc.X : tc.F[sub - 1];
        report["complex"] = sub == 0 ? "X" : "F" + std::to_string(sub);
        report["shape"] = shape(K);
        deliver(report, "complex_json", complex_to_json(K), out);
    }
    emit(g, report);
    return Ok;
}

Json group_json(const FGAbelianGroup& G) {
    return Json{{"group", G.str()}, {"rank", G.rank}, {"torsion", G.torsion}};
}

int cohomology_cmd(const Globals& g, const Source& src, const Source& rel, int degree, bool reduced) {
    FacePoset K = load(src);
    FacePoset L;
    bool relative = !rel.input.empty() || !rel.fixture.empty();
    if (relative) L = load(rel);
    CohomologyGroup h = cohomology(K, degree, L, reduced);
    Json report;
    report["command"] = "cohomology";
    report["degree"] = degree;
    report["relative"] = relative;
    report["reduced"] = reduced;
    report.update(group_json(h.group));
    emit(g, report);
    return Ok;
}

int obstruction_cmd(const Globals& g, int k, int stages, const std::string& out) {
    ObstructionReport r = skliarienko_obstruction(k, stages);
    Json report;
    report["command"] = "obstruction";
    report["k"] = r.k;
    report["stages"] = r.stages;
    report["degree"] = r.degree;
    Json h1 = Json::array(), rel = Json::array();
    for (const auto& G : r.h1) h1.push_back(G.str());
    for (const auto& G : r.relative) rel.push_back(G.str());
    report["h1"] = h1;
    report["h1_maps"] = r.h1_maps;
    report["relative"] = rel;
    report["relative_maps"] = r.relative_maps;
    report["mittag_leffler"] = to_string(r.lim1.ml.verdict);
    report["lim1"] = to_string(r.lim1.verdict);
    report["nonzero"] = r.nonzero;
    report["summary"] = r.summary;
    deliver(report, "tower", tower_to_json(r.tower), out);
    emit(g, report);
    return r.lim1.verdict == Lim1Verdict::Unknown ? NoResult : Ok;
}

// ---- export, remark, fiw, fixtures ---------------------------------------

// An embedding file, or {"trees": [...], "cells": [[face ids]]}.
Geometry load_geometry(const Json& j) {
    if (j.contains("cells") && !j.contains("simplex_images")) {
        TreeProduct T;
        for (const auto& t : j.at("trees")) T.trees.push_back(tree_from_json(t));
        CellSet cells;
        for (const auto& c : j.at("cells")) cells.insert(T.parse_cell(c.get<std::vector<std::string>>()));
        return export_coordinates(T, cells);
    }
    LoadedEmbedding le = embedding_from_json(j);
    return export_coordinates(le.embedding);
}

int export_cmd(const Globals& g, const std::string& input, const std::string& emit_as, const std::string& out) {
    Geometry geo = load_geometry(read_json(input));
    Json report;
    report["command"] = "export";
    report["trees"] = geo.layouts.size();
    report["vertices"] = geo.coordinates.size();
    report["cells"] = geo.cells.size();
    if (emit_as == "off") {
        std::string off = to_off(geo);
        if (out.empty())
            report["off"] = off;
        else
            write_file(out, off), report["out"] = out;
    } else {
        Json art;
        art["layouts"] = geo.layouts;
        art["coordinates"] = geo.coordinates;
        art["cells"] = geo.cells;
        deliver(report, "geometry", art, out);
    }
    emit(g, report);
    return Ok;
}

int remark_cmd(const Globals& g, const std::string& policy, const std::string& out) {
    ExtensionState st = remark_e2_state();
    ExtensionOptions opt;
    opt.policy = parse_policy(policy);
    opt.seed = g.seed;
    auto rep = extend_across_collapse(st, opt);
    const TreeProduct& T = st.product;
    Json report;
    report["command"] = "remark";
    report["policy"] = to_string(opt.policy);
    report["steps"] = rep.steps;
    report["trees"] = tree_summary(T);
    int squares = 0;
    for (const auto& c : st.beta) {
        int dim = 0;
        for (int code : c) dim += code & 1;
        squares += dim == 2;
    }
    report["squares"] = squares;
    if (g.verify) {
        bool ok = verify_product_certificate(T, chained_certificate(st), st.image).ok;
        report["verified"] = ok;
        if (!ok) fail_verification("certificate of the extension step");
    }
    Json art;
    art["trees"] = Json::array();
    for (const auto& t : T.trees) art["trees"].push_back(tree_to_json(t));
    Json cells = Json::array();
    for (const auto& c : st.beta) cells.push_back(cell_json(T, c));
    art["cells"] = cells;
    deliver(report, "configuration", art, out);
    emit(g, report);
    return Ok;
}

int fiw_cmd(const Globals& g, const std::string& input, const std::string& out) {
    ColoredComplex S = colored_from_json(read_json(input));
    FiwResult r = fiw_ball(S, S.palette);
    Json report;
    report["command"] = "fiw";
    report["sphere"] = shape(S.complex);
    report["ball"] = shape(r.ball.complex);
    report["interior_vertices"] = r.interior_vertices;
    if (g.verify) {
        BallVerdict v = verify_colored_ball(r.ball, S);
        report["verified"] = v.accepted();
        if (!v.accepted()) fail_verification(v.reason);
    }
    deliver(report, "ball", colored_to_json(r.ball), out);
    emit(g, report);
    return Ok;
}

int exit_code(const std::exception& ex) {
    if (auto* p = dynamic_cast<const ParseError*>(&ex)) {
        switch (p->failure()) {
            case ParseFailure::Schema: return BadInput;
            case ParseFailure::Structure: return BadStructure;
            case ParseFailure::Coloring: return BadColoring;
        }
    }
    if (auto* e = dynamic_cast<const Error*>(&ex)) {
        switch (e->kind()) {
            case ErrorKind::Input: return BadInput;
            case ErrorKind::Verification: return VerifyFailed;
            case ErrorKind::Budget: return NoResult;
            case ErrorKind::Internal: return Internal;
        }
    }
    if (dynamic_cast<const nlohmann::json::exception*>(&ex)) return BadInput;
    return Internal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"treefold: embeddings of collapsible complexes into products of trees"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "seed for every randomized choice")->capture_default_str();
    app.add_flag("--verify", g.verify, "re-check every emitted artifact before exit");
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    // embed
    EmbedArgs ea;
    auto* embed = app.add_subcommand("embed", "build an embedding")->require_subcommand(1);
    auto* e_col = embed->add_subcommand("collapsible", "collapsible complex into a product of dim K trees");
    auto* e_std = embed->add_subcommand("standard", "standard embedding into a product of stars");
    auto* e_join = embed->add_subcommand("join", "barycentric subdivision inside the join of its simplex sets");
    auto* e_cube = embed->add_subcommand("cube", "explicit coordinates in I^{2n+1}");
    auto* e_cone = embed->add_subcommand("cone", "cone over the complex in a product of stars");
    for (auto* s : {e_col, e_std, e_join, e_cube, e_cone}) {
        add_source(s, ea.src);
        s->add_option("--out,-o", ea.out, "output file");
    }
    e_col->add_option("--policy", ea.policy, "canonical, consecutive or edges-first")->capture_default_str();
    e_col->add_option("--certificate", ea.certificate_out, "also write the collapse certificate here");
    e_col->add_flag("--no-certificate", ea.no_certificate, "skip building the product collapse certificate");
    for (auto* s : {e_std, e_cone}) s->add_option("--k", ea.k, "number of stars minus one (default dim K)");

    // collapse
    Source csrc;
    std::string cout_file;
    auto* collapse = app.add_subcommand("collapse", "collapse sequences")->require_subcommand(1);
    auto* c_find = collapse->add_subcommand("find", "search for a collapse to a vertex");
    add_source(c_find, csrc);
    c_find->add_option("--out,-o", cout_file, "certificate file");

    // verify
    std::string vfile;
    auto* verify = app.add_subcommand("verify", "check an artifact")->require_subcommand(1);
    auto* v_emb = verify->add_subcommand("embedding", "check an embedding file and its certificate");
    v_emb->add_option("file", vfile)->required();
    auto* v_col = verify->add_subcommand("collapse", "replay a collapse certificate");
    v_col->add_option("file", vfile)->required();

    // tower
    std::string tinput;
    auto* tower = app.add_subcommand("tower", "inverse sequences of groups")->require_subcommand(1);
    auto* t_ml = tower->add_subcommand("ml", "Mittag-Leffler condition");
    auto* t_lim = tower->add_subcommand("lim1", "vanishing of lim^1");
    for (auto* s : {t_ml, t_lim}) s->add_option("--input,-i", tinput, "tower JSON")->required();

    // telescope
    int stages = 1, subcomplex = 0;
    std::string emit_what = "complex", tel_out;
    auto* tel = app.add_subcommand("telescope", "mapping telescope of the doubling maps");
    tel->add_option("--stages", stages)->required()->check(CLI::PositiveNumber);
    tel->add_option("--emit", emit_what)->check(CLI::IsMember({"complex", "tower"}))->capture_default_str();
    tel->add_option("--subcomplex", subcomplex, "j > 0 emits F_j instead of X")->capture_default_str();
    tel->add_option("--out,-o", tel_out);

    // cohomology
    Source hsrc, hrel;
    int degree = 0;
    bool reduced = false;
    auto* coh = app.add_subcommand("cohomology", "integral cohomology");
    add_source(coh, hsrc);
    auto* rin = coh->add_option("--rel", hrel.input, "subcomplex JSON");
    auto* rfx = coh->add_option("--rel-fixture", hrel.fixture, "subcomplex fixture");
    rin->excludes(rfx);
    coh->add_option("--degree", degree)->required();
    coh->add_flag("--reduced", reduced);

    // obstruction
    int ok_k = 0, ob_stages = 3;
    std::string ob_out;
    auto* obs = app.add_subcommand("obstruction", "lim^1 obstruction of the telescope in degree 2 + k");
    obs->add_option("--k", ok_k)->capture_default_str()->check(CLI::NonNegativeNumber);
    obs->add_option("--stages", ob_stages)->capture_default_str()->check(CLI::PositiveNumber);
    obs->add_option("--out,-o", ob_out, "tower file");

    // export
    std::string x_in, x_out, x_emit = "off";
    auto* exp = app.add_subcommand("export", "coordinates for an embedding or a cell list");
    exp->add_option("--input,-i", x_in)->required();
    exp->add_option("--emit", x_emit)->check(CLI::IsMember({"off", "json"}))->capture_default_str();
    exp->add_option("--out,-o", x_out);

    // remark
    std::string r_policy = "consecutive", r_out;
    auto* rem = app.add_subcommand("remark", "one extension step on the two-edge configuration");
    rem->add_option("--policy", r_policy)->capture_default_str();
    rem->add_option("--out,-o", r_out);

    // fiw
    std::string f_in, f_out;
    auto* fiw = app.add_subcommand("fiw", "fill a coloured sphere with a coloured ball");
    fiw->add_option("--input,-i", f_in)->required();
    fiw->add_option("--out,-o", f_out);

    // fixture
    std::string fx_name, fx_out;
    auto* fx = app.add_subcommand("fixture", "built-in complexes")->require_subcommand(1);
    auto* fx_list = fx->add_subcommand("list");
    auto* fx_show = fx->add_subcommand("show");
    fx_show->add_option("name", fx_name)->required();
    fx_show->add_option("--out,-o", fx_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (e_col->parsed()) return embed_collapsible_cmd(g, ea);
        if (e_std->parsed()) return embed_tree_cmd(g, ea, false);
        if (e_cone->parsed()) return embed_tree_cmd(g, ea, true);
        if (e_join->parsed()) return embed_join_cmd(g, ea);
        if (e_cube->parsed()) return embed_cube_cmd(g, ea);
        if (c_find->parsed()) return collapse_find_cmd(g, csrc, cout_file);
        if (v_emb->parsed()) return verify_embedding_cmd(g, vfile);
        if (v_col->parsed()) return verify_collapse_cmd(g, vfile);
        if (t_ml->parsed() || t_lim->parsed()) return tower_cmd(g, tinput, t_lim->parsed());
        if (tel->parsed()) return telescope_cmd(g, stages, emit_what, subcomplex, tel_out);
        if (coh->parsed()) return cohomology_cmd(g, hsrc, hrel, degree, reduced);
        if (obs->parsed()) return obstruction_cmd(g, ok_k, ob_stages, ob_out);
        if (exp->parsed()) return export_cmd(g, x_in, x_emit, x_out);
        if (rem->parsed()) return remark_cmd(g, r_policy, r_out);
        if (fiw->parsed()) return fiw_cmd(g, f_in, f_out);
        if (fx_list->parsed()) {
            Json report;
            report["fixtures"] = fixture_names();
            emit(g, report);
            return Ok;
        }
        if (fx_show->parsed()) {
            FacePoset K = fixture(fx_name);
            if (fx_out.empty()) {
                std::cout << dump_json(complex_to_json(K));
            } else {
                write_file(fx_out, dump_json(complex_to_json(K)));
            }
            return Ok;
        }
    } catch (const std::exception& ex) {
        std::cerr << "treefold: " << ex.what() << "\n";
        return exit_code(ex);
    }
    return Internal;
}
