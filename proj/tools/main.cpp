// catcol: batch CLI over instance JSON files.  One command per invocation,
// result JSON on stdout, diagnostics on stderr.  Exit codes: 0 positive
// answer, 1 negative answer, 2 input/usage error, 3 internal error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "catcol/coloring.hpp"
#include "catcol/errors.hpp"
#include "catcol/generator.hpp"
#include "catcol/graph.hpp"
#include "catcol/json_io.hpp"
#include "catcol/oracle.hpp"
#include "catcol/recognition.hpp"

namespace {

using nlohmann::ordered_json;

void emit(bool quiet, const std::string& doc) {
    if (!quiet) std::cout << doc << '\n';
}

int cmd_recognize(const std::string& path, bool quiet) {
    const catcol::Instance inst = catcol::load_instance(path);
    catcol::RecognitionResult r = catcol::recognize(inst.graph);
    if (!r.caterpillar) {
        emit(quiet, catcol::not_convex_document(catcol::to_string(r.reason)));
        return 1;
    }
    if (!catcol::verify_caterpillar_representation(inst.graph, *r.caterpillar).accepted)
        throw catcol::InternalError("recognize produced a rejected representation");
    emit(quiet, catcol::caterpillar_document(*r.caterpillar));
    return 0;
}

int cmd_color(const std::string& path, const std::string& mode, bool quiet) {
    const catcol::Instance inst = catcol::load_instance(path);
    if (!inst.lists)
        throw catcol::InputError("instance has no lists; coloring needs them");
    std::optional<catcol::Caterpillar> use;
    if (inst.caterpillar) {
        if (mode == "embedded") {
            use = inst.caterpillar;
        } else if (catcol::verify_caterpillar_representation(inst.graph, *inst.caterpillar)
                       .accepted) {
            use = inst.caterpillar;
        } else {
            std::cerr << "note: embedded caterpillar is not a valid representation; "
                         "falling back to recognition\n";
        }
    } else if (mode == "embedded") {
        throw catcol::InputError("--caterpillar embedded, but the instance carries none");
    }
    const auto col = catcol::list3color(inst.graph, *inst.lists, use);
    if (!col) {
        emit(quiet, catcol::infeasible_document());
        return 1;
    }
    emit(quiet, catcol::coloring_document(inst.graph, *col));
    return 0;
}

int cmd_verify_rep(const std::string& inst_path, const std::string& cand_path, bool quiet) {
    const catcol::Instance inst = catcol::load_instance(inst_path);
    const catcol::Caterpillar t =
        catcol::parse_caterpillar_document(catcol::read_file_or_stdin(cand_path));
    const catcol::RepresentationVerdict v =
        catcol::verify_caterpillar_representation(inst.graph, t);
    if (v.accepted) {
        emit(quiet, catcol::verify_accept_document());
        return 0;
    }
    emit(quiet, catcol::verify_reject_document_y(v.witness_y));
    return 1;
}

int cmd_verify_coloring(const std::string& inst_path, const std::string& cand_path,
                        bool quiet) {
    const catcol::Instance inst = catcol::load_instance(inst_path);
    if (!inst.lists)
        throw catcol::InputError("instance has no lists; coloring verification needs them");
    const catcol::Coloring c =
        catcol::parse_coloring_document(catcol::read_file_or_stdin(cand_path));
    const catcol::ColoringVerdict v = catcol::verify_coloring(inst.graph, *inst.lists, c);
    if (v.accepted) {
        emit(quiet, catcol::verify_accept_document());
        return 0;
    }
    if (v.bad_vertex)
        emit(quiet, catcol::verify_reject_document_vertex(*v.bad_vertex));
    else
        emit(quiet, catcol::verify_reject_document_edge(v.bad_edge->first, v.bad_edge->second));
    return 1;
}

struct GenFlags {
    int backbone = 1;
    double leaf_rate = 0.0;
    int y = 0;
    std::string lists = "full";
    bool comb = false;
    std::uint64_t seed = 0;
    bool arbitrary = false;
    int nx = 0;
    int ny = 0;
    double edge_prob = 0.0;
};

int cmd_gen(const GenFlags& f, bool quiet) {
    ordered_json doc;
    ordered_json meta;
    meta["generator"] = "mt19937_64";
    if (f.arbitrary) {
        catcol::Instance inst;
        inst.graph = catcol::gen_arbitrary_bipartite(f.nx, f.ny, f.edge_prob, f.seed);
        doc = ordered_json::parse(catcol::serialize_instance(inst));
        meta["mode"] = "arbitrary";
        meta["nx"] = f.nx;
        meta["ny"] = f.ny;
        meta["edge_prob"] = f.edge_prob;
    } else {
        const auto mode = catcol::list_mode_from_string(f.lists);
        if (!mode) throw catcol::InputError("unknown list mode: " + f.lists);
        catcol::GenSpec spec;
        spec.backbone_len = f.backbone;
        spec.leaf_rate = f.leaf_rate;
        spec.y_count = f.y;
        spec.list_mode = *mode;
        spec.comb_mode = f.comb;
        spec.seed = f.seed;
        doc = ordered_json::parse(catcol::serialize_instance(catcol::gen_instance(spec)));
        meta["mode"] = "convex";
        meta["backbone"] = f.backbone;
        meta["leaf_rate"] = f.leaf_rate;
        meta["y"] = f.y;
        meta["lists"] = f.lists;
        meta["comb"] = f.comb;
    }
    meta["seed"] = f.seed;
    doc["meta"] = std::move(meta);
    emit(quiet, doc.dump(2));
    return 0;
}

int cmd_oracle_color(const std::string& path, std::uint64_t max_assignments, bool quiet) {
    const catcol::Instance inst = catcol::load_instance(path);
    if (!inst.lists)
        throw catcol::InputError("instance has no lists; coloring needs them");
    catcol::SizeBudget budget;
    budget.max_assignments = max_assignments;
    const auto col = catcol::brute_force_list_color(inst.graph, *inst.lists, budget);
    if (!col) {
        emit(quiet, catcol::infeasible_document());
        return 1;
    }
    if (!catcol::verify_coloring(inst.graph, *inst.lists, *col).accepted)
        throw catcol::InternalError("oracle produced a rejected coloring");
    emit(quiet, catcol::coloring_document(inst.graph, *col));
    return 0;
}

int cmd_oracle_recognize(const std::string& path, int max_x, int max_y, bool quiet) {
    const catcol::Instance inst = catcol::load_instance(path);
    catcol::SizeBudget budget;
    budget.max_x = max_x;
    budget.max_y = max_y;
    const auto t = catcol::brute_force_recognize(inst.graph, budget);
    if (!t) {
        emit(quiet, catcol::not_convex_document(""));
        return 1;
    }
    emit(quiet, catcol::caterpillar_document(*t));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"caterpillar-convex bipartite graphs: recognition, list 3-coloring, "
                 "verification, generation, and brute-force oracles"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet,-q", quiet, "suppress JSON output; exit code only");
    int rc = 0;

    std::string rec_path;
    auto* rec = app.add_subcommand("recognize", "decide caterpillar-convexity");
    rec->add_option("path", rec_path, "instance JSON file, - for stdin")->required();
    rec->callback([&] { rc = cmd_recognize(rec_path, quiet); });

    std::string col_path, col_mode = "auto";
    auto* col = app.add_subcommand("color", "solve list 3-coloring");
    col->add_option("path", col_path, "instance JSON file, - for stdin")->required();
    col->add_option("--caterpillar", col_mode,
                    "embedded: require the instance's caterpillar; auto: use it when "
                    "present and valid, otherwise recognize (default auto)")
        ->check(CLI::IsMember({"auto", "embedded"}));
    col->callback([&] { rc = cmd_color(col_path, col_mode, quiet); });

    auto* ver = app.add_subcommand("verify", "check a candidate against an instance");
    ver->require_subcommand(1);
    std::string vr_inst, vr_cand;
    auto* vrep = ver->add_subcommand("rep", "check a caterpillar representation");
    vrep->add_option("instance", vr_inst, "instance JSON file")->required();
    vrep->add_option("candidate", vr_cand, "caterpillar JSON file, - for stdin")->required();
    vrep->callback([&] { rc = cmd_verify_rep(vr_inst, vr_cand, quiet); });
    std::string vc_inst, vc_cand;
    auto* vcol = ver->add_subcommand("coloring", "check a coloring");
    vcol->add_option("instance", vc_inst, "instance JSON file")->required();
    vcol->add_option("candidate", vc_cand, "coloring JSON file, - for stdin")->required();
    vcol->callback([&] { rc = cmd_verify_coloring(vc_inst, vc_cand, quiet); });

    GenFlags gf;
    auto* gen = app.add_subcommand("gen", "emit a reproducible random instance");
    auto* g_bb = gen->add_option("--backbone", gf.backbone, "backbone length (convex mode)");
    auto* g_lr = gen->add_option("--leaf-rate", gf.leaf_rate, "expected leaves per backbone vertex");
    auto* g_y = gen->add_option("--y", gf.y, "number of Y-vertices");
    auto* g_ls = gen->add_option("--lists", gf.lists, "full | random-nonempty | random-allow-empty")
                     ->check(CLI::IsMember({"full", "random-nonempty", "random-allow-empty"}));
    auto* g_cb = gen->add_flag("--comb", gf.comb, "exactly one leaf per backbone vertex");
    gen->add_option("--seed", gf.seed, "64-bit seed");
    auto* g_arb = gen->add_flag("--arbitrary", gf.arbitrary, "unconstrained bipartite mode");
    gen->add_option("--nx", gf.nx, "X size (arbitrary mode)")->needs(g_arb);
    gen->add_option("--ny", gf.ny, "Y size (arbitrary mode)")->needs(g_arb);
    gen->add_option("--edge-prob", gf.edge_prob, "edge probability (arbitrary mode)")->needs(g_arb);
    g_arb->excludes(g_bb)->excludes(g_lr)->excludes(g_y)->excludes(g_ls)->excludes(g_cb);
    gen->callback([&] { rc = cmd_gen(gf, quiet); });

    auto* ora = app.add_subcommand("oracle", "brute-force references");
    ora->require_subcommand(1);
    std::string oc_path;
    std::uint64_t oc_budget = catcol::SizeBudget{}.max_assignments;
    auto* ocol = ora->add_subcommand("color", "exhaustive list coloring");
    ocol->add_option("path", oc_path, "instance JSON file, - for stdin")->required();
    ocol->add_option("--max-assignments", oc_budget, "assignment-count budget");
    ocol->callback([&] { rc = cmd_oracle_color(oc_path, oc_budget, quiet); });
    std::string or_path;
    int or_max_x = catcol::SizeBudget{}.max_x;
    int or_max_y = catcol::SizeBudget{}.max_y;
    auto* orec = ora->add_subcommand("recognize", "exhaustive caterpillar search");
    orec->add_option("path", or_path, "instance JSON file, - for stdin")->required();
    orec->add_option("--max-x", or_max_x, "X-size budget");
    orec->add_option("--max-y", or_max_y, "Y-size budget");
    orec->callback([&] { rc = cmd_oracle_recognize(or_path, or_max_x, or_max_y, quiet); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const catcol::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const catcol::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const catcol::UnsupportedInstance& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const catcol::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}
