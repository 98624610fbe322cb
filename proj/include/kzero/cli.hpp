// Command-line driver.  Exit codes: 0 success, 1 failed check or invalid
// data, 2 parse/usage error.  Results go to stdout, diagnostics to stderr.
#pragma once

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kzero/cosets.hpp"
#include "kzero/fp.hpp"
#include "kzero/functor.hpp"
#include "kzero/grading.hpp"
#include "kzero/group.hpp"
#include "kzero/io.hpp"
#include "kzero/report.hpp"
#include "kzero/ring.hpp"
#include "kzero/subring.hpp"
#include "kzero/verify.hpp"

namespace kzero::cli {

namespace detail {

inline std::string label_set(const FusionRing& r, const std::vector<int>& members) {
    std::string s = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += r.label(members[i]);
    }
    return s + "}";
}

inline std::string blocks_str(const FusionRing& r,
                              const std::vector<std::vector<int>>& blocks) {
    std::string s;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += " ";
        s += label_set(r, blocks[b]);
    }
    return s;
}

// subring spec: "0,1,4" for explicit members, "gen=2,3" for a closure
inline Subring parse_subspec(const FusionRing& r, const std::string& spec) {
    if (spec.empty()) return trivial_subring(r);
    std::string body = spec;
    bool generated = false;
    if (body.rfind("gen=", 0) == 0) {
        generated = true;
        body = body.substr(4);
    }
    std::vector<int> idx;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        try {
            size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            idx.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad subring spec '" + spec + "'");
        }
    }
    if (generated) return close_generated(r, idx);
    return subring_from_members(r, idx);
}

inline std::vector<int> parse_index_list(const std::string& spec) {
    std::vector<int> idx;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        try {
            size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            idx.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad index list '" + spec + "'");
        }
    }
    return idx;
}

inline const RingDoc& single_ring(const Corpus& corpus, const std::string& path) {
    if (corpus.rings.size() != 1)
        throw ParseError(path + ": expected exactly one ring document");
    return corpus.rings.begin()->second;
}

inline nlohmann::ordered_json json_blocks(const FusionRing& r,
                                          const std::vector<std::vector<int>>& blocks) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& blk : blocks) {
        auto b = nlohmann::ordered_json::array();
        for (int x : blk) b.push_back(r.label(x));
        arr.push_back(std::move(b));
    }
    return arr;
}

}  // namespace detail

struct Options {
    bool json = false;
    double tol = 1e-9;
    double iter_tol = 1e-12;
    std::uint64_t seed = 20240901;
};

inline int cmd_validate(const std::vector<std::string>& files, std::ostream& out) {
    Corpus corpus;
    corpus.add_paths(files);
    int violations = 0;
    for (const auto& [name, doc] : corpus.rings) {
        auto rep = validate_ring(*doc.ring);
        for (const auto& v : rep) {
            out << "ring " << name << ": " << v.axiom << ": " << v.detail << "\n";
            ++violations;
        }
        if (rep.empty()) out << "ring " << name << ": ok\n";
    }
    for (const auto& [name, g] : corpus.groups) {
        auto rep = validate_group(g);
        for (const auto& msg : rep) {
            out << "group " << name << ": " << msg << "\n";
            ++violations;
        }
        if (rep.empty()) out << "group " << name << ": ok\n";
    }
    for (const auto& f : corpus.resolved_functors()) {
        auto rep = validate_functor(f);
        for (const auto& v : rep) {
            out << "functor " << f.name << ": " << v.axiom << ": " << v.detail << "\n";
            ++violations;
        }
        if (rep.empty()) out << "functor " << f.name << ": ok\n";
    }
    return violations ? 1 : 0;
}

inline int cmd_fpdim(const std::string& file, const Options& opt, std::ostream& out) {
    Corpus corpus;
    corpus.add_paths({file});
    const auto& doc = detail::single_ring(corpus, file);
    const FusionRing& r = *doc.ring;
    auto axioms = validate_ring(r);
    if (!axioms.empty()) {
        out << "ring " << r.name() << ": " << axioms.front().axiom << ": "
            << axioms.front().detail << "\n";
        return 1;
    }
    auto fp = compute_fp_dims(r, opt.iter_tol);
    if (opt.json) {
        nlohmann::ordered_json j;
        j["command"] = "fpdim";
        j["ring"] = r.name();
        j["dims"] = fp.dims;
        j["ring_dim"] = fp.ring_dim;
        j["residual"] = fp.residual;
        j["iterations"] = fp.iterations;
        out << j.dump(2) << "\n";
    } else {
        out << "ring " << r.name() << "\n" << std::setprecision(15);
        for (int i = 0; i < r.rank(); ++i)
            out << "  FPdim(" << r.label(i) << ") = " << fp.dims[i] << "\n";
        out << "  FPdim(ring) = " << fp.ring_dim << "\n";
        out << "  residual = " << fp.residual << "\n";
    }
    return 0;
}

inline int cmd_cosets(const std::string& file, const std::string& left_spec,
                      const std::string& right_spec, bool verify, const Options& opt,
                      std::ostream& out) {
    Corpus corpus;
    corpus.add_paths({file});
    const auto& doc = detail::single_ring(corpus, file);
    const FusionRing& r = *doc.ring;
    auto fp = compute_fp_dims(r, opt.iter_tol);
    Subring d = detail::parse_subspec(r, left_spec);
    Subring e = detail::parse_subspec(r, right_spec);
    auto dec = double_cosets(r, d, e, fp);

    Report rep;
    rep.command = "cosets";
    if (verify) {
        auto eig = verify_principal_eigendata(dec, fp, opt.tol);
        rep.add(eig.checks);
        for (int x = 0; x < r.rank(); ++x) {
            auto fr = coset_product_formula(dec, fp, x);
            rep.add("product-formula " + r.label(x), fr.pass,
                    "scalar " + std::to_string(fr.scalar), fr.error);
        }
    }
    if (opt.json) {
        nlohmann::ordered_json j;
        j["command"] = "cosets";
        j["ring"] = r.name();
        j["left"] = detail::label_set(r, d.members);
        j["right"] = detail::label_set(r, e.members);
        j["blocks"] = detail::json_blocks(r, dec.blocks);
        if (verify) {
            auto jr = rep.json();
            j["checks"] = jr["checks"];
            j["overall"] = jr["overall"];
        }
        out << j.dump(2) << "\n";
    } else {
        out << "blocks " << detail::blocks_str(r, dec.blocks) << "\n";
        if (verify) rep.text(out);
    }
    return verify && !rep.ok() ? 1 : 0;
}

inline int cmd_setop(const std::string& which, const std::string& file,
                     const std::string& subspec, const Options& opt, std::ostream& out) {
    Corpus corpus;
    corpus.add_paths({file});
    const auto& doc = detail::single_ring(corpus, file);
    const FusionRing& r = *doc.ring;
    if (which == "adjoint") {
        out << detail::label_set(r, adjoint_subring(r).members) << "\n";
        return 0;
    }
    Subring d = detail::parse_subspec(r, subspec);
    IndexSetResult res = which == "radical" ? radical(r, d) : commutator(r, d);
    out << detail::label_set(r, res.members)
        << (res.is_subring ? " (subring)" : " (not product-closed)") << "\n";
    (void)opt;
    return 0;
}

inline int cmd_functor(const std::string& file, const std::vector<std::string>& ring_files,
                       bool do_analyze, const Options& opt, std::ostream& out) {
    Corpus corpus;
    std::vector<std::string> paths = ring_files;
    paths.push_back(file);
    corpus.add_paths(paths);
    auto functors = corpus.resolved_functors();
    if (functors.empty()) throw ParseError(file + ": no functor document found");

    Report rep;
    rep.command = "functor";
    nlohmann::ordered_json jall = nlohmann::ordered_json::array();
    for (const auto& f : functors) {
        auto axioms = validate_functor(f);
        rep.add(f.name + "/axioms", axioms.empty(),
                axioms.empty() ? "" : axioms.front().axiom + ": " + axioms.front().detail);
        if (!axioms.empty()) continue;

        auto fp_src = compute_fp_dims(*f.source, opt.iter_tol);
        auto fp_tgt = compute_fp_dims(*f.target, opt.iter_tol);
        auto a = analyze(f, fp_src, fp_tgt);

        nlohmann::ordered_json j;
        j["name"] = f.name;
        j["source"] = f.source->name();
        j["target"] = f.target->name();
        j["kernel"] = detail::label_set(*f.source, a.kernel.members);
        j["up_classes"] = detail::json_blocks(*f.source, a.up.classes);
        j["down_classes"] = detail::json_blocks(*f.target, a.down.classes);
        j["up_transitive"] = a.up.transitive;
        j["normal"] = a.normal;
        j["dominant"] = a.dominant;
        j["index"] = a.index;
        jall.push_back(j);

        if (!opt.json) {
            out << "functor " << f.name << ": " << f.source->name() << " -> "
                << f.target->name() << "\n";
            out << "  kernel " << detail::label_set(*f.source, a.kernel.members) << "\n";
            out << "  up-classes " << detail::blocks_str(*f.source, a.up.classes)
                << (a.up.transitive ? " (one-step relation transitive)" : "") << "\n";
            out << "  down-classes " << detail::blocks_str(*f.target, a.down.classes) << "\n";
            out << "  normal " << (a.normal ? "yes" : "no") << ", dominant "
                << (a.dominant ? "yes" : "no") << ", index " << std::setprecision(15)
                << a.index << "\n";
        }
        if (do_analyze) {
            rep.add(r1_coset_check(f, fp_src), f.name);
            rep.add(disjoint_or_equal_check(f), f.name);
            if (a.normal) {
                rep.add(normal_image_description(f, fp_src, fp_tgt, opt.tol), f.name);
                rep.add(self_trivializing_check(f, fp_src, opt.tol), f.name);
            }
            auto dom = dominant_analysis(f, fp_src, fp_tgt, opt.tol);
            if (dom.dominant)
                rep.add(dom.checks, f.name);
            else
                rep.skip(f.name + "/dominant-analysis", "functor is not dominant");
        }
    }
    if (opt.json) {
        nlohmann::ordered_json j;
        j["command"] = "functor";
        j["functors"] = jall;
        auto jr = rep.json();
        j["checks"] = jr["checks"];
        j["overall"] = jr["overall"];
        out << j.dump(2) << "\n";
    } else {
        rep.text(out);
    }
    return rep.ok() ? 0 : 1;
}

inline int cmd_grading(const std::string& file, const std::string& witness_file,
                       const Options& opt, std::ostream& out) {
    auto graded_file = load_file(file);
    if (graded_file.rings.empty()) throw ParseError(file + ": no ring document found");
    const RingDoc doc = graded_file.rings.front();
    Corpus corpus;
    corpus.add(graded_file);
    if (!witness_file.empty()) corpus.add_paths({witness_file});
    const FusionRing& r = *doc.ring;
    auto fp = compute_fp_dims(r, opt.iter_tol);

    Grading g = doc.grades.empty() ? universal_grading(r, fp)
                                   : grading_from_labels(r, doc.grades);
    Report rep;
    rep.command = "grading";
    auto sm = intermediate_subring_map(r, g);
    rep.add(sm.checks);
    if (!witness_file.empty()) {
        auto functors = corpus.resolved_functors();
        if (functors.empty()) throw ParseError(witness_file + ": no functor document found");
        rep.add(verify_normal_extension(r, g, functors.front(), fp));
    }

    if (opt.json) {
        nlohmann::ordered_json j;
        j["command"] = "grading";
        j["ring"] = r.name();
        j["trivial_component"] = detail::label_set(r, g.trivial_component.members);
        j["components"] = detail::json_blocks(r, g.components);
        j["group_order"] = g.group.order;
        j["group_table"] = g.group.table;
        j["subgroup_count"] = sm.entries.size();
        auto jr = rep.json();
        j["checks"] = jr["checks"];
        j["overall"] = jr["overall"];
        out << j.dump(2) << "\n";
    } else {
        out << "ring " << r.name() << ": " << (doc.grades.empty() ? "universal" : "explicit")
            << " grading, group order " << g.group.order << "\n";
        out << "components " << detail::blocks_str(r, g.components) << "\n";
        out << "subgroups " << sm.entries.size() << "\n";
        rep.text(out);
    }
    return rep.ok() ? 0 : 1;
}

inline int cmd_gen_group_ring(const std::string& file, std::ostream& out) {
    Corpus corpus;
    corpus.add_paths({file});
    if (corpus.groups.size() != 1) throw ParseError(file + ": expected one group document");
    const auto& g = corpus.groups.begin()->second;
    auto problems = validate_group(g);
    if (!problems.empty()) throw RingError("group " + g.name + ": " + problems.front());
    write_ring(out, *group_ring(g));
    return 0;
}

inline int cmd_gen_quotient(const std::string& file, const std::string& n_spec,
                            std::ostream& out) {
    Corpus corpus;
    corpus.add_paths({file});
    if (corpus.groups.size() != 1) throw ParseError(file + ": expected one group document");
    const auto& g = corpus.groups.begin()->second;
    auto f = quotient_functor(g, detail::parse_index_list(n_spec));
    write_ring(out, *f.target);
    write_functor(out, f);
    return 0;
}

inline int cmd_oracle(const std::string& file, const std::string& k_spec,
                      const std::string& l_spec, std::ostream& out) {
    Corpus corpus;
    corpus.add_paths({file});
    if (corpus.groups.size() != 1) throw ParseError(file + ": expected one group document");
    const auto& g = corpus.groups.begin()->second;
    auto blocks = group_double_cosets_oracle(g, detail::parse_index_list(k_spec),
                                             detail::parse_index_list(l_spec));
    for (size_t b = 0; b < blocks.size(); ++b) {
        out << (b ? " " : "") << "{";
        for (size_t i = 0; i < blocks[b].size(); ++i)
            out << (i ? "," : "") << blocks[b][i];
        out << "}";
    }
    out << "\n";
    return 0;
}

inline int cmd_verify_corpus(const std::vector<std::string>& paths, const Options& opt,
                             std::ostream& out, std::ostream& err) {
    Corpus corpus;
    corpus.add_paths(paths);
    if (corpus.rings.empty() && corpus.groups.empty() && corpus.functor_docs.empty())
        err << "warning: empty corpus, nothing to verify\n";
    VerifyOptions vopt;
    vopt.tol = opt.tol;
    vopt.iter_tol = opt.iter_tol;
    vopt.seed = opt.seed;
    auto rep = verify_corpus(corpus, vopt);
    if (opt.json)
        out << rep.json().dump(2) << "\n";
    else
        rep.text(out);
    return rep.ok() ? 0 : 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"kzero: exact computations in Grothendieck rings of fusion categories"};
    app.require_subcommand(1);
    Options opt;

    std::vector<std::string> validate_files;
    auto* validate = app.add_subcommand("validate", "check ring/functor/group axioms");
    validate->add_option("files", validate_files, "fixture files")->required();

    std::string fpdim_file;
    auto* fpdim = app.add_subcommand("fpdim", "Frobenius-Perron dimensions");
    fpdim->add_option("ring", fpdim_file, "ring file")->required();
    fpdim->add_option("--tol", opt.iter_tol, "power-iteration tolerance");
    fpdim->add_flag("--json", opt.json, "machine-readable output");

    std::string cosets_file, left_spec, right_spec;
    bool cosets_verify = false;
    auto* cosets = app.add_subcommand("cosets", "double-coset decomposition");
    cosets->add_option("ring", cosets_file, "ring file")->required();
    cosets->add_option("--left", left_spec, "left subring (default trivial)");
    cosets->add_option("--right", right_spec, "right subring (default trivial)");
    cosets->add_flag("--verify", cosets_verify, "verify eigendata and the product formula");
    cosets->add_flag("--json", opt.json);
    cosets->add_option("--tol", opt.tol, "assertion tolerance");

    std::string functor_file;
    std::vector<std::string> functor_rings;
    bool functor_analyze = false;
    auto* functor = app.add_subcommand("functor", "validate and analyze a ring functor");
    functor->add_option("functor", functor_file, "functor file")->required();
    functor->add_option("--rings", functor_rings, "ring files for name resolution");
    functor->add_flag("--analyze", functor_analyze, "run all theorem checks");
    functor->add_flag("--json", opt.json);
    functor->add_option("--tol", opt.tol);

    std::string grading_file, witness_file;
    auto* grading = app.add_subcommand("grading", "universal or declared grading");
    grading->add_option("ring", grading_file, "ring file")->required();
    grading->add_option("--verify-extension", witness_file,
                        "normal witness functor file");
    grading->add_flag("--json", opt.json);
    grading->add_option("--tol", opt.tol);

    std::string setop_file, setop_sub;
    auto* radical_cmd = app.add_subcommand("radical", "radical of a subring");
    radical_cmd->add_option("ring", setop_file)->required();
    radical_cmd->add_option("--sub", setop_sub, "subring spec: 0,1,4 or gen=2,3");
    auto* commutator_cmd = app.add_subcommand("commutator", "commutator of a subring");
    commutator_cmd->add_option("ring", setop_file)->required();
    commutator_cmd->add_option("--sub", setop_sub);
    auto* adjoint_cmd = app.add_subcommand("adjoint", "adjoint subring");
    adjoint_cmd->add_option("ring", setop_file)->required();

    auto* gen = app.add_subcommand("gen", "fixture generators");
    std::string gen_group_file;
    auto* gen_ring = gen->add_subcommand("group-ring", "pointed ring of a group");
    gen_ring->add_option("group", gen_group_file)->required();
    std::string quot_group_file, quot_n;
    auto* gen_quot = gen->add_subcommand("quotient-functor", "ZG -> Z(G/N)");
    gen_quot->add_option("group", quot_group_file)->required();
    gen_quot->add_option("--n", quot_n, "normal subgroup indices")->required();
    gen->require_subcommand(1);

    auto* oracle = app.add_subcommand("oracle", "brute-force group oracles");
    std::string oracle_group, oracle_k, oracle_l;
    auto* oracle_dc = oracle->add_subcommand("double-cosets", "partition of G into KxL");
    oracle_dc->add_option("group", oracle_group)->required();
    oracle_dc->add_option("--k", oracle_k)->required();
    oracle_dc->add_option("--l", oracle_l)->required();
    oracle->require_subcommand(1);

    std::vector<std::string> corpus_paths;
    auto* verify = app.add_subcommand("verify-corpus", "run every check on a fixture set");
    verify->add_option("paths", corpus_paths, "fixture files or directories");
    verify->add_flag("--json", opt.json);
    verify->add_option("--tol", opt.tol);
    verify->add_option("--iter-tol", opt.iter_tol);
    verify->add_option("--seed", opt.seed, "seed for sampled checks");

    std::vector<std::string> argv_like{"kzero"};
    argv_like.insert(argv_like.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_like) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) return cmd_validate(validate_files, out);
        if (*fpdim) return cmd_fpdim(fpdim_file, opt, out);
        if (*cosets)
            return cmd_cosets(cosets_file, left_spec, right_spec, cosets_verify, opt, out);
        if (*functor)
            return cmd_functor(functor_file, functor_rings, functor_analyze, opt, out);
        if (*grading) return cmd_grading(grading_file, witness_file, opt, out);
        if (*radical_cmd) return cmd_setop("radical", setop_file, setop_sub, opt, out);
        if (*commutator_cmd) return cmd_setop("commutator", setop_file, setop_sub, opt, out);
        if (*adjoint_cmd) return cmd_setop("adjoint", setop_file, "", opt, out);
        if (*gen_ring) return cmd_gen_group_ring(gen_group_file, out);
        if (*gen_quot) return cmd_gen_quotient(quot_group_file, quot_n, out);
        if (*oracle_dc) return cmd_oracle(oracle_group, oracle_k, oracle_l, out);
        if (*verify) return cmd_verify_corpus(corpus_paths, opt, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace kzero::cli
