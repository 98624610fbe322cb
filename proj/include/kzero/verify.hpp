// Full-corpus verification: runs every theorem-check operation across all
// loaded fixtures and all subring / functor pairs.  Entry order is
// deterministic (fixtures by name, fixed check order within a fixture),
// and all randomized internals draw from one seeded generator.
#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kzero/cosets.hpp"
#include "kzero/fp.hpp"
#include "kzero/functor.hpp"
#include "kzero/grading.hpp"
#include "kzero/group.hpp"
#include "kzero/io.hpp"
#include "kzero/report.hpp"
#include "kzero/ring.hpp"
#include "kzero/subring.hpp"

namespace kzero {

struct Corpus {
    std::map<std::string, RingDoc> rings;       // by ring name
    std::map<std::string, FunctorDoc> functor_docs;
    std::map<std::string, FiniteGroup> groups;

    void add(const ParsedFile& file) {
        for (const auto& doc : file.rings) {
            if (!rings.emplace(doc.ring->name(), doc).second)
                throw ParseError("duplicate ring name '" + doc.ring->name() + "'");
        }
        for (const auto& doc : file.functors) {
            if (!functor_docs.emplace(doc.name, doc).second)
                throw ParseError("duplicate functor name '" + doc.name + "'");
        }
        for (const auto& g : file.groups) {
            if (!groups.emplace(g.name, g).second)
                throw ParseError("duplicate group name '" + g.name + "'");
        }
    }

    // loads .ring/.functor/.group files; directories are scanned recursively
    void add_paths(const std::vector<std::string>& paths) {
        namespace fs = std::filesystem;
        std::vector<std::string> files;
        for (const auto& p : paths) {
            if (fs::is_directory(p)) {
                for (const auto& ent : fs::recursive_directory_iterator(p)) {
                    auto ext = ent.path().extension().string();
                    if (ext == ".ring" || ext == ".functor" || ext == ".group")
                        files.push_back(ent.path().string());
                }
            } else {
                files.push_back(p);
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) add(load_file(f));
    }

    std::vector<RingFunctor> resolved_functors() const {
        std::vector<RingFunctor> out;
        for (const auto& [name, doc] : functor_docs)
            out.push_back(resolve_functor(doc, rings));
        return out;
    }
};

struct VerifyOptions {
    double tol = 1e-9;        // assertion tolerance
    double iter_tol = 1e-12;  // power-iteration tolerance
    double formula_tol = 1e-8;
    std::uint64_t seed = 20240901;
    int enum_rank_cap = 8;    // enumerate subring pairs up to this rank
    int sample_pairs = 20;    // sampled pairs beyond the cap
};

namespace detail {

inline std::vector<std::pair<Subring, Subring>> subring_pairs(const FusionRing& r,
                                                              const VerifyOptions& opt,
                                                              std::mt19937_64& rng) {
    std::vector<std::pair<Subring, Subring>> pairs;
    if (r.rank() <= opt.enum_rank_cap) {
        auto subs = all_subrings(r);
        for (const auto& d : subs)
            for (const auto& e : subs) pairs.emplace_back(d, e);
    } else {
        std::uniform_int_distribution<int> pick(0, r.rank() - 1);
        for (int t = 0; t < opt.sample_pairs; ++t)
            pairs.emplace_back(close_generated(r, {pick(rng)}),
                               close_generated(r, {pick(rng)}));
    }
    return pairs;
}

inline bool t_matrix_symmetric(const CosetDecomposition& dec) {
    const int n = static_cast<int>(dec.t_matrix.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dec.t_matrix[i][j] != dec.t_matrix[j][i]) return false;
    return true;
}

inline void verify_ring_fixture(Report& rep, const std::string& name, const RingDoc& doc,
                                const VerifyOptions& opt, std::mt19937_64& rng) {
    const FusionRing& r = *doc.ring;
    auto axioms = validate_ring(r);
    rep.add(name + "/axioms", axioms.empty(),
            axioms.empty() ? "" : axioms.front().axiom + ": " + axioms.front().detail);
    if (!axioms.empty()) return;

    FPData fp;
    try {
        fp = compute_fp_dims(r, opt.iter_tol);
    } catch (const FPError& e) {
        rep.add(name + "/fpdim", false, e.what());
        return;
    }
    rep.add(name + "/fpdim", true, "", fp.residual);

    bool dims_ok = true;
    for (int i = 0; i < r.rank(); ++i) {
        dims_ok &= fp.dims[i] >= 1.0 - 1e-9;
        dims_ok &= std::fabs(fp.dims[i] - fp.dims[r.dual(i)]) <= opt.tol;
    }
    rep.add(name + "/fpdim-bounds-and-dual-symmetry", dims_ok);

    {
        std::uniform_real_distribution<double> u(0.5, 2.0);
        std::vector<double> start(r.rank());
        for (double& x : start) x = u(rng);
        auto fp2 = compute_fp_dims(r, FPOptions{opt.iter_tol, 100000, 1e-8, start});
        double diff = 0;
        for (int i = 0; i < r.rank(); ++i)
            diff = std::max(diff, std::fabs(fp.dims[i] - fp2.dims[i]));
        rep.add(name + "/fpdim-start-independence", diff <= 10 * opt.iter_tol,
                "", diff);
    }

    auto absorb = check_regular_absorption(r, fp, opt.formula_tol);
    rep.add(name + "/regular-absorption", absorb.empty(),
            absorb.empty() ? "" : absorb.front().what);

    auto pairs = subring_pairs(r, opt, rng);
    bool sym_ok = true, eig_ok = true, formula_ok = true, stability_ok = true, unit_ok = true;
    double eig_err = 0, formula_err = 0;
    for (const auto& [d, e] : pairs) {
        auto dec = double_cosets(r, d, e, fp);
        sym_ok &= t_matrix_symmetric(dec);
        auto eig = verify_principal_eigendata(dec, fp, opt.tol);
        eig_ok &= eig.pass;
        eig_err = std::max(eig_err, std::fabs(eig.eigenvalue - eig.expected));
        for (int x = 0; x < r.rank(); ++x) {
            auto fr = coset_product_formula(dec, fp, x, opt.formula_tol);
            formula_ok &= fr.pass;
            formula_err = std::max(formula_err, fr.error);
        }
        for (const auto& blk : dec.blocks) {
            Mask bm = members_mask(blk);
            Mask prod = r.support_of_product(d.mask, r.support_of_product(bm, e.mask));
            stability_ok &= (prod & ~bm) == 0;
        }
        if (d.mask == e.mask)
            unit_ok &= members_mask(dec.blocks[dec.block_of[0]]) ==
                       r.support_of_product(d.mask, e.mask);
    }
    std::string npairs = std::to_string(pairs.size()) + " subring pairs";
    rep.add(name + "/coset-t-matrix-symmetric", sym_ok, npairs);
    rep.add(name + "/coset-principal-eigendata", eig_ok, npairs, eig_err);
    rep.add(name + "/coset-product-formula", formula_ok, npairs, formula_err);
    rep.add(name + "/coset-block-stability", stability_ok, npairs);
    rep.add(name + "/coset-unit-block", unit_ok, "d = e pairs");

    try {
        auto g = doc.grades.empty() ? universal_grading(r, fp)
                                    : grading_from_labels(r, doc.grades);
        double comp_sum = 0;
        for (const auto& comp : g.components)
            for (int x : comp) comp_sum += fp.dims[x] * fp.dims[x];
        rep.add(name + "/grading-components", true,
                std::to_string(g.components.size()) + " components");
        rep.add(name + "/grading-fpdim-sum",
                std::fabs(comp_sum - fp.ring_dim) <= opt.tol * fp.ring_dim);
        auto sm = intermediate_subring_map(r, g);
        for (const auto& c : sm.checks) rep.add(c, name + "/grading");
        if (r.rank() <= opt.enum_rank_cap) {
            bool refine = true;
            Mask ad = adjoint_subring(r).mask;
            for (const auto& s : all_subrings(r)) {
                if ((s.mask & ad) != ad) continue;
                auto dec = double_cosets(r, s, trivial_subring(r), fp);
                for (const auto& comp : universal_grading(r, fp).components) {
                    Mask cm = members_mask(comp);
                    refine &= (cm & ~members_mask(dec.blocks[dec.block_of[comp.front()]])) == 0;
                }
            }
            rep.add(name + "/grading-refines-adjoint-cosets", refine);
        }
    } catch (const GradingError& e) {
        rep.add(name + "/grading-components", false, e.what());
    }
}

inline void verify_group_fixture(Report& rep, const std::string& name,
                                 const FiniteGroup& g, const VerifyOptions& opt) {
    auto problems = validate_group(g);
    rep.add(name + "/group-axioms", problems.empty(),
            problems.empty() ? "" : problems.front());
    if (!problems.empty()) return;

    auto ring = group_ring(g);
    rep.add(name + "/group-ring-axioms", validate_ring(*ring).empty());
    auto fp = compute_fp_dims(*ring, opt.iter_tol);
    bool ones = true;
    for (double d : fp.dims) ones &= std::fabs(d - 1.0) <= opt.tol;
    rep.add(name + "/group-ring-dims-all-ones", ones);
    rep.add(name + "/group-ring-adjoint-trivial", adjoint_subring(*ring).mask == Mask{1});

    auto subgroups = all_subgroups(g);
    bool coset_ok = true;
    for (const auto& k : subgroups)
        for (const auto& l : subgroups) {
            auto oracle = group_double_cosets_oracle(g, k, l);
            auto dec = double_cosets(*ring, subring_from_members(*ring, k),
                                     subring_from_members(*ring, l), fp);
            coset_ok &= dec.blocks == oracle;
        }
    rep.add(name + "/double-cosets-match-group-oracle", coset_ok,
            std::to_string(subgroups.size() * subgroups.size()) + " subgroup pairs");

    bool quot_ok = true;
    int normal_count = 0;
    for (const auto& nsub : subgroups) {
        if (!is_normal_subgroup(g, nsub)) continue;
        ++normal_count;
        auto f = quotient_functor(g, nsub, ring);
        quot_ok &= validate_functor(f).empty();
        quot_ok &= is_normal(f);
        quot_ok &= kernel(f).mask == members_mask(nsub);
    }
    rep.add(name + "/quotient-functors-normal-with-kernel-ZN", quot_ok,
            std::to_string(normal_count) + " normal subgroups");
}

inline void verify_functor_fixture(Report& rep, const std::string& name,
                                   const RingFunctor& f, const VerifyOptions& opt) {
    auto axioms = validate_functor(f);
    rep.add(name + "/functor-axioms", axioms.empty(),
            axioms.empty() ? "" : axioms.front().axiom + ": " + axioms.front().detail);
    if (!axioms.empty()) return;

    const FusionRing& src = *f.source;
    const FusionRing& tgt = *f.target;
    auto fp_src = compute_fp_dims(src, opt.iter_tol);
    auto fp_tgt = compute_fp_dims(tgt, opt.iter_tol);

    {
        bool ok = true;  // R(F(X_i) Y_j) = X_i R(Y_j), exact integers
        for (int i = 0; i < src.rank() && ok; ++i)
            for (int j = 0; j < tgt.rank() && ok; ++j) {
                auto lhs = f.adjoint(multiply_coeffs(tgt, f.m[i],
                                                     unit_vector<long long>(tgt, j)));
                auto rhs = multiply_coeffs(src, unit_vector<long long>(src, i),
                                           f.adjoint(unit_vector<long long>(tgt, j)));
                ok &= lhs == rhs;
            }
        rep.add(name + "/adjoint-product-identity", ok, "all basis pairs");
    }

    auto up = up_relation(f);
    bool sym = true;
    for (size_t a = 0; a < up.sim.size(); ++a)
        for (size_t b = 0; b < up.sim.size(); ++b) sym &= up.sim[a][b] == up.sim[b][a];
    rep.add(name + "/up-relation-symmetric", sym);

    rep.add(r1_coset_check(f, fp_src), name);

    bool normal = false;
    try {
        normal = is_normal(f);
        rep.add(name + "/normality-witnesses-agree", true,
                normal ? "normal" : "not normal");
    } catch (const std::logic_error& e) {
        rep.add(name + "/normality-witnesses-agree", false, e.what());
        return;
    }
    rep.add(disjoint_or_equal_check(f), name);

    if (normal) {
        rep.add(normal_image_description(f, fp_src, fp_tgt, opt.tol), name);
        rep.add(self_trivializing_check(f, fp_src, opt.tol), name);
        auto ker = kernel(f);
        auto left = double_cosets(src, ker, trivial_subring(src), fp_src);
        auto right = double_cosets(src, trivial_subring(src), ker, fp_src);
        rep.add(name + "/left-cosets-equal-right-cosets",
                same_partition(left.blocks, right.blocks),
                "kernel has " + std::to_string(ker.size()) + " members");
        auto rad = radical(src, ker);
        auto co = commutator(src, ker);
        rep.add(name + "/kernel-radical-equals-commutator", rad.mask == co.mask);
        rep.add(name + "/kernel-regular-element-central",
                centrality_check(src, ker, fp_src, opt.tol));
    }

    auto dom = dominant_analysis(f, fp_src, fp_tgt, opt.tol);
    if (dom.dominant)
        rep.add(dom.checks, name);
    else
        rep.skip(name + "/dominant-analysis", "functor is not dominant");
}

}  // namespace detail

inline Report verify_corpus(const Corpus& corpus, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify-corpus";
    std::mt19937_64 rng(opt.seed);

    for (const auto& [name, doc] : corpus.rings)
        detail::verify_ring_fixture(rep, name, doc, opt, rng);
    for (const auto& [name, g] : corpus.groups)
        detail::verify_group_fixture(rep, name, g, opt);
    for (const auto& f : corpus.resolved_functors())
        detail::verify_functor_fixture(rep, f.name, f, opt);
    return rep;
}

}  // namespace kzero
