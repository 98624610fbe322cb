// Ring-level tensor functors as nonnegative integer multiplicity matrices,
// their adjoints (transpose), kernels, the up/down equivalence relations,
// normality and the image-description checks.
#pragma once

#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kzero/checks.hpp"
#include "kzero/cosets.hpp"
#include "kzero/fp.hpp"
#include "kzero/ring.hpp"
#include "kzero/subring.hpp"

namespace kzero {

// M[i][j] = multiplicity of target simple Y_j in F(X_i).
struct RingFunctor {
    std::string name;
    RingPtr source;
    RingPtr target;
    std::vector<std::vector<long long>> m;

    long long at(int i, int j) const { return m[i][j]; }
    int src_rank() const { return source->rank(); }
    int tgt_rank() const { return target->rank(); }

    // F applied to an integer source vector
    std::vector<long long> image(const std::vector<long long>& v) const {
        std::vector<long long> out(tgt_rank(), 0);
        for (int i = 0; i < src_rank(); ++i)
            if (v[i])
                for (int j = 0; j < tgt_rank(); ++j) out[j] += v[i] * m[i][j];
        return out;
    }
    std::vector<double> image(const std::vector<double>& v) const {
        std::vector<double> out(tgt_rank(), 0.0);
        for (int i = 0; i < src_rank(); ++i)
            if (v[i] != 0)
                for (int j = 0; j < tgt_rank(); ++j)
                    out[j] += v[i] * static_cast<double>(m[i][j]);
        return out;
    }

    // right adjoint R = transpose, applied to a target vector
    std::vector<long long> adjoint(const std::vector<long long>& w) const {
        std::vector<long long> out(src_rank(), 0);
        for (int i = 0; i < src_rank(); ++i)
            for (int j = 0; j < tgt_rank(); ++j) out[i] += m[i][j] * w[j];
        return out;
    }
    std::vector<double> adjoint(const std::vector<double>& w) const {
        std::vector<double> out(src_rank(), 0.0);
        for (int i = 0; i < src_rank(); ++i)
            for (int j = 0; j < tgt_rank(); ++j)
                out[i] += static_cast<double>(m[i][j]) * w[j];
        return out;
    }

    // class of R(1) in the source ring
    std::vector<long long> r1() const {
        return adjoint(unit_vector<long long>(*target, 0));
    }

    Mask row_support(int i) const { return support_mask(m[i]); }
    Mask column_support(int j) const {
        Mask s = 0;
        for (int i = 0; i < src_rank(); ++i)
            if (m[i][j]) s |= bit(i);
        return s;
    }
    bool covers(int j) const { return column_support(j) != 0; }
};

// The four based-ring-morphism invariants, checked exactly.
inline std::vector<AxiomViolation> validate_functor(const RingFunctor& f) {
    std::vector<AxiomViolation> out;
    const FusionRing& src = *f.source;
    const FusionRing& tgt = *f.target;
    const int ns = src.rank(), nt = tgt.rank();

    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            if (f.m[i][j] < 0)
                out.push_back({"nonnegative", {i, j}, "negative multiplicity"});
    if (!out.empty()) return out;

    for (int j = 0; j < nt; ++j)
        if (f.m[0][j] != (j == 0 ? 1 : 0)) {
            out.push_back({"unit-preservation", {j},
                           "F(1) row is not the target unit indicator"});
            break;
        }

    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) {
            // F(X_i X_j) vs F(X_i) F(X_j)
            std::vector<long long> lhs(nt, 0);
            const auto& prod = src.basis_product(i, j);
            for (int k = 0; k < ns; ++k)
                if (prod[k])
                    for (int t = 0; t < nt; ++t) lhs[t] += prod[k] * f.m[k][t];
            auto rhs = multiply_coeffs(tgt, f.m[i], f.m[j]);
            if (lhs != rhs)
                out.push_back({"ring-homomorphism", {i, j},
                               "F(" + src.label(i) + " * " + src.label(j) +
                                   ") != F(" + src.label(i) + ") F(" + src.label(j) + ")"});
        }

    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            if (f.m[src.dual(i)][j] != f.m[i][tgt.dual(j)]) {
                out.push_back({"dual-compatibility", {i, j},
                               "M[" + src.label(src.dual(i)) + "][" + tgt.label(j) +
                                   "] != M[" + src.label(i) + "][" + tgt.label(tgt.dual(j)) + "]"});
            }

    auto r1 = f.r1();
    for (int i = 0; i < ns; ++i) {
        auto lhs = f.adjoint(f.m[i]);  // R(F(X_i))
        auto rhs = multiply_coeffs(src, unit_vector<long long>(src, i), r1);
        if (lhs != rhs)
            out.push_back({"adjunction", {i},
                           "R(F(" + src.label(i) + ")) != " + src.label(i) + " * R(1)"});
    }
    return out;
}

// ker_F: rows supported on the target unit.  Must close to a subring.
inline Subring kernel(const RingFunctor& f) {
    Mask m = 0;
    for (int i = 0; i < f.src_rank(); ++i)
        if ((f.row_support(i) & ~Mask{1}) == 0) m |= bit(i);
    auto defects = subring_defects(*f.source, m);
    if (!defects.empty())
        throw RingError("functor '" + f.name + "': kernel is not a subring (" +
                        defects.front() + "); invalid functor data");
    return {f.source.get(), mask_members(m), m};
}

inline Subring dominant_image(const RingFunctor& f) {
    Mask m = 0;
    for (int i = 0; i < f.src_rank(); ++i) m |= f.row_support(i);
    // closed for a valid functor; closure here is a safety net
    return close_generated(*f.target, mask_members(m));
}

struct Relation {
    std::vector<std::vector<char>> sim;     // one-step relation, symmetric
    std::vector<std::vector<int>> classes;  // components, sorted by least member
    std::vector<int> class_of;
    bool transitive = false;  // sim already equals its closure
};

namespace detail {
inline void fill_classes(Relation& rel) {
    const int n = static_cast<int>(rel.sim.size());
    UnionFind uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rel.sim[a][b]) uf.merge(a, b);
    std::vector<int> root_class(n, -1);
    rel.class_of.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        int root = uf.find(a);
        if (root_class[root] < 0) {
            root_class[root] = static_cast<int>(rel.classes.size());
            rel.classes.emplace_back();
        }
        rel.class_of[a] = root_class[root];
        rel.classes[root_class[root]].push_back(a);
    }
    rel.transitive = true;
    for (const auto& cls : rel.classes)
        for (int a : cls)
            for (int b : cls) rel.transitive &= rel.sim[a][b] != 0;
}
}  // namespace detail

// X ~ X' iff F(X) and F(X') share a constituent: (M M^t)_{ii'} > 0.
inline Relation up_relation(const RingFunctor& f) {
    const int n = f.src_rank();
    Relation rel;
    rel.sim.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long s = 0;
            for (int j = 0; j < f.tgt_rank(); ++j) s += f.m[a][j] * f.m[b][j];
            rel.sim[a][b] = s > 0;
        }
    detail::fill_classes(rel);
    return rel;
}

// Y ~ Y' iff R(Y) and R(Y') share a constituent: (M^t M)_{jj'} > 0.
// Cross-checked by a second route: each class must be the stable support of
// iterating the operator F o R from the element, so the union-find classes
// agree with operator-reachability.  A mismatch is an implementation bug.
inline Relation down_relation(const RingFunctor& f) {
    const int n = f.tgt_rank();
    Relation rel;
    rel.sim.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long s = 0;
            for (int i = 0; i < f.src_rank(); ++i) s += f.m[i][a] * f.m[i][b];
            rel.sim[a][b] = s > 0;
        }
    detail::fill_classes(rel);

    for (int y = 0; y < n; ++y) {
        Mask s = bit(y);
        for (;;) {
            Mask next = s;
            for (int b = 0; b < n; ++b)
                if (has_bit(s, b))
                    next |= support_mask(f.image(f.adjoint(unit_vector<long long>(*f.target, b))));
            if (next == s) break;
            s = next;
        }
        if (s != members_mask(rel.classes[rel.class_of[y]]))
            throw std::logic_error("down_relation: F(R(.))-reachability disagrees with "
                                   "transpose-support classes (bug)");
    }
    return rel;
}

// Both witnesses: the definition (any row containing the target unit is
// supported on it alone) and the unit being a singleton class downstairs.
inline bool is_normal(const RingFunctor& f) {
    bool by_definition = true;
    for (int i = 0; i < f.src_rank(); ++i)
        if (f.m[i][0] > 0 && (f.row_support(i) & ~Mask{1}) != 0) by_definition = false;
    auto down = down_relation(f);
    bool by_unit_class = down.classes[down.class_of[0]] == std::vector<int>{0};
    if (by_definition != by_unit_class)
        throw std::logic_error("is_normal: definition and unit-class witnesses disagree (bug)");
    return by_definition;
}

// The three equivalent conditions, plus the induced class bijection when normal.
inline CheckList disjoint_or_equal_check(const RingFunctor& f) {
    CheckList out;
    bool normal = is_normal(f);

    auto disjoint_or_equal = [](const std::vector<Mask>& sets) {
        for (size_t a = 0; a < sets.size(); ++a)
            for (size_t b = 0; b < sets.size(); ++b) {
                Mask inter = sets[a] & sets[b];
                if (inter != 0 && sets[a] != sets[b]) return false;
            }
        return true;
    };

    std::vector<Mask> rows, cols;
    for (int i = 0; i < f.src_rank(); ++i) rows.push_back(f.row_support(i));
    for (int j = 0; j < f.tgt_rank(); ++j) cols.push_back(f.column_support(j));
    bool cond2 = disjoint_or_equal(rows);
    bool cond3 = disjoint_or_equal(cols);

    out.push_back({"normal-definition", true, 0, normal ? "true" : "false"});
    out.push_back({"row-supports-disjoint-or-equal", cond2 == normal, 0,
                   cond2 ? "true" : "false"});
    out.push_back({"column-supports-disjoint-or-equal", cond3 == normal, 0,
                   cond3 ? "true" : "false"});

    if (normal) {
        auto up = up_relation(f);
        auto down = down_relation(f);
        // each up-class must map onto exactly one covered down-class, bijectively
        std::set<int> hit;
        bool ok = true;
        for (const auto& cls : up.classes) {
            Mask img = 0;
            for (int i : cls) img |= f.row_support(i);
            int dc = down.class_of[mask_members(img).front()];
            ok &= img == members_mask(down.classes[dc]);
            ok &= hit.insert(dc).second;
        }
        int covered_classes = 0;
        for (const auto& cls : down.classes)
            if (f.covers(cls.front())) ++covered_classes;
        ok &= static_cast<int>(hit.size()) == covered_classes;
        out.push_back({"class-bijection", ok, 0,
                       std::to_string(up.classes.size()) + " up-classes"});
    }
    return out;
}

inline bool same_partition(const std::vector<std::vector<int>>& a,
                           const std::vector<std::vector<int>>& b) {
    return a == b;  // both sorted by least member with ascending members
}

// Image description for a normal functor: up-classes are kernel cosets,
// FPdim-scaled rows are constant on up-classes, FPdim-scaled adjoint
// columns are constant on covered down-classes, and ~^F is transitive.
inline CheckList normal_image_description(const RingFunctor& f, const FPData& fp_src,
                                          const FPData& fp_tgt, double tol = 1e-9) {
    if (!is_normal(f))
        throw RingError("normal_image_description: functor '" + f.name + "' is not normal");
    CheckList out;
    const FusionRing& src = *f.source;

    auto up = up_relation(f);
    auto ker = kernel(f);
    auto left = double_cosets(src, ker, trivial_subring(src), fp_src);
    out.push_back({"up-classes-equal-kernel-left-cosets",
                   same_partition(up.classes, left.blocks), 0, ""});
    out.push_back({"up-relation-transitive", up.transitive, 0, ""});

    double row_err = 0;
    for (const auto& cls : up.classes)
        for (int a : cls)
            for (int j = 0; j < f.tgt_rank(); ++j) {
                double ref = static_cast<double>(f.m[cls[0]][j]) / fp_src.dims[cls[0]];
                row_err = std::max(row_err,
                                   std::fabs(static_cast<double>(f.m[a][j]) / fp_src.dims[a] - ref));
            }
    out.push_back({"scaled-rows-constant-on-up-classes", row_err <= tol, row_err, ""});

    auto down = down_relation(f);
    double col_err = 0;
    for (const auto& cls : down.classes) {
        if (!f.covers(cls.front())) continue;
        for (int b : cls)
            for (int i = 0; i < f.src_rank(); ++i) {
                double ref = static_cast<double>(f.m[i][cls[0]]) / fp_tgt.dims[cls[0]];
                col_err = std::max(col_err,
                                   std::fabs(static_cast<double>(f.m[i][b]) / fp_tgt.dims[b] - ref));
            }
    }
    out.push_back({"scaled-columns-constant-on-down-classes", col_err <= tol, col_err, ""});
    return out;
}

struct DominantReport {
    CheckList checks;
    double index = 0;
    std::vector<double> adjoint_constants;  // c_i with R(B_i) = c_i A_i
    std::vector<int> class_match;           // up-class -> down-class
    bool dominant = false;
};

// F(A_i) = [C:D] B_i, R(R_target) = R_source, R(B_i) proportional to A_i.
inline DominantReport dominant_analysis(const RingFunctor& f, const FPData& fp_src,
                                        const FPData& fp_tgt, double tol = 1e-9) {
    DominantReport rep;
    const FusionRing& src = *f.source;
    const FusionRing& tgt = *f.target;

    std::vector<int> uncovered;
    for (int j = 0; j < tgt.rank(); ++j)
        if (!f.covers(j)) uncovered.push_back(j);
    rep.dominant = uncovered.empty();
    if (!rep.dominant) {
        std::ostringstream os;
        os << "uncovered target elements:";
        for (int j : uncovered) os << " " << tgt.label(j);
        rep.checks.push_back({"dominant", false, 0, os.str()});
        return rep;
    }
    rep.checks.push_back({"dominant", true, 0, ""});

    double src_dim = 0, tgt_dim = 0;
    for (double d : fp_src.dims) src_dim += d * d;
    for (double d : fp_tgt.dims) tgt_dim += d * d;
    rep.index = src_dim / tgt_dim;

    auto up = up_relation(f);
    auto down = down_relation(f);
    rep.checks.push_back({"equal-class-counts", up.classes.size() == down.classes.size(), 0,
                          std::to_string(up.classes.size()) + " vs " +
                              std::to_string(down.classes.size())});

    // match up-class i to the down-class carrying the support of F(A_i)
    bool match_ok = true;
    double img_err = 0;
    rep.class_match.assign(up.classes.size(), -1);
    for (size_t c = 0; c < up.classes.size(); ++c) {
        std::vector<double> fa(tgt.rank(), 0.0);
        Mask img = 0;
        for (int i : up.classes[c]) {
            img |= f.row_support(i);
            for (int j = 0; j < tgt.rank(); ++j)
                fa[j] += fp_src.dims[i] * static_cast<double>(f.m[i][j]);
        }
        int dc = down.class_of[mask_members(img).front()];
        if (img != members_mask(down.classes[dc])) {
            match_ok = false;
            continue;
        }
        rep.class_match[c] = dc;
        for (int j : down.classes[dc])
            img_err = std::max(img_err, std::fabs(fa[j] - rep.index * fp_tgt.dims[j]));
        for (int j = 0; j < tgt.rank(); ++j)
            if (!has_bit(members_mask(down.classes[dc]), j))
                img_err = std::max(img_err, std::fabs(fa[j]));
    }
    rep.checks.push_back({"image-supports-match-down-classes", match_ok, 0, ""});
    rep.checks.push_back({"F(A_i) = index * B_i", img_err <= tol, img_err,
                          "index = " + std::to_string(rep.index)});

    {
        auto reg_tgt = regular_element_of_mask(tgt, tgt.full_mask(), fp_tgt);
        auto rr = f.adjoint(reg_tgt.coeffs);
        double err = 0;
        for (int i = 0; i < src.rank(); ++i)
            err = std::max(err, std::fabs(rr[i] - fp_src.dims[i]));
        rep.checks.push_back({"R(R_target) = R_source", err <= tol, err, ""});
    }

    bool prop_ok = match_ok;
    double prop_err = 0, prop_scale = 1.0;
    rep.adjoint_constants.assign(up.classes.size(), 0.0);
    for (size_t c = 0; c < up.classes.size() && match_ok; ++c) {
        std::vector<double> b(tgt.rank(), 0.0);
        for (int j : down.classes[rep.class_match[c]]) b[j] = fp_tgt.dims[j];
        auto rb = f.adjoint(b);
        std::vector<double> a(src.rank(), 0.0);
        double a2 = 0;
        for (int i : up.classes[c]) {
            a[i] = fp_src.dims[i];
            a2 += a[i] * a[i];
            prop_scale = std::max(prop_scale, a[i]);
        }
        double ci = std::inner_product(rb.begin(), rb.end(), a.begin(), 0.0) / a2;
        rep.adjoint_constants[c] = ci;
        prop_ok &= ci > 0;
        for (int i = 0; i < src.rank(); ++i)
            prop_err = std::max(prop_err, std::fabs(rb[i] - ci * a[i]));
    }
    prop_ok &= prop_err <= tol * prop_scale;
    std::ostringstream cs;
    for (double c : rep.adjoint_constants) cs << " " << c;
    rep.checks.push_back({"R(B_i) proportional to A_i", prop_ok, prop_err,
                          "constants:" + cs.str()});
    return rep;
}

// R(1)^2 = FPdim(R(1)) R(1) for normal functors.
inline Check self_trivializing_check(const RingFunctor& f, const FPData& fp_src,
                                     double tol = 1e-9) {
    if (!is_normal(f))
        throw RingError("self_trivializing_check: functor '" + f.name + "' is not normal");
    const FusionRing& src = *f.source;
    auto r1 = f.r1();
    double d = 0;
    for (int i = 0; i < src.rank(); ++i)
        d += static_cast<double>(r1[i]) * fp_src.dims[i];
    auto sq = multiply_coeffs(src, r1, r1);
    double err = 0;
    for (int i = 0; i < src.rank(); ++i)
        err = std::max(err, std::fabs(static_cast<double>(sq[i]) -
                                      d * static_cast<double>(r1[i])));
    return {"R(1)^2 = FPdim(R(1)) R(1)", err <= tol * std::max(1.0, d), err,
            "FPdim(R(1)) = " + std::to_string(d)};
}

// R_D central in K_0: exact on supports, within tol on coefficients.
inline bool centrality_check(const FusionRing& r, const Subring& d, const FPData& fp,
                             double tol = 1e-9) {
    auto rd = regular_element_of_mask(r, d.mask, fp);
    for (int x = 0; x < r.rank(); ++x) {
        if (r.support_of_product(d.mask, bit(x)) != r.support_of_product(bit(x), d.mask))
            return false;
        auto lv = multiply_coeffs(r, rd.coeffs, unit_vector<double>(r, x));
        auto rv = multiply_coeffs(r, unit_vector<double>(r, x), rd.coeffs);
        for (int k = 0; k < r.rank(); ++k)
            if (std::fabs(lv[k] - rv[k]) > tol) return false;
    }
    return true;
}

struct FunctorAnalysis {
    Subring kernel;
    Subring dominant_image;
    Relation up;
    Relation down;
    bool normal = false;
    bool dominant = false;
    double index = 0;  // FPdim(source)/FPdim(dominant image)
};

inline FunctorAnalysis analyze(const RingFunctor& f, const FPData& fp_src,
                               const FPData& fp_tgt) {
    FunctorAnalysis a;
    a.kernel = kernel(f);
    a.dominant_image = dominant_image(f);
    a.up = up_relation(f);
    a.down = down_relation(f);
    a.normal = is_normal(f);
    a.dominant = a.dominant_image.mask == f.target->full_mask();
    double src_dim = 0;
    for (double d : fp_src.dims) src_dim += d * d;
    a.index = src_dim / fp_dim(a.dominant_image, fp_tgt);
    return a;
}

// The up-classes coincide with the cosets by <support R(1)>,
// in both one-sided senses.
inline CheckList r1_coset_check(const RingFunctor& f, const FPData& fp_src) {
    const FusionRing& src = *f.source;
    auto up = up_relation(f);
    auto gen = close_generated(src, mask_members(support_mask(f.r1())));
    auto rightc = double_cosets(src, trivial_subring(src), gen, fp_src);
    auto leftc = double_cosets(src, gen, trivial_subring(src), fp_src);
    return {{"up-classes-equal-right-cosets-of-R1", same_partition(up.classes, rightc.blocks),
             0, "<R(1)> has " + std::to_string(gen.size()) + " members"},
            {"up-classes-equal-left-cosets-of-R1", same_partition(up.classes, leftc.blocks),
             0, ""}};
}

}  // namespace kzero
