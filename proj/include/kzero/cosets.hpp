// Double-coset decomposition of a fusion ring relative to two subrings.
//
// The partition is exact: blocks are connected components of the support
// graph of the integer matrix T[i][j] = m(X_j, S_D X_i S_E), where S_D and
// S_E are unweighted basis sums.  FP-weighted data (class vectors, the
// eigenvalue checks) enters only on top of the exact partition.
#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "kzero/checks.hpp"
#include "kzero/fp.hpp"
#include "kzero/ring.hpp"
#include "kzero/subring.hpp"

namespace kzero {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void merge(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

struct CosetDecomposition {
    const FusionRing* ring = nullptr;
    Subring left;   // D
    Subring right;  // E
    std::vector<std::vector<int>> blocks;  // sorted by least member; members ascending
    std::vector<int> block_of;
    std::vector<std::vector<long long>> t_matrix;   // exact, symmetric
    std::vector<std::vector<double>> class_vectors; // A_i, FP-weighted
    std::vector<double> class_fpdims;               // FPdim(A_i)

    int block(int x) const { return block_of[x]; }
    Mask block_mask(int b) const { return members_mask(blocks[b]); }
};

namespace detail {
inline std::vector<long long> indicator(const FusionRing& r, Mask m) {
    std::vector<long long> v(r.rank(), 0);
    for (int i = 0; i < r.rank(); ++i)
        if (has_bit(m, i)) v[i] = 1;
    return v;
}
}  // namespace detail

inline CosetDecomposition double_cosets(const FusionRing& r, const Subring& d,
                                        const Subring& e, const FPData& fp) {
    if (d.ring != &r || e.ring != &r)
        throw RingError("double_cosets: subrings do not belong to the ring");
    const int n = r.rank();

    CosetDecomposition dec;
    dec.ring = &r;
    dec.left = d;
    dec.right = e;

    auto sd = detail::indicator(r, d.mask);
    auto se = detail::indicator(r, e.mask);
    dec.t_matrix.assign(n, {});
    for (int i = 0; i < n; ++i) {
        auto u = multiply_coeffs(r, sd, unit_vector<long long>(r, i));
        dec.t_matrix[i] = multiply_coeffs(r, u, se);
    }

    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dec.t_matrix[i][j] != 0) uf.merge(i, j);

    std::vector<int> root_block(n, -1);
    dec.block_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {  // ascending scan sorts blocks by least member
        int root = uf.find(i);
        if (root_block[root] < 0) {
            root_block[root] = static_cast<int>(dec.blocks.size());
            dec.blocks.emplace_back();
        }
        dec.block_of[i] = root_block[root];
        dec.blocks[root_block[root]].push_back(i);
    }

    for (const auto& blk : dec.blocks) {
        std::vector<double> a(n, 0.0);
        double fpd = 0;
        for (int x : blk) {
            a[x] = fp.dims[x];
            fpd += fp.dims[x] * fp.dims[x];
        }
        dec.class_vectors.push_back(std::move(a));
        dec.class_fpdims.push_back(fpd);
    }
    return dec;
}

// The FP-weighted operator T = L_{R_D} o R_{R_E} applied to a float vector.
inline std::vector<double> apply_t(const CosetDecomposition& dec, const FPData& fp,
                                   const std::vector<double>& v) {
    auto rd = regular_element_of_mask(*dec.ring, dec.left.mask, fp);
    auto re = regular_element_of_mask(*dec.ring, dec.right.mask, fp);
    return multiply_coeffs(*dec.ring, multiply_coeffs(*dec.ring, rd.coeffs, v), re.coeffs);
}

struct EigenReport {
    double expected = 0;    // FPdim(D) FPdim(E)
    double eigenvalue = 0;  // from power iteration on the weighted operator
    CheckList checks;
    bool pass = true;
};

// (a) each A_i is an eigenvector at FPdim(D)FPdim(E); (b) the power-iteration
// principal eigenvalue matches; (c) each block of the exact T-support graph
// is connected (one-dimensional principal eigenspace per block).
inline EigenReport verify_principal_eigendata(const CosetDecomposition& dec,
                                              const FPData& fp, double tol = 1e-9) {
    const FusionRing& r = *dec.ring;
    const int n = r.rank();
    EigenReport rep;
    auto rd = regular_element_of_mask(r, dec.left.mask, fp);
    auto re = regular_element_of_mask(r, dec.right.mask, fp);
    rep.expected = rd.fpdim * re.fpdim;

    for (size_t b = 0; b < dec.blocks.size(); ++b) {
        auto tv = apply_t(dec, fp, dec.class_vectors[b]);
        double err = 0, scale = inf_norm(dec.class_vectors[b]);
        for (int k = 0; k < n; ++k)
            err = std::max(err, std::fabs(tv[k] - rep.expected * dec.class_vectors[b][k]));
        bool ok = err <= tol * scale;
        rep.checks.push_back({"class-vector-eigen A_" + std::to_string(b + 1), ok,
                              err, "block " + std::to_string(b + 1)});
        rep.pass = rep.pass && ok;
    }

    {
        // power iteration on the weighted operator; every diagonal block has
        // the same principal value, so any positive start converges to it
        std::vector<double> v(n, 1.0);
        double lambda = 0;
        for (int it = 0; it < 100000; ++it) {
            auto w = apply_t(dec, fp, v);
            double num = 0, den = 0;
            for (int k = 0; k < n; ++k) {
                num += w[k] * v[k];
                den += v[k] * v[k];
            }
            double next = num / den;
            double nw = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
            for (double& x : w) x /= nw;
            double delta = 0;
            for (int k = 0; k < n; ++k) delta = std::max(delta, std::fabs(w[k] - v[k]));
            v = std::move(w);
            bool settled = delta <= 1e-13 && std::fabs(next - lambda) <= 1e-13 * std::max(1.0, next);
            lambda = next;
            if (settled) break;
        }
        rep.eigenvalue = lambda;
        double err = std::fabs(lambda - rep.expected);
        bool ok = err <= tol * std::max(1.0, rep.expected);
        rep.checks.push_back({"principal-eigenvalue", ok, err, ""});
        rep.pass = rep.pass && ok;
    }

    for (size_t b = 0; b < dec.blocks.size(); ++b) {
        const auto& blk = dec.blocks[b];
        UnionFind uf(static_cast<int>(blk.size()));
        for (size_t p = 0; p < blk.size(); ++p)
            for (size_t q = 0; q < blk.size(); ++q)
                if (dec.t_matrix[blk[p]][blk[q]] != 0)
                    uf.merge(static_cast<int>(p), static_cast<int>(q));
        bool connected = true;
        for (size_t p = 0; p < blk.size(); ++p) connected &= uf.find(static_cast<int>(p)) == uf.find(0);
        rep.checks.push_back({"block-irreducible B_" + std::to_string(b + 1), connected, 0.0, ""});
        rep.pass = rep.pass && connected;
    }
    return rep;
}

struct FormulaResult {
    int block = -1;
    double scalar = 0;
    double error = 0;
    bool pass = false;
};

// R_D [X] R_E = (FPdim(D) FPdim(X) FPdim(E) / FPdim(A_i)) A_i for X in block i.
inline FormulaResult coset_product_formula(const CosetDecomposition& dec, const FPData& fp,
                                           int x, double tol = 1e-8) {
    const FusionRing& r = *dec.ring;
    if (x < 0 || x >= r.rank()) throw RingError("basis index out of range");
    FormulaResult res;
    res.block = dec.block_of[x];
    auto rd = regular_element_of_mask(r, dec.left.mask, fp);
    auto re = regular_element_of_mask(r, dec.right.mask, fp);
    res.scalar = rd.fpdim * fp.dims[x] * re.fpdim / dec.class_fpdims[res.block];
    auto prod = apply_t(dec, fp, unit_vector<double>(r, x));
    double err = 0;
    for (int k = 0; k < r.rank(); ++k)
        err = std::max(err, std::fabs(prod[k] - res.scalar * dec.class_vectors[res.block][k]));
    res.error = err;
    res.pass = err <= tol;
    return res;
}

// Cosets by the subrings generated by two basis objects.
inline CosetDecomposition object_generated_relation(const FusionRing& r, int a, int b,
                                                    const FPData& fp) {
    return double_cosets(r, close_generated(r, {a}), close_generated(r, {b}), fp);
}

}  // namespace kzero
