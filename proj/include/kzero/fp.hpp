// Frobenius-Perron dimensions and the virtual regular element.
//
// All floating point in the toolkit funnels through here; partition and
// support logic elsewhere stays exact.  dims is the Perron eigenvector of
// M = sum_i N_i (entrywise positive for a fusion ring), normalized so that
// dims[unit] = 1, which is exactly the positive character d with
// sum_k N_ij^k d_k = d_i d_j.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "kzero/ring.hpp"

namespace kzero {

struct FPError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FPData {
    std::vector<double> dims;  // dims[unit] == 1 exactly
    double ring_dim = 0;       // sum of dims^2
    double residual = 0;       // max |sum_k N_ij^k d_k - d_i d_j|
    int iterations = 0;
};

struct FPOptions {
    double tol = 1e-12;
    int max_iter = 100000;
    double residual_gate = 1e-8;
    std::optional<std::vector<double>> start;  // positive; defaults to all-ones
};

inline double inf_norm(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

inline FPData compute_fp_dims(const FusionRing& r, FPOptions opt = {}) {
    const int n = r.rank();
    // M[j][k] = sum_i N_ij^k
    std::vector<std::vector<double>> M(n, std::vector<double>(n, 0.0));
    for (const auto& [key, v] : r.nonzeros()) {
        auto [i, j, k] = key;
        M[j][k] += static_cast<double>(v);
    }

    std::vector<double> v = opt.start.value_or(std::vector<double>(n, 1.0));
    if (static_cast<int>(v.size()) != n)
        throw FPError("start vector has wrong length");
    for (double x : v)
        if (!(x > 0)) throw FPError("start vector must be positive");
    double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v) x /= norm;

    FPData out;
    bool converged = (n == 1);
    for (int it = 0; it < opt.max_iter && !converged; ++it) {
        std::vector<double> w(n, 0.0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) w[j] += M[j][k] * v[k];
        norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (!(norm > 0)) throw FPError("power iteration collapsed to zero");
        for (double& x : w) x /= norm;
        double delta = 0;
        for (int j = 0; j < n; ++j) delta = std::max(delta, std::fabs(w[j] - v[j]));
        v = std::move(w);
        out.iterations = it + 1;
        converged = delta <= opt.tol;
    }
    if (!converged)
        throw FPError("ring '" + r.name() + "': power iteration did not converge in " +
                      std::to_string(opt.max_iter) + " iterations");

    if (!(v[0] > 0)) throw FPError("Perron vector has nonpositive unit entry");
    out.dims.assign(n, 0.0);
    for (int i = 0; i < n; ++i) out.dims[i] = v[i] / v[0];
    out.dims[0] = 1.0;

    out.ring_dim = 0;
    for (double d : out.dims) out.ring_dim += d * d;

    out.residual = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double lhs = 0;
            const auto& prod = r.basis_product(i, j);
            for (int k = 0; k < n; ++k) lhs += static_cast<double>(prod[k]) * out.dims[k];
            out.residual = std::max(out.residual, std::fabs(lhs - out.dims[i] * out.dims[j]));
        }
    if (out.residual > opt.residual_gate)
        throw FPError("ring '" + r.name() + "': FP homomorphism residual " +
                      std::to_string(out.residual) + " exceeds gate (input is not a fusion ring?)");
    return out;
}

inline FPData compute_fp_dims(const FusionRing& r, double tol) {
    FPOptions opt;
    opt.tol = tol;
    return compute_fp_dims(r, opt);
}

// R_S = sum over the support of FPdim(X) [X]; float coefficients beside
// the exact support mask.
struct RegularElement {
    Mask support = 0;
    std::vector<double> coeffs;
    double fpdim = 0;  // FPdim of the subring: sum of dims^2 over the support
};

inline RegularElement regular_element_of_mask(const FusionRing& r, Mask support,
                                              const FPData& fp) {
    RegularElement out;
    out.support = support;
    out.coeffs.assign(r.rank(), 0.0);
    for (int i = 0; i < r.rank(); ++i)
        if (has_bit(support, i)) {
            out.coeffs[i] = fp.dims[i];
            out.fpdim += fp.dims[i] * fp.dims[i];
        }
    return out;
}

struct AbsorptionFailure {
    int basis;        // -1 for the R^2 check
    std::string what;
    double error;
};

// [X] R = R [X] = FPdim(X) R for every basis X, and R^2 = FPdim(C) R.
inline std::vector<AbsorptionFailure> check_regular_absorption(const FusionRing& r,
                                                               const FPData& fp,
                                                               double tol = 1e-8) {
    std::vector<AbsorptionFailure> out;
    RegularElement reg = regular_element_of_mask(r, r.full_mask(), fp);
    for (int i = 0; i < r.rank(); ++i) {
        auto left = multiply_coeffs(r, unit_vector<double>(r, i), reg.coeffs);
        auto right = multiply_coeffs(r, reg.coeffs, unit_vector<double>(r, i));
        double el = 0, er = 0;
        for (int k = 0; k < r.rank(); ++k) {
            el = std::max(el, std::fabs(left[k] - fp.dims[i] * reg.coeffs[k]));
            er = std::max(er, std::fabs(right[k] - fp.dims[i] * reg.coeffs[k]));
        }
        if (el > tol) out.push_back({i, "left absorption", el});
        if (er > tol) out.push_back({i, "right absorption", er});
    }
    auto sq = multiply_coeffs(r, reg.coeffs, reg.coeffs);
    double e2 = 0;
    for (int k = 0; k < r.rank(); ++k)
        e2 = std::max(e2, std::fabs(sq[k] - fp.ring_dim * reg.coeffs[k]));
    if (e2 > tol) out.push_back({-1, "R^2 = FPdim(C) R", e2});
    return out;
}

}  // namespace kzero
