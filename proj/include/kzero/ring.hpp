// Fusion rings as finite integer data: basis, duality involution,
// structure constants, exact arithmetic and the bilinear form m.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace kzero {

using Rational = boost::rational<long long>;

// Support sets are bitmasks over basis indices; rank is capped accordingly.
using Mask = std::uint64_t;
inline constexpr int kMaxRank = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }

inline std::vector<int> mask_members(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < kMaxRank; ++i)
        if (has_bit(m, i)) out.push_back(i);
    return out;
}

inline Mask members_mask(const std::vector<int>& members) {
    Mask m = 0;
    for (int i : members) m |= bit(i);
    return m;
}

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One violated based-ring axiom, with the witnessing index tuple.
struct AxiomViolation {
    std::string axiom;        // "dual-involution", "unit-law", "associativity",
                              // "rigidity", "frobenius-reciprocity"
    std::vector<int> where;
    std::string detail;
};

class FusionRing {
public:
    FusionRing(std::string name, int rank, std::vector<int> dual,
               std::vector<std::string> labels,
               std::map<std::array<int, 3>, long long> nz)
        : name_(std::move(name)), rank_(rank), dual_(std::move(dual)),
          labels_(std::move(labels)), nz_(std::move(nz)) {
        if (rank_ < 1 || rank_ > kMaxRank)
            throw RingError("ring '" + name_ + "': rank must be in [1, 64]");
        if (static_cast<int>(dual_.size()) != rank_)
            throw RingError("ring '" + name_ + "': dual permutation has wrong length");
        if (static_cast<int>(labels_.size()) != rank_)
            throw RingError("ring '" + name_ + "': wrong number of labels");
        std::vector<bool> seen(rank_, false);
        for (int d : dual_) {
            if (d < 0 || d >= rank_ || seen[d])
                throw RingError("ring '" + name_ + "': dual is not a permutation");
            seen[d] = true;
        }
        for (const auto& [key, v] : nz_) {
            auto [i, j, k] = key;
            if (i < 0 || i >= rank_ || j < 0 || j >= rank_ || k < 0 || k >= rank_)
                throw RingError("ring '" + name_ + "': structure constant index out of range");
            if (v < 0)
                throw RingError("ring '" + name_ + "': negative structure constant");
        }
        // dense basis-product table and support masks, materialized once
        prod_.assign(rank_ * rank_, {});
        supp_.assign(rank_ * rank_, 0);
        for (auto& row : prod_) row.assign(rank_, 0);
        for (const auto& [key, v] : nz_) {
            if (v == 0) continue;
            auto [i, j, k] = key;
            prod_[i * rank_ + j][k] = v;
            supp_[i * rank_ + j] |= bit(k);
        }
    }

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    int unit() const { return 0; }
    int dual(int i) const { return dual_[i]; }
    const std::vector<int>& dual_perm() const { return dual_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::map<std::array<int, 3>, long long>& nonzeros() const { return nz_; }

    long long n(int i, int j, int k) const { return prod_[i * rank_ + j][k]; }

    // coefficient vector of X_i X_j
    const std::vector<long long>& basis_product(int i, int j) const {
        return prod_[i * rank_ + j];
    }
    Mask support_of_product(int i, int j) const { return supp_[i * rank_ + j]; }

    Mask support_of_product(Mask a, Mask b) const {
        Mask out = 0;
        for (int i = 0; i < rank_; ++i) {
            if (!has_bit(a, i)) continue;
            for (int j = 0; j < rank_; ++j)
                if (has_bit(b, j)) out |= supp_[i * rank_ + j];
        }
        return out;
    }

    Mask dual_mask(Mask m) const {
        Mask out = 0;
        for (int i = 0; i < rank_; ++i)
            if (has_bit(m, i)) out |= bit(dual_[i]);
        return out;
    }

    Mask full_mask() const {
        return rank_ == kMaxRank ? ~Mask{0} : (bit(rank_) - 1);
    }

    bool operator==(const FusionRing& o) const {
        return name_ == o.name_ && rank_ == o.rank_ && dual_ == o.dual_ && nz_ == o.nz_;
    }

private:
    std::string name_;
    int rank_;
    std::vector<int> dual_;
    std::vector<std::string> labels_;
    std::map<std::array<int, 3>, long long> nz_;
    std::vector<std::vector<long long>> prod_;
    std::vector<Mask> supp_;
};

using RingPtr = std::shared_ptr<const FusionRing>;

// Bilinear extension of the basis products, for any coefficient type.
template <class T>
std::vector<T> multiply_coeffs(const FusionRing& r, const std::vector<T>& a,
                               const std::vector<T>& b) {
    std::vector<T> out(r.rank(), T(0));
    for (const auto& [key, v] : r.nonzeros()) {
        auto [i, j, k] = key;
        if (a[i] == T(0) || b[j] == T(0)) continue;
        out[k] += a[i] * b[j] * T(v);
    }
    return out;
}

template <class T>
Mask support_mask(const std::vector<T>& coeffs) {
    Mask m = 0;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
        if (coeffs[i] != T(0)) m |= bit(i);
    return m;
}

template <class T>
std::vector<T> unit_vector(const FusionRing& r, int i, T one = T(1)) {
    std::vector<T> v(r.rank(), T(0));
    v[i] = one;
    return v;
}

// A virtual object: exact rational coefficients over the basis.
struct Element {
    const FusionRing* ring;
    std::vector<Rational> coeffs;

    Mask support() const { return support_mask(coeffs); }
    bool nonnegative() const {
        return std::all_of(coeffs.begin(), coeffs.end(),
                           [](const Rational& c) { return c >= 0; });
    }
};

inline Element basis_element(const FusionRing& r, int i) {
    return {&r, unit_vector<Rational>(r, i)};
}

inline void require_same_ring(const Element& a, const Element& b) {
    if (a.ring != b.ring) throw RingError("elements belong to different rings");
}

inline Element multiply(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return {a.ring, multiply_coeffs(*a.ring, a.coeffs, b.coeffs)};
}

inline Element add(const Element& a, const Element& b) {
    require_same_ring(a, b);
    Element out = a;
    for (int i = 0; i < a.ring->rank(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

inline Element dual_element(const Element& v) {
    Element out{v.ring, std::vector<Rational>(v.ring->rank(), Rational(0))};
    for (int i = 0; i < v.ring->rank(); ++i) out.coeffs[v.ring->dual(i)] = v.coeffs[i];
    return out;
}

// m(a, b) = sum_i a_i b_i; on basis classes this is dim Hom.
inline Rational form_m(const Element& a, const Element& b) {
    require_same_ring(a, b);
    Rational s(0);
    for (int i = 0; i < a.ring->rank(); ++i) s += a.coeffs[i] * b.coeffs[i];
    return s;
}

namespace detail {
inline std::string tuple_str(const FusionRing& r, const std::vector<int>& idx) {
    std::string s = "(";
    for (size_t t = 0; t < idx.size(); ++t) {
        if (t) s += ",";
        s += r.label(idx[t]);
    }
    return s + ")";
}
}  // namespace detail

// Checks the five based-ring axioms; the returned list is empty iff valid.
inline std::vector<AxiomViolation> validate_ring(const FusionRing& r) {
    std::vector<AxiomViolation> out;
    const int n = r.rank();

    for (int i = 0; i < n; ++i)
        if (r.dual(r.dual(i)) != i)
            out.push_back({"dual-involution", {i},
                           "dual(dual(" + r.label(i) + ")) != " + r.label(i)});

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            long long want = (j == k) ? 1 : 0;
            if (r.n(0, j, k) != want)
                out.push_back({"unit-law", {0, j, k},
                               "N(1," + r.label(j) + ";" + r.label(k) + ") = " +
                                   std::to_string(r.n(0, j, k))});
            if (r.n(j, 0, k) != want)
                out.push_back({"unit-law", {j, 0, k},
                               "N(" + r.label(j) + ",1;" + r.label(k) + ") = " +
                                   std::to_string(r.n(j, 0, k))});
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long want = (j == r.dual(i)) ? 1 : 0;
            if (r.n(i, j, 0) != want)
                out.push_back({"rigidity", {i, j},
                               "N(" + r.label(i) + "," + r.label(j) + ";1) = " +
                                   std::to_string(r.n(i, j, 0))});
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                long long v = r.n(i, j, k);
                if (v != r.n(j, r.dual(k), r.dual(i)) || v != r.n(r.dual(k), i, r.dual(j)))
                    out.push_back({"frobenius-reciprocity", {i, j, k},
                                   "m-form identities fail at " +
                                       detail::tuple_str(r, {i, j, k})});
            }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // (X_i X_j) X_k vs X_i (X_j X_k)
                std::vector<long long> lhs(n, 0), rhs(n, 0);
                const auto& ij = r.basis_product(i, j);
                const auto& jk = r.basis_product(j, k);
                for (int m = 0; m < n; ++m) {
                    if (ij[m])
                        for (int l = 0; l < n; ++l) lhs[l] += ij[m] * r.n(m, k, l);
                    if (jk[m])
                        for (int l = 0; l < n; ++l) rhs[l] += jk[m] * r.n(i, m, l);
                }
                for (int l = 0; l < n; ++l)
                    if (lhs[l] != rhs[l]) {
                        out.push_back({"associativity", {i, j, k, l},
                                       "sides differ at " +
                                           detail::tuple_str(r, {i, j, k, l}) + ": " +
                                           std::to_string(lhs[l]) + " vs " +
                                           std::to_string(rhs[l])});
                        break;  // one witness per (i,j,k)
                    }
            }

    return out;
}

}  // namespace kzero
