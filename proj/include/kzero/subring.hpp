// Fusion subrings: generated closures, the adjoint subring, lattice
// operations, radical and commutator.
#pragma once

#include <set>
#include <vector>

#include "kzero/fp.hpp"
#include "kzero/ring.hpp"

namespace kzero {

struct Subring {
    const FusionRing* ring = nullptr;
    std::vector<int> members;  // sorted ascending, contains 0
    Mask mask = 0;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int i) const { return has_bit(mask, i); }
    bool operator==(const Subring& o) const { return ring == o.ring && mask == o.mask; }
};

// Why a given index set fails to be a subring; empty list = valid.
inline std::vector<std::string> subring_defects(const FusionRing& r, Mask mask) {
    std::vector<std::string> out;
    if (!has_bit(mask, 0)) out.push_back("does not contain the unit");
    for (int i = 0; i < r.rank(); ++i) {
        if (!has_bit(mask, i)) continue;
        if (!has_bit(mask, r.dual(i)))
            out.push_back("not closed under duals: missing " + r.label(r.dual(i)));
        for (int j = 0; j < r.rank(); ++j) {
            if (!has_bit(mask, j)) continue;
            Mask s = r.support_of_product(i, j);
            if ((s & ~mask) != 0)
                out.push_back("not closed under products: " + r.label(i) + "*" +
                              r.label(j) + " leaves the set");
        }
    }
    return out;
}

inline bool is_subring_mask(const FusionRing& r, Mask mask) {
    if (!has_bit(mask, 0)) return false;
    if (r.dual_mask(mask) != mask) return false;
    for (int i = 0; i < r.rank(); ++i) {
        if (!has_bit(mask, i)) continue;
        for (int j = 0; j < r.rank(); ++j)
            if (has_bit(mask, j) && (r.support_of_product(i, j) & ~mask))
                return false;
    }
    return true;
}

inline Subring subring_from_mask(const FusionRing& r, Mask mask) {
    auto defects = subring_defects(r, mask);
    if (!defects.empty())
        throw RingError("invalid subring of '" + r.name() + "': " + defects.front());
    return {&r, mask_members(mask), mask};
}

inline Subring subring_from_members(const FusionRing& r, const std::vector<int>& members) {
    for (int i : members)
        if (i < 0 || i >= r.rank())
            throw RingError("subring member index out of range");
    return subring_from_mask(r, members_mask(members));
}

inline Subring trivial_subring(const FusionRing& r) { return {&r, {0}, bit(0)}; }

inline Subring full_subring(const FusionRing& r) {
    return {&r, mask_members(r.full_mask()), r.full_mask()};
}

// Smallest member set containing the generators and the unit, closed
// under duals and product supports.
inline Subring close_generated(const FusionRing& r, const std::vector<int>& generators) {
    for (int g : generators)
        if (g < 0 || g >= r.rank()) throw RingError("generator index out of range");
    Mask m = bit(0) | members_mask(generators);
    for (;;) {
        Mask next = m | r.dual_mask(m) | r.support_of_product(m, m);
        if (next == m) break;
        m = next;
    }
    return {&r, mask_members(m), m};
}

// Generated by all X tensor X*; its cosets give the universal grading.
inline Subring adjoint_subring(const FusionRing& r) {
    std::vector<int> gens;
    Mask m = 0;
    for (int i = 0; i < r.rank(); ++i) m |= r.support_of_product(i, r.dual(i));
    return close_generated(r, mask_members(m));
}

inline void require_same_ring(const Subring& a, const Subring& b) {
    if (a.ring != b.ring) throw RingError("subrings belong to different rings");
}

inline Subring intersect(const Subring& a, const Subring& b) {
    require_same_ring(a, b);
    Mask m = a.mask & b.mask;  // intersection of subrings is a subring
    return {a.ring, mask_members(m), m};
}

inline Subring join(const Subring& a, const Subring& b) {
    require_same_ring(a, b);
    return close_generated(*a.ring, mask_members(a.mask | b.mask));
}

inline double fp_dim(const Subring& s, const FPData& fp) {
    double d = 0;
    for (int i : s.members) d += fp.dims[i] * fp.dims[i];
    return d;
}

inline RegularElement regular_element(const FusionRing& r, const Subring& s,
                                      const FPData& fp) {
    if (s.ring != &r) throw RingError("regular_element: subring of a different ring");
    return regular_element_of_mask(r, s.mask, fp);
}

struct IndexSetResult {
    std::vector<int> members;
    Mask mask = 0;
    bool is_subring = false;
};

// rad(D): basis X some tensor power of which has all constituents in D.
// The support sequence of X^n is iterated exactly on bitmasks until it
// revisits a known support.
inline IndexSetResult radical(const FusionRing& r, const Subring& d) {
    IndexSetResult out;
    for (int x = 0; x < r.rank(); ++x) {
        Mask s = bit(x);
        std::set<Mask> seen;
        bool in = false;
        while (seen.insert(s).second) {
            if ((s & ~d.mask) == 0) { in = true; break; }
            s = r.support_of_product(s, bit(x));
        }
        if (in) out.mask |= bit(x);
    }
    out.members = mask_members(out.mask);
    out.is_subring = is_subring_mask(r, out.mask);
    return out;
}

// D^co: basis X with X tensor X* supported in D.
inline IndexSetResult commutator(const FusionRing& r, const Subring& d) {
    IndexSetResult out;
    for (int x = 0; x < r.rank(); ++x)
        if ((r.support_of_product(x, r.dual(x)) & ~d.mask) == 0) out.mask |= bit(x);
    out.members = mask_members(out.mask);
    out.is_subring = is_subring_mask(r, out.mask);
    return out;
}

// All subrings, by closure search: grow each found subring by one extra
// generator until no new member sets appear.  Deterministic order.
inline std::vector<Subring> all_subrings(const FusionRing& r) {
    std::set<Mask> found;
    std::vector<Mask> queue{close_generated(r, {}).mask};
    found.insert(queue[0]);
    while (!queue.empty()) {
        Mask m = queue.back();
        queue.pop_back();
        for (int x = 0; x < r.rank(); ++x) {
            if (has_bit(m, x)) continue;
            auto bigger = mask_members(m);
            bigger.push_back(x);
            Mask grown = close_generated(r, bigger).mask;
            if (found.insert(grown).second) queue.push_back(grown);
        }
    }
    std::vector<Subring> out;
    for (Mask m : found) out.push_back({&r, mask_members(m), m});
    return out;
}

}  // namespace kzero
