// Universal grading via adjoint-subring cosets, normal-extension
// verification, and the intermediate-subring / subgroup correspondence.
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kzero/cosets.hpp"
#include "kzero/functor.hpp"
#include "kzero/group.hpp"
#include "kzero/subring.hpp"

namespace kzero {

struct GradingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Grading {
    const FusionRing* ring = nullptr;
    Subring trivial_component;
    std::vector<std::vector<int>> components;  // partition; component 0 contains the unit
    std::vector<int> component_of;
    FiniteGroup group;  // multiplication table on components
};

namespace detail {
// group law from product supports; throws if a product straddles components
inline void derive_group_table(Grading& g) {
    const FusionRing& r = *g.ring;
    const int l = static_cast<int>(g.components.size());
    g.group.name = r.name() + "-grading";
    g.group.order = l;
    g.group.table.assign(l * l, -1);
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) {
            Mask u = r.support_of_product(members_mask(g.components[a]),
                                          members_mask(g.components[b]));
            int target = g.component_of[mask_members(u).front()];
            if ((u & ~members_mask(g.components[target])) != 0)
                throw GradingError("component product C_" + std::to_string(a) + " C_" +
                                   std::to_string(b) + " straddles components");
            g.group.table[a * l + b] = target;
        }
    auto problems = validate_group(g.group);
    if (!problems.empty())
        throw GradingError("component table is not a group: " + problems.front());
    // duals must realize inversion
    for (int a = 0; a < l; ++a) {
        int inv = -1;
        for (int x : g.components[a]) {
            int c = g.component_of[r.dual(x)];
            if (inv < 0) inv = c;
            if (c != inv)
                throw GradingError("dual of component " + std::to_string(a) +
                                   " straddles components");
        }
        if (g.group.table[a * l + inv] != 0 || g.group.table[inv * l + a] != 0)
            throw GradingError("dual of component " + std::to_string(a) +
                               " is not its group inverse");
    }
}
}  // namespace detail

// components = left cosets of d; the group law is derived from supports
inline Grading grading_from_subring(const FusionRing& r, const Subring& d,
                                    const FPData& fp) {
    Grading g;
    g.ring = &r;
    g.trivial_component = d;
    auto dec = double_cosets(r, d, trivial_subring(r), fp);
    g.components = dec.blocks;
    g.component_of = dec.block_of;
    if (members_mask(g.components[0]) != d.mask)
        throw GradingError("unit component differs from the given subring");
    detail::derive_group_table(g);
    return g;
}

inline Grading universal_grading(const FusionRing& r, const FPData& fp) {
    return grading_from_subring(r, adjoint_subring(r), fp);
}

// explicit grading from per-basis component labels (ring-file `grade` lines)
inline Grading grading_from_labels(const FusionRing& r,
                                   const std::map<int, std::string>& labels) {
    if (static_cast<int>(labels.size()) != r.rank())
        throw GradingError("grading must assign a component to every basis index");
    std::map<std::string, int> comp_idx;
    Grading g;
    g.ring = &r;
    g.component_of.assign(r.rank(), -1);
    for (int i = 0; i < r.rank(); ++i) {  // components ordered by least member
        const std::string& lab = labels.at(i);
        auto [it, fresh] = comp_idx.try_emplace(lab, static_cast<int>(g.components.size()));
        if (fresh) g.components.emplace_back();
        g.component_of[i] = it->second;
        g.components[it->second].push_back(i);
    }
    if (g.component_of[0] != 0)
        throw GradingError("component of the unit must come first");
    g.trivial_component = subring_from_members(r, g.components[0]);
    detail::derive_group_table(g);
    return g;
}

// Normal-extension verification: with a normal witness functor whose kernel
// is the trivial component, each component is simultaneously a left and a
// right coset, and the commutator of the trivial component is everything.
inline CheckList verify_normal_extension(const FusionRing& r, const Grading& g,
                                         const RingFunctor& witness, const FPData& fp) {
    if (!(*witness.source == r))
        throw RingError("verify_normal_extension: witness source is not the graded ring");
    if (!validate_functor(witness).empty())
        throw RingError("verify_normal_extension: witness functor is invalid");
    if (!is_normal(witness))
        throw RingError("verify_normal_extension: witness functor is not normal");
    Subring ker = kernel(witness);
    if (ker.mask != g.trivial_component.mask)
        throw RingError("verify_normal_extension: witness kernel differs from the "
                        "trivial component");

    CheckList out;
    auto left = double_cosets(r, g.trivial_component, trivial_subring(r), fp);
    auto right = double_cosets(r, trivial_subring(r), g.trivial_component, fp);
    out.push_back({"components-are-left-cosets", same_partition(g.components, left.blocks),
                   0, ""});
    out.push_back({"components-are-right-cosets", same_partition(g.components, right.blocks),
                   0, ""});
    auto co = commutator(r, g.trivial_component);
    out.push_back({"commutator-of-trivial-component-is-everything",
                   co.mask == r.full_mask(), 0, ""});
    auto rad = radical(r, g.trivial_component);
    out.push_back({"radical-equals-commutator", rad.mask == co.mask, 0, ""});
    return out;
}

struct SubgroupSubring {
    std::vector<int> subgroup;  // grading-group elements
    Subring subring;
};

struct SubringMapResult {
    std::vector<SubgroupSubring> entries;
    CheckList checks;
};

// H -> direct sum of the components over H; checked bijective onto the
// subrings containing the trivial component (brute force, rank-capped).
inline SubringMapResult intermediate_subring_map(const FusionRing& r, const Grading& g,
                                                 int surjectivity_rank_cap = 20) {
    SubringMapResult res;
    auto subgroups = all_subgroups(g.group);
    std::set<Mask> images;
    bool all_subrings_ok = true, injective = true;
    for (const auto& h : subgroups) {
        Mask m = 0;
        for (int ge : h) m |= members_mask(g.components[ge]);
        all_subrings_ok &= is_subring_mask(r, m);
        injective &= images.insert(m).second;
        res.entries.push_back({h, {&r, mask_members(m), m}});
    }
    res.checks.push_back({"subgroup-sums-are-subrings", all_subrings_ok, 0,
                          std::to_string(subgroups.size()) + " subgroups"});
    res.checks.push_back({"map-injective", injective, 0, ""});

    if (r.rank() <= surjectivity_rank_cap) {
        bool surjective = true;
        for (const auto& s : all_subrings(r)) {
            if ((s.mask & g.trivial_component.mask) != g.trivial_component.mask) continue;
            surjective &= images.count(s.mask) > 0;
        }
        res.checks.push_back({"map-onto-subrings-containing-trivial-component",
                              surjective, 0, ""});
    } else {
        res.checks.push_back({"map-onto-subrings-containing-trivial-component", true, 0,
                              "skipped: rank exceeds brute-force cap"});
    }
    return res;
}

}  // namespace kzero
