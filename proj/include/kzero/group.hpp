// Finite groups from raw multiplication tables: fixture generators
// (group rings, quotient functors) and the brute-force double-coset oracle.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kzero/functor.hpp"
#include "kzero/ring.hpp"

namespace kzero {

struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> table;  // row-major, identity = element 0

    int mul(int a, int b) const { return table[a * order + b]; }
    int inverse(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0) return b;
        throw RingError("group '" + name + "': element has no inverse");
    }
};

inline std::vector<std::string> validate_group(const FiniteGroup& g) {
    std::vector<std::string> out;
    const int n = g.order;
    if (n < 1 || static_cast<int>(g.table.size()) != n * n)
        return {"table size does not match order"};
    for (int v : g.table)
        if (v < 0 || v >= n) return {"table entry out of range"};
    for (int a = 0; a < n; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a) {
            out.push_back("identity law fails at element " + std::to_string(a));
            break;
        }
    }
    for (int a = 0; a < n && out.empty(); ++a) {
        std::set<int> row, col;
        for (int b = 0; b < n; ++b) {
            row.insert(g.mul(a, b));
            col.insert(g.mul(b, a));
        }
        if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n)
            out.push_back("row/column " + std::to_string(a) + " is not a permutation");
    }
    for (int a = 0; a < n && out.empty(); ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                    out.push_back("associativity fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
                    return out;
                }
    return out;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    std::set<int> s(members.begin(), members.end());
    if (!s.count(0)) return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(g.mul(a, b))) return false;
    return true;
}

inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> s(gens.begin(), gens.end());
    s.insert(0);
    for (;;) {
        std::set<int> next = s;
        for (int a : s)
            for (int b : s) next.insert(g.mul(a, b));
        if (next == s) break;
        s.swap(next);
    }
    return {s.begin(), s.end()};
}

// every subgroup, by growing each known subgroup one generator at a time
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found{{0}};
    std::vector<std::vector<int>> queue{{0}};
    while (!queue.empty()) {
        auto h = queue.back();
        queue.pop_back();
        std::set<int> hs(h.begin(), h.end());
        for (int x = 0; x < g.order; ++x) {
            if (hs.count(x)) continue;
            auto gens = h;
            gens.push_back(x);
            auto grown = subgroup_closure(g, gens);
            if (found.insert(grown).second) queue.push_back(grown);
        }
    }
    return {found.begin(), found.end()};
}

inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    if (!is_subgroup(g, members)) return false;
    std::set<int> s(members.begin(), members.end());
    for (int x = 0; x < g.order; ++x) {
        int xi = g.inverse(x);
        for (int h : s)
            if (!s.count(g.mul(g.mul(x, h), xi))) return false;
    }
    return true;
}

// partition of G into double cosets K x L, by direct enumeration
inline std::vector<std::vector<int>> group_double_cosets_oracle(const FiniteGroup& g,
                                                                const std::vector<int>& k,
                                                                const std::vector<int>& l) {
    if (!is_subgroup(g, k) || !is_subgroup(g, l))
        throw RingError("group_double_cosets_oracle: inputs must be subgroups");
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(g.order, false);
    for (int x = 0; x < g.order; ++x) {
        if (seen[x]) continue;
        std::set<int> coset;
        for (int a : k)
            for (int b : l) coset.insert(g.mul(g.mul(a, x), b));
        std::vector<int> blk(coset.begin(), coset.end());
        for (int y : blk) seen[y] = true;
        blocks.push_back(std::move(blk));
    }
    return blocks;  // sorted by least member because x scans ascending
}

// pointed fusion ring of a group: N_ij^k = [ij = k], duals are inverses
inline RingPtr group_ring(const FiniteGroup& g) {
    auto problems = validate_group(g);
    if (!problems.empty())
        throw RingError("group '" + g.name + "': " + problems.front());
    std::vector<int> dual(g.order);
    std::vector<std::string> labels(g.order);
    std::map<std::array<int, 3>, long long> nz;
    for (int a = 0; a < g.order; ++a) {
        dual[a] = g.inverse(a);
        labels[a] = "g" + std::to_string(a);
        for (int b = 0; b < g.order; ++b) nz[{a, b, g.mul(a, b)}] = 1;
    }
    labels[0] = "e";
    return std::make_shared<FusionRing>("Z" + g.name, g.order, std::move(dual),
                                        std::move(labels), std::move(nz));
}

// quotient group G/N for normal N, with cosets labeled by least members
struct QuotientData {
    FiniteGroup group;              // the quotient
    std::vector<int> coset_of;      // G-element -> quotient element
    std::vector<std::vector<int>> cosets;
};

inline QuotientData quotient_group(const FiniteGroup& g, const std::vector<int>& n) {
    if (!is_normal_subgroup(g, n))
        throw RingError("quotient_group: subgroup is not normal in " + g.name);
    QuotientData q;
    q.coset_of.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (q.coset_of[x] >= 0) continue;
        std::set<int> coset;
        for (int h : n) coset.insert(g.mul(x, h));
        int idx = static_cast<int>(q.cosets.size());
        for (int y : coset) q.coset_of[y] = idx;
        q.cosets.emplace_back(coset.begin(), coset.end());
    }
    const int m = static_cast<int>(q.cosets.size());
    q.group.name = g.name + "-mod-n";
    q.group.order = m;
    q.group.table.assign(m * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            q.group.table[a * m + b] = q.coset_of[g.mul(q.cosets[a][0], q.cosets[b][0])];
    return q;
}

// ZG -> Z(G/N), basis element to its coset; kernel is ZN
inline RingFunctor quotient_functor(const FiniteGroup& g, const std::vector<int>& n,
                                    RingPtr source_ring = nullptr) {
    auto q = quotient_group(g, n);
    RingFunctor f;
    f.name = "quot-" + g.name;
    f.source = source_ring ? source_ring : group_ring(g);
    if (f.source->rank() != g.order)
        throw RingError("quotient_functor: source ring does not match the group");
    f.target = group_ring(q.group);
    f.m.assign(g.order, std::vector<long long>(q.group.order, 0));
    for (int x = 0; x < g.order; ++x) f.m[x][q.coset_of[x]] = 1;
    return f;
}

}  // namespace kzero
